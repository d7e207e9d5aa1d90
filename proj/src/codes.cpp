#include "opst/codes.hpp"

#include <cctype>

namespace opst {

namespace {

// Reads one integer (optionally negative) starting at pos; advances pos.
std::int32_t read_int(const std::string& s, std::size_t& pos) {
  std::size_t start = pos;
  if (pos < s.size() && s[pos] == '-') ++pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start || (s[start] == '-' && pos == start + 1))
    throw std::invalid_argument("parse_pref_code: expected integer at offset " +
                                std::to_string(start));
  return static_cast<std::int32_t>(std::stol(s.substr(start, pos - start)));
}

}  // namespace

PrefCode parse_pref_code(const std::string& text) {
  PrefCode pc;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument("parse_pref_code: expected '(' at offset " +
                                  std::to_string(pos));
    ++pos;
    CodePair c;
    c.pred = read_int(text, pos);
    if (pos >= text.size() || text[pos] != ',')
      throw std::invalid_argument("parse_pref_code: expected ',' at offset " +
                                  std::to_string(pos));
    ++pos;
    c.succ = read_int(text, pos);
    if (pos >= text.size() || text[pos] != ')')
      throw std::invalid_argument("parse_pref_code: expected ')' at offset " +
                                  std::to_string(pos));
    ++pos;
    pc.codes.push_back(c);
    skip_ws();
  }
  if (pc.codes.empty())
    throw std::invalid_argument("parse_pref_code: empty pattern");
  if (pc.codes.front() != CodePair{})
    throw std::invalid_argument("parse_pref_code: pattern must start with (-1,-1)");
  return pc;
}

}  // namespace opst
