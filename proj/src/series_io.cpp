#include "opst/series_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace opst {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_value(const std::string& tok, const std::string& where) {
  double v = 0;
  const char* b = tok.data();
  const char* e = b + tok.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (tok.empty() || ec != std::errc{} || p != e || !std::isfinite(v))
    throw std::runtime_error(where + ": bad numeric value '" + tok + "'");
  return v;
}

bool parses_as_value(const std::string& tok) {
  double v = 0;
  const char* b = tok.data();
  const char* e = b + tok.size();
  auto [p, ec] = std::from_chars(b, e, v);
  return !tok.empty() && ec == std::errc{} && p == e && std::isfinite(v);
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Reads a line and strips a trailing CR so CRLF files behave.
bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char ch = line[k];
    if (quoted) {
      if (ch == '"') {
        if (k + 1 < line.size() && line[k + 1] == '"') {
          cur += '"';
          ++k;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"' && cur.empty()) {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<double> read_plain_values(std::istream& in,
                                      const std::string& source_name) {
  std::vector<double> values;
  std::string tok;
  while (in >> tok)
    values.push_back(parse_value(
        tok, source_name + ": token " + std::to_string(values.size() + 1)));
  return values;
}

std::vector<double> read_csv_values(std::istream& in, const std::string& column,
                                    const std::string& source_name) {
  if (column.empty())
    throw std::runtime_error(source_name + ": csv input needs a column selector");

  std::string line;
  if (!next_line(in, line))
    throw std::runtime_error(source_name + ": empty file");
  std::vector<std::string> first = split_csv_line(line);

  std::size_t idx = 0;
  std::vector<double> values;
  if (all_digits(column)) {
    idx = std::stoul(column);
    if (idx >= first.size())
      throw std::runtime_error(source_name + ": column index " + column +
                               " out of range (first row has " +
                               std::to_string(first.size()) + " fields)");
    // Headerless unless the first cell refuses to parse.
    if (parses_as_value(trim(first[idx])))
      values.push_back(parse_value(trim(first[idx]), source_name + ": line 1"));
  } else {
    bool found = false;
    for (std::size_t k = 0; k < first.size(); ++k)
      if (trim(first[k]) == column) {
        idx = k;
        found = true;
        break;
      }
    if (!found)
      throw std::runtime_error(source_name + ": column '" + column +
                               "' not found in header");
  }

  std::size_t lineno = 1;
  while (next_line(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields = split_csv_line(line);
    const std::string where = source_name + ": line " + std::to_string(lineno);
    if (idx >= fields.size())
      throw std::runtime_error(where + ": missing column " +
                               std::to_string(idx));
    values.push_back(parse_value(trim(fields[idx]), where));
  }
  return values;
}

Series series_from_values(const std::vector<double>& values) {
  if (values.empty())
    throw std::invalid_argument("series_from_values: empty input");
  // Integers up to 2^53 in magnitude convert to int64 exactly.
  bool integral = true;
  for (double v : values)
    if (std::floor(v) != v || std::abs(v) > 9.0e15) {
      integral = false;
      break;
    }
  if (integral) {
    std::int64_t lo = static_cast<std::int64_t>(values[0]);
    std::int64_t hi = lo;
    for (double v : values) {
      const auto x = static_cast<std::int64_t>(v);
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    const std::int64_t range = hi - lo + 1;
    if (range <= std::numeric_limits<Letter>::max()) {
      Series s;
      s.sigma = static_cast<Letter>(range);
      s.letters.reserve(values.size());
      for (double v : values)
        s.letters.push_back(
            static_cast<Letter>(static_cast<std::int64_t>(v) - lo));
      return s;
    }
  }
  return remap_alphabet(values);
}

Series load_series(const std::string& path, const std::string& format,
                   const std::string& column) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<double> values;
  if (format == "plain")
    values = read_plain_values(in, path);
  else if (format == "csv")
    values = read_csv_values(in, column, path);
  else
    throw std::runtime_error("unknown input format '" + format + "'");
  if (values.empty()) throw std::runtime_error(path + ": no values");
  return series_from_values(values);
}

std::vector<PrefCode> read_patterns(std::istream& in,
                                    const std::string& source_name) {
  std::vector<PrefCode> out;
  std::string line;
  std::size_t lineno = 0;
  while (next_line(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    const std::string where = source_name + ": line " + std::to_string(lineno);
    try {
      if (t.front() == '{') {
        const auto rec = nlohmann::json::parse(t);
        if (!rec.contains("prefcode") || !rec["prefcode"].is_string())
          throw std::runtime_error("record has no string 'prefcode' field");
        out.push_back(parse_pref_code(rec["prefcode"].get<std::string>()));
      } else {
        out.push_back(parse_pref_code(t));
      }
    } catch (const std::exception& e) {
      throw std::runtime_error(where + ": " + e.what());
    }
  }
  return out;
}

}  // namespace opst
