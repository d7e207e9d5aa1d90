#pragma once

// Text ingestion for series and pattern lists.  Values are parsed as
// doubles with strict whole-token matching; remapping to the dense alphabet
// happens by exact value order, so any wanted quantization must be applied
// upstream.

#include <iosfwd>
#include <string>
#include <vector>

#include "opst/codes.hpp"

namespace opst {

// Whitespace-separated numbers, any line structure.
std::vector<double> read_plain_values(std::istream& in,
                                      const std::string& source_name);

// One column of a CSV file.  The selector is a header name or, when it is
// all digits, a 0-based index; with a numeric index the first row counts as
// data if its cell parses as a number and as a header otherwise.
std::vector<double> read_csv_values(std::istream& in, const std::string& column,
                                    const std::string& source_name);

// Alphabet policy: all-integer inputs keep their natural range alphabet,
// letters = v - min and sigma = max - min + 1, mirroring an externally
// declared integer alphabet whose letters need not all occur.  Inputs with
// any non-integer value, or an integer range too wide for the letter type,
// are rank-remapped to a dense alphabet instead.
Series series_from_values(const std::vector<double>& values);

// Reads one file in the given format ("plain" or "csv") and applies the
// alphabet policy above.
Series load_series(const std::string& path, const std::string& format,
                   const std::string& column);

// Patterns one per line: either a canonical PrefCode string or a JSON
// object carrying a "prefcode" field (the miner's output records).
std::vector<PrefCode> read_patterns(std::istream& in,
                                    const std::string& source_name);

// Splits a CSV line honoring double-quoted fields; "" inside quotes is a
// literal quote.  Quoted fields do not span lines.
std::vector<std::string> split_csv_line(const std::string& line);

// Quotes a field for CSV output when needed.
std::string csv_field(const std::string& s);

}  // namespace opst
