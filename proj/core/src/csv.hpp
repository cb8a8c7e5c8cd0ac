#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace fakenews::detail {

struct CsvRecord {
  std::vector<std::string> fields;
  std::size_t line = 0;  // 1-based physical line where the record starts
};

// Streaming RFC-4180 reader: quoted fields may contain delimiters, doubled
// quotes and line breaks. Accepts LF and CRLF line endings.
class CsvReader {
 public:
  CsvReader(std::istream& in, char delimiter);

  // False at end of input. Throws DataError on an unterminated quoted field.
  bool next(CsvRecord& record);

 private:
  std::istream& in_;
  char delimiter_;
  std::size_t line_ = 1;
};

void write_csv_record(std::ostream& out, std::span<const std::string> fields, char delimiter);

}  // namespace fakenews::detail
