#include "csv.hpp"

#include <istream>
#include <ostream>

#include "fakenews/error.hpp"

namespace fakenews::detail {

CsvReader::CsvReader(std::istream& in, char delimiter) : in_(in), delimiter_(delimiter) {}

bool CsvReader::next(CsvRecord& record) {
  record.fields.clear();
  record.line = line_;
  if (in_.peek() == std::char_traits<char>::eof()) return false;

  std::string field;
  bool quoted = false;
  bool field_was_quoted = false;
  for (;;) {
    const int c = in_.get();
    if (c == std::char_traits<char>::eof()) {
      if (quoted) {
        throw DataError("line " + std::to_string(record.line) + ": unterminated quoted field");
      }
      record.fields.push_back(std::move(field));
      return true;
    }
    const char ch = static_cast<char>(c);
    if (quoted) {
      if (ch == '"') {
        if (in_.peek() == '"') {
          in_.get();
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        if (ch == '\n') ++line_;
        field.push_back(ch);
      }
      continue;
    }
    if (ch == '"' && field.empty() && !field_was_quoted) {
      quoted = true;
      field_was_quoted = true;
    } else if (ch == delimiter_) {
      record.fields.push_back(std::move(field));
      field.clear();
      field_was_quoted = false;
    } else if (ch == '\r' && in_.peek() == '\n') {
      // CRLF: the LF terminates the record
    } else if (ch == '\n') {
      ++line_;
      record.fields.push_back(std::move(field));
      return true;
    } else {
      field.push_back(ch);
    }
  }
}

void write_csv_record(std::ostream& out, std::span<const std::string> fields, char delimiter) {
  bool first = true;
  for (const auto& field : fields) {
    if (!first) out << delimiter;
    first = false;
    const bool needs_quotes = field.find_first_of(std::string{delimiter, '"', '\n', '\r'}) !=
                              std::string::npos;
    if (!needs_quotes) {
      out << field;
      continue;
    }
    out << '"';
    for (char ch : field) {
      if (ch == '"') out << '"';
      out << ch;
    }
    out << '"';
  }
  out << '\n';
}

}  // namespace fakenews::detail
