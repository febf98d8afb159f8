#include "wsf/csv.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace wsf {

void CsvWriter::metadata(const std::string& key, const std::string& value) {
  if (columns_ != 0) throw std::logic_error("metadata must precede the header row");
  out_ << "# " << key << '=' << value << '\n';
}

void CsvWriter::metadata(const std::string& key, double value) { metadata(key, number(value)); }

void CsvWriter::header(const std::vector<std::string>& columns) {
  if (columns.empty()) throw std::invalid_argument("CSV header needs at least one column");
  columns_ = columns.size();
  for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << quote(columns[i]);
  out_ << "\r\n";
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw std::invalid_argument("CSV row width does not match the header");
  for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << quote(cells[i]);
  out_ << "\r\n";
}

std::string CsvWriter::quote(const std::string& cell) {
  if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
  std::string q = "\"";
  for (char c : cell) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

std::string CsvWriter::number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace wsf
