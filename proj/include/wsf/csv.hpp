#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace wsf {

/// CSV output: optional `# key=value` metadata lines, then one header row and
/// data rows with RFC-4180 quoting. Reals use the shortest round-trip form.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void metadata(const std::string& key, const std::string& value);
  void metadata(const std::string& key, double value);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& cells);

  static std::string quote(const std::string& cell);
  static std::string number(double x);
  static std::string number(long long x) { return std::to_string(x); }
  static std::string number(long x) { return std::to_string(x); }
  static std::string number(int x) { return std::to_string(x); }

 private:
  std::ostream& out_;
  std::size_t columns_ = 0;
};

}  // namespace wsf
