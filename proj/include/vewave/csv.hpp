#pragma once

#include <string>
#include <vector>

namespace vewave {

// CSV with one '#'-prefixed header line, '.' decimal separator and 17
// significant digits, which round-trips doubles exactly.
class CsvWriter {
 public:
  explicit CsvWriter(std::string header_comment);
  void set_columns(std::vector<std::string> names);
  void add_row(const std::vector<double>& values);
  std::string str() const;
  void write(const std::string& path) const;

  static std::string format(double v);

 private:
  std::string header_;
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
};

}  // namespace vewave
