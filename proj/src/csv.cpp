#include "vewave/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace vewave {

CsvWriter::CsvWriter(std::string header_comment)
    : header_(std::move(header_comment)) {}

void CsvWriter::set_columns(std::vector<std::string> names) {
  columns_ = std::move(names);
}

void CsvWriter::add_row(const std::vector<double>& values) {
  if (!columns_.empty() && values.size() != columns_.size())
    throw std::invalid_argument("CsvWriter: row width mismatch");
  rows_.push_back(values);
}

std::string CsvWriter::format(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string CsvWriter::str() const {
  std::string s = "# " + header_;
  if (!columns_.empty()) {
    s += "; columns: ";
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i) s += ",";
      s += columns_[i];
    }
  }
  s += "\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) s += ",";
      s += format(row[i]);
    }
    s += "\n";
  }
  return s;
}

void CsvWriter::write(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("CsvWriter: cannot open " + path);
  f << str();
}

}  // namespace vewave
