#pragma once

#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <Eigen/Dense>

#include "lowcond/errors.hpp"

namespace lowcond {

/// Column-labelled sample matrix; column order defines vertex order.
struct DataSet {
  std::vector<std::string> labels;
  Eigen::MatrixXd values;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace detail

inline DataSet read_csv(std::istream& in) {
  DataSet data;
  std::string line;
  std::size_t line_no = 0;
  std::vector<double> cells;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    const auto fields = detail::split_commas(line);
    if (data.labels.empty()) {
      std::unordered_set<std::string> seen;
      for (auto f : fields) {
        if (f.empty()) throw ParseError(line_no, "empty column label");
        if (!seen.emplace(f).second) {
          throw ParseError(line_no, "duplicate column label '" + std::string(f) + "'");
        }
        data.labels.emplace_back(f);
      }
      continue;
    }
    if (fields.size() != data.labels.size()) {
      throw ParseError(line_no, "expected " + std::to_string(data.labels.size()) + " fields, got " +
                                    std::to_string(fields.size()));
    }
    for (auto f : fields) {
      double value = 0.0;
      auto [end, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
      if (ec != std::errc() || end != f.data() + f.size()) {
        throw ParseError(line_no, "not a number: '" + std::string(f) + "'");
      }
      cells.push_back(value);
    }
    ++rows;
  }
  if (data.labels.empty()) throw ParseError(0, "CSV has no header row");
  data.values.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(data.labels.size()));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < data.labels.size(); ++j) {
      data.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          cells[i * data.labels.size() + j];
    }
  }
  return data;
}

inline DataSet read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open CSV file '" + path + "'");
  return read_csv(in);
}

inline void write_csv(std::ostream& out, const DataSet& data) {
  for (std::size_t j = 0; j < data.labels.size(); ++j) out << (j ? "," : "") << data.labels[j];
  out << '\n' << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (Eigen::Index i = 0; i < data.values.rows(); ++i) {
    for (Eigen::Index j = 0; j < data.values.cols(); ++j) out << (j ? "," : "") << data.values(i, j);
    out << '\n';
  }
}

}  // namespace lowcond
