#include "snap/ci/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "snap/error.hpp"

namespace snap::ci {

namespace {

void check_shape(const std::vector<std::string>& names, const std::vector<std::vector<double>>& columns) {
  if (names.size() != columns.size()) throw Error(Errc::SizeMismatch, "one name per column required");
  for (const auto& c : columns) {
    if (c.size() != columns.front().size()) throw Error(Errc::SizeMismatch, "columns of unequal length");
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
    cells.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

Dataset Dataset::continuous(std::vector<std::string> names, std::vector<std::vector<double>> columns) {
  check_shape(names, columns);
  Dataset d;
  d.kind_ = DataKind::Continuous;
  d.names_ = std::move(names);
  d.columns_ = std::move(columns);
  d.levels_.assign(d.columns_.size(), 0);
  return d;
}

Dataset Dataset::categorical(std::vector<std::string> names, std::vector<std::vector<double>> columns,
                             std::vector<int> levels) {
  check_shape(names, columns);
  if (!levels.empty() && levels.size() != columns.size()) {
    throw Error(Errc::SizeMismatch, "one level count per column required");
  }
  if (levels.empty()) {
    for (const auto& c : columns) {
      double top = 0;
      for (double v : c) top = std::max(top, v);
      levels.push_back(std::max(2, static_cast<int>(top) + 1));
    }
  }
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (levels[j] < 2) throw Error(Errc::NotCategorical, "column " + names[j] + " has fewer than 2 levels");
    for (double v : columns[j]) {
      if (v < 0 || v >= levels[j] || v != std::floor(v)) {
        throw Error(Errc::NotCategorical, "column " + names[j] + " holds a non-code value");
      }
    }
  }
  Dataset d;
  d.kind_ = DataKind::Categorical;
  d.names_ = std::move(names);
  d.columns_ = std::move(columns);
  d.levels_ = std::move(levels);
  return d;
}

std::size_t Dataset::column_index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw Error(Errc::ParseError, "no column named " + name);
  return static_cast<std::size_t>(it - names_.begin());
}

Dataset Dataset::rows(std::span<const std::size_t> indices) const {
  Dataset d = *this;
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    auto& out = d.columns_[j];
    out.resize(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) out[i] = columns_[j].at(indices[i]);
  }
  return d;
}

Dataset Dataset::select_columns(const std::vector<std::string>& names) const {
  Dataset d;
  d.kind_ = kind_;
  for (const auto& name : names) {
    const auto j = column_index(name);
    d.names_.push_back(name);
    d.columns_.push_back(columns_[j]);
    d.levels_.push_back(levels_[j]);
  }
  return d;
}

std::pair<Dataset, Dataset> Dataset::split(double fraction, std::uint64_t seed) const {
  const std::size_t n = n_samples();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  const auto cut = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
  std::vector<std::size_t> first(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(cut));
  std::vector<std::size_t> second(order.begin() + static_cast<std::ptrdiff_t>(cut), order.end());
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  return {rows(first), rows(second)};
}

Dataset read_csv(std::istream& in, DataKind kind) {
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::ParseError, "empty CSV input");
  auto names = split_csv_line(line);
  if (names.empty()) throw Error(Errc::ParseError, "CSV header has no columns");
  std::vector<std::vector<double>> columns(names.size());
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto cells = split_csv_line(line);
    if (cells.size() != names.size()) {
      throw Error(Errc::ParseError, fmt::format("line {}: expected {} cells, got {}", line_no,
                                                names.size(), cells.size()));
    }
    for (std::size_t j = 0; j < cells.size(); ++j) {
      double value = 0;
      const char* begin = cells[j].data();
      const char* end = begin + cells[j].size();
      auto [ptr, ec] = std::from_chars(begin, end, value);
      if (ec != std::errc() || ptr != end) {
        throw Error(Errc::ParseError, fmt::format("line {}: `{}` is not a number", line_no, cells[j]));
      }
      columns[j].push_back(value);
    }
  }
  return kind == DataKind::Continuous ? Dataset::continuous(std::move(names), std::move(columns))
                                      : Dataset::categorical(std::move(names), std::move(columns));
}

Dataset load_csv(const std::filesystem::path& path, DataKind kind) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  return read_csv(in, kind);
}

void write_csv(std::ostream& out, const Dataset& data) {
  const auto& names = data.names();
  for (std::size_t j = 0; j < names.size(); ++j) out << (j ? "," : "") << names[j];
  out << '\n';
  std::string row;
  for (std::size_t i = 0; i < data.n_samples(); ++i) {
    row.clear();
    for (std::size_t j = 0; j < data.n_columns(); ++j) {
      if (j) row += ',';
      // Shortest representation that round-trips.
      row += fmt::format("{}", data.column(j)[i]);
    }
    out << row << '\n';
  }
}

void save_csv(const std::filesystem::path& path, const Dataset& data) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path.string());
  write_csv(out, data);
}

}  // namespace snap::ci
