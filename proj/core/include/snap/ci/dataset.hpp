#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace snap::ci {

enum class DataKind { Continuous, Categorical };

/// Column-major sample matrix. Column j corresponds to graph vertex j.
/// Categorical columns hold integer codes 0..levels-1 stored as doubles.
class Dataset {
 public:
  Dataset() = default;

  static Dataset continuous(std::vector<std::string> names, std::vector<std::vector<double>> columns);
  /// `levels` may be empty, in which case each column gets max(code)+1 levels (at least 2).
  static Dataset categorical(std::vector<std::string> names, std::vector<std::vector<double>> columns,
                             std::vector<int> levels = {});

  DataKind kind() const noexcept { return kind_; }
  std::size_t n_samples() const noexcept { return columns_.empty() ? 0 : columns_.front().size(); }
  std::size_t n_columns() const noexcept { return columns_.size(); }
  std::span<const double> column(std::size_t j) const { return columns_.at(j); }
  int levels(std::size_t j) const { return levels_.at(j); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Index of the named column; throws `Errc::ParseError` if absent.
  std::size_t column_index(const std::string& name) const;

  Dataset rows(std::span<const std::size_t> indices) const;
  /// Columns reordered to match `names` (e.g. graph vertex labels).
  Dataset select_columns(const std::vector<std::string>& names) const;
  /// Random partition of the rows; the first part gets round(fraction * n) rows.
  std::pair<Dataset, Dataset> split(double fraction, std::uint64_t seed) const;

 private:
  DataKind kind_ = DataKind::Continuous;
  std::vector<std::string> names_;
  std::vector<std::vector<double>> columns_;
  std::vector<int> levels_;
};

/// CSV with a header row of column names.
Dataset read_csv(std::istream& in, DataKind kind);
Dataset load_csv(const std::filesystem::path& path, DataKind kind);
void write_csv(std::ostream& out, const Dataset& data);
void save_csv(const std::filesystem::path& path, const Dataset& data);

}  // namespace snap::ci
