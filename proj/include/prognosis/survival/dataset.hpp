#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace prognosis::survival {

struct ColumnStats {
  double mean = 0;
  double stddev = 1;
};

// Right-censored survival data: times in days, event = 1 when the event was
// observed, covariates as a dense row-major matrix.
struct SurvivalDataset {
  std::vector<double> times;
  std::vector<std::uint8_t> events;
  std::vector<std::string> column_names;
  std::vector<double> x;  // n * p, row-major
  std::vector<ColumnStats> column_stats;
  bool standardized = false;

  std::size_t n() const { return times.size(); }
  std::size_t p() const { return column_names.size(); }
  double at(std::size_t i, std::size_t j) const { return x[i * p() + j]; }
  double& at(std::size_t i, std::size_t j) { return x[i * p() + j]; }

  // Throws on non-positive times, NaN, duplicate column names, or shape
  // mismatches.
  void validate() const;

  // Z-scores every column (zero-variance columns keep stddev 1) and records
  // the per-column stats used.
  SurvivalDataset standardized_copy() const;

  SurvivalDataset subset(const std::vector<std::uint8_t>& mask) const;
  SurvivalDataset select_columns(const std::vector<std::size_t>& cols) const;

  std::vector<double> column(std::size_t j) const;
};

}  // namespace prognosis::survival
