#include "prognosis/survival/dataset.hpp"

#include <cmath>
#include <set>

#include "prognosis/errors.hpp"

namespace prognosis::survival {

void SurvivalDataset::validate() const {
  if (events.size() != n()) throw InvalidValue("times/events length mismatch");
  if (x.size() != n() * p()) throw InvalidValue("covariate matrix shape mismatch");
  if (column_stats.size() != 0 && column_stats.size() != p())
    throw InvalidValue("column_stats length mismatch");
  std::set<std::string> names(column_names.begin(), column_names.end());
  if (names.size() != column_names.size()) throw InvalidValue("duplicate column names");
  for (std::size_t i = 0; i < n(); ++i) {
    if (!(times[i] > 0) || !std::isfinite(times[i]))
      throw InvalidValue("times must be positive and finite");
    if (events[i] != 0 && events[i] != 1) throw InvalidValue("event must be 0 or 1");
  }
  for (double v : x)
    if (!std::isfinite(v)) throw InvalidValue("covariates must be finite");
}

SurvivalDataset SurvivalDataset::standardized_copy() const {
  SurvivalDataset out = *this;
  out.column_stats.assign(p(), ColumnStats{});
  const double nn = double(n());
  for (std::size_t j = 0; j < p(); ++j) {
    double mean = 0;
    for (std::size_t i = 0; i < n(); ++i) mean += at(i, j);
    mean /= nn;
    double var = 0;
    for (std::size_t i = 0; i < n(); ++i) {
      const double d = at(i, j) - mean;
      var += d * d;
    }
    double sd = std::sqrt(var / nn);
    if (sd == 0) sd = 1.0;
    out.column_stats[j] = {mean, sd};
    for (std::size_t i = 0; i < n(); ++i) out.at(i, j) = (at(i, j) - mean) / sd;
  }
  out.standardized = true;
  return out;
}

SurvivalDataset SurvivalDataset::subset(const std::vector<std::uint8_t>& mask) const {
  if (mask.size() != n()) throw InvalidValue("subset mask length mismatch");
  SurvivalDataset out;
  out.column_names = column_names;
  out.column_stats = column_stats;
  out.standardized = standardized;
  for (std::size_t i = 0; i < n(); ++i) {
    if (!mask[i]) continue;
    out.times.push_back(times[i]);
    out.events.push_back(events[i]);
    for (std::size_t j = 0; j < p(); ++j) out.x.push_back(at(i, j));
  }
  return out;
}

SurvivalDataset SurvivalDataset::select_columns(const std::vector<std::size_t>& cols) const {
  SurvivalDataset out;
  out.times = times;
  out.events = events;
  out.standardized = standardized;
  for (std::size_t j : cols) {
    out.column_names.push_back(column_names.at(j));
    if (!column_stats.empty()) out.column_stats.push_back(column_stats.at(j));
  }
  out.x.reserve(n() * cols.size());
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j : cols) out.x.push_back(at(i, j));
  return out;
}

std::vector<double> SurvivalDataset::column(std::size_t j) const {
  std::vector<double> col(n());
  for (std::size_t i = 0; i < n(); ++i) col[i] = at(i, j);
  return col;
}

}  // namespace prognosis::survival
