#pragma once

#include "prognosis/survival/dataset.hpp"

namespace prognosis::survival {

// Product-limit curve over distinct event times. Censored-only times do not
// create steps; subjects censored at an event time count as at risk there.
struct SurvivalCurve {
  std::vector<double> event_times;      // ascending, events only
  std::vector<double> survival;         // S(t) after each event time
  std::vector<std::size_t> at_risk;     // n_i at each event time
  std::vector<std::size_t> n_events;    // d_i
  std::vector<double> greenwood_var;    // S(t)^2 * sum d/(n(n-d))
};

SurvivalCurve km_estimate(const SurvivalDataset& ds);
SurvivalCurve km_estimate(const SurvivalDataset& ds, const std::vector<std::uint8_t>& subset);

struct MedianSplit {
  std::vector<std::uint8_t> low;   // value <= cut
  std::vector<std::uint8_t> high;  // value > cut
  double cut;                      // lower median
};

// Lower-median split; throws DegenerateSplit when either side is empty.
MedianSplit median_split(const std::vector<double>& values);

}  // namespace prognosis::survival
