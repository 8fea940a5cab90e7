#pragma once

#include <cstdint>

#include "prognosis/features/region.hpp"
#include "prognosis/features/types.hpp"

namespace prognosis::features {

struct IntensityFeatures {
  double mean, median, std_dev, skewness, kurtosis;
};

// First-order statistics of the nucleus's grayscale values. Population
// moments; skewness and excess kurtosis are 0 by convention when the
// variance is 0.
IntensityFeatures intensity_features(const Patch& patch, const LabelMask& mask,
                                     std::uint32_t nucleus_id);

IntensityFeatures intensity_of(const std::vector<int>& gray_values);

}  // namespace prognosis::features
