#include "prognosis/features/types.hpp"

#include <algorithm>

namespace prognosis::features {

const std::array<std::string, kFeatureCount>& feature_names() {
  static const std::array<std::string, kFeatureCount> names = {
      "f01_area",
      "f02_perimeter",
      "f03_equivalent_diameter",
      "f04_major_axis_len",
      "f05_minor_axis_len",
      "f06_eccentricity",
      "f07_solidity",
      "f08_extent",
      "f09_circularity",
      "f10_aspect_ratio",
      "f11_intensity_mean",
      "f12_intensity_median",
      "f13_intensity_std",
      "f14_intensity_skewness",
      "f15_intensity_kurtosis",
      "f16_glcm_energy",
      "f17_glcm_entropy",
      "f18_glcm_correlation",
      "f19_glcm_inverse_difference_moment",
      "f20_glcm_inertia",
      "f21_glcm_cluster_shade",
      "f22_glcm_cluster_prominence",
      "f23_glcm_haralick_correlation",
      "f24_gray_level_nonuniformity",
      "f25_run_length_nonuniformity",
      "f26_low_gray_run_emphasis",
      "f27_high_gray_run_emphasis",
      "f28_short_run_low_gray_emphasis",
      "f29_short_run_high_gray_emphasis",
      "f30_long_run_low_gray_emphasis",
      "f31_long_run_high_gray_emphasis",
  };
  return names;
}

std::vector<std::uint32_t> LabelMask::nucleus_ids() const {
  std::vector<std::uint32_t> ids(labels.begin(), labels.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (!ids.empty() && ids.front() == 0) ids.erase(ids.begin());
  return ids;
}

std::array<double, kFeatureCount> NucleusFeatures::to_array() const {
  return {area_px,
          perimeter_px,
          equivalent_diameter,
          major_axis_len,
          minor_axis_len,
          eccentricity,
          solidity,
          extent,
          circularity,
          aspect_ratio,
          mean,
          median,
          std_dev,
          skewness,
          kurtosis,
          energy,
          entropy,
          correlation,
          inverse_difference_moment,
          inertia,
          cluster_shade,
          cluster_prominence,
          haralick_correlation,
          gray_level_nonuniformity,
          run_length_nonuniformity,
          low_gray_run_emphasis,
          high_gray_run_emphasis,
          short_run_low_gray_emphasis,
          short_run_high_gray_emphasis,
          long_run_low_gray_emphasis,
          long_run_high_gray_emphasis};
}

}  // namespace prognosis::features
