#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace prognosis::features {

inline constexpr int kFeatureCount = 31;

// Canonical feature column names, in the fixed CSV order.
const std::array<std::string, kFeatureCount>& feature_names();

// 8-bit RGB image patch, row-major, interleaved channels.
struct Patch {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // 3 * width * height
  std::string patch_id, wsi_id, patient_id;

  const std::uint8_t* rgb(int x, int y) const { return &pixels[3 * (std::size_t(y) * width + x)]; }
  std::uint8_t* rgb(int x, int y) { return &pixels[3 * (std::size_t(y) * width + x)]; }
  bool valid() const {
    return width > 0 && height > 0 && pixels.size() == 3 * std::size_t(width) * height;
  }
};

// Nucleus instance labels: 0 = background, k > 0 = nucleus instance k.
struct LabelMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint32_t> labels;  // width * height

  std::uint32_t at(int x, int y) const { return labels[std::size_t(y) * width + x]; }
  std::uint32_t& at(int x, int y) { return labels[std::size_t(y) * width + x]; }
  bool valid() const {
    return width > 0 && height > 0 && labels.size() == std::size_t(width) * height;
  }
  // Sorted unique positive labels present in the mask.
  std::vector<std::uint32_t> nucleus_ids() const;
};

// ITU luma conversion with deterministic integer rounding.
inline int gray_of(const std::uint8_t* rgb) {
  return static_cast<int>(std::lround(0.299 * rgb[0] + 0.587 * rgb[1] + 0.114 * rgb[2]));
}

struct NucleusFeatures {
  // morphology
  double area_px = 0, perimeter_px = 0, equivalent_diameter = 0;
  double major_axis_len = 0, minor_axis_len = 0, eccentricity = 0;
  double solidity = 0, extent = 0, circularity = 0, aspect_ratio = 0;
  // intensity
  double mean = 0, median = 0, std_dev = 0, skewness = 0, kurtosis = 0;
  // co-occurrence
  double energy = 0, entropy = 0, correlation = 0, inverse_difference_moment = 0;
  double inertia = 0, cluster_shade = 0, cluster_prominence = 0, haralick_correlation = 0;
  // run-length
  double gray_level_nonuniformity = 0, run_length_nonuniformity = 0;
  double low_gray_run_emphasis = 0, high_gray_run_emphasis = 0;
  double short_run_low_gray_emphasis = 0, short_run_high_gray_emphasis = 0;
  double long_run_low_gray_emphasis = 0, long_run_high_gray_emphasis = 0;

  std::array<double, kFeatureCount> to_array() const;
};

// One patch summarized as an ordered value vector. Native extraction always
// produces the canonical 31 dimensions; external embeddings may carry any
// uniform dimension.
struct FeatureVector {
  std::string patch_id, wsi_id, patient_id;
  std::vector<double> values;
};

// Macenko stain basis: unit-norm optical-density columns (hematoxylin, eosin)
// plus the 99th-percentile stain concentrations of the reference image.
struct StainReference {
  std::array<std::array<double, 2>, 3> stain_matrix{};  // rows R,G,B; cols H,E
  std::array<double, 2> max_concentrations{};
};

struct FeatureConfig {
  int levels = 32;              // texture quantization bins (>= 2)
  int min_nucleus_pixels = 4;   // smaller nuclei are skipped during aggregation
  bool aggregate_median = false;  // mean when false
};

}  // namespace prognosis::features
