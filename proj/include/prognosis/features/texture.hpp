#pragma once

#include <cstdint>
#include <vector>

#include "prognosis/features/region.hpp"
#include "prognosis/features/types.hpp"

namespace prognosis::features {

struct GlcmFeatures {
  double energy, entropy, correlation, inverse_difference_moment;
  double inertia, cluster_shade, cluster_prominence, haralick_correlation;
};

struct RunLengthFeatures {
  double gray_level_nonuniformity, run_length_nonuniformity;
  double low_gray_run_emphasis, high_gray_run_emphasis;
  double short_run_low_gray_emphasis, short_run_high_gray_emphasis;
  double long_run_low_gray_emphasis, long_run_high_gray_emphasis;
};

// Per-nucleus min-max quantization of the grayscale values into `levels`
// bins (a constant nucleus maps to bin 0). Entries outside the nucleus
// are -1.
std::vector<int> quantize_region(const std::vector<int>& gray, int levels);

// Symmetric co-occurrence statistics over the 4 distance-1 offsets
// (0ial, 45, 90, 135 degrees); features are computed per offset and
// averaged over offsets that have at least one in-mask pair. Throws NoPairs
// when no offset has any pair.
GlcmFeatures glcm_features(const Patch& patch, const LabelMask& mask, std::uint32_t nucleus_id,
                           int levels = 32);

// Gray-level run-length statistics over the same 4 directions, runs
// truncated at the mask boundary, averaged over directions.
RunLengthFeatures run_length_features(const Patch& patch, const LabelMask& mask,
                                      std::uint32_t nucleus_id, int levels = 32);

// Bounding-box variants used by the extraction pipeline.
GlcmFeatures glcm_of(const std::vector<int>& quantized, int width, int height, int levels);
RunLengthFeatures run_length_of(const std::vector<int>& quantized, int width, int height,
                                int levels);

}  // namespace prognosis::features
