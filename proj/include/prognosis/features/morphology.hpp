#pragma once

#include <cstdint>

#include "prognosis/features/region.hpp"
#include "prognosis/features/types.hpp"

namespace prognosis::features {

struct MorphologyFeatures {
  double area_px, perimeter_px, equivalent_diameter;
  double major_axis_len, minor_axis_len, eccentricity;
  double solidity, extent, circularity, aspect_ratio;
};

// Shape descriptors of one nucleus instance. Perimeter is the 8-connected
// boundary chain length (diagonal steps weigh sqrt(2)); axis lengths come
// from the image-moment ellipse and floor at one pixel; solidity uses the
// convex hull of boundary pixel centers and is clamped to 1.
MorphologyFeatures morphological_features(const LabelMask& mask, std::uint32_t nucleus_id);

MorphologyFeatures morphology_of(const NucleusRegion& region);

}  // namespace prognosis::features
