#pragma once

#include <cstdint>
#include <vector>

#include "prognosis/features/types.hpp"

namespace prognosis::features {

// Bounding-box view of one nucleus instance. (x0, y0) is the top-left corner
// of the box in mask coordinates.
struct NucleusRegion {
  int x0 = 0, y0 = 0;
  int width = 0, height = 0;
  std::vector<std::uint8_t> inside;  // width * height, 1 = nucleus pixel
  std::size_t area = 0;

  bool in(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height && inside[std::size_t(y) * width + x];
  }
};

// Throws UnknownNucleus when the id has no pixels.
NucleusRegion build_region(const LabelMask& mask, std::uint32_t nucleus_id);

// Grayscale values of the region's pixels laid out over the same bounding
// box; entries outside the nucleus are -1.
std::vector<int> region_gray(const Patch& patch, const NucleusRegion& region);

}  // namespace prognosis::features
