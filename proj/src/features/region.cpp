#include "prognosis/features/region.hpp"

#include <limits>

#include "prognosis/errors.hpp"

namespace prognosis::features {

NucleusRegion build_region(const LabelMask& mask, std::uint32_t nucleus_id) {
  int minx = std::numeric_limits<int>::max(), miny = minx;
  int maxx = -1, maxy = -1;
  for (int y = 0; y < mask.height; ++y)
    for (int x = 0; x < mask.width; ++x)
      if (mask.at(x, y) == nucleus_id && nucleus_id != 0) {
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        miny = std::min(miny, y);
        maxy = std::max(maxy, y);
      }
  if (maxx < 0) throw UnknownNucleus("nucleus id " + std::to_string(nucleus_id) + " not in mask");

  NucleusRegion r;
  r.x0 = minx;
  r.y0 = miny;
  r.width = maxx - minx + 1;
  r.height = maxy - miny + 1;
  r.inside.assign(std::size_t(r.width) * r.height, 0);
  for (int y = miny; y <= maxy; ++y)
    for (int x = minx; x <= maxx; ++x)
      if (mask.at(x, y) == nucleus_id) {
        r.inside[std::size_t(y - miny) * r.width + (x - minx)] = 1;
        ++r.area;
      }
  return r;
}

std::vector<int> region_gray(const Patch& patch, const NucleusRegion& region) {
  std::vector<int> gray(std::size_t(region.width) * region.height, -1);
  for (int y = 0; y < region.height; ++y)
    for (int x = 0; x < region.width; ++x)
      if (region.inside[std::size_t(y) * region.width + x])
        gray[std::size_t(y) * region.width + x] = gray_of(patch.rgb(region.x0 + x, region.y0 + y));
  return gray;
}

}  // namespace prognosis::features
