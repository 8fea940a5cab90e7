#include "prognosis/features/intensity.hpp"

#include <algorithm>
#include <cmath>

#include "prognosis/errors.hpp"

namespace prognosis::features {

IntensityFeatures intensity_of(const std::vector<int>& gray_values) {
  const std::size_t n = gray_values.size();
  IntensityFeatures f{};
  double sum = 0;
  for (int g : gray_values) sum += g;
  f.mean = sum / double(n);

  std::vector<int> sorted(gray_values);
  std::sort(sorted.begin(), sorted.end());
  f.median = (n % 2 == 1) ? double(sorted[n / 2])
                          : (double(sorted[n / 2 - 1]) + double(sorted[n / 2])) / 2.0;

  double m2 = 0, m3 = 0, m4 = 0;
  for (int g : gray_values) {
    const double d = g - f.mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 /= double(n);
  m3 /= double(n);
  m4 /= double(n);
  f.std_dev = std::sqrt(m2);
  f.skewness = m2 > 0 ? m3 / std::pow(m2, 1.5) : 0.0;
  f.kurtosis = m2 > 0 ? m4 / (m2 * m2) - 3.0 : 0.0;
  return f;
}

IntensityFeatures intensity_features(const Patch& patch, const LabelMask& mask,
                                     std::uint32_t nucleus_id) {
  NucleusRegion region = build_region(mask, nucleus_id);
  std::vector<int> values;
  values.reserve(region.area);
  for (int y = 0; y < region.height; ++y)
    for (int x = 0; x < region.width; ++x)
      if (region.inside[std::size_t(y) * region.width + x])
        values.push_back(gray_of(patch.rgb(region.x0 + x, region.y0 + y)));
  return intensity_of(values);
}

}  // namespace prognosis::features
