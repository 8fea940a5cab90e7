#include "prognosis/features/extract.hpp"

#include <algorithm>
#include <unordered_map>

#include "prognosis/errors.hpp"

namespace prognosis::features {

namespace {

NucleusFeatures assemble(const MorphologyFeatures& m, const IntensityFeatures& i,
                         const GlcmFeatures& g, const RunLengthFeatures& r) {
  NucleusFeatures f;
  f.area_px = m.area_px;
  f.perimeter_px = m.perimeter_px;
  f.equivalent_diameter = m.equivalent_diameter;
  f.major_axis_len = m.major_axis_len;
  f.minor_axis_len = m.minor_axis_len;
  f.eccentricity = m.eccentricity;
  f.solidity = m.solidity;
  f.extent = m.extent;
  f.circularity = m.circularity;
  f.aspect_ratio = m.aspect_ratio;
  f.mean = i.mean;
  f.median = i.median;
  f.std_dev = i.std_dev;
  f.skewness = i.skewness;
  f.kurtosis = i.kurtosis;
  f.energy = g.energy;
  f.entropy = g.entropy;
  f.correlation = g.correlation;
  f.inverse_difference_moment = g.inverse_difference_moment;
  f.inertia = g.inertia;
  f.cluster_shade = g.cluster_shade;
  f.cluster_prominence = g.cluster_prominence;
  f.haralick_correlation = g.haralick_correlation;
  f.gray_level_nonuniformity = r.gray_level_nonuniformity;
  f.run_length_nonuniformity = r.run_length_nonuniformity;
  f.low_gray_run_emphasis = r.low_gray_run_emphasis;
  f.high_gray_run_emphasis = r.high_gray_run_emphasis;
  f.short_run_low_gray_emphasis = r.short_run_low_gray_emphasis;
  f.short_run_high_gray_emphasis = r.short_run_high_gray_emphasis;
  f.long_run_low_gray_emphasis = r.long_run_low_gray_emphasis;
  f.long_run_high_gray_emphasis = r.long_run_high_gray_emphasis;
  return f;
}

NucleusFeatures features_of_region(const Patch& patch, const NucleusRegion& region,
                                   const FeatureConfig& config) {
  const MorphologyFeatures m = morphology_of(region);
  std::vector<int> gray = region_gray(patch, region);
  std::vector<int> values;
  values.reserve(region.area);
  for (int g : gray)
    if (g >= 0) values.push_back(g);
  const IntensityFeatures inten = intensity_of(values);
  const std::vector<int> q = quantize_region(gray, config.levels);
  const GlcmFeatures g = glcm_of(q, region.width, region.height, config.levels);
  const RunLengthFeatures r = run_length_of(q, region.width, region.height, config.levels);
  return assemble(m, inten, g, r);
}

}  // namespace

NucleusFeatures nucleus_features(const Patch& patch, const LabelMask& mask,
                                 std::uint32_t nucleus_id, const FeatureConfig& config) {
  return features_of_region(patch, build_region(mask, nucleus_id), config);
}

FeatureVector extract_patch_vector(const Patch& patch, const LabelMask& mask,
                                   const FeatureConfig& config) {
  if (!patch.valid() || !mask.valid() || patch.width != mask.width ||
      patch.height != mask.height)
    throw InvalidValue("patch and mask shapes do not match");

  // One pass to group pixels into per-nucleus bounding boxes.
  struct Box {
    int minx, miny, maxx, maxy;
    std::size_t count = 0;
  };
  std::unordered_map<std::uint32_t, Box> boxes;
  for (int y = 0; y < mask.height; ++y)
    for (int x = 0; x < mask.width; ++x) {
      const std::uint32_t id = mask.at(x, y);
      if (id == 0) continue;
      auto [it, fresh] = boxes.try_emplace(id, Box{x, y, x, y, 0});
      Box& b = it->second;
      if (!fresh) {
        b.minx = std::min(b.minx, x);
        b.miny = std::min(b.miny, y);
        b.maxx = std::max(b.maxx, x);
        b.maxy = std::max(b.maxy, y);
      }
      ++b.count;
    }

  std::vector<std::uint32_t> ids;
  ids.reserve(boxes.size());
  for (const auto& [id, b] : boxes)
    if (b.count >= std::size_t(config.min_nucleus_pixels)) ids.push_back(id);
  std::sort(ids.begin(), ids.end());

  std::vector<std::array<double, kFeatureCount>> rows;
  rows.reserve(ids.size());
  for (std::uint32_t id : ids) {
    const Box& b = boxes.at(id);
    NucleusRegion region;
    region.x0 = b.minx;
    region.y0 = b.miny;
    region.width = b.maxx - b.minx + 1;
    region.height = b.maxy - b.miny + 1;
    region.inside.assign(std::size_t(region.width) * region.height, 0);
    for (int y = b.miny; y <= b.maxy; ++y)
      for (int x = b.minx; x <= b.maxx; ++x)
        if (mask.at(x, y) == id) {
          region.inside[std::size_t(y - b.miny) * region.width + (x - b.minx)] = 1;
          ++region.area;
        }
    try {
      rows.push_back(features_of_region(patch, region, config).to_array());
    } catch (const NoPairs&) {
      // texture undefined for this nucleus; skip it
    }
  }
  if (rows.empty()) throw NoValidNuclei("no nucleus with usable texture and >= " +
                                        std::to_string(config.min_nucleus_pixels) + " pixels");

  FeatureVector out;
  out.patch_id = patch.patch_id;
  out.wsi_id = patch.wsi_id;
  out.patient_id = patch.patient_id;
  out.values.resize(kFeatureCount);
  for (int j = 0; j < kFeatureCount; ++j) {
    if (config.aggregate_median) {
      std::vector<double> col(rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i) col[i] = rows[i][j];
      std::sort(col.begin(), col.end());
      const std::size_t n = col.size();
      out.values[j] = (n % 2 == 1) ? col[n / 2] : (col[n / 2 - 1] + col[n / 2]) / 2.0;
    } else {
      double s = 0;
      for (const auto& row : rows) s += row[j];
      out.values[j] = s / double(rows.size());
    }
  }
  return out;
}

}  // namespace prognosis::features
