#include "prognosis/features/texture.hpp"

#include <algorithm>
#include <cmath>

#include "prognosis/errors.hpp"

namespace prognosis::features {

namespace {

// Distance-1 offsets at 0, 45, 90, 135 degrees; (dx, dy) with y down. The
// set is closed under 90-degree rotation, which keeps direction-averaged
// features rotation invariant.
constexpr int kOffX[4] = {1, 1, 0, -1};
constexpr int kOffY[4] = {0, -1, -1, -1};

int quant_at(const std::vector<int>& q, int width, int height, int x, int y) {
  if (x < 0 || x >= width || y < 0 || y >= height) return -1;
  return q[std::size_t(y) * width + x];
}

GlcmFeatures glcm_from_matrix(const std::vector<double>& p, int levels) {
  GlcmFeatures f{};
  std::vector<double> px(levels, 0.0);
  for (int i = 0; i < levels; ++i)
    for (int j = 0; j < levels; ++j) px[i] += p[std::size_t(i) * levels + j];
  double mu = 0;
  for (int i = 0; i < levels; ++i) mu += i * px[i];
  double var = 0;
  for (int i = 0; i < levels; ++i) var += (i - mu) * (i - mu) * px[i];

  double cross_moment = 0;
  for (int i = 0; i < levels; ++i) {
    for (int j = 0; j < levels; ++j) {
      const double pij = p[std::size_t(i) * levels + j];
      if (pij == 0) continue;
      const double d = i - j;
      const double s = i + j - 2 * mu;
      f.energy += pij * pij;
      f.entropy -= pij * std::log(pij);
      f.inertia += d * d * pij;
      f.inverse_difference_moment += pij / (1.0 + d * d);
      f.cluster_shade += s * s * s * pij;
      f.cluster_prominence += s * s * s * s * pij;
      cross_moment += double(i) * j * pij;
      f.correlation += (i - mu) * (j - mu) * pij;
    }
  }
  // The matrix is symmetric, so both marginals share mu and var. A constant
  // region has zero marginal variance; correlation is 1 by convention.
  if (var > 1e-12) {
    f.correlation /= var;
    f.haralick_correlation = (cross_moment - mu * mu) / var;
  } else {
    f.correlation = 1.0;
    f.haralick_correlation = 1.0;
  }
  return f;
}

}  // namespace

std::vector<int> quantize_region(const std::vector<int>& gray, int levels) {
  int gmin = 256, gmax = -1;
  for (int g : gray)
    if (g >= 0) {
      gmin = std::min(gmin, g);
      gmax = std::max(gmax, g);
    }
  std::vector<int> q(gray.size(), -1);
  if (gmax < 0) return q;
  const int range = gmax - gmin + 1;
  for (std::size_t i = 0; i < gray.size(); ++i)
    if (gray[i] >= 0) q[i] = gmax == gmin ? 0 : (gray[i] - gmin) * levels / range;
  return q;
}

GlcmFeatures glcm_of(const std::vector<int>& q, int width, int height, int levels) {
  if (levels < 2) throw InvalidValue("texture quantization needs levels >= 2");
  std::vector<double> matrix(std::size_t(levels) * levels);
  GlcmFeatures sum{};
  int used_offsets = 0;

  for (int o = 0; o < 4; ++o) {
    std::fill(matrix.begin(), matrix.end(), 0.0);
    double total = 0;
    for (int y = 0; y < height; ++y)
      for (int x = 0; x < width; ++x) {
        const int a = quant_at(q, width, height, x, y);
        if (a < 0) continue;
        const int b = quant_at(q, width, height, x + kOffX[o], y + kOffY[o]);
        if (b < 0) continue;
        matrix[std::size_t(a) * levels + b] += 1;
        matrix[std::size_t(b) * levels + a] += 1;
        total += 2;
      }
    if (total == 0) continue;
    for (double& v : matrix) v /= total;
    const GlcmFeatures g = glcm_from_matrix(matrix, levels);
    sum.energy += g.energy;
    sum.entropy += g.entropy;
    sum.correlation += g.correlation;
    sum.inverse_difference_moment += g.inverse_difference_moment;
    sum.inertia += g.inertia;
    sum.cluster_shade += g.cluster_shade;
    sum.cluster_prominence += g.cluster_prominence;
    sum.haralick_correlation += g.haralick_correlation;
    ++used_offsets;
  }
  if (used_offsets == 0) throw NoPairs("no co-occurring pixel pair inside the nucleus");
  const double k = used_offsets;
  return {sum.energy / k,        sum.entropy / k,
          sum.correlation / k,   sum.inverse_difference_moment / k,
          sum.inertia / k,       sum.cluster_shade / k,
          sum.cluster_prominence / k, sum.haralick_correlation / k};
}

RunLengthFeatures run_length_of(const std::vector<int>& q, int width, int height, int levels) {
  if (levels < 2) throw InvalidValue("texture quantization needs levels >= 2");
  const int max_len = std::max(width, height);
  // counts[g * (max_len + 1) + len]
  std::vector<double> counts(std::size_t(levels) * (max_len + 1));
  RunLengthFeatures sum{};
  int used_dirs = 0;

  // Run directions: horizontal, vertical, diagonal, anti-diagonal.
  constexpr int kDirX[4] = {1, 0, 1, 1};
  constexpr int kDirY[4] = {0, 1, 1, -1};

  for (int o = 0; o < 4; ++o) {
    std::fill(counts.begin(), counts.end(), 0.0);
    const int dx = kDirX[o], dy = kDirY[o];
    double n_runs = 0;
    for (int y = 0; y < height; ++y)
      for (int x = 0; x < width; ++x) {
        const int g = quant_at(q, width, height, x, y);
        if (g < 0) continue;
        // Only start counting at the head of a maximal run.
        if (quant_at(q, width, height, x - dx, y - dy) == g) continue;
        int len = 1;
        while (quant_at(q, width, height, x + len * dx, y + len * dy) == g) ++len;
        counts[std::size_t(g) * (max_len + 1) + len] += 1;
        n_runs += 1;
      }
    if (n_runs == 0) continue;  // cannot happen for a non-empty nucleus

    RunLengthFeatures f{};
    std::vector<double> by_gray(levels, 0.0), by_len(max_len + 1, 0.0);
    for (int g = 0; g < levels; ++g)
      for (int len = 1; len <= max_len; ++len) {
        const double c = counts[std::size_t(g) * (max_len + 1) + len];
        if (c == 0) continue;
        by_gray[g] += c;
        by_len[len] += c;
        const double g2 = double(g + 1) * (g + 1);  // gray levels are 1-based in the sums
        const double l2 = double(len) * len;
        f.low_gray_run_emphasis += c / g2;
        f.high_gray_run_emphasis += c * g2;
        f.short_run_low_gray_emphasis += c / (g2 * l2);
        f.short_run_high_gray_emphasis += c * g2 / l2;
        f.long_run_low_gray_emphasis += c * l2 / g2;
        f.long_run_high_gray_emphasis += c * l2 * g2;
      }
    for (double c : by_gray) f.gray_level_nonuniformity += c * c;
    for (double c : by_len) f.run_length_nonuniformity += c * c;

    sum.gray_level_nonuniformity += f.gray_level_nonuniformity / n_runs;
    sum.run_length_nonuniformity += f.run_length_nonuniformity / n_runs;
    sum.low_gray_run_emphasis += f.low_gray_run_emphasis / n_runs;
    sum.high_gray_run_emphasis += f.high_gray_run_emphasis / n_runs;
    sum.short_run_low_gray_emphasis += f.short_run_low_gray_emphasis / n_runs;
    sum.short_run_high_gray_emphasis += f.short_run_high_gray_emphasis / n_runs;
    sum.long_run_low_gray_emphasis += f.long_run_low_gray_emphasis / n_runs;
    sum.long_run_high_gray_emphasis += f.long_run_high_gray_emphasis / n_runs;
    ++used_dirs;
  }
  if (used_dirs == 0) throw UnknownNucleus("empty nucleus region");
  const double k = used_dirs;
  return {sum.gray_level_nonuniformity / k,    sum.run_length_nonuniformity / k,
          sum.low_gray_run_emphasis / k,       sum.high_gray_run_emphasis / k,
          sum.short_run_low_gray_emphasis / k, sum.short_run_high_gray_emphasis / k,
          sum.long_run_low_gray_emphasis / k,  sum.long_run_high_gray_emphasis / k};
}

GlcmFeatures glcm_features(const Patch& patch, const LabelMask& mask, std::uint32_t nucleus_id,
                           int levels) {
  NucleusRegion region = build_region(mask, nucleus_id);
  const std::vector<int> q = quantize_region(region_gray(patch, region), levels);
  return glcm_of(q, region.width, region.height, levels);
}

RunLengthFeatures run_length_features(const Patch& patch, const LabelMask& mask,
                                      std::uint32_t nucleus_id, int levels) {
  NucleusRegion region = build_region(mask, nucleus_id);
  const std::vector<int> q = quantize_region(region_gray(patch, region), levels);
  return run_length_of(q, region.width, region.height, levels);
}

}  // namespace prognosis::features
