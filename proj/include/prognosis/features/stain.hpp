#pragma once

#include <filesystem>

#include "prognosis/features/types.hpp"

namespace prognosis::features {

// Macenko stain-basis estimation from the extreme directions of the
// optical-density point cloud's principal plane. OD = -log10((I+1)/256) per
// channel; pixels with any OD channel above `beta_od_threshold` count as
// tissue. Throws EmptyTissue (< 100 tissue pixels) or DegenerateStain (OD
// covariance rank < 2).
StainReference estimate_stain_reference(const Patch& patch, double beta_od_threshold = 0.15,
                                        double alpha_percentile = 1.0);

// Remap the patch's stain concentrations from `source` onto `target`.
// Concentrations are least-squares unmixed under source, rescaled by
// target.max_concentrations / source.max_concentrations, and recomposed
// under target; the off-plane OD residual is carried through unchanged so
// that normalizing onto the same reference is an identity. Output clamped
// to [0, 255].
Patch stain_normalize(const Patch& patch, const StainReference& source,
                      const StainReference& target);

void save_stain_reference(const std::filesystem::path& path, const StainReference& ref);
StainReference load_stain_reference(const std::filesystem::path& path);

}  // namespace prognosis::features
