#pragma once

#include "prognosis/features/intensity.hpp"
#include "prognosis/features/morphology.hpp"
#include "prognosis/features/texture.hpp"
#include "prognosis/features/types.hpp"

namespace prognosis::features {

// All 31 descriptors of one nucleus. Throws NoPairs for nuclei without any
// co-occurring pixel pair.
NucleusFeatures nucleus_features(const Patch& patch, const LabelMask& mask,
                                 std::uint32_t nucleus_id, const FeatureConfig& config = {});

// Per-dimension aggregate (mean, or median by config) over the patch's
// nuclei. Nuclei below config.min_nucleus_pixels and nuclei raising NoPairs
// are skipped; throws NoValidNuclei when nothing remains.
FeatureVector extract_patch_vector(const Patch& patch, const LabelMask& mask,
                                   const FeatureConfig& config = {});

}  // namespace prognosis::features
