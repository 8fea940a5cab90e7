#pragma once

#include "prognosis/index/index.hpp"

namespace prognosis::index {

// Reciprocal-rank fusion: score(id) = sum over lists of 1 / (60 + rank),
// 1-based ranks, absent ids contribute nothing. Returns the top-k by
// descending score with first-appearance tie-breaking; the distance field
// carries -score.
RankedList fuse_rankings(const std::vector<RankedList>& lists, std::size_t k);

inline constexpr double kRrfConstant = 60.0;

}  // namespace prognosis::index
