#pragma once

#include "prognosis/index/index.hpp"

namespace prognosis::index {

struct FeedbackState {
  std::vector<std::size_t> positive_set;  // sorted, grows monotonically
  int rounds = 0;
  std::vector<double> weights;
};

struct FeedbackResult {
  RankedList ranked;
  FeedbackState state;
};

struct FeedbackOptions {
  std::size_t m_positives = 50;  // retrieved ids added to the positive set per round
  int max_rounds = 10;
  double tol = 1e-3;  // stop when max_j |dw_j| / w_j falls below
  int threads = 1;
};

// Relevance-feedback retrieval: each round retrieves under the current
// weights, folds the top-m ids into the positive set, and re-derives the
// weights from the positives' per-dimension spread, until the weight profile
// stabilizes or max_rounds is reached. max_rounds = 0 returns the plain
// query result with the base weights.
FeedbackResult feedback_search(const SimilarityIndex& index, std::span<const double> z_query,
                               std::size_t k, const FeedbackOptions& options = {});

FeedbackResult feedback_search_stored(const SimilarityIndex& index, std::size_t stored_idx,
                                      std::size_t k, const FeedbackOptions& options = {});

}  // namespace prognosis::index
