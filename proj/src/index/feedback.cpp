#include "prognosis/index/feedback.hpp"

#include <algorithm>
#include <cmath>

#include "prognosis/errors.hpp"

namespace prognosis::index {

namespace {

// Merge new ids into the sorted positive set.
void absorb(std::vector<std::size_t>& positives, const RankedList& ranked, std::size_t m,
            const SimilarityIndex& index) {
  std::vector<std::size_t> fresh;
  fresh.reserve(std::min(m, ranked.entries.size()));
  for (std::size_t r = 0; r < ranked.entries.size() && r < m; ++r)
    fresh.push_back(*index.find_id(ranked.entries[r].id));
  std::sort(fresh.begin(), fresh.end());
  std::vector<std::size_t> merged;
  merged.reserve(positives.size() + fresh.size());
  std::merge(positives.begin(), positives.end(), fresh.begin(), fresh.end(),
             std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  positives = std::move(merged);
}

}  // namespace

FeedbackResult feedback_search(const SimilarityIndex& index, std::span<const double> z_query,
                               std::size_t k, const FeedbackOptions& options) {
  if (options.m_positives < 2) throw TooFewPositives("m_positives must be >= 2");

  FeedbackState state;
  state.weights = index.base_weights();

  if (options.max_rounds <= 0)
    return {index.query_zscored(z_query, k, state.weights, options.threads), std::move(state)};

  const std::size_t probe = std::max(options.m_positives, std::size_t(1));
  for (int round = 1; round <= options.max_rounds; ++round) {
    const RankedList top = index.query_zscored(z_query, probe, state.weights, options.threads);
    absorb(state.positive_set, top, options.m_positives, index);
    const std::vector<double> next = update_weights(index, state.positive_set);
    double rel_change = 0;
    for (std::size_t j = 0; j < next.size(); ++j)
      rel_change = std::max(rel_change, std::abs(next[j] - state.weights[j]) / state.weights[j]);
    state.weights = next;
    state.rounds = round;
    if (rel_change < options.tol) break;
  }
  return {index.query_zscored(z_query, k, state.weights, options.threads), std::move(state)};
}

FeedbackResult feedback_search_stored(const SimilarityIndex& index, std::size_t stored_idx,
                                      std::size_t k, const FeedbackOptions& options) {
  const auto row = index.stored(stored_idx);
  return feedback_search(index, row, k, options);
}

}  // namespace prognosis::index
