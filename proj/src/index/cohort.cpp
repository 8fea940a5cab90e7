#include "prognosis/index/cohort.hpp"

#include <algorithm>

#include "prognosis/errors.hpp"

namespace prognosis::index {

Cohort resolve_cohort(const RankedList& ranked, const Lineage& lineage) {
  struct Tally {
    std::size_t support = 0;
    std::size_t best_rank = 0;
  };
  std::vector<std::string> order;
  std::unordered_map<std::string, Tally> tally;

  Cohort cohort;
  cohort.source_patches.reserve(ranked.entries.size());
  for (std::size_t r = 0; r < ranked.entries.size(); ++r) {
    const std::string& patch = ranked.entries[r].id;
    auto it = lineage.find(patch);
    if (it == lineage.end()) throw MissingLineage(patch);
    cohort.source_patches.push_back(patch);
    auto [t, fresh] = tally.try_emplace(it->second.patient_id, Tally{0, r});
    if (fresh) order.push_back(it->second.patient_id);
    ++t->second.support;
  }

  std::sort(order.begin(), order.end(), [&](const std::string& a, const std::string& b) {
    const Tally& ta = tally.at(a);
    const Tally& tb = tally.at(b);
    if (ta.support != tb.support) return ta.support > tb.support;
    return ta.best_rank < tb.best_rank;
  });

  cohort.patient_ids = std::move(order);
  cohort.support.reserve(cohort.patient_ids.size());
  for (const auto& p : cohort.patient_ids) cohort.support.push_back(tally.at(p).support);
  return cohort;
}

}  // namespace prognosis::index
