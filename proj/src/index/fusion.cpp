#include "prognosis/index/fusion.hpp"

#include <algorithm>
#include <unordered_map>

#include "prognosis/errors.hpp"

namespace prognosis::index {

RankedList fuse_rankings(const std::vector<RankedList>& lists, std::size_t k) {
  if (lists.empty()) throw InvalidValue("fusion needs at least one ranked list");

  std::vector<std::string> order;  // first-appearance order, the tie-break
  std::unordered_map<std::string, double> score;
  for (const auto& list : lists) {
    for (std::size_t r = 0; r < list.entries.size(); ++r) {
      const std::string& id = list.entries[r].id;
      auto [it, fresh] = score.try_emplace(id, 0.0);
      if (fresh) order.push_back(id);
      it->second += 1.0 / (kRrfConstant + double(r + 1));
    }
  }

  std::stable_sort(order.begin(), order.end(), [&](const std::string& a, const std::string& b) {
    return score.at(a) > score.at(b);
  });
  if (order.size() > k) order.resize(k);

  RankedList out;
  out.entries.reserve(order.size());
  for (const auto& id : order) out.entries.push_back({id, -score.at(id)});
  return out;
}

}  // namespace prognosis::index
