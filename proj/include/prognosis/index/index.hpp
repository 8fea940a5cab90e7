#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "prognosis/features/types.hpp"

namespace prognosis::index {

struct RankedEntry {
  std::string id;
  double distance;
};

// Ascending distance; ids unique; ties broken by insertion order.
struct RankedList {
  std::vector<RankedEntry> entries;
};

struct DimStats {
  std::vector<double> mean;
  std::vector<double> stddev;  // zero-variance dimensions store 1
};

// Exact top-k store over z-scored vectors with a per-dimension weight
// profile. Immutable after build; queries are read-only and weight updates
// return new weight vectors instead of mutating the index.
class SimilarityIndex {
 public:
  static SimilarityIndex build(const std::vector<features::FeatureVector>& vectors);

  std::size_t size() const { return ids_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<double>& base_weights() const { return weights_; }
  const DimStats& stats() const { return stats_; }
  const std::string& id_of(std::size_t i) const { return ids_[i]; }
  std::span<const double> stored(std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }
  std::optional<std::size_t> find_id(const std::string& id) const;

  std::vector<double> zscore(std::span<const double> raw) const;

  // Exact k nearest under the given weights (base weights when empty); the
  // scan is sharded across `threads` and merged deterministically.
  RankedList query(std::span<const double> raw_query, std::size_t k,
                   std::span<const double> weights = {}, int threads = 1) const;
  RankedList query_zscored(std::span<const double> z_query, std::size_t k,
                           std::span<const double> weights = {}, int threads = 1) const;
  RankedList query_stored(std::size_t idx, std::size_t k, std::span<const double> weights = {},
                          int threads = 1) const;

  // Used by persistence.
  static SimilarityIndex from_parts(std::vector<std::string> ids, std::vector<double> z_data,
                                    std::size_t dim, std::vector<double> weights, DimStats stats);

 private:
  SimilarityIndex() = default;
  void build_lookup();
  std::size_t dim_ = 0;
  std::vector<std::string> ids_;
  std::vector<double> data_;  // z-scored, row-major n x dim
  std::vector<double> weights_;
  DimStats stats_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

// d = sqrt(sum_j w_j (a_j - b_j)^2)
double weighted_distance(std::span<const double> a, std::span<const double> b,
                         std::span<const double> w);

// w_j proportional to 1 / (sigma_j + epsilon) over the positive set in
// z-scored space, rescaled so the weights sum to dim.
std::vector<double> update_weights(const SimilarityIndex& index,
                                   const std::vector<std::size_t>& positives,
                                   double epsilon = 1e-6);

}  // namespace prognosis::index
