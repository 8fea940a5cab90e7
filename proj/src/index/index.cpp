#include "prognosis/index/index.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <unordered_map>

#include "prognosis/errors.hpp"

namespace prognosis::index {

namespace {

struct Candidate {
  double dist2;
  std::size_t idx;
  bool operator<(const Candidate& o) const {
    return dist2 != o.dist2 ? dist2 < o.dist2 : idx < o.idx;
  }
};

// Keep the k best (smallest) candidates from [begin, end).
void scan_range(const std::vector<double>& data, std::size_t dim, std::span<const double> q,
                std::span<const double> w, std::size_t begin, std::size_t end, std::size_t k,
                std::vector<Candidate>& out) {
  std::vector<Candidate> heap;  // max-heap on (dist2, idx)
  heap.reserve(k + 1);
  for (std::size_t i = begin; i < end; ++i) {
    const double* row = data.data() + i * dim;
    double d2 = 0;
    for (std::size_t j = 0; j < dim; ++j) {
      const double diff = q[j] - row[j];
      d2 += w[j] * diff * diff;
    }
    Candidate c{d2, i};
    if (heap.size() < k) {
      heap.push_back(c);
      std::push_heap(heap.begin(), heap.end());
    } else if (c < heap.front()) {
      std::pop_heap(heap.begin(), heap.end());
      heap.back() = c;
      std::push_heap(heap.begin(), heap.end());
    }
  }
  out = std::move(heap);
}

}  // namespace

SimilarityIndex SimilarityIndex::build(const std::vector<features::FeatureVector>& vectors) {
  if (vectors.empty()) throw EmptyIndex("cannot build an index from zero vectors");
  const std::size_t dim = vectors.front().values.size();
  if (dim == 0) throw DimensionMismatch("vectors must have at least one dimension");

  SimilarityIndex idx;
  idx.dim_ = dim;
  idx.ids_.reserve(vectors.size());
  idx.data_.resize(vectors.size() * dim);

  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const auto& v = vectors[i];
    if (v.values.size() != dim)
      throw DimensionMismatch("vector '" + v.patch_id + "' has dimension " +
                              std::to_string(v.values.size()) + ", expected " +
                              std::to_string(dim));
    for (double x : v.values)
      if (!std::isfinite(x))
        throw InvalidValue("vector '" + v.patch_id + "' contains a non-finite value");
    idx.ids_.push_back(v.patch_id);
  }
  idx.build_lookup();

  idx.stats_.mean.assign(dim, 0.0);
  idx.stats_.stddev.assign(dim, 0.0);
  const double n = double(vectors.size());
  for (const auto& v : vectors)
    for (std::size_t j = 0; j < dim; ++j) idx.stats_.mean[j] += v.values[j];
  for (std::size_t j = 0; j < dim; ++j) idx.stats_.mean[j] /= n;
  for (const auto& v : vectors)
    for (std::size_t j = 0; j < dim; ++j) {
      const double d = v.values[j] - idx.stats_.mean[j];
      idx.stats_.stddev[j] += d * d;
    }
  for (std::size_t j = 0; j < dim; ++j) {
    idx.stats_.stddev[j] = std::sqrt(idx.stats_.stddev[j] / n);
    if (idx.stats_.stddev[j] == 0) idx.stats_.stddev[j] = 1.0;
  }

  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j)
      idx.data_[i * dim + j] =
          (vectors[i].values[j] - idx.stats_.mean[j]) / idx.stats_.stddev[j];

  idx.weights_.assign(dim, 1.0);
  return idx;
}

SimilarityIndex SimilarityIndex::from_parts(std::vector<std::string> ids,
                                            std::vector<double> z_data, std::size_t dim,
                                            std::vector<double> weights, DimStats stats) {
  if (ids.empty() || dim == 0 || z_data.size() != ids.size() * dim ||
      weights.size() != dim || stats.mean.size() != dim || stats.stddev.size() != dim)
    throw BadIndexFile("inconsistent index payload");
  SimilarityIndex idx;
  idx.dim_ = dim;
  idx.ids_ = std::move(ids);
  idx.data_ = std::move(z_data);
  idx.weights_ = std::move(weights);
  idx.stats_ = std::move(stats);
  idx.build_lookup();
  return idx;
}

void SimilarityIndex::build_lookup() {
  lookup_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i)
    if (!lookup_.emplace(ids_[i], i).second)
      throw InvalidValue("duplicate vector id '" + ids_[i] + "'");
}

std::optional<std::size_t> SimilarityIndex::find_id(const std::string& id) const {
  auto it = lookup_.find(id);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<double> SimilarityIndex::zscore(std::span<const double> raw) const {
  if (raw.size() != dim_)
    throw DimensionMismatch("query has dimension " + std::to_string(raw.size()) +
                            ", index has " + std::to_string(dim_));
  std::vector<double> z(dim_);
  for (std::size_t j = 0; j < dim_; ++j) z[j] = (raw[j] - stats_.mean[j]) / stats_.stddev[j];
  return z;
}

RankedList SimilarityIndex::query(std::span<const double> raw_query, std::size_t k,
                                  std::span<const double> weights, int threads) const {
  const std::vector<double> z = zscore(raw_query);
  return query_zscored(z, k, weights, threads);
}

RankedList SimilarityIndex::query_stored(std::size_t idx, std::size_t k,
                                         std::span<const double> weights, int threads) const {
  return query_zscored(stored(idx), k, weights, threads);
}

RankedList SimilarityIndex::query_zscored(std::span<const double> z_query, std::size_t k,
                                          std::span<const double> weights, int threads) const {
  if (k == 0) throw InvalidValue("k must be >= 1");
  if (z_query.size() != dim_) throw DimensionMismatch("query dimension mismatch");
  std::span<const double> w = weights.empty() ? std::span<const double>(weights_) : weights;
  if (w.size() != dim_) throw DimensionMismatch("weight dimension mismatch");

  k = std::min(k, size());
  const int t = std::max(1, std::min<int>(threads, int((size() + 1023) / 1024)));

  std::vector<std::vector<Candidate>> parts(t);
  if (t == 1) {
    scan_range(data_, dim_, z_query, w, 0, size(), k, parts[0]);
  } else {
    std::vector<std::thread> workers;
    const std::size_t chunk = (size() + t - 1) / t;
    for (int i = 0; i < t; ++i) {
      const std::size_t b = i * chunk, e = std::min(size(), b + chunk);
      workers.emplace_back([&, i, b, e] { scan_range(data_, dim_, z_query, w, b, e, k, parts[i]); });
    }
    for (auto& th : workers) th.join();
  }

  std::vector<Candidate> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  if (all.size() > k) all.resize(k);

  RankedList out;
  out.entries.reserve(all.size());
  for (const auto& c : all) out.entries.push_back({ids_[c.idx], std::sqrt(c.dist2)});
  return out;
}

double weighted_distance(std::span<const double> a, std::span<const double> b,
                         std::span<const double> w) {
  if (a.size() != b.size() || a.size() != w.size())
    throw DimensionMismatch("weighted_distance needs equal-length inputs");
  double d2 = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double diff = a[j] - b[j];
    d2 += w[j] * diff * diff;
  }
  return std::sqrt(d2);
}

std::vector<double> update_weights(const SimilarityIndex& index,
                                   const std::vector<std::size_t>& positives, double epsilon) {
  if (positives.size() < 2)
    throw TooFewPositives("weight update needs at least 2 positives, got " +
                          std::to_string(positives.size()));
  const std::size_t dim = index.dim();
  std::vector<double> mean(dim, 0.0), sd(dim, 0.0);
  for (std::size_t i : positives) {
    auto row = index.stored(i);
    for (std::size_t j = 0; j < dim; ++j) mean[j] += row[j];
  }
  for (std::size_t j = 0; j < dim; ++j) mean[j] /= double(positives.size());
  for (std::size_t i : positives) {
    auto row = index.stored(i);
    for (std::size_t j = 0; j < dim; ++j) {
      const double d = row[j] - mean[j];
      sd[j] += d * d;
    }
  }
  std::vector<double> w(dim);
  double total = 0;
  for (std::size_t j = 0; j < dim; ++j) {
    sd[j] = std::sqrt(sd[j] / double(positives.size()));
    w[j] = 1.0 / (sd[j] + epsilon);
    total += w[j];
  }
  for (std::size_t j = 0; j < dim; ++j) w[j] *= double(dim) / total;
  return w;
}

}  // namespace prognosis::index
