#include "prognosis/features/stain.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <fstream>

#include "prognosis/errors.hpp"

#include <nlohmann/json.hpp>

namespace prognosis::features {

namespace {

constexpr double kLog10 = 2.302585092994046;  // ln(10)

inline double od_of(std::uint8_t intensity) {
  return -std::log10((intensity + 1.0) / 256.0);
}

inline std::uint8_t intensity_of(double od) {
  const double v = std::round(256.0 * std::exp(-od * kLog10) - 1.0);
  return static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
}

// Percentile with linear interpolation over a sorted copy.
double percentile(std::vector<double> v, double pct) {
  std::sort(v.begin(), v.end());
  if (v.size() == 1) return v[0];
  const double pos = pct / 100.0 * (v.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  const double frac = pos - lo;
  return v[lo] * (1 - frac) + v[hi] * frac;
}

Eigen::Matrix<double, 3, 2> matrix_of(const StainReference& ref) {
  Eigen::Matrix<double, 3, 2> m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = ref.stain_matrix[r][c];
  return m;
}

}  // namespace

StainReference estimate_stain_reference(const Patch& patch, double beta_od_threshold,
                                        double alpha_percentile) {
  // Collect tissue OD vectors.
  std::vector<Eigen::Vector3d> od;
  od.reserve(std::size_t(patch.width) * patch.height);
  for (int y = 0; y < patch.height; ++y)
    for (int x = 0; x < patch.width; ++x) {
      const std::uint8_t* px = patch.rgb(x, y);
      Eigen::Vector3d v(od_of(px[0]), od_of(px[1]), od_of(px[2]));
      if (v.maxCoeff() > beta_od_threshold) od.push_back(v);
    }
  if (od.size() < 100)
    throw EmptyTissue("only " + std::to_string(od.size()) +
                      " pixels pass the OD threshold (need 100)");

  Eigen::Vector3d mean = Eigen::Vector3d::Zero();
  for (const auto& v : od) mean += v;
  mean /= double(od.size());
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (const auto& v : od) {
    const Eigen::Vector3d d = v - mean;
    cov += d * d.transpose();
  }
  cov /= double(od.size());

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(cov);
  // Eigenvalues ascending: principal plane is spanned by the last two.
  if (eig.eigenvalues()(1) < 1e-10)
    throw DegenerateStain("optical-density covariance has rank < 2");
  Eigen::Vector3d e1 = eig.eigenvectors().col(2);
  Eigen::Vector3d e2 = eig.eigenvectors().col(1);
  if (mean.dot(e1) < 0) e1 = -e1;

  std::vector<double> angles;
  angles.reserve(od.size());
  for (const auto& v : od) angles.push_back(std::atan2(v.dot(e2), v.dot(e1)));
  const double lo = percentile(angles, alpha_percentile);
  const double hi = percentile(angles, 100.0 - alpha_percentile);
  Eigen::Vector3d v_lo = std::cos(lo) * e1 + std::sin(lo) * e2;
  Eigen::Vector3d v_hi = std::cos(hi) * e1 + std::sin(hi) * e2;
  if (v_lo.dot(mean) < 0) v_lo = -v_lo;
  if (v_hi.dot(mean) < 0) v_hi = -v_hi;

  // Hematoxylin is the direction with the larger blue-channel OD.
  Eigen::Vector3d h = v_lo, e = v_hi;
  if (e(2) > h(2)) std::swap(h, e);

  StainReference ref;
  Eigen::Matrix<double, 3, 2> m;
  m.col(0) = h;
  m.col(1) = e;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 2; ++c) ref.stain_matrix[r][c] = m(r, c);

  // Least-squares concentrations and their 99th percentiles.
  const Eigen::Matrix2d gram_inv = (m.transpose() * m).inverse();
  std::vector<double> ch, ce;
  ch.reserve(od.size());
  ce.reserve(od.size());
  for (const auto& v : od) {
    const Eigen::Vector2d c = gram_inv * (m.transpose() * v);
    ch.push_back(c(0));
    ce.push_back(c(1));
  }
  ref.max_concentrations[0] = std::max(percentile(std::move(ch), 99.0), 1e-6);
  ref.max_concentrations[1] = std::max(percentile(std::move(ce), 99.0), 1e-6);
  return ref;
}

Patch stain_normalize(const Patch& patch, const StainReference& source,
                      const StainReference& target) {
  const Eigen::Matrix<double, 3, 2> ms = matrix_of(source);
  const Eigen::Matrix<double, 3, 2> mt = matrix_of(target);
  for (int i = 0; i < 2; ++i)
    if (!(source.max_concentrations[i] > 0) || !(target.max_concentrations[i] > 0))
      throw InvalidValue("stain reference has non-positive max concentration");
  const Eigen::Matrix2d gram_inv = (ms.transpose() * ms).inverse();
  const Eigen::Vector2d scale(target.max_concentrations[0] / source.max_concentrations[0],
                              target.max_concentrations[1] / source.max_concentrations[1]);

  Patch out = patch;
  for (int y = 0; y < patch.height; ++y)
    for (int x = 0; x < patch.width; ++x) {
      const std::uint8_t* px = patch.rgb(x, y);
      const Eigen::Vector3d od(od_of(px[0]), od_of(px[1]), od_of(px[2]));
      const Eigen::Vector2d conc = gram_inv * (ms.transpose() * od);
      const Eigen::Vector3d residual = od - ms * conc;  // off-plane component passes through
      const Eigen::Vector3d od_out = mt * conc.cwiseProduct(scale) + residual;
      std::uint8_t* q = out.rgb(x, y);
      for (int ch = 0; ch < 3; ++ch) q[ch] = intensity_of(od_out(ch));
    }
  return out;
}

void save_stain_reference(const std::filesystem::path& path, const StainReference& ref) {
  nlohmann::ordered_json j;
  j["stain_matrix"] = {{ref.stain_matrix[0][0], ref.stain_matrix[0][1]},
                       {ref.stain_matrix[1][0], ref.stain_matrix[1][1]},
                       {ref.stain_matrix[2][0], ref.stain_matrix[2][1]}};
  j["max_concentrations"] = {ref.max_concentrations[0], ref.max_concentrations[1]};
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write stain reference: " + path.string());
  out << j.dump(2) << '\n';
}

StainReference load_stain_reference(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open stain reference: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
    StainReference ref;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 2; ++c) ref.stain_matrix[r][c] = j.at("stain_matrix").at(r).at(c);
    ref.max_concentrations[0] = j.at("max_concentrations").at(0);
    ref.max_concentrations[1] = j.at("max_concentrations").at(1);
    return ref;
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed stain reference " + path.string() + ": " + e.what());
  }
}

}  // namespace prognosis::features
