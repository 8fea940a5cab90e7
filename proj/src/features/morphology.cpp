#include "prognosis/features/morphology.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace prognosis::features {

namespace {

// Clockwise Moore neighborhood, y pointing down: E, SE, S, SW, W, NW, N, NE.
constexpr int kDx[8] = {1, 1, 0, -1, -1, -1, 0, 1};
constexpr int kDy[8] = {0, 1, 1, 1, 0, -1, -1, -1};

struct Point {
  int x, y;
  bool operator==(const Point&) const = default;
};

// Moore boundary tracing of the 8-connected component containing `start`
// (its topmost-leftmost pixel), with Jacob's stopping criterion. Returns the
// chain length: 1 per axial step, sqrt(2) per diagonal step.
double trace_component(const NucleusRegion& r, Point start, std::vector<std::uint8_t>& visited) {
  auto mark = [&](Point p) { visited[std::size_t(p.y) * r.width + p.x] = 1; };
  mark(start);

  // Direction from `cur` toward the backtrack (last non-component) pixel.
  int back_dir = 4;  // W of the topmost-leftmost pixel is always outside
  Point cur = start;
  double length = 0;
  int first_move = -1;
  const std::size_t max_steps = 8 * (r.area + 1);

  for (std::size_t step = 0; step < max_steps; ++step) {
    int found = -1;
    for (int i = 1; i <= 8; ++i) {
      int d = (back_dir + i) % 8;
      Point cand{cur.x + kDx[d], cur.y + kDy[d]};
      if (r.in(cand.x, cand.y)) {
        found = d;
        break;
      }
    }
    if (found < 0) return 0;  // isolated pixel
    if (first_move < 0) {
      first_move = found;
    } else if (cur == start && found == first_move) {
      return length;  // closed the tour
    }
    Point next{cur.x + kDx[found], cur.y + kDy[found]};
    length += (found % 2 == 0) ? 1.0 : std::numbers::sqrt2;
    // New backtrack: the neighbor checked just before the hit, seen from next.
    int prev = (found + 7) % 8;
    Point back{cur.x + kDx[prev], cur.y + kDy[prev]};
    back_dir = 0;
    for (int d = 0; d < 8; ++d)
      if (next.x + kDx[d] == back.x && next.y + kDy[d] == back.y) {
        back_dir = d;
        break;
      }
    cur = next;
    mark(cur);
  }
  return length;
}

double perimeter_of(const NucleusRegion& r) {
  // Sum outer-boundary chains over 8-connected components.
  std::vector<std::uint8_t> traced(r.inside.size(), 0);
  std::vector<std::uint8_t> assigned(r.inside.size(), 0);
  double total = 0;
  for (int y = 0; y < r.height; ++y)
    for (int x = 0; x < r.width; ++x) {
      std::size_t idx = std::size_t(y) * r.width + x;
      if (!r.inside[idx] || assigned[idx]) continue;
      // Flood-fill the component so later pixels don't re-trace it.
      std::vector<Point> stack{{x, y}};
      assigned[idx] = 1;
      while (!stack.empty()) {
        Point p = stack.back();
        stack.pop_back();
        for (int d = 0; d < 8; ++d) {
          Point q{p.x + kDx[d], p.y + kDy[d]};
          if (!r.in(q.x, q.y)) continue;
          std::size_t qi = std::size_t(q.y) * r.width + q.x;
          if (!assigned[qi]) {
            assigned[qi] = 1;
            stack.push_back(q);
          }
        }
      }
      total += trace_component(r, {x, y}, traced);
    }
  return total;
}

bool is_boundary(const NucleusRegion& r, int x, int y) {
  return !r.in(x - 1, y) || !r.in(x + 1, y) || !r.in(x, y - 1) || !r.in(x, y + 1);
}

double cross(const Point& o, const Point& a, const Point& b) {
  return double(a.x - o.x) * (b.y - o.y) - double(a.y - o.y) * (b.x - o.x);
}

// Monotone chain over boundary pixel centers; returns the hull area.
double hull_area(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Point& a, const Point& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return 0;
  std::vector<Point> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k > 1 ? k - 1 : 0);
  double area2 = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& a = hull[i];
    const Point& b = hull[(i + 1) % hull.size()];
    area2 += double(a.x) * b.y - double(b.x) * a.y;
  }
  return std::abs(area2) / 2.0;
}

}  // namespace

MorphologyFeatures morphology_of(const NucleusRegion& r) {
  MorphologyFeatures f{};
  const double n = static_cast<double>(r.area);
  f.area_px = n;
  f.equivalent_diameter = std::sqrt(4.0 * n / std::numbers::pi);
  f.extent = n / (double(r.width) * r.height);

  // Image-moment ellipse.
  double sx = 0, sy = 0;
  std::vector<Point> boundary;
  for (int y = 0; y < r.height; ++y)
    for (int x = 0; x < r.width; ++x)
      if (r.inside[std::size_t(y) * r.width + x]) {
        sx += x;
        sy += y;
        if (is_boundary(r, x, y)) boundary.push_back({x, y});
      }
  const double cx = sx / n, cy = sy / n;
  double mu20 = 0, mu02 = 0, mu11 = 0;
  for (int y = 0; y < r.height; ++y)
    for (int x = 0; x < r.width; ++x)
      if (r.inside[std::size_t(y) * r.width + x]) {
        const double dx = x - cx, dy = y - cy;
        mu20 += dx * dx;
        mu02 += dy * dy;
        mu11 += dx * dy;
      }
  mu20 /= n;
  mu02 /= n;
  mu11 /= n;
  const double tr = (mu20 + mu02) / 2.0;
  const double det = std::sqrt(std::pow((mu20 - mu02) / 2.0, 2) + mu11 * mu11);
  const double l1 = tr + det;
  const double l2 = std::max(tr - det, 0.0);
  f.major_axis_len = std::max(4.0 * std::sqrt(l1), 1.0);  // degenerate axes floor at one pixel
  f.minor_axis_len = std::max(4.0 * std::sqrt(l2), 1.0);
  if (f.minor_axis_len > f.major_axis_len) std::swap(f.minor_axis_len, f.major_axis_len);
  const double ratio = f.minor_axis_len / f.major_axis_len;
  f.eccentricity = std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
  f.aspect_ratio = f.major_axis_len / f.minor_axis_len;

  f.perimeter_px = std::max(perimeter_of(r), 1.0);
  f.circularity = 4.0 * std::numbers::pi * n / (f.perimeter_px * f.perimeter_px);

  const double hull = hull_area(std::move(boundary));
  f.solidity = hull > 0 ? std::min(1.0, n / hull) : 1.0;
  return f;
}

MorphologyFeatures morphological_features(const LabelMask& mask, std::uint32_t nucleus_id) {
  return morphology_of(build_region(mask, nucleus_id));
}

}  // namespace prognosis::features
