#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "meyerlab/autocorr.hpp"
#include "meyerlab/common.hpp"
#include "meyerlab/pointset.hpp"
#include "meyerlab/rng.hpp"

namespace testsupport {

using namespace meyerlab;

// Brute-force oracles, quadratic on purpose: they stay independent of the
// swept/bucketed implementation paths they check.

inline double brute_min_separation(const std::vector<Point>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, dist(pts[i], pts[j]));
  return best;
}

inline double brute_covering_radius_1d(const std::vector<Point>& pts, double lo, double hi,
                                       int samples = 20001) {
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    double x = lo + (hi - lo) * s / (samples - 1);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : pts) best = std::min(best, std::abs(p[0] - x));
    worst = std::max(worst, best);
  }
  return worst;
}

inline std::vector<Point> brute_difference_set(const std::vector<Point>& pts, double radius) {
  std::vector<Point> out;
  for (const auto& a : pts)
    for (const auto& b : pts) {
      Point z = a - b;
      if (norm(z) <= radius) out.push_back(z);
    }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Point& a, const Point& b) { return same_point(a, b); }),
            out.end());
  return out;
}

// Pair loop over the restriction, no sweep, no hashing.
inline Complex brute_autocorr_weight(const WeightedComb& comb, const Box& A, const Point& lag) {
  Complex sum{0.0, 0.0};
  for (const auto& a : comb.atoms) {
    if (!A.contains_half_open(a.x)) continue;
    for (const auto& b : comb.atoms) {
      if (!A.contains_half_open(b.x)) continue;
      if (same_point(a.x - b.x, lag)) sum += a.w * std::conj(b.w);
    }
  }
  return sum / A.volume();
}

inline PointSet zd_patch(std::size_t n) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(make_point(static_cast<double>(i)));
  return build_pointset(1, std::move(pts), Box::interval(0.0, static_cast<double>(n)));
}

// Random sorted point set in [0, span) with a minimum gap, for property runs.
inline PointSet random_pointset(SplitMix64& rng, std::size_t n, double span) {
  std::vector<Point> pts;
  double x = rng.next_double();
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(make_point(x));
    x += 0.05 + rng.next_double() * (span / n);
  }
  return build_pointset(1, std::move(pts), Box::interval(-1.0, x + 1.0));
}

inline WeightedComb random_comb(SplitMix64& rng, std::size_t n, double span,
                                bool complex_weights = true) {
  std::vector<Atom> atoms;
  double x = rng.next_double();
  for (std::size_t i = 0; i < n; ++i) {
    Complex w{0.2 + rng.next_double(), complex_weights ? rng.next_double() - 0.5 : 0.0};
    atoms.push_back({make_point(x), w});
    x += 0.05 + rng.next_double() * (span / n);
  }
  return make_comb(1, std::move(atoms), Box::interval(-1.0, x + 1.0));
}

}  // namespace testsupport
