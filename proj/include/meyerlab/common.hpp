#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace meyerlab {

// Absolute tolerance used for point dedup, set membership and lag matching.
inline constexpr double kPosTol = 1e-9;
// Absolute tolerance on weights when testing exact equality of combs.
inline constexpr double kWeightTol = 1e-9;
// Gaps below this are treated as "collapsed to zero" (degenerate separation).
inline constexpr double kDegenerateTol = 1e-6;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Points live in R^1 or R^2; the second coordinate is fixed to 0 in dim 1 so
// that lexicographic ordering and distance work uniformly.
using Point = std::array<double, 2>;

inline Point make_point(double x) { return {x, 0.0}; }
inline Point make_point(double x, double y) { return {x, y}; }

inline Point operator+(const Point& a, const Point& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Point operator-(const Point& a, const Point& b) { return {a[0] - b[0], a[1] - b[1]}; }
inline Point operator-(const Point& a) { return {-a[0], -a[1]}; }
inline Point operator*(double s, const Point& a) { return {s * a[0], s * a[1]}; }

inline double dot(const Point& a, const Point& b) { return a[0] * b[0] + a[1] * b[1]; }
inline double norm(const Point& a) { return std::hypot(a[0], a[1]); }
inline double dist(const Point& a, const Point& b) { return norm(a - b); }

inline bool lex_less(const Point& a, const Point& b) {
  if (a[0] != b[0]) return a[0] < b[0];
  return a[1] < b[1];
}

// Same point up to the shared dedup tolerance, componentwise.
inline bool same_point(const Point& a, const Point& b, double tol = kPosTol) {
  return std::abs(a[0] - b[0]) <= tol && std::abs(a[1] - b[1]) <= tol;
}

// Axis-aligned box with positive volume.
struct Box {
  int dim = 1;
  Point lo{0.0, 0.0};
  Point hi{0.0, 0.0};

  static Box interval(double lo, double hi) { return Box{1, {lo, 0.0}, {hi, 0.0}}; }
  static Box rect(double lox, double loy, double hix, double hiy) {
    return Box{2, {lox, loy}, {hix, hiy}};
  }
  static Box centered(int dim, double half_extent) {
    Box b;
    b.dim = dim;
    for (int k = 0; k < dim; ++k) {
      b.lo[k] = -half_extent;
      b.hi[k] = half_extent;
    }
    return b;
  }

  void validate() const {
    if (dim != 1 && dim != 2) throw std::invalid_argument("Box: dim must be 1 or 2");
    for (int k = 0; k < dim; ++k)
      if (!(lo[k] < hi[k])) throw std::invalid_argument("Box: requires lo < hi componentwise");
  }

  double extent(int k) const { return hi[k] - lo[k]; }
  double min_extent() const {
    double e = extent(0);
    if (dim == 2) e = std::min(e, extent(1));
    return e;
  }
  double volume() const {
    double v = 1.0;
    for (int k = 0; k < dim; ++k) v *= extent(k);
    return v;
  }
  double diameter() const {
    double s = 0.0;
    for (int k = 0; k < dim; ++k) s += extent(k) * extent(k);
    return std::sqrt(s);
  }

  bool contains(const Point& p, double tol = kPosTol) const {
    for (int k = 0; k < dim; ++k)
      if (p[k] < lo[k] - tol || p[k] > hi[k] + tol) return false;
    return true;
  }
  // Exact half-open membership [lo, hi); used for window cuts and patch
  // restriction where boundary double-hits must be impossible.
  bool contains_half_open(const Point& p) const {
    for (int k = 0; k < dim; ++k)
      if (p[k] < lo[k] || p[k] >= hi[k]) return false;
    return true;
  }

  Box shrunk(double margin) const {
    Box b = *this;
    for (int k = 0; k < dim; ++k) {
      b.lo[k] += margin;
      b.hi[k] -= margin;
    }
    return b;
  }
  bool empty() const {
    for (int k = 0; k < dim; ++k)
      if (!(lo[k] < hi[k])) return true;
    return false;
  }
  Box translated(const Point& t) const {
    Box b = *this;
    b.lo = b.lo + t;
    b.hi = b.hi + t;
    return b;
  }
  // Intersection; may be empty (check with empty()).
  Box intersect(const Box& other) const {
    Box b = *this;
    for (int k = 0; k < dim; ++k) {
      b.lo[k] = std::max(lo[k], other.lo[k]);
      b.hi[k] = std::min(hi[k], other.hi[k]);
    }
    return b;
  }
  Box hull(const Box& other) const {
    Box b = *this;
    for (int k = 0; k < dim; ++k) {
      b.lo[k] = std::min(lo[k], other.lo[k]);
      b.hi[k] = std::max(hi[k], other.hi[k]);
    }
    return b;
  }
};

using Complex = std::complex<double>;

}  // namespace meyerlab
