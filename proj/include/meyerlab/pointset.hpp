#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "meyerlab/common.hpp"

namespace meyerlab {

// Finite patch of a locally finite subset of R^d together with the box it was
// generated on. Points are lexicographically sorted and pairwise distinct
// (dedup tolerance kPosTol); every point lies inside region.
struct PointSet {
  int dim = 1;
  std::vector<Point> points;
  Box region;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

struct DensityEstimate {
  double lower = 0.0;   // points per unit volume, min over sliding windows
  double upper = 0.0;   // max over sliding windows
  double window_size = 0.0;
  std::size_t n_windows = 0;
};

struct MeyerCertificate {
  int dim = 1;
  bool is_delone = false;
  double min_sep = 0.0;          // r of r-uniform discreteness of the patch
  double covering_radius = 0.0;  // R of R-relative denseness (margin-interior)
  double delta_min_sep = 0.0;    // uniform-discreteness gap of the difference set
  double diff_radius = 0.0;      // truncation radius R used for the difference set
  std::vector<Point> cover_F;    // finite F with (Lambda-Lambda) subset Lambda+F on the patch
  std::vector<Point> uncovered;  // difference vectors the recipe failed to cover
  bool verdict = false;
};

struct DifferenceSet {
  PointSet set;
  bool truncated_by_patch = false;  // R exceeded the patch diameter
};

struct DeformResult {
  PointSet set;
  std::size_t symmetric_difference = 0;
};

// Validates (all raw points inside region, nonempty input), sorts
// lexicographically and deduplicates with tolerance kPosTol.
PointSet build_pointset(int dim, std::vector<Point> raw_points, const Box& region);

// Minimum pairwise distance. O(n log n): adjacent gaps in dim 1, plane sweep
// in dim 2. Requires at least 2 points.
double min_separation(const PointSet& ps);

// sup over x in region shrunk by margin of the distance to the nearest point.
// Exact gap scan in dim 1; in dim 2 a grid of spacing min_sep/4 is scanned and
// the result is the grid maximum plus the grid covering error (conservative).
double covering_radius(const PointSet& ps, double margin);

// (Lambda - Lambda) intersected with the closed ball of radius R, deduplicated;
// contains 0 and is symmetric about 0.
DifferenceSet difference_set(const PointSet& ps, double radius);

// Sliding-window point counts: window box of size `window` per axis moved with
// stride window/8 over every admissible center fully inside region.
DensityEstimate density_bounds(const PointSet& ps, double window);

// Delone parameters, uniform discreteness of the difference set, and the
// constructive finite cover F: for each z in Delta_R pick y in Lambda with
// z - y in K; F is the set of residues found. verdict is true iff every z was
// covered and the difference-set gap is bounded away from 0 (1e-6).
MeyerCertificate meyer_certificate(const PointSet& ps, double diff_radius, const Box& cover_box);

// (Lambda \ remove) union add. remove must match existing points, add must be
// new and inside region. Also reports |Lambda symdiff Gamma|.
DeformResult deform(const PointSet& ps, const std::vector<Point>& remove,
                    const std::vector<Point>& add);

PointSet intersect(const PointSet& a, const PointSet& b);
PointSet symmetric_difference(const PointSet& a, const PointSet& b);

// Keeps each point with probability 1 - remove_frac (splitmix64 stream).
DeformResult thin(const PointSet& ps, double remove_frac, std::uint64_t seed);

// Index of a point matching p within tol, or nullopt. Binary search on the
// lexicographic order.
std::optional<std::size_t> find_point(const std::vector<Point>& sorted, const Point& p,
                                      double tol = kPosTol);

}  // namespace meyerlab
