#pragma once

#include <optional>
#include <vector>

#include "meyerlab/autocorr.hpp"
#include "meyerlab/cutproject.hpp"
#include "meyerlab/pointset.hpp"

namespace meyerlab {

struct CharacterMember {
  Point chi;
  double max_deviation = 0.0;  // max over x in the difference patch of |1 - chi(x)|
};

// Frequencies whose character stays eps-close to 1 on a finite difference
// patch. Because only finitely many x are constrained, the computed set
// over-approximates the true dual set restricted to the same candidates; it
// shrinks monotonically as the truncation radius grows.
struct CharacterSet {
  int dim = 1;
  double eps = 0.0;
  double truncation_radius = 0.0;
  std::vector<CharacterMember> members;  // sorted by chi, symmetric, contains 0
};

struct AlmostPeriodReport {
  double eps = 0.0;
  std::vector<Point> tested;
  std::vector<Point> passing;
  std::vector<double> margins;  // sup distance per tested translation
};

// max over x in dset of |1 - e^{-2 pi i x.chi}| = max 2|sin(pi x.chi)|; in [0, 2].
double character_deviation(const Point& chi, const PointSet& dset);

// Filters explicit candidate frequencies by character_deviation <= eps.
CharacterSet epsilon_dual_set(const PointSet& dset, double eps, const Box& freq_region,
                              const std::vector<Point>& candidates);

// Fallback for unknown sets: uniform grid over freq_region (dim 1), each
// near-member refined by golden-section minimization of the deviation.
CharacterSet epsilon_dual_set_grid(const PointSet& dset, double eps, const Box& freq_region,
                                   double grid_step);

// sup over the union of supports of |mu({x}) - nu({x})|, positions matched
// with tolerance kPosTol.
double sup_distance(const WeightedComb& mu, const WeightedComb& nu);

// Same, restricted to atoms inside the box.
double sup_distance_on(const WeightedComb& mu, const WeightedComb& nu, const Box& box);

// For each candidate t, the sup distance between mu and its translate by t,
// evaluated on the overlap region (atoms lost to translation of a finite
// patch are truncation artifacts, not mismatches).
AlmostPeriodReport almost_periods(const WeightedComb& mu, double eps,
                                  const std::vector<Point>& candidate_translations);

// The threshold below which an eps-almost period of a finitely-valued comb is
// forced to be an exact period: min over distinct weight values of
// {|c_i - c_j|} union {|c_i|}.
double exact_period_threshold(const WeightedComb& mu);

// Finds candidate translations that are exact periods (weight tolerance
// kWeightTol on the overlap) and returns a basis of the group they generate,
// or nullopt when no nonzero period exists or the generated group degenerates
// (gaps collapse below kDegenerateTol). eps must be below
// exact_period_threshold(mu).
std::optional<EmbeddingLattice> extract_period_lattice(
    const WeightedComb& mu, double eps, const std::vector<Point>& candidate_translations);

}  // namespace meyerlab
