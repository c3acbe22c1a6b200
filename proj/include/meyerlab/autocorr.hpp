#pragma once

#include <vector>

#include "meyerlab/pointset.hpp"

namespace meyerlab {

struct Atom {
  Point x;
  Complex w;
};

// Finitely supported complex-weighted Dirac comb. Atom positions are distinct
// (tolerance kPosTol) and sorted lexicographically.
struct WeightedComb {
  int dim = 1;
  std::vector<Atom> atoms;
  Box region;

  std::size_t size() const { return atoms.size(); }
  bool empty() const { return atoms.empty(); }
};

WeightedComb make_comb(int dim, std::vector<Atom> atoms, const Box& region);

// Unit Dirac comb of a point set.
WeightedComb comb_from_pointset(const PointSet& ps);

// Finite-volume autocorrelation: comb on lags z with |z| <= lag_radius,
// weight(z) = (1/Vol(A)) sum_{x,y in supp intersect A, x - y = z} w(x) conj(w(y)).
// Hermitian by construction; weight(0) > 0 for nonzero input. No edge
// correction: the plain-restriction boundary deficit of order |z|/|A| is left
// in place. Pass lag_radius >= diameter(A) to realize every lag.
WeightedComb finite_autocorrelation(const WeightedComb& omega, const Box& A, double lag_radius);

// Single-lag coefficient via direct partner lookup (independent of the sweep
// accumulator path).
Complex autocorr_coefficient(const WeightedComb& omega, const Box& A, const Point& lag);

// Restriction to a box (half-open).
WeightedComb restrict_comb(const WeightedComb& omega, const Box& A);

// Comb translated by t (positions and region shift).
WeightedComb translate(const WeightedComb& omega, const Point& t);

// max |w| over atoms (sup norm of the measure).
double sup_norm(const WeightedComb& omega);

}  // namespace meyerlab
