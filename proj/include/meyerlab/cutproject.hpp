#pragma once

#include <Eigen/Dense>
#include <vector>

#include "meyerlab/pointset.hpp"

namespace meyerlab {

// Full-rank lattice in R^n given by basis columns.
struct EmbeddingLattice {
  Eigen::MatrixXd basis;

  int total_dim() const { return static_cast<int>(basis.rows()); }
};

// Cut-and-project scheme: embedding lattice in R^(d+m), physical projection
// onto the first d coordinates, internal projection onto the last m, and a
// half-open acceptance window in internal space.
struct CutProjectScheme {
  EmbeddingLattice lattice;
  int d = 1;
  int m = 1;
  Box window;  // dim m, membership [lo, hi)
};

// Golden ratio; tile lengths of the Fibonacci chain are tau and 1.
inline double golden_ratio() { return 0.5 * (1.0 + std::sqrt(5.0)); }

EmbeddingLattice make_lattice(const Eigen::MatrixXd& basis);

// Dual lattice: inverse transpose basis. Pairings <l, l*> of sampled integer
// combinations are verified to be integers within 1e-9.
EmbeddingLattice dual_lattice(const EmbeddingLattice& lattice);

// All lattice points of a full-rank d-dimensional lattice inside region.
PointSet generate_lattice_patch(const Eigen::MatrixXd& basis, const Box& region);

// { phys(l) : l in lattice, int(l) in window, phys(l) in region }, with the
// physical restriction half-open. The integer enumeration range is derived
// from the inverse basis applied to the region x window corners.
PointSet generate_model_set(const CutProjectScheme& scheme, const Box& region);

// First n_points left endpoints of the Fibonacci chain (substitution
// a -> ab, b -> a; tile lengths tau and 1), starting at 0. The region extends
// to the right endpoint of the n-th tile.
PointSet generate_fibonacci(std::size_t n_points);

// The cut-and-project description of the same chain: embedding lattice with
// columns (1, 1) and (tau, 1 - tau), window [-1, tau - 1).
CutProjectScheme fibonacci_scheme();

// Trivial scheme projecting Z^(d+1) onto Z^d (full internal window).
CutProjectScheme zd_scheme(int d);

// Physical parts of dual-lattice points whose internal part has Euclidean norm
// <= internal_cutoff, restricted to freq_region; sorted, symmetric, includes 0.
std::vector<Point> fourier_candidates(const CutProjectScheme& scheme, const Box& freq_region,
                                      double internal_cutoff);

}  // namespace meyerlab
