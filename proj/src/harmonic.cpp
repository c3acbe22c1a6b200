#include "meyerlab/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace meyerlab {

namespace {

// Golden-section minimization on [lo, hi].
template <typename F>
double golden_min(F&& f, double lo, double hi, int iters = 48) {
  const double inv_phi = 2.0 / (1.0 + std::sqrt(5.0));
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

double patch_radius(const PointSet& dset) {
  double r = 0.0;
  for (const auto& p : dset.points) r = std::max(r, norm(p));
  return r;
}

void finalize_members(CharacterSet& cs) {
  std::sort(cs.members.begin(), cs.members.end(),
            [](const CharacterMember& a, const CharacterMember& b) {
              return lex_less(a.chi, b.chi);
            });
  cs.members.erase(std::unique(cs.members.begin(), cs.members.end(),
                               [](const CharacterMember& a, const CharacterMember& b) {
                                 return same_point(a.chi, b.chi);
                               }),
                   cs.members.end());
}

// Reduce v by nearest-integer multiples of the basis vectors. For two
// well-conditioned basis vectors the 2x2 coefficient solve is used; otherwise
// sequential projections (which also handle the collinear case).
Point reduce_against(const Point& v, const std::vector<Point>& basis) {
  if (basis.empty()) return v;
  if (basis.size() == 2) {
    const Point &b1 = basis[0], &b2 = basis[1];
    double det = b1[0] * b2[1] - b1[1] * b2[0];
    if (std::abs(det) > 1e-12 * norm(b1) * norm(b2)) {
      double c1 = (v[0] * b2[1] - v[1] * b2[0]) / det;
      double c2 = (b1[0] * v[1] - b1[1] * v[0]) / det;
      return v - std::round(c1) * b1 - std::round(c2) * b2;
    }
  }
  Point r = v;
  for (const auto& b : basis) {
    double k = std::round(dot(r, b) / dot(b, b));
    r = r - k * b;
  }
  return r;
}

}  // namespace

double character_deviation(const Point& chi, const PointSet& dset) {
  if (dset.empty()) throw std::invalid_argument("character_deviation: empty set");
  double worst = 0.0;
  for (const auto& x : dset.points) {
    double s = std::abs(std::sin(kPi * dot(x, chi)));
    worst = std::max(worst, s);
    if (worst >= 1.0) return 2.0;  // attained the diameter of the circle
  }
  return 2.0 * worst;
}

CharacterSet epsilon_dual_set(const PointSet& dset, double eps, const Box& freq_region,
                              const std::vector<Point>& candidates) {
  if (!(eps > 0.0 && eps < 2.0))
    throw std::invalid_argument("epsilon_dual_set: eps must be in (0, 2)");
  if (candidates.empty()) throw std::invalid_argument("epsilon_dual_set: no candidates");
  CharacterSet cs;
  cs.dim = dset.dim;
  cs.eps = eps;
  cs.truncation_radius = patch_radius(dset);
  for (const auto& chi : candidates) {
    if (!freq_region.contains(chi)) continue;
    double dev = character_deviation(chi, dset);
    if (dev <= eps) cs.members.push_back({chi, dev});
  }
  Point zero = make_point(0.0, 0.0);
  if (freq_region.contains(zero)) cs.members.push_back({zero, 0.0});
  finalize_members(cs);
  return cs;
}

CharacterSet epsilon_dual_set_grid(const PointSet& dset, double eps, const Box& freq_region,
                                   double grid_step) {
  if (!(eps > 0.0 && eps < 2.0))
    throw std::invalid_argument("epsilon_dual_set_grid: eps must be in (0, 2)");
  if (grid_step <= 0) throw std::invalid_argument("epsilon_dual_set_grid: grid_step must be > 0");
  if (dset.dim != 1)
    throw std::invalid_argument("epsilon_dual_set_grid: grid fallback implemented for dim 1");
  CharacterSet cs;
  cs.dim = 1;
  cs.eps = eps;
  cs.truncation_radius = patch_radius(dset);
  auto dev_at = [&](double x) { return character_deviation(make_point(x), dset); };
  for (double x = freq_region.lo[0]; x <= freq_region.hi[0] + kPosTol; x += grid_step) {
    if (dev_at(x) > 1.5 * eps) continue;
    double refined = golden_min(dev_at, x - grid_step, x + grid_step);
    double dev = dev_at(refined);
    if (dev <= eps) cs.members.push_back({make_point(refined), dev});
  }
  Point zero = make_point(0.0, 0.0);
  if (freq_region.contains(zero)) cs.members.push_back({zero, 0.0});
  finalize_members(cs);
  return cs;
}

double sup_distance(const WeightedComb& mu, const WeightedComb& nu) {
  if (mu.dim != nu.dim) throw std::invalid_argument("sup_distance: dim mismatch");
  double worst = 0.0;
  std::size_t i = 0, j = 0;
  const auto& a = mu.atoms;
  const auto& b = nu.atoms;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size() || (i < a.size() && lex_less(a[i].x, b[j].x) &&
                          !same_point(a[i].x, b[j].x))) {
      worst = std::max(worst, std::abs(a[i].w));
      ++i;
    } else if (i >= a.size() || (lex_less(b[j].x, a[i].x) && !same_point(a[i].x, b[j].x))) {
      worst = std::max(worst, std::abs(b[j].w));
      ++j;
    } else {
      worst = std::max(worst, std::abs(a[i].w - b[j].w));
      ++i;
      ++j;
    }
  }
  return worst;
}

double sup_distance_on(const WeightedComb& mu, const WeightedComb& nu, const Box& box) {
  return sup_distance(restrict_comb(mu, box), restrict_comb(nu, box));
}

AlmostPeriodReport almost_periods(const WeightedComb& mu, double eps,
                                  const std::vector<Point>& candidate_translations) {
  if (eps <= 0) throw std::invalid_argument("almost_periods: eps must be > 0");
  AlmostPeriodReport report;
  report.eps = eps;
  for (const auto& t : candidate_translations) {
    Box overlap = mu.region.intersect(mu.region.translated(t));
    double margin;
    if (overlap.empty()) {
      margin = sup_norm(mu);
    } else {
      margin = sup_distance_on(mu, translate(mu, t), overlap);
    }
    report.tested.push_back(t);
    report.margins.push_back(margin);
    if (margin < eps) report.passing.push_back(t);
  }
  return report;
}

double exact_period_threshold(const WeightedComb& mu) {
  std::vector<Complex> values;
  for (const auto& a : mu.atoms) {
    bool known = false;
    for (const auto& v : values)
      if (std::abs(v - a.w) <= kWeightTol) {
        known = true;
        break;
      }
    if (!known) values.push_back(a.w);
  }
  double threshold = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < values.size(); ++i) {
    threshold = std::min(threshold, std::abs(values[i]));
    for (std::size_t j = i + 1; j < values.size(); ++j)
      threshold = std::min(threshold, std::abs(values[i] - values[j]));
  }
  return threshold;
}

std::optional<EmbeddingLattice> extract_period_lattice(
    const WeightedComb& mu, double eps, const std::vector<Point>& candidate_translations) {
  if (mu.empty()) throw std::invalid_argument("extract_period_lattice: empty comb");
  double threshold = exact_period_threshold(mu);
  if (!(eps > 0) || eps >= threshold)
    throw std::invalid_argument(
        "extract_period_lattice: eps must be positive and below the minimum separation of the "
        "weight values (" +
        std::to_string(threshold) + "), which forces almost periods to be exact periods");

  auto is_period = [&](const Point& t) {
    Box overlap = mu.region.intersect(mu.region.translated(t));
    if (overlap.empty()) return false;
    WeightedComb core = restrict_comb(mu, overlap);
    if (core.empty()) return false;
    return sup_distance_on(mu, translate(mu, t), overlap) <= kWeightTol;
  };

  std::vector<Point> periods;
  for (const auto& t : candidate_translations) {
    if (norm(t) <= kPosTol) continue;
    if (is_period(t)) periods.push_back(t);
  }
  if (periods.empty()) return std::nullopt;

  // Fixpoint reduction of the generator list down to a basis of the generated
  // group. Each round sorts by norm and reduces every vector by integer
  // combinations of the shorter ones; residual vectors below the
  // discreteness threshold mean the group has collapsed (dense), which is
  // reported as "no lattice".
  const std::size_t max_rank = static_cast<std::size_t>(mu.dim);
  std::vector<Point> basis = periods;
  for (int round = 0; round < 256; ++round) {
    std::sort(basis.begin(), basis.end(),
              [](const Point& a, const Point& b) { return norm(a) < norm(b); });
    bool changed = false;
    std::vector<Point> next;
    for (const auto& v : basis) {
      Point r = reduce_against(v, next);
      if (norm(r) <= kPosTol) {
        changed = changed || norm(v) > kPosTol;
        continue;
      }
      if (norm(r) < kDegenerateTol) return std::nullopt;  // gaps collapsed
      if (!same_point(r, v, 0.0)) changed = true;
      next.push_back(r);
    }
    basis.swap(next);
    if (!changed) break;
  }
  if (basis.empty()) return std::nullopt;
  if (basis.size() > max_rank) return std::nullopt;  // could not fold: not discrete

  // Every basis vector must itself be a period of the patch.
  for (const auto& b : basis)
    if (!is_period(b)) return std::nullopt;

  const int d = mu.dim;
  Eigen::MatrixXd mat(d, d);
  if (d == 1) {
    mat(0, 0) = std::abs(basis[0][0]);
  } else {
    if (basis.size() < 2) return std::nullopt;  // rank-deficient period group
    for (int k = 0; k < 2; ++k) {
      mat(0, k) = basis[k][0];
      mat(1, k) = basis[k][1];
    }
  }
  return make_lattice(mat);
}

}  // namespace meyerlab
