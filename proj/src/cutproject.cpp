#include "meyerlab/cutproject.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace meyerlab {

namespace {

constexpr double kSingularTol = 1e-12;
constexpr std::size_t kMaxEnumeration = 50'000'000;

void check_nonsingular(const Eigen::MatrixXd& basis) {
  if (basis.rows() != basis.cols() || basis.rows() < 1 || basis.rows() > 4)
    throw std::invalid_argument("lattice basis must be square with dimension 1..4");
  if (std::abs(basis.determinant()) <= kSingularTol)
    throw std::invalid_argument("lattice basis is singular");
}

// Integer coefficient ranges covering {B^-1 x : x in target box}.
struct IntBoxRange {
  std::vector<long> lo, hi;
  std::size_t cells = 1;
};

IntBoxRange coefficient_range(const Eigen::MatrixXd& basis, const Eigen::VectorXd& lo,
                              const Eigen::VectorXd& hi) {
  const int n = static_cast<int>(basis.rows());
  Eigen::MatrixXd inv = basis.inverse();
  IntBoxRange r;
  r.lo.assign(n, 0);
  r.hi.assign(n, 0);
  Eigen::VectorXd cmin = Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());
  Eigen::VectorXd cmax = -cmin;
  const int corners = 1 << n;
  for (int mask = 0; mask < corners; ++mask) {
    Eigen::VectorXd x(n);
    for (int k = 0; k < n; ++k) x[k] = (mask >> k) & 1 ? hi[k] : lo[k];
    Eigen::VectorXd c = inv * x;
    cmin = cmin.cwiseMin(c);
    cmax = cmax.cwiseMax(c);
  }
  for (int k = 0; k < n; ++k) {
    r.lo[k] = static_cast<long>(std::floor(cmin[k] - 1e-9)) - 1;
    r.hi[k] = static_cast<long>(std::ceil(cmax[k] + 1e-9)) + 1;
    r.cells *= static_cast<std::size_t>(r.hi[k] - r.lo[k] + 1);
  }
  return r;
}

}  // namespace

EmbeddingLattice make_lattice(const Eigen::MatrixXd& basis) {
  check_nonsingular(basis);
  return EmbeddingLattice{basis};
}

EmbeddingLattice dual_lattice(const EmbeddingLattice& lattice) {
  check_nonsingular(lattice.basis);
  EmbeddingLattice dual{lattice.basis.inverse().transpose()};
  const int n = lattice.total_dim();
  // <l, l*> must be an integer for sampled integer combinations.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXd a = lattice.basis.col(i) + lattice.basis.col(j) * 2.0;
      Eigen::VectorXd b = dual.basis.col(j) - dual.basis.col(i) * 3.0;
      double pairing = a.dot(b);
      if (std::abs(pairing - std::round(pairing)) > 1e-9)
        throw std::runtime_error("dual_lattice: pairing check failed");
    }
  }
  return dual;
}

PointSet generate_lattice_patch(const Eigen::MatrixXd& basis, const Box& region) {
  check_nonsingular(basis);
  const int d = static_cast<int>(basis.rows());
  if (d != region.dim) throw std::invalid_argument("generate_lattice_patch: dim mismatch");
  Eigen::VectorXd lo(d), hi(d);
  for (int k = 0; k < d; ++k) {
    lo[k] = region.lo[k];
    hi[k] = region.hi[k];
  }
  IntBoxRange r = coefficient_range(basis, lo, hi);
  if (r.cells > kMaxEnumeration)
    throw std::invalid_argument("generate_lattice_patch: region too large to enumerate");
  std::vector<Point> pts;
  for (long n0 = r.lo[0]; n0 <= r.hi[0]; ++n0) {
    for (long n1 = (d == 2 ? r.lo[1] : 0); n1 <= (d == 2 ? r.hi[1] : 0); ++n1) {
      Eigen::VectorXd c(d);
      c[0] = static_cast<double>(n0);
      if (d == 2) c[1] = static_cast<double>(n1);
      Eigen::VectorXd x = basis * c;
      Point p = d == 1 ? make_point(x[0]) : make_point(x[0], x[1]);
      if (region.contains(p)) pts.push_back(p);
    }
  }
  return build_pointset(d, std::move(pts), region);
}

PointSet generate_model_set(const CutProjectScheme& scheme, const Box& region) {
  const int d = scheme.d, m = scheme.m, n = d + m;
  check_nonsingular(scheme.lattice.basis);
  if (scheme.lattice.total_dim() != n)
    throw std::invalid_argument("generate_model_set: lattice dim != d + m");
  if (scheme.window.dim != m || region.dim != d)
    throw std::invalid_argument("generate_model_set: window/region dim mismatch");
  scheme.window.validate();
  region.validate();

  Eigen::VectorXd lo(n), hi(n);
  for (int k = 0; k < d; ++k) {
    lo[k] = region.lo[k];
    hi[k] = region.hi[k];
  }
  for (int k = 0; k < m; ++k) {
    lo[d + k] = scheme.window.lo[k];
    hi[d + k] = scheme.window.hi[k];
  }
  IntBoxRange r = coefficient_range(scheme.lattice.basis, lo, hi);
  if (r.cells > kMaxEnumeration) {
    double shrink = std::pow(static_cast<double>(kMaxEnumeration) / r.cells, 1.0 / d);
    throw std::invalid_argument(
        "generate_model_set: enumeration bound exceeded; shrink the region by a factor of about " +
        std::to_string(shrink));
  }

  std::vector<long> idx(n);
  std::vector<Point> pts;
  // Odometer over the integer coefficient box.
  for (int k = 0; k < n; ++k) idx[k] = r.lo[k];
  while (true) {
    Eigen::VectorXd c(n);
    for (int k = 0; k < n; ++k) c[k] = static_cast<double>(idx[k]);
    Eigen::VectorXd x = scheme.lattice.basis * c;
    Point internal = m == 1 ? make_point(x[d]) : make_point(x[d], x[d + 1]);
    if (scheme.window.contains_half_open(internal)) {
      Point phys = d == 1 ? make_point(x[0]) : make_point(x[0], x[1]);
      if (region.contains_half_open(phys)) pts.push_back(phys);
    }
    int k = 0;
    while (k < n && ++idx[k] > r.hi[k]) {
      idx[k] = r.lo[k];
      ++k;
    }
    if (k == n) break;
  }
  if (pts.empty()) throw std::runtime_error("generate_model_set: empty patch (window too small?)");
  return build_pointset(d, std::move(pts), region);
}

PointSet generate_fibonacci(std::size_t n_points) {
  if (n_points < 2) throw std::invalid_argument("generate_fibonacci: need at least 2 points");
  // 1 = long tile (length tau), 0 = short tile (length 1).
  std::vector<std::uint8_t> word{1};
  while (word.size() < n_points) {
    std::vector<std::uint8_t> next;
    next.reserve(2 * word.size());
    for (auto t : word) {
      if (t == 1) {
        next.push_back(1);
        next.push_back(0);
      } else {
        next.push_back(1);
      }
    }
    word.swap(next);
  }
  const double tau = golden_ratio();
  std::vector<Point> pts;
  pts.reserve(n_points);
  double pos = 0.0;
  for (std::size_t i = 0; i < n_points; ++i) {
    pts.push_back(make_point(pos));
    pos += word[i] == 1 ? tau : 1.0;
  }
  return build_pointset(1, std::move(pts), Box::interval(0.0, pos));
}

CutProjectScheme fibonacci_scheme() {
  const double tau = golden_ratio();
  Eigen::MatrixXd basis(2, 2);
  basis << 1.0, tau,        // physical row
      1.0, 1.0 - tau;       // internal row (algebraic conjugate)
  CutProjectScheme s;
  s.lattice = make_lattice(basis);
  s.d = 1;
  s.m = 1;
  s.window = Box::interval(-1.0, tau - 1.0);
  return s;
}

CutProjectScheme zd_scheme(int d) {
  if (d != 1 && d != 2) throw std::invalid_argument("zd_scheme: d must be 1 or 2");
  CutProjectScheme s;
  s.lattice = make_lattice(Eigen::MatrixXd::Identity(d + 1, d + 1));
  s.d = d;
  s.m = 1;
  s.window = Box::interval(-0.5, 0.5);
  return s;
}

std::vector<Point> fourier_candidates(const CutProjectScheme& scheme, const Box& freq_region,
                                      double internal_cutoff) {
  if (internal_cutoff <= 0)
    throw std::invalid_argument("fourier_candidates: cutoff must be > 0");
  if (freq_region.dim != scheme.d)
    throw std::invalid_argument("fourier_candidates: freq region dim mismatch");
  const int d = scheme.d, m = scheme.m, n = d + m;
  EmbeddingLattice dual = dual_lattice(scheme.lattice);

  Eigen::VectorXd lo(n), hi(n);
  for (int k = 0; k < d; ++k) {
    lo[k] = freq_region.lo[k];
    hi[k] = freq_region.hi[k];
  }
  for (int k = 0; k < m; ++k) {
    lo[d + k] = -internal_cutoff;
    hi[d + k] = internal_cutoff;
  }
  IntBoxRange r = coefficient_range(dual.basis, lo, hi);
  if (r.cells > kMaxEnumeration)
    throw std::invalid_argument("fourier_candidates: enumeration bound exceeded");

  std::vector<long> idx(n);
  for (int k = 0; k < n; ++k) idx[k] = r.lo[k];
  std::vector<Point> out;
  while (true) {
    Eigen::VectorXd c(n);
    for (int k = 0; k < n; ++k) c[k] = static_cast<double>(idx[k]);
    Eigen::VectorXd x = dual.basis * c;
    double internal_norm = m == 1 ? std::abs(x[d]) : std::hypot(x[d], x[d + 1]);
    if (internal_norm <= internal_cutoff) {
      Point chi = d == 1 ? make_point(x[0]) : make_point(x[0], x[1]);
      if (freq_region.contains(chi)) out.push_back(chi);
    }
    int k = 0;
    while (k < n && ++idx[k] > r.hi[k]) {
      idx[k] = r.lo[k];
      ++k;
    }
    if (k == n) break;
  }
  Point zero = make_point(0.0, 0.0);
  if (freq_region.contains(zero) &&
      std::none_of(out.begin(), out.end(), [&](const Point& p) { return same_point(p, zero); }))
    out.push_back(zero);
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Point& a, const Point& b) { return same_point(a, b); }),
            out.end());
  return out;
}

}  // namespace meyerlab
