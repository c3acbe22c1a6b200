#include "meyerlab/autocorr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace meyerlab {

namespace {

// Open-addressing accumulator over lags quantized to the kPosTol grid.
// The pair sweep visits O(n^2 / 2) lags on full-diameter runs, so insertion
// must stay a handful of nanoseconds.
class LagAccumulator {
 public:
  explicit LagAccumulator(std::size_t expected) { rehash(table_size_for(expected)); }

  void add(double zx, double zy, Complex w) {
    // z is produced with positive lexicographic orientation, so plain +0.5
    // rounding is enough for the x component.
    std::int64_t kx = static_cast<std::int64_t>(zx * kInvTol + 0.5);
    std::int64_t ky = static_cast<std::int64_t>(zy * kInvTol + (zy >= 0 ? 0.5 : -0.5));
    insert(kx, ky, w);
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < keys_x_.size(); ++i)
      if (keys_x_[i] != kEmpty) f(keys_x_[i] * kTol, keys_y_[i] * kTol, vals_[i]);
  }

  std::size_t size() const { return count_; }

 private:
  static constexpr double kTol = kPosTol;
  static constexpr double kInvTol = 1.0 / kPosTol;
  static constexpr std::int64_t kEmpty = std::numeric_limits<std::int64_t>::min();

  static std::size_t table_size_for(std::size_t expected) {
    std::size_t s = 64;
    while (s < 2 * expected + 16) s <<= 1;
    return s;
  }

  static std::size_t hash(std::int64_t kx, std::int64_t ky) {
    std::uint64_t h = static_cast<std::uint64_t>(kx) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(ky) * 0xC2B2AE3D27D4EB4FULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }

  void insert(std::int64_t kx, std::int64_t ky, Complex w) {
    std::size_t mask = keys_x_.size() - 1;
    std::size_t i = hash(kx, ky) & mask;
    while (true) {
      if (keys_x_[i] == kEmpty) {
        keys_x_[i] = kx;
        keys_y_[i] = ky;
        vals_[i] = w;
        if (++count_ * 2 > keys_x_.size()) grow();
        return;
      }
      if (keys_x_[i] == kx && keys_y_[i] == ky) {
        vals_[i] += w;
        return;
      }
      i = (i + 1) & mask;
    }
  }

  void rehash(std::size_t n) {
    keys_x_.assign(n, kEmpty);
    keys_y_.assign(n, 0);
    vals_.assign(n, Complex{0.0, 0.0});
    count_ = 0;
  }

  void grow() {
    std::vector<std::int64_t> okx = std::move(keys_x_), oky = std::move(keys_y_);
    std::vector<Complex> ov = std::move(vals_);
    rehash(okx.size() * 2);
    for (std::size_t i = 0; i < okx.size(); ++i)
      if (okx[i] != kEmpty) insert(okx[i], oky[i], ov[i]);
  }

  std::vector<std::int64_t> keys_x_, keys_y_;
  std::vector<Complex> vals_;
  std::size_t count_ = 0;
};

}  // namespace

WeightedComb make_comb(int dim, std::vector<Atom> atoms, const Box& region) {
  if (dim != 1 && dim != 2) throw std::invalid_argument("make_comb: dim must be 1 or 2");
  if (region.dim != dim) throw std::invalid_argument("make_comb: region dim mismatch");
  region.validate();
  for (auto& a : atoms) {
    if (dim == 1) a.x[1] = 0.0;
    if (!std::isfinite(a.w.real()) || !std::isfinite(a.w.imag()))
      throw std::invalid_argument("make_comb: non-finite weight");
  }
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
    return lex_less(a.x, b.x);
  });
  for (std::size_t i = 1; i < atoms.size(); ++i)
    if (same_point(atoms[i - 1].x, atoms[i].x))
      throw std::invalid_argument("make_comb: duplicate atom positions");
  return WeightedComb{dim, std::move(atoms), region};
}

WeightedComb comb_from_pointset(const PointSet& ps) {
  std::vector<Atom> atoms;
  atoms.reserve(ps.size());
  for (const auto& p : ps.points) atoms.push_back({p, Complex{1.0, 0.0}});
  return WeightedComb{ps.dim, std::move(atoms), ps.region};
}

WeightedComb restrict_comb(const WeightedComb& omega, const Box& A) {
  std::vector<Atom> atoms;
  for (const auto& a : omega.atoms)
    if (A.contains_half_open(a.x)) atoms.push_back(a);
  return WeightedComb{omega.dim, std::move(atoms), A};
}

WeightedComb translate(const WeightedComb& omega, const Point& t) {
  WeightedComb out = omega;
  for (auto& a : out.atoms) a.x = a.x + t;
  out.region = omega.region.translated(t);
  return out;
}

double sup_norm(const WeightedComb& omega) {
  double s = 0.0;
  for (const auto& a : omega.atoms) s = std::max(s, std::abs(a.w));
  return s;
}

WeightedComb finite_autocorrelation(const WeightedComb& omega, const Box& A, double lag_radius) {
  if (lag_radius <= 0)
    throw std::invalid_argument("finite_autocorrelation: lag_radius must be > 0");
  WeightedComb inside = restrict_comb(omega, A);
  if (inside.empty())
    throw std::invalid_argument("finite_autocorrelation: no atoms inside the averaging box");
  const auto& atoms = inside.atoms;
  const std::size_t n = atoms.size();
  const double vol = A.volume();
  const bool planar = omega.dim == 2;
  const double r2 = lag_radius * lag_radius;

  LagAccumulator acc(4 * n + 64);
  Complex zero_weight{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    zero_weight += atoms[i].w * std::conj(atoms[i].w);
    const double xi = atoms[i].x[0], yi = atoms[i].x[1];
    const Complex wi = std::conj(atoms[i].w);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = atoms[j].x[0] - xi;
      if (dx > lag_radius) break;
      double dy = 0.0;
      if (planar) {
        dy = atoms[j].x[1] - yi;
        if (dx * dx + dy * dy > r2) continue;
      }
      // lag z = x_j - x_i, weight w(x_j) conj(w(x_i)); the mirror lag is
      // completed afterwards by Hermitian symmetry.
      acc.add(dx, dy, atoms[j].w * wi);
    }
  }

  std::vector<Atom> lags;
  lags.reserve(2 * acc.size() + 1);
  lags.push_back({make_point(0.0, 0.0), zero_weight / vol});
  acc.for_each([&](double zx, double zy, Complex s) {
    Complex w = s / vol;
    lags.push_back({make_point(zx, zy), w});
    lags.push_back({make_point(-zx, -zy), std::conj(w)});
  });
  std::sort(lags.begin(), lags.end(), [](const Atom& a, const Atom& b) {
    return lex_less(a.x, b.x);
  });
  return WeightedComb{omega.dim, std::move(lags), Box::centered(omega.dim, lag_radius)};
}

Complex autocorr_coefficient(const WeightedComb& omega, const Box& A, const Point& lag) {
  WeightedComb inside = restrict_comb(omega, A);
  if (inside.empty())
    throw std::invalid_argument("autocorr_coefficient: no atoms inside the averaging box");
  std::vector<Point> positions;
  positions.reserve(inside.size());
  for (const auto& a : inside.atoms) positions.push_back(a.x);
  Complex sum{0.0, 0.0};
  for (const auto& a : inside.atoms) {
    Point partner = a.x - lag;  // x - y = lag  =>  y = x - lag
    if (auto idx = find_point(positions, partner))
      sum += a.w * std::conj(inside.atoms[*idx].w);
  }
  return sum / A.volume();
}

}  // namespace meyerlab
