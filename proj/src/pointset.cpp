#include "meyerlab/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "meyerlab/rng.hpp"

namespace meyerlab {

namespace {

void sort_dedup(std::vector<Point>& pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    if (!out.empty() && same_point(out.back(), p)) continue;
    out.push_back(p);
  }
  pts.swap(out);
}

double nearest_distance(const std::vector<Point>& sorted, const Point& q, int dim) {
  // Points are sorted by x first; scan outward from the insertion position and
  // stop once the x-gap alone exceeds the best distance found.
  double best = std::numeric_limits<double>::infinity();
  auto it = std::lower_bound(sorted.begin(), sorted.end(), q, lex_less);
  auto idx = static_cast<std::ptrdiff_t>(it - sorted.begin());
  for (std::ptrdiff_t j = idx; j < static_cast<std::ptrdiff_t>(sorted.size()); ++j) {
    double dx = sorted[j][0] - q[0];
    if (dx > best) break;
    double d = dim == 1 ? std::abs(dx) : dist(sorted[j], q);
    best = std::min(best, d);
  }
  for (std::ptrdiff_t j = idx - 1; j >= 0; --j) {
    double dx = q[0] - sorted[j][0];
    if (dx > best) break;
    double d = dim == 1 ? dx : dist(sorted[j], q);
    best = std::min(best, d);
  }
  return best;
}

}  // namespace

PointSet build_pointset(int dim, std::vector<Point> raw_points, const Box& region) {
  if (dim != 1 && dim != 2) throw std::invalid_argument("build_pointset: dim must be 1 or 2");
  if (region.dim != dim) throw std::invalid_argument("build_pointset: region dim mismatch");
  region.validate();
  if (raw_points.empty()) throw std::invalid_argument("build_pointset: empty input");
  for (std::size_t i = 0; i < raw_points.size(); ++i) {
    if (dim == 1) raw_points[i][1] = 0.0;
    if (!region.contains(raw_points[i]))
      throw std::invalid_argument("build_pointset: point " + std::to_string(i) +
                                  " outside region");
  }
  sort_dedup(raw_points);
  return PointSet{dim, std::move(raw_points), region};
}

std::optional<std::size_t> find_point(const std::vector<Point>& sorted, const Point& p,
                                      double tol) {
  Point probe{p[0] - tol, p[1] - tol};
  auto it = std::lower_bound(sorted.begin(), sorted.end(), probe, lex_less);
  for (; it != sorted.end() && (*it)[0] <= p[0] + tol; ++it) {
    if (same_point(*it, p, tol)) return static_cast<std::size_t>(it - sorted.begin());
  }
  return std::nullopt;
}

double min_separation(const PointSet& ps) {
  if (ps.size() < 2) throw std::invalid_argument("min_separation: needs at least 2 points");
  const auto& pts = ps.points;
  if (ps.dim == 1) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < pts.size(); ++i) best = std::min(best, pts[i][0] - pts[i - 1][0]);
    return best;
  }
  // Classic closest-pair sweep: active set ordered by y, pruned by x distance.
  double best = std::numeric_limits<double>::infinity();
  std::set<std::pair<double, double>> active;  // (y, x)
  std::size_t tail = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point& p = pts[i];
    while (tail < i && pts[tail][0] < p[0] - best) {
      active.erase({pts[tail][1], pts[tail][0]});
      ++tail;
    }
    auto lo = active.lower_bound({p[1] - best, -std::numeric_limits<double>::infinity()});
    for (auto it = lo; it != active.end() && it->first <= p[1] + best; ++it) {
      best = std::min(best, std::hypot(it->second - p[0], it->first - p[1]));
    }
    active.insert({p[1], p[0]});
  }
  return best;
}

double covering_radius(const PointSet& ps, double margin) {
  if (margin < 0) throw std::invalid_argument("covering_radius: margin must be >= 0");
  Box inner = ps.region.shrunk(margin);
  if (inner.empty()) throw std::invalid_argument("covering_radius: shrunken region is empty");
  const auto& pts = ps.points;
  if (ps.dim == 1) {
    // The supremum is attained at an endpoint of the shrunk interval or at a
    // midpoint between consecutive points.
    double best = 0.0;
    auto consider = [&](double x) {
      if (x < inner.lo[0] || x > inner.hi[0]) return;
      best = std::max(best, nearest_distance(pts, make_point(x), 1));
    };
    consider(inner.lo[0]);
    consider(inner.hi[0]);
    for (std::size_t i = 1; i < pts.size(); ++i)
      consider(0.5 * (pts[i - 1][0] + pts[i][0]));
    return best;
  }
  // dim 2: fine grid of spacing min_sep/4; the reported value adds the grid
  // covering error h/sqrt(2) so it upper-bounds the true supremum.
  double h = ps.size() >= 2 ? min_separation(ps) / 4.0 : inner.min_extent() / 64.0;
  h = std::min(h, inner.min_extent() / 4.0);
  double best = 0.0;
  int nx = static_cast<int>(std::floor(inner.extent(0) / h)) + 1;
  int ny = static_cast<int>(std::floor(inner.extent(1) / h)) + 1;
  for (int ix = 0; ix <= nx; ++ix) {
    double x = std::min(inner.lo[0] + ix * h, inner.hi[0]);
    for (int iy = 0; iy <= ny; ++iy) {
      double y = std::min(inner.lo[1] + iy * h, inner.hi[1]);
      best = std::max(best, nearest_distance(pts, make_point(x, y), 2));
    }
  }
  return best + h / std::sqrt(2.0);
}

DifferenceSet difference_set(const PointSet& ps, double radius) {
  if (radius <= 0) throw std::invalid_argument("difference_set: radius must be > 0");
  const auto& pts = ps.points;
  std::vector<Point> diffs;
  diffs.push_back(make_point(0.0, 0.0));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      double dx = pts[j][0] - pts[i][0];
      if (dx > radius) break;
      Point z = pts[j] - pts[i];
      if (ps.dim == 2 && norm(z) > radius) continue;
      diffs.push_back(z);
      diffs.push_back(-z);
    }
  }
  sort_dedup(diffs);
  Box lag_box = Box::centered(ps.dim, radius);
  DifferenceSet out;
  out.set = PointSet{ps.dim, std::move(diffs), lag_box};
  out.truncated_by_patch = radius > ps.region.diameter();
  return out;
}

DensityEstimate density_bounds(const PointSet& ps, double window) {
  if (window <= 0) throw std::invalid_argument("density_bounds: window must be > 0");
  for (int k = 0; k < ps.dim; ++k)
    if (window > 0.5 * ps.region.extent(k))
      throw std::invalid_argument("density_bounds: window larger than half the region extent");

  const double stride = window / 8.0;
  const auto& pts = ps.points;

  auto axis_centers = [&](int k) {
    std::vector<double> cs;
    double first = ps.region.lo[k] + 0.5 * window;
    double last = ps.region.hi[k] - 0.5 * window;
    for (double c = first; c <= last + kPosTol; c += stride) cs.push_back(std::min(c, last));
    if (cs.empty() || cs.back() < last - kPosTol) cs.push_back(last);
    return cs;
  };

  // Count over half-open windows [c - w/2, c + w/2).
  auto count_in = [&](const Box& w) {
    Point probe{w.lo[0], -std::numeric_limits<double>::infinity()};
    auto it = std::lower_bound(pts.begin(), pts.end(), probe, lex_less);
    std::size_t n = 0;
    for (; it != pts.end() && (*it)[0] < w.hi[0]; ++it)
      if (w.contains_half_open(*it)) ++n;
    return n;
  };

  DensityEstimate est;
  est.window_size = window;
  double vol = std::pow(window, ps.dim);
  std::size_t cmin = std::numeric_limits<std::size_t>::max(), cmax = 0;
  auto xs = axis_centers(0);
  std::vector<double> ys = ps.dim == 2 ? axis_centers(1) : std::vector<double>{0.0};
  for (double cx : xs) {
    for (double cy : ys) {
      Box w;
      w.dim = ps.dim;
      w.lo = {cx - 0.5 * window, cy - 0.5 * window};
      w.hi = {cx + 0.5 * window, cy + 0.5 * window};
      std::size_t n = count_in(w);
      cmin = std::min(cmin, n);
      cmax = std::max(cmax, n);
      ++est.n_windows;
    }
  }
  est.lower = static_cast<double>(cmin) / vol;
  est.upper = static_cast<double>(cmax) / vol;
  return est;
}

MeyerCertificate meyer_certificate(const PointSet& ps, double diff_radius, const Box& cover_box) {
  if (ps.size() < 2) throw std::invalid_argument("meyer_certificate: needs at least 2 points");
  cover_box.validate();
  if (cover_box.dim != ps.dim)
    throw std::invalid_argument("meyer_certificate: cover box dim mismatch");

  MeyerCertificate cert;
  cert.dim = ps.dim;
  cert.diff_radius = diff_radius;
  cert.min_sep = min_separation(ps);
  double margin = std::min(diff_radius, 0.25 * ps.region.min_extent());
  cert.covering_radius = covering_radius(ps, std::max(0.0, margin));
  cert.is_delone = cert.min_sep > kDegenerateTol && std::isfinite(cert.covering_radius);

  DifferenceSet d = difference_set(ps, diff_radius);
  cert.delta_min_sep = d.set.size() >= 2 ? min_separation(d.set) : 0.0;

  // Constructive cover: z = y + f with y in Lambda and f in the cover box.
  std::vector<Point> residues;
  for (const auto& z : d.set.points) {
    bool covered = false;
    Point lo = z - cover_box.hi;  // y in [z - hi, z - lo]
    Point hi = z - cover_box.lo;
    Point probe{lo[0] - kPosTol, -std::numeric_limits<double>::infinity()};
    auto it = std::lower_bound(ps.points.begin(), ps.points.end(), probe, lex_less);
    for (; it != ps.points.end() && (*it)[0] <= hi[0] + kPosTol; ++it) {
      Point f = z - *it;
      if (cover_box.contains(f)) {
        residues.push_back(f);
        covered = true;
        break;
      }
    }
    if (!covered) cert.uncovered.push_back(z);
  }
  sort_dedup(residues);
  bool all_covered = cert.uncovered.empty();
  cert.verdict = all_covered && cert.is_delone && cert.delta_min_sep > kDegenerateTol;
  if (cert.verdict) cert.cover_F = std::move(residues);
  return cert;
}

DeformResult deform(const PointSet& ps, const std::vector<Point>& remove,
                    const std::vector<Point>& add) {
  std::vector<bool> removed(ps.size(), false);
  for (const auto& r : remove) {
    auto idx = find_point(ps.points, r);
    if (!idx) throw std::invalid_argument("deform: removing a point not in the set");
    if (removed[*idx]) throw std::invalid_argument("deform: duplicate removal");
    removed[*idx] = true;
  }
  std::vector<Point> result;
  result.reserve(ps.size() + add.size());
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (!removed[i]) result.push_back(ps.points[i]);
  for (auto a : add) {
    if (ps.dim == 1) a[1] = 0.0;
    if (find_point(ps.points, a)) throw std::invalid_argument("deform: adding a duplicate point");
    if (!ps.region.contains(a)) throw std::invalid_argument("deform: added point outside region");
    result.push_back(a);
  }
  sort_dedup(result);
  DeformResult out;
  out.set = PointSet{ps.dim, std::move(result), ps.region};
  out.symmetric_difference = remove.size() + add.size();
  return out;
}

PointSet intersect(const PointSet& a, const PointSet& b) {
  std::vector<Point> out;
  for (const auto& p : a.points)
    if (find_point(b.points, p)) out.push_back(p);
  return PointSet{a.dim, std::move(out), a.region.hull(b.region)};
}

PointSet symmetric_difference(const PointSet& a, const PointSet& b) {
  std::vector<Point> out;
  for (const auto& p : a.points)
    if (!find_point(b.points, p)) out.push_back(p);
  for (const auto& p : b.points)
    if (!find_point(a.points, p)) out.push_back(p);
  sort_dedup(out);
  return PointSet{a.dim, std::move(out), a.region.hull(b.region)};
}

DeformResult thin(const PointSet& ps, double remove_frac, std::uint64_t seed) {
  if (remove_frac < 0.0 || remove_frac >= 1.0)
    throw std::invalid_argument("thin: remove_frac must be in [0, 1)");
  SplitMix64 rng(seed);
  std::vector<Point> kept;
  kept.reserve(ps.size());
  std::size_t removed = 0;
  for (const auto& p : ps.points) {
    if (rng.next_double() < remove_frac) {
      ++removed;
    } else {
      kept.push_back(p);
    }
  }
  if (kept.empty()) throw std::runtime_error("thin: all points removed");
  DeformResult out;
  out.set = PointSet{ps.dim, std::move(kept), ps.region};
  out.symmetric_difference = removed;
  return out;
}

}  // namespace meyerlab
