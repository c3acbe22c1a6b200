#include "meyerlab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "meyerlab/rng.hpp"

namespace meyerlab {

namespace {

Box half_patch(const Box& A) {
  Box h = A;
  for (int k = 0; k < A.dim; ++k) {
    double c = 0.5 * (A.lo[k] + A.hi[k]);
    double q = 0.25 * (A.hi[k] - A.lo[k]);
    h.lo[k] = c - q;
    h.hi[k] = c + q;
  }
  return h;
}

// Golden-section maximization on [lo, hi].
template <typename F>
double golden_max(F&& f, double lo, double hi, int iters = 40) {
  const double inv_phi = 2.0 / (1.0 + std::sqrt(5.0));
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc > fd) {
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

}  // namespace

std::string estimator_name(Estimator e) {
  return e == Estimator::eqhof ? "eqhof" : "sf";
}

Estimator estimator_from_name(const std::string& name) {
  if (name == "eqhof") return Estimator::eqhof;
  if (name == "sf" || name == "structure_factor") return Estimator::structure_factor;
  throw std::invalid_argument("unknown estimator: " + name);
}

double SpectrumEstimate::i_sup() const {
  double s = 0.0;
  for (const auto& e : entries) s = std::max(s, e.intensity);
  return s;
}

double intensity_structure_factor(const WeightedComb& omega, const Box& A, const Point& chi) {
  double re = 0.0, im = 0.0;
  std::size_t n = 0;
  for (const auto& a : omega.atoms) {
    if (!A.contains_half_open(a.x)) continue;
    ++n;
    double theta = -kTwoPi * dot(a.x, chi);
    double c = std::cos(theta), s = std::sin(theta);
    re += a.w.real() * c - a.w.imag() * s;
    im += a.w.real() * s + a.w.imag() * c;
  }
  if (n == 0)
    throw std::invalid_argument("intensity_structure_factor: no atoms inside the box");
  double vol = A.volume();
  return (re * re + im * im) / (vol * vol);
}

Complex eqhof_value(const WeightedComb& gamma, const Box& A, const Point& chi) {
  if (gamma.empty()) throw std::invalid_argument("eqhof: empty autocorrelation support");
  double re = 0.0, im = 0.0;
  for (const auto& a : gamma.atoms) {
    double theta = kTwoPi * dot(a.x, chi);  // conjugate character
    double c = std::cos(theta), s = std::sin(theta);
    re += a.w.real() * c - a.w.imag() * s;
    im += a.w.real() * s + a.w.imag() * c;
  }
  return Complex{re, im} / A.volume();
}

double intensity_eqhof(const WeightedComb& gamma, const Box& A, const Point& chi) {
  return eqhof_value(gamma, A, chi).real();
}

SpectrumEstimate scan_spectrum(const WeightedComb& omega, const Box& A,
                               const std::vector<Point>& candidates, Estimator estimator,
                               const ScanOptions& opts) {
  if (candidates.empty()) throw std::invalid_argument("scan_spectrum: no candidates");
  SpectrumEstimate spec;
  spec.dim = omega.dim;
  spec.estimator = estimator;
  spec.patch_volume = A.volume();

  Box half = half_patch(A);
  WeightedComb gamma_full, gamma_half;
  if (estimator == Estimator::eqhof) {
    double lag_r = A.diameter() + 1.0;
    gamma_full = finite_autocorrelation(omega, A, lag_r);
    if (opts.with_stderr) gamma_half = finite_autocorrelation(omega, half, lag_r);
  }

  auto eval = [&](const Point& chi, bool on_half) -> double {
    if (estimator == Estimator::structure_factor)
      return intensity_structure_factor(omega, on_half ? half : A, chi);
    return intensity_eqhof(on_half ? gamma_half : gamma_full, on_half ? half : A, chi);
  };

  std::vector<Point> chis = candidates;
  std::sort(chis.begin(), chis.end(), lex_less);
  for (const auto& c : chis) {
    Point chi = c;
    if (opts.refine && opts.refine_bracket > 0 && omega.dim == 1) {
      chi[0] = golden_max([&](double x) { return eval(make_point(x), false); },
                          c[0] - opts.refine_bracket, c[0] + opts.refine_bracket);
    }
    SpectrumEntry e;
    e.chi = chi;
    e.intensity = eval(chi, false);
    if (opts.with_stderr) e.stderr_proxy = std::abs(e.intensity - eval(chi, true));
    spec.entries.push_back(e);
  }
  Point zero = make_point(0.0, 0.0);
  spec.i_zero = eval(zero, false);
  return spec;
}

PeakSet visible_peaks(const SpectrumEstimate& spec, double a) {
  if (a <= 0)
    throw std::invalid_argument("visible_peaks: threshold must be positive "
                                "(every frequency qualifies otherwise)");
  PeakSet out;
  out.dim = spec.dim;
  out.a = a;
  out.estimator = spec.estimator;
  for (const auto& e : spec.entries)
    if (e.intensity >= a) out.peaks.push_back(e);
  return out;
}

PeakSet interval_peaks(const SpectrumEstimate& spec, double b, double a) {
  if (!(0 < b && b < a)) throw std::invalid_argument("interval_peaks: requires 0 < b < a");
  PeakSet out;
  out.dim = spec.dim;
  out.a = a;
  out.b = b;
  out.estimator = spec.estimator;
  for (const auto& e : spec.entries)
    if (b < e.intensity && e.intensity < a) out.peaks.push_back(e);
  return out;
}

double noise_floor(const WeightedComb& omega, const Box& A, const std::vector<Point>& candidates,
                   const Box& freq_box, std::uint64_t seed, int n_samples) {
  SplitMix64 rng(seed);
  const double guard = 0.05;  // stay away from candidate peaks
  double floor_val = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    Point chi;
    int attempts = 0;
    do {
      chi = make_point(rng.uniform(freq_box.lo[0], freq_box.hi[0]),
                       freq_box.dim == 2 ? rng.uniform(freq_box.lo[1], freq_box.hi[1]) : 0.0);
      ++attempts;
    } while (attempts < 64 &&
             std::any_of(candidates.begin(), candidates.end(),
                         [&](const Point& c) { return dist(c, chi) < guard; }));
    floor_val = std::max(floor_val, intensity_structure_factor(omega, A, chi));
  }
  return floor_val;
}

}  // namespace meyerlab
