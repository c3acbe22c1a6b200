#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "meyerlab/autocorr.hpp"

namespace meyerlab {

enum class Estimator { eqhof, structure_factor };

std::string estimator_name(Estimator e);
Estimator estimator_from_name(const std::string& name);

struct SpectrumEntry {
  Point chi;
  double intensity = 0.0;
  double stderr_proxy = 0.0;  // |full-patch estimate - half-patch estimate|
};

struct SpectrumEstimate {
  int dim = 1;
  std::vector<SpectrumEntry> entries;  // sorted by chi
  Estimator estimator = Estimator::structure_factor;
  double patch_volume = 0.0;
  double i_zero = 0.0;  // intensity at chi = 0

  double i_sup() const;
};

struct PeakSet {
  int dim = 1;
  double a = 0.0;                    // lower threshold
  double b = -1.0;                   // upper threshold for interval peaks (< 0: none)
  std::vector<SpectrumEntry> peaks;  // sorted by chi
  Estimator estimator = Estimator::structure_factor;
};

// Squared exponential sum: |sum_{x in A} w(x) e^{-2 pi i x.chi}|^2 / Vol(A)^2.
double intensity_structure_factor(const WeightedComb& omega, const Box& A, const Point& chi);

// Averaged conjugate character against a finite autocorrelation comb:
//   (1/Vol(A)) sum_{z in supp(gamma)} gamma(z) e^{+2 pi i z.chi},
// where A is the averaging box gamma was computed on. The sum runs over the
// comb's whole support (already truncated by its construction radius). With a
// full-diameter lag radius this reproduces the structure factor identically;
// on delta_Z the value at integer chi is 1. The imaginary part must vanish for
// Hermitian input; intensity_eqhof returns the real part and
// eqhof_value exposes the full complex value for sanity checks.
Complex eqhof_value(const WeightedComb& gamma, const Box& A, const Point& chi);
double intensity_eqhof(const WeightedComb& gamma, const Box& A, const Point& chi);

struct ScanOptions {
  bool refine = false;        // golden-section local maximization per candidate
  double refine_bracket = 0;  // half-width of the refinement bracket
  bool with_stderr = true;    // also evaluate on the half patch
};

// Evaluates the chosen estimator on every candidate frequency; fills i_zero
// and (optionally) the two-scale stderr proxy.
SpectrumEstimate scan_spectrum(const WeightedComb& omega, const Box& A,
                               const std::vector<Point>& candidates, Estimator estimator,
                               const ScanOptions& opts = {});

// Entries with intensity >= a. a <= 0 is rejected (every frequency would
// qualify); a above the maximum intensity yields an empty set.
PeakSet visible_peaks(const SpectrumEstimate& spec, double a);

// Entries with b < intensity < a (strict), 0 < b < a.
PeakSet interval_peaks(const SpectrumEstimate& spec, double b, double a);

// Maximum structure-factor intensity over n_samples frequencies drawn
// uniformly from freq_box, resampled away from the given candidates.
double noise_floor(const WeightedComb& omega, const Box& A, const std::vector<Point>& candidates,
                   const Box& freq_box, std::uint64_t seed, int n_samples = 16);

}  // namespace meyerlab
