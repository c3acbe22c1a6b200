#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "meyerlab/cutproject.hpp"
#include "meyerlab/harmonic.hpp"
#include "meyerlab/pointset.hpp"
#include "meyerlab/spectrum.hpp"

namespace meyerlab {

// Structured result of one verification run. passed holds exactly when
// margin >= -params["tolerance"] (tolerance defaults to 0; every inequality
// already carries its noise-aware slack inside the margin).
struct CheckReport {
  std::string name;
  bool passed = false;
  double margin = 0.0;  // signed slack, positive = satisfied
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json details = nlohmann::json::array();

  bool is_control() const { return params.value("negative_control", false); }
};

nlohmann::json to_json(const CheckReport& report);

struct S31Params {
  double eps = 0.1;
  double diff_radius = 50.0;       // truncation radius of the difference set
  double dual_window = 10.0;       // dual-character search window [-w, w]
  double internal_cutoff = 2.0;    // candidate cutoff in internal space
  int n_chi_samples = 50;
  std::uint64_t seed = 1;
  // When set, runs the bound against this frequency instead of the computed
  // dual characters; used for the deviation-2 negative control.
  std::optional<double> adversarial_psi;
};

// Intensity shift bound: every computed eps-dual character psi must satisfy
// |I(psi + chi) - I(chi)| <= I(0) * eps + 3 * noise_floor over sampled chi.
CheckReport check_s31(const PointSet& lam, const CutProjectScheme& scheme, const S31Params& p);

struct VisibleParams {
  double diff_radius = 50.0;
  double dual_window = 10.0;
  double internal_cutoff = 2.0;
  double min_sep_threshold = 1e-3;   // frequency-space uniform discreteness
  double covering_radius_bound = 5;  // frequency-space relative denseness
  bool check_certificate = true;
  std::uint64_t seed = 2;
  // Evaluates claim (1) with members of an inflated-eps set against the
  // honest (1 - eps) bound; used as the negative control.
  std::optional<double> inflated_eps;
};

// Visible-peak structure at threshold a: constructs eps(a) and the finite set
// F, then checks the inclusion chain dual(eps) subset I_a subset dual(eps)+F
// exhaustively over candidates, plus a Meyer-style certificate of I_a.
CheckReport check_visible_meyer(const PointSet& lam, const CutProjectScheme& scheme, double a,
                                const VisibleParams& p);

struct DeformParams {
  double diff_radius = 50.0;
  double dual_window = 10.0;
  double wide_dual_window = 60.0;  // window for the small-eps retained-peak scan
  double internal_cutoff = 2.0;
  double eps_small = 0.05;         // dual-character eps for the retention check
  double density_window = 2000.0;
  int n_chi_samples = 50;
  std::uint64_t seed = 3;
  bool swap_l2112 = false;  // asserts the (false) swapped bound; negative control
};

// Deformation pipeline: pointwise intensity transfer between a set and a
// subset, the density sandwich, peak retention under a small deformation, and
// the sufficient density condition with its conclusion.
CheckReport check_deformation(const PointSet& lam, const PointSet& gamma,
                              const CutProjectScheme& scheme, const DeformParams& p);

struct LatticeCaseParams {
  double candidate_radius = 6.0;  // search radius for period candidates
  double freq_window = 5.0;
  std::uint64_t seed = 4;
  std::optional<bool> expect_periodic;
  bool negative_control = false;  // marks a deliberately wrong expectation
};

// Period extraction for finitely-valued combs: finds the period lattice, the
// level-set decompositions Lambda_i = F_i + L, re-verifies them exactly on the
// patch, and cross-checks that the spectrum is carried by the dual lattice.
CheckReport check_lattice_case(const WeightedComb& mu, const LatticeCaseParams& p);

struct SuiteOptions {
  std::uint64_t seed = 20260810;
  std::size_t patch_points = 10000;
};

// Named suites: s31 | visible | deform | lattice. run_all_suites concatenates
// all four. Each suite includes at least one negative control whose report is
// expected to come back passed = false.
std::vector<CheckReport> run_suite(const std::string& name, const SuiteOptions& opts = {});
std::vector<CheckReport> run_all_suites(const SuiteOptions& opts = {});

// Failed non-control checks (the CLI exit code).
int count_failures(const std::vector<CheckReport>& reports);

}  // namespace meyerlab
