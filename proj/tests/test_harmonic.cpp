#include "doctest.h"

#include <cmath>

#include "meyerlab/cutproject.hpp"
#include "meyerlab/harmonic.hpp"
#include "meyerlab/spectrum.hpp"
#include "support.hpp"

using namespace meyerlab;
using testsupport::zd_patch;

namespace {

PointSet centered_z(int half) {
  std::vector<Point> pts;
  for (int k = -half; k <= half; ++k) pts.push_back(make_point(k));
  return build_pointset(1, pts, Box::interval(-half - 0.5, half + 0.5));
}

}  // namespace

TEST_CASE("character_deviation") {
  auto z = centered_z(100);
  CHECK(character_deviation(make_point(1.0), z) == doctest::Approx(0.0));
  CHECK(character_deviation(make_point(0.5), z) == doctest::Approx(2.0));
  // Slowly rotating character: the deviation peaks at the patch edge x = 100.
  CHECK(character_deviation(make_point(0.001), z) ==
        doctest::Approx(2.0 * std::sin(0.1 * kPi)));
  SUBCASE("even in chi") {
    SplitMix64 rng(3);
    auto fib = generate_fibonacci(500);
    auto d = difference_set(fib, 20.0).set;
    for (int i = 0; i < 50; ++i) {
      Point chi = make_point(rng.uniform(-4, 4));
      CHECK(character_deviation(chi, d) == character_deviation(-chi, d));
    }
  }
}

TEST_CASE("epsilon_dual_set with candidates") {
  auto z = centered_z(100);
  std::vector<Point> cands;
  for (int k = -3; k <= 3; ++k) cands.push_back(make_point(k));
  cands.push_back(make_point(0.5));
  auto cs = epsilon_dual_set(z, 0.1, Box::interval(-3, 3), cands);
  REQUIRE(cs.members.size() == 7);  // integers pass, 0.5 fails
  for (const auto& m : cs.members) CHECK(m.max_deviation <= 0.1);
  CHECK(cs.truncation_radius == doctest::Approx(100.0));

  SUBCASE("fibonacci dual set is symmetric and relatively dense at eps = 0.5") {
    auto fib = generate_fibonacci(3000);
    auto delta = difference_set(fib, 50.0).set;
    auto fc = fourier_candidates(fibonacci_scheme(), Box::interval(-10, 10), 2.0);
    auto dual = epsilon_dual_set(delta, 0.5, Box::interval(-10, 10), fc);
    CHECK(dual.members.size() >= 3);
    bool has_zero = false;
    for (const auto& m : dual.members) {
      if (norm(m.chi) < 1e-12) has_zero = true;
      bool mirrored = false;
      for (const auto& n : dual.members) mirrored = mirrored || same_point(n.chi, -m.chi);
      CHECK(mirrored);
    }
    CHECK(has_zero);
    // Relative denseness on the window: no gap wider than 8.
    double prev = -10.0, worst_gap = 0.0;
    for (const auto& m : dual.members) {
      worst_gap = std::max(worst_gap, m.chi[0] - prev);
      prev = m.chi[0];
    }
    worst_gap = std::max(worst_gap, 10.0 - prev);
    CHECK(worst_gap <= 8.0);
  }

  SUBCASE("monotone in eps") {
    auto fib = generate_fibonacci(2000);
    auto delta = difference_set(fib, 30.0).set;
    auto fc = fourier_candidates(fibonacci_scheme(), Box::interval(-10, 10), 2.0);
    auto small = epsilon_dual_set(delta, 0.1, Box::interval(-10, 10), fc);
    auto large = epsilon_dual_set(delta, 0.3, Box::interval(-10, 10), fc);
    for (const auto& m : small.members) {
      bool found = false;
      for (const auto& n : large.members) found = found || same_point(n.chi, m.chi);
      CHECK(found);
    }
    CHECK(small.members.size() <= large.members.size());
  }

  SUBCASE("antitone in the truncation radius") {
    auto fib = generate_fibonacci(2000);
    auto small_r = difference_set(fib, 10.0).set;
    auto large_r = difference_set(fib, 40.0).set;
    auto fc = fourier_candidates(fibonacci_scheme(), Box::interval(-10, 10), 2.0);
    auto coarse = epsilon_dual_set(small_r, 0.4, Box::interval(-10, 10), fc);
    auto fine = epsilon_dual_set(large_r, 0.4, Box::interval(-10, 10), fc);
    for (const auto& m : fine.members) {
      bool found = false;
      for (const auto& n : coarse.members) found = found || same_point(n.chi, m.chi);
      CHECK(found);
    }
  }

  SUBCASE("eps out of range") {
    CHECK_THROWS_AS(epsilon_dual_set(z, 0.0, Box::interval(-1, 1), cands),
                    std::invalid_argument);
    CHECK_THROWS_AS(epsilon_dual_set(z, 2.5, Box::interval(-1, 1), cands),
                    std::invalid_argument);
  }
}

TEST_CASE("epsilon_dual_set_grid refines onto the lattice duals") {
  auto z = centered_z(50);
  auto cs = epsilon_dual_set_grid(z, 0.2, Box::interval(-2.2, 2.2), 0.01);
  // Clusters around each integer; every member deviates by at most eps and
  // each integer in range is represented.
  for (int k = -2; k <= 2; ++k) {
    bool found = false;
    for (const auto& m : cs.members) found = found || std::abs(m.chi[0] - k) < 1e-3;
    CHECK(found);
  }
  for (const auto& m : cs.members) CHECK(m.max_deviation <= 0.2);
}

TEST_CASE("sup_distance") {
  auto mk = [](std::vector<std::pair<double, double>> aw) {
    std::vector<Atom> atoms;
    for (auto [x, w] : aw) atoms.push_back({make_point(x), Complex{w, 0}});
    return make_comb(1, atoms, Box::interval(-10, 10));
  };
  CHECK(sup_distance(mk({{0, 1}}), mk({{0, 0.8}})) == doctest::Approx(0.2));
  CHECK(sup_distance(mk({{0, 1}}), mk({{0, 1}})) == doctest::Approx(0.0));
  CHECK(sup_distance(mk({{0, 1}}), mk({{0.5, 1}})) == doctest::Approx(1.0));
}

TEST_CASE("almost_periods of the lattice spectrum comb") {
  // Spectrum comb of Z: unit weights at the integers.
  std::vector<Atom> atoms;
  for (int k = -50; k <= 50; ++k) atoms.push_back({make_point(k), Complex{1, 0}});
  auto mu = make_comb(1, atoms, Box::interval(-50.5, 50.5));

  auto rep = almost_periods(mu, 0.5, {make_point(1.0), make_point(0.5)});
  REQUIRE(rep.tested.size() == 2);
  CHECK(rep.margins[0] == doctest::Approx(0.0));  // t = 1 is a true period
  CHECK(rep.margins[1] == doctest::Approx(1.0));  // t = 0.5 misses every atom
  REQUIRE(rep.passing.size() == 1);
  CHECK(rep.passing[0][0] == doctest::Approx(1.0));
}

TEST_CASE("extract_period_lattice") {
  SUBCASE("two-valued comb keeps only the integer periods") {
    std::vector<Atom> atoms;
    for (int k = 0; k < 200; ++k) {
      atoms.push_back({make_point(k), Complex{1, 0}});
      atoms.push_back({make_point(k + 0.5), Complex{2, 0}});
    }
    auto mu = make_comb(1, atoms, Box::interval(0, 200));
    auto L = extract_period_lattice(mu, 0.5,
                                    {make_point(0.5), make_point(1.0), make_point(2.0)});
    REQUIRE(L.has_value());
    CHECK(std::abs(L->basis(0, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("unit comb over Z") {
    auto mu = comb_from_pointset(zd_patch(300));
    std::vector<Point> cands;
    for (int k = 1; k <= 5; ++k) cands.push_back(make_point(k));
    auto L = extract_period_lattice(mu, 0.5, cands);
    REQUIRE(L.has_value());
    CHECK(std::abs(L->basis(0, 0)) == doctest::Approx(1.0));
  }

  SUBCASE("aperiodic patch yields none under dense candidates") {
    std::vector<Atom> atoms{{make_point(0.0), Complex{1, 0}},
                            {make_point(1.0), Complex{1, 0}},
                            {make_point(golden_ratio()), Complex{1, 0}}};
    auto mu = make_comb(1, atoms, Box::interval(-0.5, 2.5));
    std::vector<Point> cands;
    for (int i = 1; i <= 200; ++i) cands.push_back(make_point(i * 0.01));
    CHECK_FALSE(extract_period_lattice(mu, 0.5, cands).has_value());
  }

  SUBCASE("eps above the weight-separation threshold is rejected") {
    std::vector<Atom> atoms;
    for (int k = 0; k < 50; ++k) {
      atoms.push_back({make_point(k), Complex{1, 0}});
      atoms.push_back({make_point(k + 0.3), Complex{1.2, 0}});
    }
    auto mu = make_comb(1, atoms, Box::interval(0, 50));
    CHECK(exact_period_threshold(mu) == doctest::Approx(0.2));
    CHECK_THROWS_AS(extract_period_lattice(mu, 0.3, {make_point(1.0)}),
                    std::invalid_argument);
  }

  SUBCASE("basis vectors translate the comb onto itself") {
    auto mu = comb_from_pointset(zd_patch(200));
    auto L = extract_period_lattice(mu, 0.5, {make_point(2.0), make_point(3.0)});
    REQUIRE(L.has_value());
    double g = std::abs(L->basis(0, 0));
    CHECK(g == doctest::Approx(1.0));  // gcd of the candidate periods
    Box overlap = mu.region.intersect(mu.region.translated(make_point(g)));
    CHECK(sup_distance_on(mu, translate(mu, make_point(g)), overlap) <= 1e-9);
  }

  SUBCASE("planar lattice comb recovers a rank-2 basis") {
    auto grid = generate_lattice_patch(Eigen::MatrixXd::Identity(2, 2),
                                       Box::rect(0, 0, 30, 30));
    auto mu = comb_from_pointset(grid);
    std::vector<Point> cands = {make_point(1, 0), make_point(0, 1), make_point(1, 1),
                                make_point(0.5, 0.5)};
    auto L = extract_period_lattice(mu, 0.5, cands);
    REQUIRE(L.has_value());
    CHECK(std::abs(std::abs(L->basis.determinant()) - 1.0) < 1e-9);
  }
}

TEST_CASE("dual characters are sup almost periods of the pure point spectrum") {
  // End-to-end: members of the fibonacci eps-dual set translate the estimated
  // spectrum comb by less than C*eps in sup norm (C being the zero intensity).
  auto fib = generate_fibonacci(4000);
  auto comb = comb_from_pointset(fib);
  auto delta = difference_set(fib, 50.0).set;
  // Translations stay within +-14 so each translate overlaps the comb window.
  Box window = Box::interval(-14, 14);
  auto cands = fourier_candidates(fibonacci_scheme(), window, 2.0);
  const double eps = 0.35;
  auto dual = epsilon_dual_set(delta, eps, window, cands);

  // Spectrum comb over the inner candidates, so translates stay in window.
  std::vector<Atom> atoms;
  for (const auto& c : cands) {
    if (std::abs(c[0]) > 10.0) continue;
    double v = intensity_structure_factor(comb, fib.region, c);
    atoms.push_back({c, Complex{v, 0.0}});
  }
  auto spectrum_comb = make_comb(1, atoms, Box::interval(-10.0, 10.0));
  double i0 = intensity_structure_factor(comb, fib.region, make_point(0.0));

  std::size_t nontrivial = 0;
  auto rep = almost_periods(spectrum_comb, i0 * eps + 0.01, [&] {
    std::vector<Point> ts;
    for (const auto& m : dual.members) ts.push_back(m.chi);
    return ts;
  }());
  for (std::size_t i = 0; i < rep.tested.size(); ++i) {
    CHECK(rep.margins[i] < i0 * eps + 0.01);
    if (norm(rep.tested[i]) > 1e-9) ++nontrivial;
  }
  CHECK(rep.passing.size() == rep.tested.size());
  CHECK(nontrivial >= 2);  // the check is not vacuous on this window
}
