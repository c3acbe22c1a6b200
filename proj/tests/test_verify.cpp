#include "doctest.h"

#include "meyerlab/verify.hpp"
#include "support.hpp"

using namespace meyerlab;
using testsupport::zd_patch;

TEST_CASE("check_s31 on the unit lattice") {
  S31Params p;
  p.seed = 7;
  auto r = check_s31(zd_patch(4000), zd_scheme(1), p);
  CHECK(r.passed);
  CHECK(r.margin >= 0.0);
  CHECK(r.params["C"].get<double>() == doctest::Approx(1.0));
  CHECK_FALSE(r.params["inconclusive"].get<bool>());
}

TEST_CASE("check_s31 fibonacci with wide dual window") {
  S31Params p;
  p.seed = 8;
  p.dual_window = 40.0;
  auto fib = generate_fibonacci(4000);
  auto r = check_s31(fib, fibonacci_scheme(), p);
  CHECK(r.passed);
  CHECK(r.params["n_dual_members"].get<int>() >= 3);  // nonzero characters found
  CHECK_FALSE(r.params["inconclusive"].get<bool>());

  SUBCASE("adversarial character violates the bound") {
    S31Params bad = p;
    bad.adversarial_psi = 0.5;
    auto rc = check_s31(fib, fibonacci_scheme(), bad);
    CHECK_FALSE(rc.passed);
    CHECK(rc.is_control());
    CHECK(rc.details[0]["deviation"].get<double>() == doctest::Approx(2.0));
  }
}

TEST_CASE("check_visible_meyer") {
  SUBCASE("unit lattice at a = 0.5 gives F = {0}") {
    VisibleParams p;
    p.seed = 9;
    auto r = check_visible_meyer(zd_patch(3000), zd_scheme(1), 0.5, p);
    CHECK(r.passed);
    CHECK(r.params["F_size"].get<int>() == 1);
    CHECK(r.params["n_dual_members"] == r.params["n_Ia"]);
  }
  SUBCASE("fibonacci at half maximum") {
    VisibleParams p;
    p.seed = 10;
    auto fib = generate_fibonacci(4000);
    auto comb = comb_from_pointset(fib);
    double i0 = intensity_structure_factor(comb, fib.region, make_point(0.0));
    auto r = check_visible_meyer(fib, fibonacci_scheme(), 0.5 * i0, p);
    CHECK(r.passed);
    CHECK(r.params["n_Ia"].get<int>() >= 15);
    CHECK(r.params["F_size"].get<int>() >= 15);
  }
  SUBCASE("a out of range") {
    VisibleParams p;
    CHECK_THROWS_AS(check_visible_meyer(zd_patch(100), zd_scheme(1), 2.0, p),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_visible_meyer(zd_patch(100), zd_scheme(1), -0.1, p),
                    std::invalid_argument);
  }
  SUBCASE("inflated dual set fails the visibility bound") {
    VisibleParams p;
    p.seed = 11;
    p.inflated_eps = 1.5;
    p.check_certificate = false;
    auto fib = generate_fibonacci(4000);
    auto comb = comb_from_pointset(fib);
    double i0 = intensity_structure_factor(comb, fib.region, make_point(0.0));
    auto r = check_visible_meyer(fib, fibonacci_scheme(), 0.5 * i0, p);
    CHECK_FALSE(r.passed);
    CHECK(r.is_control());
  }
}

TEST_CASE("check_deformation") {
  auto fib = generate_fibonacci(4000);
  DeformParams p;
  p.seed = 12;
  p.density_window = 800.0;
  SUBCASE("identity deformation passes everything") {
    auto r = check_deformation(fib, fib, fibonacci_scheme(), p);
    CHECK(r.passed);
    CHECK(r.params["condition_holds"].get<bool>());
  }
  SUBCASE("ten percent thinning satisfies the density condition") {
    auto g = thin(fib, 0.10, 555).set;
    auto r = check_deformation(fib, g, fibonacci_scheme(), p);
    CHECK(r.passed);
    CHECK(r.params["condition_holds"].get<bool>());
    CHECK(r.params["conclusion_tested"].get<bool>());
  }
  SUBCASE("fifty percent thinning leaves the conclusion untested but passes") {
    auto g = thin(fib, 0.50, 556).set;
    auto r = check_deformation(fib, g, fibonacci_scheme(), p);
    CHECK(r.passed);
    CHECK_FALSE(r.params["condition_holds"].get<bool>());
    CHECK_FALSE(r.params["conclusion_tested"].get<bool>());
  }
  SUBCASE("swapped transfer bound is the failing control") {
    auto g = thin(fib, 0.10, 557).set;
    DeformParams pc = p;
    pc.swap_l2112 = true;
    auto r = check_deformation(fib, g, fibonacci_scheme(), pc);
    CHECK_FALSE(r.passed);
    CHECK(r.is_control());
  }
  SUBCASE("region mismatch is rejected") {
    auto other = build_pointset(1, {make_point(0), make_point(1)}, Box::interval(-5, 5));
    CHECK_THROWS_AS(check_deformation(fib, other, fibonacci_scheme(), p),
                    std::invalid_argument);
  }
}

TEST_CASE("check_lattice_case") {
  SUBCASE("two-translate comb decomposes over the unit lattice") {
    std::vector<Atom> atoms;
    for (int k = 0; k < 2000; ++k) {
      atoms.push_back({make_point(k), Complex{1, 0}});
      atoms.push_back({make_point(k + 0.3), Complex{2, 0}});
    }
    auto mu = make_comb(1, atoms, Box::interval(0, 2000));
    LatticeCaseParams p;
    p.seed = 13;
    p.expect_periodic = true;
    auto r = check_lattice_case(mu, p);
    CHECK(r.passed);
    CHECK(r.params["periodic"].get<bool>());
    CHECK(r.params["basis"][0][0].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.details[0]["misses"].get<int>() == 0);
    // One residue per level: {0} for weight 1 and {0.3} for weight 2.
    CHECK(r.details[0]["levels"].size() == 2);
    CHECK(r.details[0]["levels"][0]["residues"].get<int>() == 1);
    CHECK(r.details[0]["levels"][1]["residues"].get<int>() == 1);
  }
  SUBCASE("plain lattice comb") {
    auto mu = comb_from_pointset(zd_patch(2000));
    LatticeCaseParams p;
    p.seed = 14;
    p.expect_periodic = true;
    auto r = check_lattice_case(mu, p);
    CHECK(r.passed);
  }
  SUBCASE("fibonacci comb is aperiodic") {
    auto mu = comb_from_pointset(generate_fibonacci(2000));
    LatticeCaseParams p;
    p.seed = 15;
    p.expect_periodic = false;
    auto r = check_lattice_case(mu, p);
    CHECK(r.passed);
    CHECK_FALSE(r.params["periodic"].get<bool>());
  }
  SUBCASE("wrong expectation fails") {
    auto mu = comb_from_pointset(zd_patch(500));
    LatticeCaseParams p;
    p.seed = 16;
    p.expect_periodic = false;
    p.negative_control = true;
    auto r = check_lattice_case(mu, p);
    CHECK_FALSE(r.passed);
    CHECK(r.is_control());
  }
}

TEST_CASE("suites aggregate and count failures") {
  SuiteOptions opts;
  opts.seed = 77;
  opts.patch_points = 2000;
  auto reports = run_suite("lattice", opts);
  REQUIRE(reports.size() == 4);
  int controls = 0;
  for (const auto& r : reports) {
    if (r.is_control()) {
      ++controls;
      CHECK_FALSE(r.passed);
    } else {
      CHECK(r.passed);
    }
  }
  CHECK(controls == 1);
  CHECK(count_failures(reports) == 0);
  CHECK_THROWS_AS(run_suite("nonsense", opts), std::invalid_argument);
}
