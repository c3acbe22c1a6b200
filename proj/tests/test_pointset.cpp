#include "doctest.h"

#include <cmath>

#include "meyerlab/cutproject.hpp"
#include "meyerlab/pointset.hpp"
#include "support.hpp"

using namespace meyerlab;
using testsupport::zd_patch;

TEST_CASE("build_pointset sorts, dedups and validates") {
  auto ps = build_pointset(1, {make_point(3), make_point(1), make_point(2), make_point(2)},
                           Box::interval(0, 4));
  REQUIRE(ps.size() == 3);
  CHECK(ps.points[0][0] == 1.0);
  CHECK(ps.points[1][0] == 2.0);
  CHECK(ps.points[2][0] == 3.0);

  auto single = build_pointset(1, {make_point(0.5)}, Box::interval(0, 1));
  CHECK(single.size() == 1);

  CHECK_THROWS_WITH_AS(build_pointset(1, {make_point(5)}, Box::interval(0, 1)),
                       doctest::Contains("outside region"), std::invalid_argument);
  CHECK_THROWS_AS(build_pointset(1, {}, Box::interval(0, 1)), std::invalid_argument);
}

TEST_CASE("min_separation") {
  CHECK(min_separation(zd_patch(101)) == doctest::Approx(1.0));
  auto ps = build_pointset(1, {make_point(0), make_point(0.25), make_point(1)},
                           Box::interval(0, 1));
  CHECK(min_separation(ps) == doctest::Approx(0.25));
  auto one = build_pointset(1, {make_point(0.5)}, Box::interval(0, 1));
  CHECK_THROWS_AS(min_separation(one), std::invalid_argument);

  SUBCASE("fibonacci patch: shortest tile, against the pairwise oracle") {
    auto fib = generate_fibonacci(500);
    CHECK(min_separation(fib) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(min_separation(fib) ==
          doctest::Approx(testsupport::brute_min_separation(fib.points)));
  }

  SUBCASE("dim 2 sweep matches the pairwise oracle") {
    SplitMix64 rng(7);
    std::vector<Point> pts;
    for (int i = 0; i < 400; ++i)
      pts.push_back(make_point(rng.uniform(0, 20), rng.uniform(0, 20)));
    auto ps2 = build_pointset(2, pts, Box::rect(0, 0, 20, 20));
    CHECK(min_separation(ps2) ==
          doctest::Approx(testsupport::brute_min_separation(ps2.points)));
  }
}

TEST_CASE("covering_radius") {
  auto z = zd_patch(101);
  CHECK(covering_radius(z, 1.0) == doctest::Approx(0.5));

  auto two = build_pointset(1, {make_point(0), make_point(10)}, Box::interval(0, 10));
  CHECK(covering_radius(two, 0.0) == doctest::Approx(5.0));

  SUBCASE("fibonacci: half the longest tile, against the scan oracle") {
    auto fib = generate_fibonacci(1000);
    double r = covering_radius(fib, 2.0);
    CHECK(r == doctest::Approx(golden_ratio() / 2).epsilon(1e-9));
    Box inner = fib.region.shrunk(2.0);
    CHECK(r == doctest::Approx(testsupport::brute_covering_radius_1d(
                    fib.points, inner.lo[0], inner.hi[0])).epsilon(1e-3));
  }

  SUBCASE("empty shrunken region is rejected") {
    CHECK_THROWS_AS(covering_radius(two, 6.0), std::invalid_argument);
  }

  SUBCASE("dim 2 grid value upper-bounds the lattice answer") {
    auto grid = generate_lattice_patch(Eigen::MatrixXd::Identity(2, 2), Box::rect(0, 0, 9, 9));
    double r = covering_radius(grid, 1.0);
    double exact = std::sqrt(0.5);
    CHECK(r >= exact - 1e-9);
    CHECK(r <= exact + 0.2);
  }
}

TEST_CASE("difference_set") {
  auto z = zd_patch(101);
  auto d = difference_set(z, 3.0);
  REQUIRE(d.set.size() == 7);
  for (int k = -3; k <= 3; ++k)
    CHECK(find_point(d.set.points, make_point(k)).has_value());
  CHECK_FALSE(d.truncated_by_patch);

  SUBCASE("pair set with tau") {
    auto ps = build_pointset(1, {make_point(0), make_point(golden_ratio())},
                             Box::interval(0, 2));
    auto dd = difference_set(ps, 2.0);
    REQUIRE(dd.set.size() == 3);
    CHECK(find_point(dd.set.points, make_point(0)).has_value());
    CHECK(find_point(dd.set.points, make_point(golden_ratio())).has_value());
    CHECK(find_point(dd.set.points, make_point(-golden_ratio())).has_value());
  }

  SUBCASE("fibonacci against the double-loop oracle") {
    auto fib = generate_fibonacci(300);
    auto dd = difference_set(fib, 5.0);
    auto oracle = testsupport::brute_difference_set(fib.points, 5.0);
    REQUIRE(dd.set.size() == oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i)
      CHECK(same_point(dd.set.points[i], oracle[i]));
  }

  SUBCASE("symmetric and contains zero") {
    auto fib = generate_fibonacci(200);
    auto dd = difference_set(fib, 8.0);
    CHECK(find_point(dd.set.points, make_point(0)).has_value());
    for (const auto& p : dd.set.points)
      CHECK(find_point(dd.set.points, -p).has_value());
  }

  SUBCASE("truncation flag when R exceeds the patch diameter") {
    auto small = build_pointset(1, {make_point(0), make_point(1)}, Box::interval(0, 1));
    CHECK(difference_set(small, 10.0).truncated_by_patch);
  }
}

TEST_CASE("density_bounds") {
  SUBCASE("unit lattice") {
    auto z = zd_patch(10001);
    auto est = density_bounds(z, 100.0);
    CHECK(est.lower == doctest::Approx(1.0).epsilon(0.01));
    CHECK(est.upper == doctest::Approx(1.0).epsilon(0.01));
    CHECK(est.lower <= est.upper);
    CHECK(est.n_windows > 100);
  }

  SUBCASE("fibonacci density tau/sqrt(5), cross-checked by direct count") {
    auto fib = generate_fibonacci(10000);
    auto est = density_bounds(fib, 200.0);
    double expected = golden_ratio() / std::sqrt(5.0);
    CHECK(est.lower == doctest::Approx(expected).epsilon(0.005));
    CHECK(est.upper == doctest::Approx(expected).epsilon(0.005));
    double direct = static_cast<double>(fib.size()) / fib.region.extent(0);
    CHECK(direct == doctest::Approx(expected).epsilon(1e-3));
  }

  SUBCASE("thinned lattice brackets the survival rate") {
    auto z = zd_patch(10000);
    auto g = thin(z, 0.10, 42).set;
    auto est = density_bounds(g, 1000.0);
    CHECK(est.lower < 0.9);
    CHECK(est.upper > 0.9 - 0.05);
    double direct = static_cast<double>(g.size()) / 10000.0;
    CHECK(direct == doctest::Approx(0.9).epsilon(0.02));
  }

  SUBCASE("window too large") {
    CHECK_THROWS_AS(density_bounds(zd_patch(100), 60.0), std::invalid_argument);
  }
}

TEST_CASE("meyer_certificate") {
  SUBCASE("integer lattice certifies with residues in the cover box") {
    auto z = zd_patch(200);
    auto cert = meyer_certificate(z, 10.0, Box::interval(-1, 1));
    CHECK(cert.verdict);
    CHECK(cert.is_delone);
    CHECK(cert.min_sep == doctest::Approx(1.0));
    CHECK(cert.delta_min_sep == doctest::Approx(1.0));
    CHECK_FALSE(cert.cover_F.empty());
    for (const auto& f : cert.cover_F) CHECK(std::abs(f[0]) <= 1.0 + 1e-9);
  }

  SUBCASE("fibonacci certifies with a finite residue set") {
    auto fib = generate_fibonacci(2000);
    auto cert = meyer_certificate(fib, 20.0, Box::interval(-2, 2));
    CHECK(cert.verdict);
    CHECK(cert.delta_min_sep > 1e-6);
    CHECK(cert.cover_F.size() >= 2);
    CHECK(cert.cover_F.size() < 64);

    // The recipe's guarantee, re-checked exhaustively: every difference
    // vector decomposes as a patch point plus a residue.
    auto d = difference_set(fib, 20.0);
    for (const auto& z : d.set.points) {
      bool covered = false;
      for (const auto& f : cert.cover_F) {
        if (find_point(fib.points, z - f)) {
          covered = true;
          break;
        }
      }
      CHECK(covered);
    }
  }

  SUBCASE("n + 1/n is flagged as non-Meyer") {
    std::vector<Point> pts;
    for (int n = 2; n <= 500; ++n) pts.push_back(make_point(n + 1.0 / n));
    auto ps = build_pointset(1, pts, Box::interval(0, 501));
    auto cert = meyer_certificate(ps, 3.0, Box::interval(-2, 2));
    CHECK_FALSE(cert.verdict);
    CHECK(cert.delta_min_sep < 1e-6);
    CHECK(cert.cover_F.empty());
  }
}

TEST_CASE("deform") {
  auto z = zd_patch(11);
  SUBCASE("replace one point") {
    auto r = deform(z, {make_point(5)}, {make_point(5.5)});
    CHECK(r.set.size() == 11);
    CHECK(r.symmetric_difference == 2);
    CHECK(find_point(r.set.points, make_point(5.5)).has_value());
    CHECK_FALSE(find_point(r.set.points, make_point(5)).has_value());
  }
  SUBCASE("identity") {
    auto r = deform(z, {}, {});
    CHECK(r.symmetric_difference == 0);
    REQUIRE(r.set.size() == z.size());
    for (std::size_t i = 0; i < z.size(); ++i) CHECK(same_point(r.set.points[i], z.points[i]));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(deform(z, {make_point(100)}, {}), std::invalid_argument);
    CHECK_THROWS_AS(deform(z, {}, {make_point(5)}), std::invalid_argument);
    CHECK_THROWS_AS(deform(z, {}, {make_point(900)}), std::invalid_argument);
  }
  SUBCASE("seeded thinning of the fibonacci patch") {
    auto fib = generate_fibonacci(5000);
    auto r = thin(fib, 0.10, 12345);
    double frac = static_cast<double>(r.symmetric_difference) / fib.size();
    CHECK(frac == doctest::Approx(0.10).epsilon(0.15));
    auto again = thin(fib, 0.10, 12345);
    CHECK(again.symmetric_difference == r.symmetric_difference);
    CHECK(again.set.size() == r.set.size());
  }
}

TEST_CASE("intersect and symmetric_difference") {
  auto a = build_pointset(1, {make_point(0), make_point(1), make_point(2)}, Box::interval(0, 3));
  auto b = build_pointset(1, {make_point(1), make_point(2), make_point(2.5)},
                          Box::interval(0, 3));
  auto i = intersect(a, b);
  REQUIRE(i.size() == 2);
  CHECK(i.points[0][0] == 1.0);
  auto s = symmetric_difference(a, b);
  REQUIRE(s.size() == 2);
  CHECK(s.points[0][0] == 0.0);
  CHECK(s.points[1][0] == 2.5);
}
