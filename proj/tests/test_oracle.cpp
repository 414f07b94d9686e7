#include <doctest.h>

#include <cmath>

#include "centersig/errors.hpp"
#include "centersig/oracle.hpp"
#include "centersig/returnmap.hpp"
#include "gen.hpp"

using namespace csig;

namespace {

Scalar q(long n, long d = 1) { return Scalar(GaussQ(mpq_class(n, d))); }

bool close(Complex x, Complex y, double rel = 1e-8) { return std::abs(x - y) <= rel * std::max(1.0, std::abs(y)); }

}  // namespace

TEST_CASE("variational coefficients of the Riccati example") {
  CoeffSeq a({CoeffFn::constant(q(1, 2))});
  auto v = variational_all(a, 5);
  REQUIRE(v.size() == 5);
  for (int n = 1; n <= 5; ++n) CHECK(close(v[n - 1], std::pow(kPi, n)));
  CHECK(close(variational(a, 3), std::pow(kPi, 3)));
}

TEST_CASE("variational coefficients of a cubic term") {
  CoeffSeq a({CoeffFn(), CoeffFn::constant(q(1))});
  auto v = variational_all(a, 4);
  CHECK(std::abs(v[0]) < 1e-10);
  CHECK(close(v[1], 2 * kPi));
  CHECK(std::abs(v[2]) < 1e-8);
  CHECK(close(v[3], 6 * kPi * kPi));
}

TEST_CASE("variational preconditions") {
  CoeffSeq a({CoeffFn::constant(q(1))});
  CHECK_THROWS_AS(variational_all(a, 17), PreconditionError);
  CHECK_THROWS_AS(variational_all(a, 2, {1e-15, 1e-16}), PreconditionError);
}

TEST_CASE("safe radius") {
  CHECK(safe_radius(CoeffSeq({CoeffFn::constant(q(1, 2))})) == doctest::Approx(std::exp(-kTwoPi) / 2));
  CHECK(safe_radius(CoeffSeq({CoeffFn::constant(q(4))})) == doctest::Approx(std::exp(-kTwoPi) / 8));
}

TEST_CASE("trajectory of a quadratic term") {
  CoeffSeq a({CoeffFn::constant(q(1))});
  double r0 = 0.5 * safe_radius(a);
  Trajectory t = trajectory(a, r0, {}, false, true);
  CHECK_FALSE(t.blew_up);
  CHECK(close(t.end, r0 / (1 - kTwoPi * r0), 1e-10));
  REQUIRE(t.path.size() >= 2);
  CHECK(t.path.front().first == 0.0);
  CHECK(t.path.back().first == doctest::Approx(kTwoPi));
  CHECK_THROWS_AS(trajectory(a, 0.2), PreconditionError);
  Trajectory forced = trajectory(a, 0.2, {}, true);
  CHECK(forced.blew_up);
}

TEST_CASE("trajectory through a discontinuity") {
  PiecewisePoly step({{Breakpoint::pi_multiple(1), QuasiTrigPoly::constant(q(1))},
                      {Breakpoint::two_pi(), QuasiTrigPoly::constant(q(-1))}});
  CoeffSeq a({step});
  double r0 = 0.5 * safe_radius(a);
  CHECK(close(trajectory(a, r0).end, r0, 1e-10));
}

TEST_CASE("displacement scans") {
  CoeffSeq s({QuasiTrigPoly::sin()});
  double r = safe_radius(s);
  DisplacementScan c = displacement_scan(s, {0.1 * r, 0.5 * r, 0.9 * r});
  CHECK(c.center_like);
  CHECK(c.points.size() == 3);
  DisplacementScan f = displacement_scan(CoeffSeq({CoeffFn::constant(q(1))}), {0.5 * r});
  CHECK_FALSE(f.center_like);
}

TEST_CASE("property: oracle matches the symbolic return coefficients") {
  gen::Rng rng(61);
  for (int t = 0; t < 8; ++t) {
    CoeffSeq a = gen::seq(rng, 2, 2);
    ReturnSeries f = return_series(a, 4);
    auto v = variational_all(a, 4);
    for (int n = 1; n <= 4; ++n) {
      Complex want = f.d(n).to_complex();
      double scale = std::max(1.0, std::pow(kTwoPi * a.bound(), n));
      CHECK(std::abs(v[n - 1] - want) <= 1e-8 * scale);
    }
  }
}
