#include <doctest.h>

#include <cmath>

#include "centersig/errors.hpp"
#include "centersig/funcs.hpp"
#include "gen.hpp"

using namespace csig;

namespace {

Scalar q(long n, long d = 1) { return Scalar(GaussQ(mpq_class(n, d))); }

PiecewisePoly step_fn() {
  return PiecewisePoly({{Breakpoint::pi_multiple(1), QuasiTrigPoly::constant(q(1))},
                        {Breakpoint::two_pi(), QuasiTrigPoly{}}});
}

Complex fd_derivative(const CoeffFn& f, double x) {
  const double h = 1e-5;
  return (f.eval(x + h) - f.eval(x - h)) / (2 * h);
}

}  // namespace

TEST_CASE("fn_mul examples") {
  CoeffFn one = fn_mul(QuasiTrigPoly::exp_i(1), QuasiTrigPoly::exp_i(-1));
  CHECK(one == CoeffFn::constant(q(1)));
  CoeffFn x2 = fn_mul(PiecewisePoly::single(QuasiTrigPoly::x_power(1)), PiecewisePoly::single(QuasiTrigPoly::x_power(1)));
  CHECK(x2 == CoeffFn(PiecewisePoly::single(QuasiTrigPoly::x_power(2))));
  CoeffFn sc = fn_mul(QuasiTrigPoly::sin(), QuasiTrigPoly::cos());
  CHECK(sc == CoeffFn(QuasiTrigPoly::sin(2).scaled(q(1, 2))));
}

TEST_CASE("fn_mul promotion") {
  CoeffFn t = QuasiTrigPoly::cos();
  CoeffFn p = step_fn();
  CHECK(fn_mul(t, p).kind() == CoeffFn::Kind::Piecewise);
  CoeffFn s = CoeffFn(t).as_sampled(128);
  CHECK(fn_mul(s, p).kind() == CoeffFn::Kind::Sampled);
  CHECK(fn_mul(s, p).sampled()->grid() == 128);
}

TEST_CASE("antiderivative examples") {
  CoeffFn one = CoeffFn::constant(q(1));
  CoeffFn big = antiderivative(one);
  CHECK(big == CoeffFn(QuasiTrigPoly::x_power(1)));
  CHECK(value_at_two_pi(big) == Scalar::pi_power(1, GaussQ(2)));

  CoeffFn s = antiderivative(QuasiTrigPoly::sin());
  CHECK(s == CoeffFn(QuasiTrigPoly::constant(q(1)) - QuasiTrigPoly::cos()));
  CHECK(value_at_two_pi(s).is_zero());

  // x e^{ix} integrates to (-ix + 1) e^{ix} - 1.
  QuasiTrigPoly xe = QuasiTrigPoly::monomial(1, 1, q(1));
  QuasiTrigPoly expected = QuasiTrigPoly::monomial(1, 1, Scalar(GaussQ(0, -1))) + QuasiTrigPoly::exp_i(1) -
                           QuasiTrigPoly::constant(q(1));
  CHECK(xe.antiderivative() == expected);
  CHECK(expected.derivative() == xe);
}

TEST_CASE("piecewise antiderivative is continuous") {
  CoeffFn f = antiderivative(step_fn());
  CHECK(f.eval(kPi).real() == doctest::Approx(kPi));
  CHECK(f.eval(1.5 * kPi).real() == doctest::Approx(kPi));
  CHECK(value_at_two_pi(f) == Scalar::pi_power(1));
}

TEST_CASE("eval examples") {
  CoeffFn c = QuasiTrigPoly::cos();
  CHECK(c.eval(kPi).real() == doctest::Approx(-1));
  CHECK(std::abs(c.eval(kTwoPi + kPi / 2)) < 1e-12);
  CoeffFn p = step_fn();
  CHECK(p.eval(kPi).real() == 1.0);
  CHECK(p.eval(kPi, Side::Right).real() == 0.0);
  CHECK(p.eval(0.0, Side::Right).real() == 1.0);
  CHECK(p.eval(0.0).real() == 0.0);  // 0 is identified with 2pi
}

TEST_CASE("mean_free examples") {
  CHECK(mean_free(QuasiTrigPoly::sin()));
  CHECK_FALSE(mean_free(CoeffFn::constant(q(1))));
  CHECK_FALSE(mean_free(QuasiTrigPoly::constant(q(1)) + QuasiTrigPoly::cos(3)));
  CHECK(mean_free(CoeffFn(QuasiTrigPoly::sin()).as_sampled()));
  CHECK_FALSE(mean_free(CoeffFn(QuasiTrigPoly::constant(q(1))).as_sampled()));
}

TEST_CASE("exact breakpoint evaluation") {
  QuasiTrigPoly f = QuasiTrigPoly::exp_i(1);
  CHECK(f.eval_at(Breakpoint::pi_multiple(mpq_class(1, 2))) == Scalar::i_unit());
  CHECK(f.eval_at(Breakpoint::pi_multiple(1)) == q(-1));
  CHECK(f.eval_at(Breakpoint::pi_multiple(mpq_class(1, 3))).is_float());
  QuasiTrigPoly x = QuasiTrigPoly::x_power(2);
  CHECK(x.eval_at(Breakpoint::pi_multiple(mpq_class(1, 2))) == Scalar::pi_power(2, GaussQ(mpq_class(1, 4))));
}

TEST_CASE("affine substitution") {
  QuasiTrigPoly f = QuasiTrigPoly::x_power(1) * QuasiTrigPoly::exp_i(1);
  QuasiTrigPoly g = f.affine(-1, 2);  // (2pi - x) e^{-ix}
  for (double x : {0.3, 1.7, 4.0}) {
    Complex expected = (kTwoPi - x) * std::polar(1.0, -x);
    CHECK(std::abs(g.eval_raw(x) - expected) < 1e-12);
  }
}

TEST_CASE("piecewise validation") {
  CHECK_THROWS_AS(PiecewisePoly({{Breakpoint::pi_multiple(1), QuasiTrigPoly{}}}), InputError);
  CHECK_THROWS_AS(PiecewisePoly({{Breakpoint::pi_multiple(1), QuasiTrigPoly{}},
                                 {Breakpoint::pi_multiple(1), QuasiTrigPoly{}},
                                 {Breakpoint::two_pi(), QuasiTrigPoly{}}}),
                  InputError);
  CHECK_THROWS_AS(Sampled(std::vector<Complex>(10)), InputError);
}

TEST_CASE("property: closure of product and antiderivative") {
  gen::Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    CoeffFn f, g;
    if (trial % 2 == 0) {
      f = gen::quasi_trig(rng);
      g = gen::quasi_trig(rng);
    } else {
      f = gen::piecewise(rng);
      g = gen::piecewise(rng);
    }
    CoeffFn prod = fn_mul(f, g);
    CoeffFn anti = antiderivative(prod);
    CHECK(prod.kind() == f.kind());
    CHECK(anti.kind() == f.kind());
    CHECK(prod.is_exact());
    CHECK(value_at_zero(anti).is_zero());
    for (double x : {0.4, 1.3, 2.2, 3.6, 5.1, 6.0}) {
      CHECK(std::abs(prod.eval(x) - f.eval(x) * g.eval(x)) < 1e-9);
      Complex fd = fd_derivative(anti, x);
      CHECK(std::abs(fd - prod.eval(x)) < 1e-5 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST_CASE("property: exact and float pipelines agree") {
  gen::Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    QuasiTrigPoly f = gen::quasi_trig(rng), g = gen::trig(rng);
    Scalar exact = value_at_two_pi(antiderivative(fn_mul(f, g)));
    Scalar flt = value_at_two_pi(antiderivative(fn_mul(f.to_float(), g.to_float())));
    CHECK(exact.is_exact());
    CHECK(flt.is_float());
    CHECK(std::abs(exact.to_complex() - flt.to_complex()) <= 1e-12 * std::max(1.0, exact.abs()));
  }
}

TEST_CASE("sampled antiderivative") {
  CoeffFn s = CoeffFn(QuasiTrigPoly::cos()).as_sampled();
  CoeffFn a = antiderivative(s);
  CHECK(std::abs(a.eval(kPi / 2) - Complex(1.0)) < 1e-6);
  CHECK_THROWS_AS(derivative(s), PreconditionError);
}

TEST_CASE("coefficient sequences") {
  CoeffSeq a({QuasiTrigPoly::cos(), CoeffFn(), CoeffFn()});
  CHECK(a.size() == 1);
  CHECK(a[3].is_zero());
  CHECK(a.support() == std::vector<int>{1});
  CHECK(a.bound() == doctest::Approx(1.0));
  CHECK(CoeffSeq().empty());
  CHECK_THROWS_AS(CoeffSeq({CoeffFn::constant(q(4))}, 2.0), PreconditionError);
  CHECK_NOTHROW(CoeffSeq({CoeffFn::constant(q(4)), CoeffFn::constant(q(4))}, 4.0));
  CHECK(growth_bound({2.0, 9.0}) == doctest::Approx(3.0));
}
