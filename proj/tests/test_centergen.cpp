#include <doctest.h>

#include "centersig/centergen.hpp"
#include "centersig/errors.hpp"
#include "centersig/freealg.hpp"
#include "gen.hpp"

using namespace csig;

namespace {

Scalar q(long n, long d = 1) { return Scalar(GaussQ(mpq_class(n, d))); }

}  // namespace

TEST_CASE("u-sequence with a single sine") {
  CoeffSeq a = from_u_sequence({QuasiTrigPoly::sin()}, 3);
  QuasiTrigPoly s = QuasiTrigPoly::sin(), c = QuasiTrigPoly::cos();
  CHECK(a[1] == CoeffFn(-c));
  CHECK(a[2] == CoeffFn((s * c).scaled(q(2))));
  CHECK(a[3] == CoeffFn((s * s * c).scaled(q(-4))));
  CHECK(is_universal_center(a, 3).universal);
}

TEST_CASE("u-sequence preconditions") {
  CHECK_THROWS_AS(from_u_sequence({QuasiTrigPoly::cos()}, 3), PreconditionError);
  CHECK_THROWS_AS(from_u_sequence({CoeffFn(QuasiTrigPoly::sin()).as_sampled()}, 3), PreconditionError);
}

TEST_CASE("section map for a quadratic series") {
  Scalar d1 = q(3);
  CoeffSeq a = t_map(ReturnSeries(2, {d1, q(0)}), 2);
  CHECK(a[1] == CoeffFn(PiecewisePoly::single(QuasiTrigPoly::constant(d1.divided_by(GaussQ(2), 1)))));
  QuasiTrigPoly ramp = QuasiTrigPoly::constant(q(1)) - QuasiTrigPoly::x_power(1).scaled(Scalar::pi_power(-1, GaussQ(mpq_class(1, 2))));
  CHECK(a[2] == CoeffFn(PiecewisePoly::single(ramp.scaled(-(d1 * d1).divided_by(GaussQ(1), 1)))));
}

TEST_CASE("property: section map is a right inverse") {
  gen::Rng rng(81);
  for (int t = 0; t < 10; ++t) {
    int n = static_cast<int>(gen::uniform(rng, 1, 5));
    std::vector<Scalar> d;
    for (int k = 0; k < n; ++k) d.push_back(Scalar(gen::gauss(rng)).times_pi(static_cast<int>(gen::uniform(rng, -1, 1))));
    ReturnSeries f(n, d);
    CHECK(return_series(t_map(f, n), n) == f);
  }
}

TEST_CASE("property: u-sequences give centers") {
  gen::Rng rng(82);
  for (int t = 0; t < 6; ++t) {
    std::vector<CoeffFn> u;
    for (long k = gen::uniform(rng, 1, 2); k > 0; --k) {
      QuasiTrigPoly f = gen::trig(rng, 2, 2);
      f = f - QuasiTrigPoly::constant(f.eval_at(Breakpoint::zero()));
      u.push_back(f);
    }
    CoeffSeq a = from_u_sequence(u, 4);
    CHECK(classify(a, 4).center);
    if (u.size() == 1) CHECK(is_universal_center(a, 4).universal);
  }
}

TEST_CASE("Hamiltonian-type fields have centers") {
  BiPoly x = BiPoly::x(), y = BiPoly::y();
  PlanarField v = hamiltonian_field(x + y.scaled(q(2)), {q(0), q(1)}, {q(0), q(1, 3)});
  CHECK(classify(polar_reduce(v, 5), 5).center);
  PlanarField w = hamiltonian_field(x * x + x * y, {q(1), q(2)}, {q(0), q(-1)});
  CHECK(classify(polar_reduce(w, 4), 4).center);
  CHECK_THROWS_AS(hamiltonian_field(x + x * y, {q(1)}, {}), InputError);
  CHECK_THROWS_AS(hamiltonian_field(x, {q(1)}, {q(1)}), InputError);
}

TEST_CASE("symmetric fields have centers") {
  BiPoly x = BiPoly::x(), y = BiPoly::y();
  PlanarField v = symmetric_field(x * y + y * y * y, x * x + y * y.scaled(q(2)));
  CHECK(classify(polar_reduce(v, 5), 5).center);
  CHECK_THROWS_AS(symmetric_field(x * x, BiPoly()), InputError);
  CHECK_THROWS_AS(symmetric_field(x * y, x * y), InputError);
}
