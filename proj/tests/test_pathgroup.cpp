#include <doctest.h>

#include "centersig/freealg.hpp"
#include "centersig/pathgroup.hpp"
#include "centersig/returnmap.hpp"
#include "gen.hpp"

using namespace csig;

namespace {

Scalar q(long n, long d = 1) { return Scalar(GaussQ(mpq_class(n, d))); }

Scalar chen_sum(const Signature& sa, const Signature& sb, const Word& w) {
  Scalar total;
  for (std::size_t j = 0; j <= w.size(); ++j) {
    Word prefix(w.begin(), w.begin() + static_cast<long>(j));
    Word suffix(w.begin() + static_cast<long>(j), w.end());
    total += sa.at(prefix) * sb.at(suffix);
  }
  return total;
}

}  // namespace

TEST_CASE("concatenation of constants") {
  CoeffSeq a({CoeffFn::constant(q(1))});
  CoeffSeq ab = concat(a, a);
  CHECK(ab.bound() == doctest::Approx(2.0));
  CHECK(iint(ab, {1}) == Scalar::pi_power(1, GaussQ(4)));
  CHECK(iint(ab, {1, 1}) == Scalar::pi_power(2, GaussQ(8)));
  CHECK(ab[1].kind() == CoeffFn::Kind::Piecewise);
}

TEST_CASE("reflection") {
  CHECK(reflect_fn(QuasiTrigPoly::sin()) == CoeffFn(QuasiTrigPoly::sin()));
  CHECK(reflect_fn(QuasiTrigPoly::cos()) == CoeffFn(-QuasiTrigPoly::cos()));
  CoeffFn x = PiecewisePoly::single(QuasiTrigPoly::x_power(1));
  CoeffFn rx = reflect_fn(x);
  CHECK(rx.eval(1.0).real() == doctest::Approx(1.0 - kTwoPi));
  CoeffFn s = CoeffFn(QuasiTrigPoly::cos()).as_sampled(256);
  CHECK(std::abs(reflect_fn(s).eval(1.0) + std::cos(1.0)) < 1e-3);
}

TEST_CASE("sampled concatenation") {
  CoeffFn s = CoeffFn(QuasiTrigPoly::cos()).as_sampled(256);
  CoeffFn c = concat_fn(s, s);
  CHECK(c.kind() == CoeffFn::Kind::Sampled);
  CHECK(std::abs(c.eval(0.5) - 2.0 * std::cos(1.0)) < 1e-2);
}

TEST_CASE("scaling") {
  CoeffSeq a({QuasiTrigPoly::cos(), CoeffFn::constant(q(1))});
  Scalar t = q(3);
  CoeffSeq p = scale(a, t, ScaleMode::Path);
  CoeffSeq g = scale(a, t, ScaleMode::Graded);
  for (Word w : {Word{1, 2}, Word{2, 2}, Word{1, 1, 2}}) {
    CHECK(iint(p, w) == pow(t, length(w)) * iint(a, w));
    CHECK(iint(g, w) == pow(t, weight(w)) * iint(a, w));
  }
  CHECK(g.bound() >= 3.0);
}

TEST_CASE("equivalence verdicts") {
  CoeffSeq a({QuasiTrigPoly::cos(), CoeffFn::constant(q(1))});
  CoeffSeq zero;
  CHECK(equivalent(concat(a, inverse(a)), zero, 5).equivalent);
  CHECK(equivalent(a, a, 5).equivalent);
  Equivalence e = equivalent(a, zero, 3);
  CHECK_FALSE(e.equivalent);
  CHECK_FALSE(e.witnesses.empty());
}

TEST_CASE("property: Chen identity, homomorphism and inverses") {
  gen::Rng rng(71);
  for (int t = 0; t < 10; ++t) {
    CoeffSeq a = gen::seq(rng, 2, 1), b = gen::seq(rng, 2, 1);
    const int n = 4;
    Signature sa = signature(a, n), sb = signature(b, n);
    Signature sab = signature(concat(a, b), n);
    for (const Word& w : words_up_to(n, {1, 2})) CHECK(sab.at(w) == chen_sum(sa, sb, w));
    CHECK(return_series(sab) == compose(return_series(sa), return_series(sb)));
    CHECK(fundamental_solution(sab) == nc_mul(fundamental_solution(sb), fundamental_solution(sa)));
    CHECK(is_universal_center(concat(a, inverse(a)), n).universal);
    CHECK(return_series(inverse(a), n) == invert(return_series(sa)));
  }
}

TEST_CASE("property: piecewise inputs stay exact") {
  gen::Rng rng(72);
  for (int t = 0; t < 5; ++t) {
    CoeffSeq a({gen::piecewise(rng)}), b({gen::piecewise(rng)});
    Signature sab = signature(concat(a, b), 3);
    Signature sa = signature(a, 3), sb = signature(b, 3);
    for (const Word& w : words_up_to(3, {1})) {
      CHECK(sab.at(w).is_exact());
      CHECK(sab.at(w) == chen_sum(sa, sb, w));
    }
  }
}
