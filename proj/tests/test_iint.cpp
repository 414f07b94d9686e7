#include <doctest.h>

#include <cstdlib>

#include "centersig/errors.hpp"
#include "centersig/iint.hpp"
#include "gen.hpp"

using namespace csig;

namespace {

Scalar q(long n, long d = 1) { return Scalar(GaussQ(mpq_class(n, d))); }
CoeffSeq consts(std::vector<long> v) {
  std::vector<CoeffFn> c;
  for (long x : v) c.push_back(CoeffFn::constant(q(x)));
  return CoeffSeq(std::move(c));
}

}  // namespace

TEST_CASE("iterated integrals of constants") {
  CoeffSeq a = consts({1, 1});
  CHECK(iint(a, {1}) == Scalar::pi_power(1, GaussQ(2)));
  CHECK(iint(a, {1, 2}) == Scalar::pi_power(2, GaussQ(2)));
  CHECK(iint(a, {1, 1, 1}) == Scalar::pi_power(3, GaussQ(mpq_class(4, 3))));
  CHECK(iint(a, {3}).is_zero());
  CHECK(iint(a, {}) == Scalar(1));
}

TEST_CASE("iterated integrals of trig coefficients") {
  CoeffSeq a({QuasiTrigPoly::sin(), QuasiTrigPoly::cos()});
  CHECK(iint(a, {1}).is_zero());
  CHECK(iint(a, {2}).is_zero());
  // int cos(x) (1 - cos x) dx over the period = -pi
  CHECK(iint(a, {1, 2}) == Scalar::pi_power(1, GaussQ(-1)));
  CHECK(iint(a, {1, 1}).is_zero());
}

TEST_CASE("partial integrals vanish at zero") {
  CoeffSeq a({QuasiTrigPoly::cos(), CoeffFn::constant(q(1))});
  CoeffFn g = partial_integral(a, {2, 1});
  CHECK(value_at_zero(g).is_zero());
  CHECK(value_at_two_pi(g) == iint(a, {2, 1}));
}

TEST_CASE("signature contents") {
  CoeffSeq a = consts({1, 0, 2});
  Signature s = signature(a, 4);
  CHECK(s.cutoff == 4);
  CHECK(s.at({}) == Scalar(1));
  CHECK(s.at({1, 3}) == iint(a, {1, 3}));
  CHECK(s.at({2}).is_zero());
  CHECK(s.values.count({2}) == 0);
  CHECK_THROWS_AS(s.at({3, 3}), PreconditionError);
  CHECK(s.values.size() == words_up_to(4, {1, 3}).size());
}

TEST_CASE("signature independent of worker count") {
  gen::Rng rng(31);
  CoeffSeq a = gen::seq(rng, 3, 1);
  Signature s1 = signature(a, 6, 1);
  Signature s4 = signature(a, 6, 4);
  CHECK(s1.values == s4.values);
  setenv("CENTER_SIG_THREADS", "3", 1);
  CHECK(worker_count() == 3);
  unsetenv("CENTER_SIG_THREADS");
  CHECK(worker_count() >= 1);
}

TEST_CASE("zero thresholds") {
  CoeffSeq a = consts({1});
  CHECK(zero_threshold(a, {1}) == doctest::Approx(1e-10 * kTwoPi));
  CHECK(negligible(Scalar(), 0.0));
  CHECK_FALSE(negligible(Scalar(1), 1.0));
  CHECK(negligible(Scalar::from_float(1e-12), 1e-10));
}

TEST_CASE("float and exact paths agree on samples") {
  CoeffSeq exact({QuasiTrigPoly::cos(), QuasiTrigPoly::sin()});
  CoeffSeq sampled({CoeffFn(QuasiTrigPoly::cos()).as_sampled(), CoeffFn(QuasiTrigPoly::sin()).as_sampled()});
  for (Word w : {Word{1, 2}, Word{2, 1, 1}, Word{1, 1, 2}}) {
    CHECK(std::abs(iint(exact, w).to_complex() - iint(sampled, w).to_complex()) < 1e-5);
  }
}

TEST_CASE("property: shuffle identities on random exact inputs") {
  gen::Rng rng(32);
  for (int t = 0; t < 20; ++t) {
    CoeffSeq a = gen::seq(rng, 2, 2);
    Signature s = signature(a, 5);
    for (int k = 0; k < 5; ++k) {
      Word u, v;
      for (long n = gen::uniform(rng, 1, 2); n > 0; --n) u.push_back(static_cast<int>(gen::uniform(rng, 1, 2)));
      for (long n = gen::uniform(rng, 1, 2); n > 0; --n) v.push_back(static_cast<int>(gen::uniform(rng, 1, 2)));
      if (weight(u) + weight(v) > 5) continue;
      CHECK(shuffle_product_check(s, u, v));
      CHECK(shuffle_product_check(a, u, v));
    }
  }
}

TEST_CASE("property: exact iterated integrals are exact") {
  gen::Rng rng(33);
  for (int t = 0; t < 10; ++t) {
    CoeffSeq a = gen::seq(rng, 2, 2);
    Signature s = signature(a, 4);
    for (const auto& [w, v] : s.values) CHECK(v.is_exact());
  }
}
