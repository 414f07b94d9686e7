#include <doctest.h>

#include "centersig/errors.hpp"
#include "centersig/freealg.hpp"
#include "centersig/returnmap.hpp"
#include "gen.hpp"

using namespace csig;

namespace {

Scalar q(long n, long d = 1) { return Scalar(GaussQ(mpq_class(n, d))); }

}  // namespace

TEST_CASE("word monomials") {
  CHECK(word_monomial({1}) == "X");
  CHECK(word_monomial({2}) == "XY");
  CHECK(word_monomial({1, 2}) == "XYX");
  CHECK(word_monomial({2, 1}) == "XXY");
  CHECK(word_monomial({3, 1, 2}) == "XYXXYY");
}

TEST_CASE("fundamental solution of a constant second coefficient") {
  CoeffSeq a({CoeffFn(), CoeffFn::constant(q(1))});
  NCSeries f = fundamental_solution(a, 4);
  CHECK(f.degree(0).at("") == Scalar(1));
  CHECK(f.degree(1).empty());
  CHECK(f.degree(2) == NCPoly{{"XY", Scalar::pi_power(1, GaussQ(2))}});
  CHECK(f.degree(3).empty());
  CHECK(f.degree(4) == NCPoly{{"XYXY", Scalar::pi_power(2, GaussQ(2))}});
}

TEST_CASE("series identity and product") {
  NCSeries one(3);
  CHECK(one.is_identity());
  NCSeries f(3);
  f.add("X", q(2));
  CHECK_FALSE(f.is_identity());
  NCSeries sq = nc_mul(f, f);
  CHECK(sq.degree(1).at("X") == q(4));
  CHECK(sq.degree(2).at("XX") == q(4));
  CHECK(nc_mul(f, one) == f);
  CHECK_THROWS_AS(nc_mul(f, NCSeries(2)), PreconditionError);
}

TEST_CASE("rewriting to the commutative normal form") {
  CHECK(to_s_algebra({{"YXY", q(1)}}) == SPoly{{{1, 2}, q(1)}, {{0, 3}, q(1)}});
  CHECK(to_s_algebra({{"XY", q(3)}}) == SPoly{{{1, 1}, q(3)}});
  CHECK(to_s_algebra({{"YX", q(1)}}) == SPoly{{{1, 1}, q(1)}, {{0, 2}, q(1)}});
  CHECK(to_s_algebra({{"YX", q(1)}, {"XY", q(-1)}}) == SPoly{{{0, 2}, q(1)}});
}

TEST_CASE("operator matrices") {
  IntMatrix d = diff_matrix(3);
  IntMatrix l = shift_matrix(3);
  CHECK(d.size() == 4);
  CHECK(l.size() == 4);
  for (int deg = 1; deg <= 8; ++deg) CHECK(operator_relation_holds(deg));
}

TEST_CASE("operator route on single monomials") {
  NCSeries f(3);
  f.add("XYX", q(1));
  CHECK(cn_via_operators(f, 3) == q(3));
  NCSeries g(2);
  g.add("XX", q(1));
  CHECK(cn_via_operators(g, 2) == q(2));
}

TEST_CASE("Riccati example") {
  CoeffSeq a({CoeffFn::constant(q(1, 2))});
  for (int n = 1; n <= 6; ++n) {
    CHECK(return_coeff(a, n) == Scalar::pi_power(n));
    CHECK(cn_via_operators(a, n) == Scalar::pi_power(n));
  }
}

TEST_CASE("universality examples") {
  CoeffSeq s({QuasiTrigPoly::sin(), QuasiTrigPoly::sin(2)});
  UniversalVerdict v = is_universal_center(s, 6);
  CHECK(v.universal);
  CHECK(v.cutoff == 6);
  CHECK(v.witnesses.empty());
  CoeffSeq c({QuasiTrigPoly::sin(), QuasiTrigPoly::cos()});
  UniversalVerdict w = is_universal_center(c, 4);
  CHECK_FALSE(w.universal);
  bool found = false;
  for (const auto& [word, value] : w.witnesses)
    if (word == Word{1, 2}) found = value == Scalar::pi_power(1, GaussQ(-1));
  CHECK(found);
}

TEST_CASE("property: signature embeds into the fundamental solution") {
  gen::Rng rng(41);
  for (int t = 0; t < 10; ++t) {
    CoeffSeq a = gen::seq(rng, 3, 1);
    Signature sig = signature(a, 5);
    NCSeries f = fundamental_solution(sig);
    for (const auto& [w, v] : sig.values) {
      const NCPoly& p = f.degree(weight(w));
      auto it = p.find(word_monomial(w));
      if (v.is_zero()) {
        CHECK(it == p.end());
      } else {
        REQUIRE(it != p.end());
        CHECK(it->second == v);
      }
    }
  }
}

TEST_CASE("property: operator route matches the word formula") {
  gen::Rng rng(42);
  for (int t = 0; t < 10; ++t) {
    CoeffSeq a = gen::seq(rng, 3, 1);
    Signature sig = signature(a, 5);
    NCSeries f = fundamental_solution(sig);
    for (int n = 1; n <= 5; ++n) CHECK(cn_via_operators(f, n) == return_coeff(sig, n));
  }
}

TEST_CASE("property: rewriting is order independent") {
  gen::Rng rng(43);
  for (int t = 0; t < 40; ++t) {
    NCPoly p;
    for (long k = gen::uniform(rng, 1, 4); k > 0; --k) {
      std::string m;
      for (long n = gen::uniform(rng, 1, 6); n > 0; --n) m.push_back(gen::uniform(rng, 0, 1) ? 'X' : 'Y');
      p[m] = p[m] + Scalar(gen::gauss(rng));
    }
    SPoly det = to_s_algebra(p);
    for (int r = 0; r < 3; ++r) CHECK(to_s_algebra(p, &rng) == det);
  }
}
