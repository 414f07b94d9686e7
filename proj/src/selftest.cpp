#include <ostream>

#include "centersig/centergen.hpp"
#include "centersig/cli.hpp"
#include "centersig/freealg.hpp"
#include "centersig/oracle.hpp"
#include "centersig/pathgroup.hpp"

namespace csig {

namespace {

Scalar q(long num, long den = 1) { return Scalar(GaussQ(mpq_class(num, den))); }

CoeffSeq sample_a() {
  return CoeffSeq({QuasiTrigPoly::cos() + QuasiTrigPoly::constant(q(1, 2)), QuasiTrigPoly::exp_i(-1).scaled(q(2))});
}

CoeffSeq sample_b() { return CoeffSeq({QuasiTrigPoly::sin(2), QuasiTrigPoly::constant(Scalar::i_unit())}); }

bool riccati() {
  CoeffSeq a({QuasiTrigPoly::constant(q(1, 2))});
  for (int n = 1; n <= 6; ++n)
    if (!(return_coeff(a, n) == Scalar::pi_power(n))) return false;
  return true;
}

bool shuffle() {
  Signature sig = signature(sample_a(), 5);
  for (const Word& u : words_up_to(4, {1, 2}))
    for (const Word& v : words_up_to(5 - weight(u), {1, 2}))
      if (!shuffle_product_check(sig, u, v)) return false;
  return true;
}

bool chen() {
  const CoeffSeq a = sample_a(), b = sample_b();
  NCSeries lhs = fundamental_solution(concat(a, b), 4);
  NCSeries rhs = nc_mul(fundamental_solution(b, 4), fundamental_solution(a, 4));
  return lhs == rhs && equivalent(concat(a, inverse(a)), CoeffSeq(), 4).equivalent;
}

bool homomorphism() {
  const CoeffSeq a = sample_a(), b = sample_b();
  return return_series(concat(a, b), 5) == compose(return_series(a, 5), return_series(b, 5));
}

bool section() {
  ReturnSeries f(5, {q(1), Scalar(GaussQ(2, 1)), q(-3, 4), q(0), q(5)});
  return return_series(t_map(f, 5), 5) == f;
}

bool operators() {
  if (!operator_relation_holds(12)) return false;
  const CoeffSeq a = sample_a();
  for (int n = 1; n <= 5; ++n)
    if (!(cn_via_operators(a, n) == return_coeff(a, n))) return false;
  return true;
}

bool universal() {
  CoeffSeq u = from_u_sequence({QuasiTrigPoly::sin()}, 5);
  return is_universal_center(u, 5).universal && classify(u, 5).center;
}

bool oracle_agrees() {
  const CoeffSeq a = sample_a();
  std::vector<Complex> v = variational_all(a, 4);
  for (int n = 1; n <= 4; ++n) {
    Complex exact = return_coeff(a, n).to_complex();
    if (std::abs(v[static_cast<std::size_t>(n - 1)] - exact) > 1e-8 * std::max(1.0, std::abs(exact))) return false;
  }
  return true;
}

}  // namespace

bool selftest(std::ostream& out) {
  struct Check {
    const char* name;
    bool (*fn)();
  };
  const Check checks[] = {{"riccati return coefficients", riccati},
                          {"shuffle identities (weight <= 5)", shuffle},
                          {"chen product and inverse laws", chen},
                          {"return map homomorphism", homomorphism},
                          {"t-map section identity", section},
                          {"operator route and [D,L] = -L^2", operators},
                          {"u-sequence center is universal", universal},
                          {"oracle matches exact coefficients", oracle_agrees}};
  bool all = true;
  for (const auto& c : checks) {
    bool ok = false;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      out << "error in " << c.name << ": " << e.what() << "\n";
    }
    out << (ok ? "PASS " : "FAIL ") << c.name << "\n";
    all = all && ok;
  }
  return all;
}

}  // namespace csig
