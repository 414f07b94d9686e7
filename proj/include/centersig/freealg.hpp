#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "centersig/iint.hpp"

namespace csig {

/// Homogeneous noncommutative polynomial; monomials are strings over {'X','Y'} (X1, X2).
using NCPoly = std::map<std::string, Scalar>;

/// Monomial (X1 X2^{i_k-1}) ... (X1 X2^{i_1-1}) attached to a word.
std::string word_monomial(const Word& w);

/// Truncated graded series sum_i p_i t^i with p_0 = 1.
class NCSeries {
 public:
  explicit NCSeries(int cutoff);  // identity
  int cutoff() const { return static_cast<int>(p_.size()) - 1; }
  const NCPoly& degree(int i) const { return p_[static_cast<std::size_t>(i)]; }
  void add(const std::string& mono, const Scalar& c);
  bool is_identity() const;
  friend bool operator==(const NCSeries&, const NCSeries&) = default;

 private:
  std::vector<NCPoly> p_;
};

/// F(2pi) truncated at degree N.
NCSeries fundamental_solution(const Signature& sig);
NCSeries fundamental_solution(const CoeffSeq& a, int cutoff);

/// Graded product truncated at the common cutoff.
NCSeries nc_mul(const NCSeries& f, const NCSeries& g);

struct UniversalVerdict {
  bool universal = true;  // all I_w vanish up to the cutoff
  int cutoff = 0;
  std::vector<std::pair<Word, Scalar>> witnesses;
};
UniversalVerdict is_universal_center(const CoeffSeq& a, int cutoff);
UniversalVerdict is_universal_center(const CoeffSeq& a, const Signature& sig);

/// Normal form sum a_ij S1^i S2^j, keyed by (i, j).
using SPoly = std::map<std::pair<int, int>, Scalar>;

/// Rewrites YX -> XY + YY until every X stands left of every Y. With `rng`,
/// the redex and the monomial to rewrite are picked at random.
SPoly to_s_algebra(const NCPoly& p, std::mt19937_64* rng = nullptr);

/// Integer matrices of D (differentiation) and L (left shift) on polynomials of degree <= deg.
using IntMatrix = std::vector<std::vector<mpz_class>>;
IntMatrix diff_matrix(int deg);
IntMatrix shift_matrix(int deg);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
/// DL - LD == -L^2 on polynomials of degree <= deg.
bool operator_relation_holds(int deg);

/// c_n via p_n(D, L) applied to z^n.
Scalar cn_via_operators(const NCSeries& f, int n);
Scalar cn_via_operators(const CoeffSeq& a, int n);

}  // namespace csig
