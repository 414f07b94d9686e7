#pragma once

#include <map>

#include "centersig/funcs.hpp"
#include "centersig/words.hpp"

namespace csig {

/// x -> I_w(x): G_0 = 1, G_m = antiderivative(a_{i_m} * G_{m-1}).
CoeffFn partial_integral(const CoeffSeq& a, const Word& w);

/// I_w(a) = partial_integral(a, w) at 2pi.
Scalar iint(const CoeffSeq& a, const Word& w);

/// All I_w for words of weight <= cutoff over the support of a.
struct Signature {
  int cutoff = 0;
  std::map<Word, Scalar> values;  // the empty word is implicit (value 1)

  /// Value of w; 1 for the empty word, 0 for words outside the support.
  Scalar at(const Word& w) const;
};

/// Worker count from CENTER_SIG_THREADS (default: hardware concurrency).
unsigned worker_count();

/// Prefix-shared DFS. threads == 0 uses worker_count(); results do not depend on it.
Signature signature(const CoeffSeq& a, int cutoff, unsigned threads = 0);

/// Numeric zero scale 1e-10 * (2pi)^k/k! * l^weight for a word of length k.
double zero_threshold(const CoeffSeq& a, const Word& w);

/// Exact scalars: is_zero(). Float scalars: |s| <= threshold.
bool negligible(const Scalar& s, double threshold);

/// Ree's identity I_u * I_v = sum over shuffles, exact or to 1e-9 relative.
bool shuffle_product_check(const CoeffSeq& a, const Word& u, const Word& v);
bool shuffle_product_check(const Signature& sig, const Word& u, const Word& v);

}  // namespace csig
