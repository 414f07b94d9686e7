#pragma once

#include <tuple>
#include <vector>

#include "centersig/iint.hpp"

namespace csig {

/// (a*b)_i(t) = 2 a_i(2t) on (0, pi], 2 b_i(2t - 2pi) on (pi, 2pi]; bound 2 max(l_a, l_b).
CoeffSeq concat(const CoeffSeq& a, const CoeffSeq& b);

/// a_i^{-1}(t) = -a_i(2pi - t).
CoeffSeq inverse(const CoeffSeq& a);

/// Single-function building blocks of concat and inverse.
CoeffFn concat_fn(const CoeffFn& f, const CoeffFn& g);
CoeffFn reflect_fn(const CoeffFn& f);

struct Equivalence {
  bool equivalent = true;  // signatures agree up to the cutoff
  int cutoff = 0;
  std::vector<std::tuple<Word, Scalar, Scalar>> witnesses;
};
Equivalence equivalent(const CoeffSeq& a, const CoeffSeq& b, int cutoff);

enum class ScaleMode { Path, Graded };
/// Path: t*a. Graded: (t a_1, t^2 a_2, ...).
CoeffSeq scale(const CoeffSeq& a, const Scalar& t, ScaleMode mode);

}  // namespace csig
