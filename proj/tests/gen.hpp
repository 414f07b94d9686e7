#pragma once

#include <random>

#include "centersig/funcs.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline csig::GaussQ gauss(Rng& rng, long max_num = 3, long max_den = 3) {
  mpq_class re(uniform(rng, -max_num, max_num), uniform(rng, 1, max_den));
  mpq_class im(uniform(rng, -max_num, max_num), uniform(rng, 1, max_den));
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

/// Sum of c_m e^{imx}, |m| <= max_freq, with a few nonzero Gaussian-rational coefficients.
inline csig::QuasiTrigPoly trig(Rng& rng, int max_freq = 2, int max_terms = 3) {
  csig::QuasiTrigPoly f;
  const long n = uniform(rng, 1, max_terms);
  for (long k = 0; k < n; ++k) f.add_term({0, static_cast<int>(uniform(rng, -max_freq, max_freq))}, gauss(rng));
  if (f.is_zero()) f.add_term({0, 1}, csig::Scalar(1));
  return f;
}

/// Like trig() with an occasional x^p factor.
inline csig::QuasiTrigPoly quasi_trig(Rng& rng, int max_power = 2) {
  csig::QuasiTrigPoly f = trig(rng);
  f.add_term({static_cast<int>(uniform(rng, 1, max_power)), static_cast<int>(uniform(rng, -1, 1))},
             csig::Scalar(gauss(rng)));
  return f;
}

/// Random exact element (a_1, ..., a_m).
inline csig::CoeffSeq seq(Rng& rng, int max_len = 2, int max_freq = 2) {
  std::vector<csig::CoeffFn> c;
  const long m = uniform(rng, 1, max_len);
  for (long i = 0; i < m; ++i) c.push_back(trig(rng, max_freq));
  return csig::CoeffSeq(std::move(c));
}

/// Random exact piecewise function with breakpoints at multiples of pi/2.
inline csig::PiecewisePoly piecewise(Rng& rng) {
  std::vector<csig::PiecewisePoly::Piece> pieces;
  std::vector<int> cuts;
  for (int k = 1; k < 4; ++k)
    if (uniform(rng, 0, 1) == 0) cuts.push_back(k);
  cuts.push_back(4);
  for (int c : cuts) pieces.push_back({csig::Breakpoint::pi_multiple(mpq_class(c, 2)), quasi_trig(rng, 1)});
  return csig::PiecewisePoly(std::move(pieces));
}

}  // namespace gen
