#include "centersig/pathgroup.hpp"

#include <algorithm>

namespace csig {

namespace {

Breakpoint halve(const Breakpoint& b, bool second_half) {
  if (b.is_exact()) return Breakpoint::pi_multiple(*b.exact_multiple() / 2 + (second_half ? 1 : 0));
  return Breakpoint::radians(b.value() / 2 + (second_half ? kPi : 0.0));
}

// Pieces of x -> 2 f(2x - 2pi*half) on the half interval.
void append_half(const PiecewisePoly& f, bool second_half, std::vector<PiecewisePoly::Piece>& out) {
  for (const auto& p : f.pieces())
    out.push_back({halve(p.end, second_half), p.f.affine(2, second_half ? -2 : 0).scaled(Scalar(2))});
}

Sampled sampled_concat(const CoeffFn& f, const CoeffFn& g) {
  std::size_t n = Sampled::kDefaultGrid;
  if (auto s = f.sampled()) n = std::max(n, s->grid());
  if (auto s = g.sampled()) n = std::max(n, s->grid());
  std::vector<Complex> v(n + 1);
  v[0] = 2.0 * f.eval(0.0, Side::Right);
  for (std::size_t j = 1; j <= n; ++j) {
    double t = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    v[j] = t <= kPi ? 2.0 * f.eval(2 * t) : 2.0 * g.eval(2 * t - kTwoPi);
  }
  return Sampled(std::move(v));
}

}  // namespace

CoeffFn concat_fn(const CoeffFn& f, const CoeffFn& g) {
  if (!f.is_symbolic() || !g.is_symbolic()) return sampled_concat(f, g);
  std::vector<PiecewisePoly::Piece> pieces;
  append_half(f.as_piecewise(), false, pieces);
  append_half(g.as_piecewise(), true, pieces);
  return PiecewisePoly(std::move(pieces)).simplified();
}

CoeffFn reflect_fn(const CoeffFn& f) {
  if (auto t = f.trig()) return -t->affine(-1, 2);
  if (auto p = f.piecewise()) {
    std::vector<PiecewisePoly::Piece> pieces;
    const std::size_t n = p->pieces().size();
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t j = n - 1 - k;
      Breakpoint start = p->start(j);
      Breakpoint end = start.is_exact() ? Breakpoint::pi_multiple(2 - *start.exact_multiple())
                                        : Breakpoint::radians(kTwoPi - start.value());
      pieces.push_back({end, -p->pieces()[j].f.affine(-1, 2)});
    }
    return PiecewisePoly(std::move(pieces));
  }
  const auto& v = f.sampled()->values();
  std::vector<Complex> out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = -v[v.size() - 1 - j];
  return Sampled(std::move(out));
}

CoeffSeq concat(const CoeffSeq& a, const CoeffSeq& b) {
  const std::size_t m = std::max(a.size(), b.size());
  std::vector<CoeffFn> out;
  out.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) {
    const CoeffFn& f = a[static_cast<int>(i)];
    const CoeffFn& g = b[static_cast<int>(i)];
    out.push_back(f.is_zero() && g.is_zero() ? CoeffFn() : concat_fn(f, g));
  }
  return CoeffSeq(std::move(out), 2 * std::max(a.bound(), b.bound()));
}

CoeffSeq inverse(const CoeffSeq& a) {
  std::vector<CoeffFn> out;
  out.reserve(a.size());
  for (const auto& f : a.coeffs()) out.push_back(f.is_zero() ? CoeffFn() : reflect_fn(f));
  return CoeffSeq(std::move(out), a.bound());
}

Equivalence equivalent(const CoeffSeq& a, const CoeffSeq& b, int cutoff) {
  Equivalence e;
  e.cutoff = cutoff;
  Signature sa = signature(a, cutoff), sb = signature(b, cutoff);
  std::set<Word> words;
  for (const auto& [w, v] : sa.values) words.insert(w);
  for (const auto& [w, v] : sb.values) words.insert(w);
  for (const Word& w : words) {
    Scalar va = sa.at(w), vb = sb.at(w);
    double thr = std::max(zero_threshold(a, w), zero_threshold(b, w));
    if (!negligible(va - vb, thr)) {
      e.equivalent = false;
      e.witnesses.emplace_back(w, va, vb);
    }
  }
  return e;
}

CoeffSeq scale(const CoeffSeq& a, const Scalar& t, ScaleMode mode) {
  std::vector<CoeffFn> out;
  Scalar factor = t;
  for (const auto& f : a.coeffs()) {
    out.push_back(fn_scale(f, factor));
    if (mode == ScaleMode::Graded) factor *= t;
  }
  return CoeffSeq(std::move(out));
}

}  // namespace csig
