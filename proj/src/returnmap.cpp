#include "centersig/returnmap.hpp"

#include "centersig/errors.hpp"

namespace csig {

Scalar return_coeff(const Signature& sig, int n) {
  if (n < 1 || n > sig.cutoff) throw PreconditionError("return_coeff: n outside 1..cutoff");
  Scalar c;
  for (const auto& [w, v] : sig.values) {
    if (weight(w) != n) continue;
    c += v * Scalar(GaussQ(mpq_class(coeff_c(w))));
  }
  return c;
}

Scalar return_coeff(const CoeffSeq& a, int n) {
  if (n < 1) throw InputError("n must be at least 1");
  auto s = a.support();
  Scalar c;
  for (const Word& w : compositions(n, {s.begin(), s.end()})) c += iint(a, w) * Scalar(GaussQ(mpq_class(coeff_c(w))));
  return c;
}

double return_coeff_threshold(const CoeffSeq& a, int n) {
  auto s = a.support();
  double t = 0;
  for (const Word& w : compositions(n, {s.begin(), s.end()})) t += coeff_c(w).get_d() * zero_threshold(a, w);
  return t;
}

ReturnSeries::ReturnSeries(int cutoff) : d_(static_cast<std::size_t>(cutoff)) {
  if (cutoff < 1) throw InputError("cutoff must be at least 1");
}

ReturnSeries::ReturnSeries(int cutoff, std::vector<Scalar> d) : d_(std::move(d)) {
  if (cutoff < 1) throw InputError("cutoff must be at least 1");
  if (d_.size() > static_cast<std::size_t>(cutoff)) throw InputError("more coefficients than the cutoff");
  d_.resize(static_cast<std::size_t>(cutoff));
}

bool ReturnSeries::is_identity() const {
  for (const auto& v : d_)
    if (!v.is_zero()) return false;
  return true;
}

std::vector<Scalar> ReturnSeries::dense() const {
  std::vector<Scalar> c(d_.size() + 2);
  c[1] = Scalar(1);
  for (std::size_t n = 0; n < d_.size(); ++n) c[n + 2] = d_[n];
  return c;
}

ReturnSeries return_series(const Signature& sig) {
  ReturnSeries r(sig.cutoff);
  for (int n = 1; n <= sig.cutoff; ++n) r.set(n, return_coeff(sig, n));
  return r;
}

ReturnSeries return_series(const CoeffSeq& a, int cutoff) { return return_series(signature(a, cutoff)); }

namespace {

using Dense = std::vector<Scalar>;

Dense truncated_mul(const Dense& a, const Dense& b, std::size_t len) {
  Dense c(len);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
      if (!b[j].is_zero()) c[i + j] += a[i] * b[j];
  }
  return c;
}

// outer(inner(r)) for dense series with zero constant terms.
Dense substitute(const Dense& outer, const Dense& inner) {
  const std::size_t len = inner.size();
  Dense result(len);
  Dense power(len);
  power[0] = Scalar(1);
  for (std::size_t k = 1; k < outer.size(); ++k) {
    power = truncated_mul(power, inner, len);
    if (outer[k].is_zero()) continue;
    for (std::size_t j = 0; j < len; ++j)
      if (!power[j].is_zero()) result[j] += outer[k] * power[j];
  }
  return result;
}

ReturnSeries from_dense(const Dense& c) {
  const int n = static_cast<int>(c.size()) - 2;
  ReturnSeries r(n);
  for (int k = 1; k <= n; ++k) r.set(k, c[static_cast<std::size_t>(k + 1)]);
  return r;
}

}  // namespace

ReturnSeries compose(const ReturnSeries& f, const ReturnSeries& g) {
  if (f.cutoff() != g.cutoff()) throw PreconditionError("compose: cutoff mismatch");
  return from_dense(substitute(g.dense(), f.dense()));
}

ReturnSeries invert(const ReturnSeries& f) {
  const int n = f.cutoff();
  ReturnSeries h(n);
  const Dense outer = f.dense();
  for (int k = 1; k <= n; ++k) {
    Dense fh = substitute(outer, h.dense());
    h.set(k, -fh[static_cast<std::size_t>(k + 1)]);
  }
  return h;
}

Classification classify(const CoeffSeq& a, int cutoff) {
  Signature sig = signature(a, cutoff);
  Classification c;
  c.cutoff = cutoff;
  for (int n = 1; n <= cutoff; ++n) {
    Scalar v = return_coeff(sig, n);
    if (!negligible(v, return_coeff_threshold(a, n))) {
      c.center = false;
      c.order = n;
      c.value = v;
      return c;
    }
  }
  return c;
}

}  // namespace csig
