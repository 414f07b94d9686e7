#include "centersig/centergen.hpp"

#include "centersig/errors.hpp"

namespace csig {

namespace {

bool vanishes(const Scalar& s) { return s.is_exact() ? s.is_zero() : s.abs() <= 1e-12; }

CoeffSeq divide(const FnSeries& num, const FnSeries& den_minus_one, int cutoff) {
  FnSeries a = num * den_minus_one.one_plus_inverse();
  std::vector<CoeffFn> coeffs;
  for (int i = 1; i <= cutoff; ++i) coeffs.push_back(a[i + 1]);
  return CoeffSeq(std::move(coeffs));
}

}  // namespace

CoeffSeq from_u_sequence(const std::vector<CoeffFn>& u, int cutoff) {
  if (cutoff < 1) throw InputError("cutoff must be at least 1");
  const int order = cutoff + 1;
  FnSeries num(order), den(order);
  for (std::size_t j = 0; j < u.size(); ++j) {
    const int k = static_cast<int>(j) + 1;
    const CoeffFn& uk = u[j];
    if (!uk.is_symbolic()) throw PreconditionError("u_" + std::to_string(k) + " must be trig or piecewise");
    if (!vanishes(value_at_zero(uk)) || !vanishes(value_at_two_pi(uk)))
      throw PreconditionError("u_" + std::to_string(k) + " must vanish at 0 and 2pi");
    if (k + 1 <= order) num.set(k + 1, fn_scale(derivative(uk), Scalar(-1)));
    if (k <= order) den.set(k, fn_scale(uk, Scalar(k + 1)));
  }
  return divide(num, den, cutoff);
}

CoeffSeq t_map(const ReturnSeries& f, int cutoff) {
  if (cutoff < 1) throw InputError("cutoff must be at least 1");
  const int order = cutoff + 1;
  // 1 - x/(2pi) on the single piece (0, 2pi].
  QuasiTrigPoly ramp = QuasiTrigPoly::constant(Scalar(1));
  ramp.add_term({1, 0}, Scalar(GaussQ(mpq_class(-1, 2)), -1));
  FnSeries num(order), den(order);
  for (int k = 1; k <= f.cutoff() && k <= order; ++k) {
    const Scalar& d = f.d(k);
    if (d.is_zero()) continue;
    if (k + 1 <= order) num.set(k + 1, PiecewisePoly::single(QuasiTrigPoly::constant(d.divided_by(GaussQ(2), 1))));
    den.set(k, PiecewisePoly::single(ramp.scaled(d * Scalar(k + 1))));
  }
  return divide(num, den, cutoff);
}

PlanarField hamiltonian_field(const BiPoly& h, const std::vector<Scalar>& p1, const std::vector<Scalar>& p2) {
  if (!h.is_zero() && !h.is_homogeneous()) throw InputError("H must be homogeneous");
  if (!p2.empty() && !p2[0].is_zero()) throw InputError("P2 must have no constant term");
  const BiPoly a = compose(p1, h), b = compose(p2, h);
  const BiPoly ax = a.dx(), ay = a.dy();
  const BiPoly x = BiPoly::x(), y = BiPoly::y();
  BiPoly f = (x * x * ay) - (x * y * ax) - (y * b);
  BiPoly g = (x * y * ay) - (y * y * ax) + (x * b);
  return {f, g};
}

PlanarField symmetric_field(const BiPoly& f, const BiPoly& g) {
  if (!f.has_y_parity(-1)) throw InputError("F must be odd in y");
  if (!g.has_y_parity(1)) throw InputError("G must be even in y");
  return {f, g};
}

}  // namespace csig
