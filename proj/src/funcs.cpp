#include "centersig/funcs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "centersig/errors.hpp"

namespace csig {

// ---------------------------------------------------------------------------
// Breakpoint

Breakpoint Breakpoint::pi_multiple(const mpq_class& q) {
  if (sgn(q) < 0 || q > 2) throw InputError("breakpoint outside [0, 2pi]");
  Breakpoint b;
  b.pi_multiple_ = q;
  b.pi_multiple_->canonicalize();
  b.value_ = b.pi_multiple_->get_d() * kPi;
  return b;
}

Breakpoint Breakpoint::radians(double x) {
  if (!(x >= 0.0 && x <= kTwoPi)) throw InputError("breakpoint outside [0, 2pi]");
  Breakpoint b;
  b.value_ = x;
  return b;
}

Scalar Breakpoint::as_scalar() const {
  if (pi_multiple_) return Scalar::pi_power(1, GaussQ(*pi_multiple_));
  return Scalar::from_float(value_);
}

bool operator==(const Breakpoint& a, const Breakpoint& b) {
  if (a.pi_multiple_ && b.pi_multiple_) return *a.pi_multiple_ == *b.pi_multiple_;
  return a.value_ == b.value_;
}

bool operator<(const Breakpoint& a, const Breakpoint& b) {
  if (a.pi_multiple_ && b.pi_multiple_) return *a.pi_multiple_ < *b.pi_multiple_;
  return a.value_ < b.value_;
}

// ---------------------------------------------------------------------------
// QuasiTrigPoly

QuasiTrigPoly QuasiTrigPoly::constant(const Scalar& c) { return monomial(0, 0, c); }

QuasiTrigPoly QuasiTrigPoly::monomial(int p, int m, const Scalar& c) {
  if (p < 0) throw std::invalid_argument("QuasiTrigPoly: negative power");
  QuasiTrigPoly f;
  f.add_term({p, m}, c);
  return f;
}

QuasiTrigPoly QuasiTrigPoly::exp_i(int m) { return monomial(0, m, Scalar(1)); }

QuasiTrigPoly QuasiTrigPoly::sin(int k) {
  // (e^{ikx} - e^{-ikx}) / (2i)
  QuasiTrigPoly f;
  f.add_term({0, k}, Scalar(GaussQ(0, mpq_class(-1, 2))));
  f.add_term({0, -k}, Scalar(GaussQ(0, mpq_class(1, 2))));
  return f;
}

QuasiTrigPoly QuasiTrigPoly::cos(int k) {
  QuasiTrigPoly f;
  f.add_term({0, k}, Scalar(GaussQ(mpq_class(1, 2))));
  f.add_term({0, -k}, Scalar(GaussQ(mpq_class(1, 2))));
  return f;
}

QuasiTrigPoly QuasiTrigPoly::x_power(int p) { return monomial(p, 0, Scalar(1)); }

bool QuasiTrigPoly::is_exact() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_exact(); });
}

bool QuasiTrigPoly::is_pure_trig() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.p == 0; });
}

int QuasiTrigPoly::max_power() const {
  int p = 0;
  for (const auto& [k, c] : terms_) p = std::max(p, k.p);
  return p;
}

int QuasiTrigPoly::fourier_degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, std::abs(k.m));
  return d;
}

void QuasiTrigPoly::add_term(const TrigKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

QuasiTrigPoly& QuasiTrigPoly::operator+=(const QuasiTrigPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

QuasiTrigPoly& QuasiTrigPoly::operator-=(const QuasiTrigPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

QuasiTrigPoly operator*(const QuasiTrigPoly& a, const QuasiTrigPoly& b) {
  QuasiTrigPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term({ka.p + kb.p, ka.m + kb.m}, ca * cb);
  return out;
}

QuasiTrigPoly QuasiTrigPoly::scaled(const Scalar& c) const {
  QuasiTrigPoly out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : terms_) out.add_term(k, v * c);
  return out;
}

QuasiTrigPoly QuasiTrigPoly::antiderivative() const {
  QuasiTrigPoly out;
  Scalar at_zero;
  for (const auto& [k, c] : terms_) {
    if (k.m == 0) {
      out.add_term({k.p + 1, 0}, c.divided_by(GaussQ(k.p + 1)));
      continue;
    }
    // x^p e^{imx} integrates to e^{imx} sum_j (-1)^j p!/(p-j)! x^{p-j} (im)^{-(j+1)}.
    mpq_class neg_inv_m(-1, k.m);
    neg_inv_m.canonicalize();
    const GaussQ inv_im = GaussQ(0, neg_inv_m);  // 1/(im) = -i/m
    GaussQ factor = inv_im;                               // (im)^{-(j+1)}
    mpz_class falling = 1;                                // p!/(p-j)!
    for (int j = 0; j <= k.p; ++j) {
      GaussQ coef = factor * GaussQ(mpq_class(falling));
      if (j % 2 == 1) coef = -coef;
      Scalar term = c * Scalar(coef);
      out.add_term({k.p - j, k.m}, term);
      if (j == k.p) at_zero += term;
      factor *= inv_im;
      falling *= (k.p - j);
    }
  }
  out.add_term({0, 0}, -at_zero);
  return out;
}

QuasiTrigPoly QuasiTrigPoly::derivative() const {
  QuasiTrigPoly out;
  for (const auto& [k, c] : terms_) {
    if (k.p > 0) out.add_term({k.p - 1, k.m}, c * Scalar(k.p));
    if (k.m != 0) out.add_term(k, c * Scalar(GaussQ(0, k.m)));
  }
  return out;
}

QuasiTrigPoly QuasiTrigPoly::affine(int alpha, int beta) const {
  QuasiTrigPoly out;
  for (const auto& [k, c] : terms_) {
    // e^{im(alpha x + beta pi)} = (-1)^{m beta} e^{i m alpha x}
    Scalar base = ((static_cast<long>(k.m) * beta) % 2 == 0) ? c : -c;
    // (alpha x + beta pi)^p = sum_j C(p, j) alpha^j x^j (beta pi)^{p-j}
    mpz_class binom = 1;
    for (int j = 0; j <= k.p; ++j) {
      if (j > 0) {
        binom *= (k.p - j + 1);
        binom /= j;
      }
      mpz_class a_pow, b_pow;
      mpz_pow_ui(a_pow.get_mpz_t(), mpz_class(alpha).get_mpz_t(), static_cast<unsigned long>(j));
      mpz_pow_ui(b_pow.get_mpz_t(), mpz_class(beta).get_mpz_t(), static_cast<unsigned long>(k.p - j));
      mpz_class coef = binom * a_pow * b_pow;
      if (coef == 0) continue;
      out.add_term({j, k.m * alpha}, base * Scalar::pi_power(k.p - j, GaussQ(mpq_class(coef))));
    }
  }
  return out;
}

QuasiTrigPoly QuasiTrigPoly::to_float() const {
  QuasiTrigPoly out;
  for (const auto& [k, c] : terms_) out.add_term(k, c.to_float());
  return out;
}

Complex QuasiTrigPoly::eval_raw(double x) const {
  Complex s = 0;
  for (const auto& [k, c] : terms_) {
    Complex t = c.to_complex() * std::polar(1.0, k.m * x);
    if (k.p > 0) t *= std::pow(x, k.p);
    s += t;
  }
  return s;
}

Scalar QuasiTrigPoly::eval_at(const Breakpoint& x) const {
  if (!x.is_exact()) return Scalar::from_float(eval_raw(x.value()));
  const mpq_class& q = *x.exact_multiple();
  Scalar sum;
  for (const auto& [k, c] : terms_) {
    mpq_class twice = 2 * k.m * q;  // e^{i m q pi} = i^{2 m q}
    twice.canonicalize();
    Scalar phase;
    if (twice.get_den() == 1) {
      mpz_class r = twice.get_num() % 4;
      if (r < 0) r += 4;
      switch (r.get_si()) {
        case 0: phase = Scalar(1); break;
        case 1: phase = Scalar::i_unit(); break;
        case 2: phase = Scalar(-1); break;
        default: phase = -Scalar::i_unit(); break;
      }
    } else {
      phase = Scalar::from_float(std::polar(1.0, k.m * x.value()));
    }
    mpq_class qp;
    mpz_pow_ui(qp.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(k.p));
    mpz_pow_ui(qp.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(k.p));
    qp.canonicalize();
    if (sgn(qp) == 0 && k.p > 0) continue;
    sum += c * phase * Scalar::pi_power(k.p, GaussQ(qp));
  }
  return sum;
}

double QuasiTrigPoly::abs_bound(double hi) const {
  double s = 0;
  for (const auto& [k, c] : terms_) s += c.abs() * std::pow(hi, k.p);
  return s;
}

// ---------------------------------------------------------------------------
// PiecewisePoly

PiecewisePoly::PiecewisePoly() : pieces_{Piece{Breakpoint::two_pi(), QuasiTrigPoly{}}} {}

PiecewisePoly::PiecewisePoly(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw InputError("piecewise function needs at least one piece");
  Breakpoint prev = Breakpoint::zero();
  for (const auto& p : pieces_) {
    if (!(prev < p.end)) throw InputError("piecewise breakpoints must be increasing in (0, 2pi]");
    prev = p.end;
  }
  if (!(pieces_.back().end == Breakpoint::two_pi()) || !pieces_.back().end.is_exact())
    throw InputError("last breakpoint must be exactly 2pi");
}

PiecewisePoly PiecewisePoly::single(QuasiTrigPoly f) {
  return PiecewisePoly({Piece{Breakpoint::two_pi(), std::move(f)}});
}

bool PiecewisePoly::is_zero() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const Piece& p) { return p.f.is_zero(); });
}

bool PiecewisePoly::is_exact() const {
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const Piece& p) { return p.end.is_exact() && p.f.is_exact(); });
}

std::vector<Breakpoint> PiecewisePoly::ends() const {
  std::vector<Breakpoint> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_) out.push_back(p.end);
  return out;
}

PiecewisePoly PiecewisePoly::refined(const std::vector<Breakpoint>& extra) const {
  std::vector<Breakpoint> all = ends();
  for (const auto& b : extra)
    if (!(b == Breakpoint::zero())) all.push_back(b);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<Piece> out;
  out.reserve(all.size());
  std::size_t j = 0;
  for (const auto& e : all) {
    while (pieces_[j].end < e) ++j;
    out.push_back({e, pieces_[j].f});
  }
  PiecewisePoly r;
  r.pieces_ = std::move(out);
  return r;
}

PiecewisePoly PiecewisePoly::simplified() const {
  std::vector<Piece> out;
  for (const auto& p : pieces_) {
    if (!out.empty() && out.back().f == p.f) {
      out.back().end = p.end;
    } else {
      out.push_back(p);
    }
  }
  PiecewisePoly r;
  r.pieces_ = std::move(out);
  return r;
}

namespace {

template <typename Op>
PiecewisePoly combine(const PiecewisePoly& a, const PiecewisePoly& b, Op op) {
  PiecewisePoly ra = a.refined(b.ends());
  PiecewisePoly rb = b.refined(a.ends());
  std::vector<PiecewisePoly::Piece> out;
  out.reserve(ra.pieces().size());
  for (std::size_t j = 0; j < ra.pieces().size(); ++j)
    out.push_back({ra.pieces()[j].end, op(ra.pieces()[j].f, rb.pieces()[j].f)});
  return PiecewisePoly(std::move(out));
}

}  // namespace

PiecewisePoly operator+(const PiecewisePoly& a, const PiecewisePoly& b) {
  return combine(a, b, [](const QuasiTrigPoly& x, const QuasiTrigPoly& y) { return x + y; });
}

PiecewisePoly operator-(const PiecewisePoly& a, const PiecewisePoly& b) {
  return combine(a, b, [](const QuasiTrigPoly& x, const QuasiTrigPoly& y) { return x - y; });
}

PiecewisePoly operator*(const PiecewisePoly& a, const PiecewisePoly& b) {
  return combine(a, b, [](const QuasiTrigPoly& x, const QuasiTrigPoly& y) { return x * y; });
}

PiecewisePoly PiecewisePoly::scaled(const Scalar& c) const {
  PiecewisePoly r = *this;
  for (auto& p : r.pieces_) p.f = p.f.scaled(c);
  return r;
}

PiecewisePoly PiecewisePoly::antiderivative() const {
  PiecewisePoly r;
  r.pieces_.clear();
  Scalar acc;  // F at the start of the current piece
  for (std::size_t j = 0; j < pieces_.size(); ++j) {
    QuasiTrigPoly g = pieces_[j].f.antiderivative();
    if (j > 0) {
      Scalar offset = acc - g.eval_at(start(j));
      g.add_term({0, 0}, offset);
    }
    acc = g.eval_at(pieces_[j].end);
    r.pieces_.push_back({pieces_[j].end, std::move(g)});
  }
  return r;
}

PiecewisePoly PiecewisePoly::derivative() const {
  PiecewisePoly r = *this;
  for (auto& p : r.pieces_) p.f = p.f.derivative();
  return r;
}

PiecewisePoly PiecewisePoly::to_float() const {
  PiecewisePoly r = *this;
  for (auto& p : r.pieces_) p.f = p.f.to_float();
  return r;
}

std::size_t PiecewisePoly::locate(double x, Side side) const {
  for (std::size_t j = 0; j < pieces_.size(); ++j) {
    double e = pieces_[j].end.value();
    if (side == Side::Left ? x <= e : x < e) return j;
  }
  return pieces_.size() - 1;
}

Complex PiecewisePoly::eval(double x, Side side) const { return pieces_[locate(x, side)].f.eval_raw(x); }

Scalar PiecewisePoly::value_at_two_pi() const { return pieces_.back().f.eval_at(Breakpoint::two_pi()); }

Scalar PiecewisePoly::value_at_zero() const { return pieces_.front().f.eval_at(Breakpoint::zero()); }

double PiecewisePoly::abs_bound() const {
  double b = 0;
  for (const auto& p : pieces_) b = std::max(b, p.f.abs_bound(p.end.value()));
  return b;
}

bool operator==(const PiecewisePoly& a, const PiecewisePoly& b) {
  PiecewisePoly sa = a.simplified();
  PiecewisePoly sb = b.simplified();
  if (sa.pieces_.size() != sb.pieces_.size()) return false;
  for (std::size_t j = 0; j < sa.pieces_.size(); ++j) {
    if (!(sa.pieces_[j].end == sb.pieces_[j].end) || !(sa.pieces_[j].f == sb.pieces_[j].f)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Sampled

Sampled::Sampled(std::vector<Complex> values_with_zero) : v_(std::move(values_with_zero)) {
  if (v_.size() < kMinGrid + 1) throw InputError("sampled function needs at least 64 grid values");
}

Sampled Sampled::from_periodic(std::vector<Complex> values) {
  if (values.size() < kMinGrid) throw InputError("sampled function needs at least 64 grid values");
  std::vector<Complex> v;
  v.reserve(values.size() + 1);
  v.push_back(values.back());
  v.insert(v.end(), values.begin(), values.end());
  return Sampled(std::move(v));
}

Complex Sampled::eval(double x, Side) const {
  const double h = step();
  double pos = x / h;
  if (pos <= 0) return v_.front();
  const std::size_t n = grid();
  if (pos >= static_cast<double>(n)) return v_.back();
  auto j = static_cast<std::size_t>(pos);
  double frac = pos - static_cast<double>(j);
  return v_[j] * (1.0 - frac) + v_[j + 1] * frac;
}

Sampled Sampled::resampled(std::size_t n) const {
  if (n == grid()) return *this;
  std::vector<Complex> v(n + 1);
  v[0] = v_[0];
  for (std::size_t j = 1; j <= n; ++j) v[j] = eval(kTwoPi * static_cast<double>(j) / static_cast<double>(n));
  return Sampled(std::move(v));
}

Sampled Sampled::antiderivative() const {
  std::vector<Complex> out(v_.size());
  const double h = step();
  out[0] = 0;
  for (std::size_t j = 1; j < v_.size(); ++j) out[j] = out[j - 1] + 0.5 * h * (v_[j - 1] + v_[j]);
  return Sampled(std::move(out));
}

bool Sampled::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](Complex z) { return z == Complex(0.0, 0.0); });
}

double Sampled::max_abs() const {
  double m = 0;
  for (auto z : v_) m = std::max(m, std::abs(z));
  return m;
}

// ---------------------------------------------------------------------------
// CoeffFn

namespace {

double reduce(double x, Side side) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (side == Side::Left) {
    if (r == 0.0 && x != 0.0) return kTwoPi;
    if (r == 0.0) return kTwoPi;  // x = 0 is identified with 2pi
  }
  return r;
}

}  // namespace

bool CoeffFn::is_zero() const {
  return std::visit([](const auto& f) { return f.is_zero(); }, rep_);
}

bool CoeffFn::is_exact() const {
  if (auto t = trig()) return t->is_exact();
  if (auto p = piecewise()) return p->is_exact();
  return false;
}

Complex CoeffFn::eval(double x, Side side) const {
  double r = reduce(x, side);
  if (auto t = trig()) return t->eval_raw(r);
  if (auto p = piecewise()) return p->eval(r, side);
  return sampled()->eval(r, side);
}

double CoeffFn::sup_bound() const {
  if (auto t = trig()) return t->abs_bound(kTwoPi);
  if (auto p = piecewise()) return p->abs_bound();
  return sampled()->max_abs();
}

double CoeffFn::sup_estimate(std::size_t grid) const {
  if (auto s = sampled()) return s->max_abs();
  double m = std::abs(eval(0.0, Side::Right));
  for (std::size_t j = 1; j <= grid; ++j)
    m = std::max(m, std::abs(eval(kTwoPi * static_cast<double>(j) / static_cast<double>(grid))));
  for (double d : discontinuities()) {
    m = std::max(m, std::abs(eval(d, Side::Left)));
    m = std::max(m, std::abs(eval(d, Side::Right)));
  }
  return m;
}

PiecewisePoly CoeffFn::as_piecewise() const {
  if (auto t = trig()) return PiecewisePoly::single(*t);
  if (auto p = piecewise()) return *p;
  throw PreconditionError("sampled function has no piecewise representation");
}

Sampled CoeffFn::as_sampled(std::size_t n) const {
  if (auto s = sampled()) return s->resampled(n);
  std::vector<Complex> v(n + 1);
  v[0] = eval(0.0, Side::Right);
  for (std::size_t j = 1; j <= n; ++j) v[j] = eval(kTwoPi * static_cast<double>(j) / static_cast<double>(n));
  return Sampled(std::move(v));
}

CoeffFn CoeffFn::to_float() const {
  if (auto t = trig()) return t->to_float();
  if (auto p = piecewise()) return p->to_float();
  return *this;
}

std::vector<double> CoeffFn::discontinuities() const {
  std::vector<double> out;
  if (auto p = piecewise()) {
    for (std::size_t j = 0; j + 1 < p->pieces().size(); ++j) out.push_back(p->pieces()[j].end.value());
  }
  return out;
}

bool operator==(const CoeffFn& a, const CoeffFn& b) {
  if (a.trig() && b.trig()) return *a.trig() == *b.trig();
  if (a.is_symbolic() && b.is_symbolic()) return a.as_piecewise() == b.as_piecewise();
  if (a.sampled() && b.sampled()) return a.sampled()->values() == b.sampled()->values();
  return false;
}

namespace {

template <typename TrigOp, typename PwOp, typename SampledOp>
CoeffFn binary(const CoeffFn& f, const CoeffFn& g, TrigOp trig_op, PwOp pw_op, SampledOp s_op) {
  if (f.trig() && g.trig()) return trig_op(*f.trig(), *g.trig());
  if (f.is_symbolic() && g.is_symbolic()) return pw_op(f.as_piecewise(), g.as_piecewise());
  std::size_t n = std::max(f.sampled() ? f.sampled()->grid() : 0, g.sampled() ? g.sampled()->grid() : 0);
  Sampled sf = f.as_sampled(n);
  Sampled sg = g.as_sampled(n);
  std::vector<Complex> v(n + 1);
  for (std::size_t j = 0; j <= n; ++j) v[j] = s_op(sf.values()[j], sg.values()[j]);
  return Sampled(std::move(v));
}

}  // namespace

CoeffFn fn_add(const CoeffFn& f, const CoeffFn& g) {
  return binary(
      f, g, [](const auto& a, const auto& b) { return a + b; },
      [](const auto& a, const auto& b) { return a + b; }, [](Complex a, Complex b) { return a + b; });
}

CoeffFn fn_sub(const CoeffFn& f, const CoeffFn& g) {
  return binary(
      f, g, [](const auto& a, const auto& b) { return a - b; },
      [](const auto& a, const auto& b) { return a - b; }, [](Complex a, Complex b) { return a - b; });
}

CoeffFn fn_mul(const CoeffFn& f, const CoeffFn& g) {
  return binary(
      f, g, [](const auto& a, const auto& b) { return a * b; },
      [](const auto& a, const auto& b) { return a * b; }, [](Complex a, Complex b) { return a * b; });
}

CoeffFn fn_scale(const CoeffFn& f, const Scalar& c) {
  if (auto t = f.trig()) return t->scaled(c);
  if (auto p = f.piecewise()) return p->scaled(c);
  std::vector<Complex> v = f.sampled()->values();
  Complex z = c.to_complex();
  for (auto& x : v) x *= z;
  return Sampled(std::move(v));
}

CoeffFn antiderivative(const CoeffFn& f) {
  if (auto t = f.trig()) return t->antiderivative();
  if (auto p = f.piecewise()) return p->antiderivative();
  return f.sampled()->antiderivative();
}

CoeffFn derivative(const CoeffFn& f) {
  if (auto t = f.trig()) return t->derivative();
  if (auto p = f.piecewise()) return p->derivative();
  throw PreconditionError("derivative of a sampled function is not supported");
}

Complex eval(const CoeffFn& f, double x) { return f.eval(x); }

Scalar value_at_two_pi(const CoeffFn& f) {
  if (auto t = f.trig()) return t->eval_at(Breakpoint::two_pi());
  if (auto p = f.piecewise()) return p->value_at_two_pi();
  return Scalar::from_float(f.sampled()->values().back());
}

Scalar value_at_zero(const CoeffFn& f) {
  if (auto t = f.trig()) return t->eval_at(Breakpoint::zero());
  if (auto p = f.piecewise()) return p->value_at_zero();
  return Scalar::from_float(f.sampled()->values().front());
}

Scalar integral_over_period(const CoeffFn& f) { return value_at_two_pi(antiderivative(f)); }

bool mean_free(const CoeffFn& f) {
  Scalar total = integral_over_period(f);
  if (total.is_exact()) return total.is_zero();
  const double eps = 1e-9 * std::max(1.0, kTwoPi * f.sup_bound());
  return total.abs() <= eps;
}

// ---------------------------------------------------------------------------
// CoeffSeq

double growth_bound(const std::vector<double>& sup_bounds) {
  double l = 0;
  for (std::size_t i = 0; i < sup_bounds.size(); ++i) {
    if (sup_bounds[i] > 0) l = std::max(l, std::pow(sup_bounds[i], 1.0 / static_cast<double>(i + 1)));
  }
  return l > 0 ? l : 1.0;
}

CoeffSeq::CoeffSeq(std::vector<CoeffFn> coeffs, std::optional<double> bound) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (bound) {
    if (!(*bound > 0) || !std::isfinite(*bound)) throw InputError("growth bound must be a positive number");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      double sup = coeffs_[i].sup_estimate();
      double lim = std::pow(*bound, static_cast<double>(i + 1));
      if (sup > lim * (1 + 1e-9)) {
        throw PreconditionError("coefficient a_" + std::to_string(i + 1) + " violates the growth bound (sup " +
                                std::to_string(sup) + " > l^i = " + std::to_string(lim) + ")");
      }
    }
    bound_ = *bound;
  } else {
    std::vector<double> sups;
    sups.reserve(coeffs_.size());
    for (const auto& c : coeffs_) sups.push_back(c.sup_bound());
    bound_ = growth_bound(sups);
  }
}

const CoeffFn& CoeffSeq::operator[](int i) const {
  static const CoeffFn zero;
  if (i < 1 || static_cast<std::size_t>(i) > coeffs_.size()) return zero;
  return coeffs_[static_cast<std::size_t>(i - 1)];
}

std::vector<int> CoeffSeq::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) s.push_back(static_cast<int>(i + 1));
  return s;
}

bool CoeffSeq::is_exact() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const CoeffFn& f) { return f.is_zero() || f.is_exact(); });
}

bool CoeffSeq::has_sampled() const {
  return std::any_of(coeffs_.begin(), coeffs_.end(), [](const CoeffFn& f) { return f.sampled() != nullptr; });
}

std::vector<double> CoeffSeq::discontinuities() const {
  std::vector<double> out;
  for (const auto& c : coeffs_) {
    auto d = c.discontinuities();
    out.insert(out.end(), d.begin(), d.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace csig
