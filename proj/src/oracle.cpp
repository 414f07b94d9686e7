#include "centersig/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "centersig/errors.hpp"

namespace csig {

namespace {

// Float form of one coefficient function, for fast evaluation.
class Compiled {
 public:
  struct Term {
    int p;
    int m;
    Complex c;
  };
  struct Piece {
    double end;
    std::vector<Term> terms;
  };

  explicit Compiled(const CoeffFn& f) {
    if (auto s = f.sampled()) {
      samples_ = *s;
      return;
    }
    const PiecewisePoly pw = f.as_piecewise();
    for (const auto& pc : pw.pieces()) {
      Piece out{pc.end.value(), {}};
      for (const auto& [k, c] : pc.f.terms()) out.terms.push_back({k.p, k.m, c.to_complex()});
      pieces_.push_back(std::move(out));
    }
  }

  bool zero() const { return samples_ ? samples_->is_zero() : pieces_.size() == 1 && pieces_[0].terms.empty(); }

  // Value at x inside the segment whose midpoint is `mid`.
  Complex eval(double x, double mid) const {
    if (samples_) return samples_->eval(x);
    std::size_t j = 0;
    while (j + 1 < pieces_.size() && mid > pieces_[j].end) ++j;
    Complex s = 0;
    for (const auto& t : pieces_[j].terms) {
      Complex v = t.c;
      if (t.m != 0) v *= std::polar(1.0, t.m * x);
      if (t.p != 0) v *= std::pow(x, t.p);
      s += v;
    }
    return s;
  }

 private:
  std::optional<Sampled> samples_;
  std::vector<Piece> pieces_;
};

using State = std::vector<Complex>;
using Rhs = std::function<void(double x, double mid, const State& y, State& dy)>;
// Returns false to stop integration early.
using Observer = std::function<bool(double x, const State& y)>;

std::vector<double> segment_points(const CoeffSeq& a) {
  std::vector<double> pts{0.0};
  for (double d : a.discontinuities())
    if (d > 0 && d < kTwoPi) pts.push_back(d);
  pts.push_back(kTwoPi);
  return pts;
}

// Dormand-Prince 5(4) with restarts at the given segment points.
void integrate(const Rhs& rhs, State& y, const std::vector<double>& pts, OdeTolerance tol, const Observer& obs) {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                          e6 = 22.0 / 525, e7 = -1.0 / 40;

  const std::size_t n = y.size();
  State k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), tmp(n), y5(n);
  if (!obs(0.0, y)) return;
  double h = 1e-3;
  for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
    const double lo = pts[s], hi = pts[s + 1], mid = 0.5 * (lo + hi);
    double x = lo;
    rhs(x, mid, y, k1);
    while (x < hi) {
      bool last = false;
      if (x + h >= hi) {
        h = hi - x;
        last = true;
      }
      if (h < 1e-14 * kTwoPi) throw IntegrationError("step size underflow at x = " + std::to_string(x));
      auto stage = [&](State& out, double cx, std::initializer_list<std::pair<double, const State*>> terms) {
        for (std::size_t i = 0; i < n; ++i) {
          Complex acc = y[i];
          for (const auto& [coef, k] : terms) acc += h * coef * (*k)[i];
          tmp[i] = acc;
        }
        rhs(x + cx * h, mid, tmp, out);
      };
      stage(k2, c2, {{a21, &k1}});
      stage(k3, c3, {{a31, &k1}, {a32, &k2}});
      stage(k4, c4, {{a41, &k1}, {a42, &k2}, {a43, &k3}});
      stage(k5, c5, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
      stage(k6, 1.0, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
      for (std::size_t i = 0; i < n; ++i)
        y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
      const double x_new = last ? hi : x + h;
      rhs(x_new, mid, y5, k7);
      double err = 0;
      bool finite = true;
      for (std::size_t i = 0; i < n; ++i) {
        Complex e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        double sc = tol.atol + tol.rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
        double r = std::abs(e) / sc;
        if (!std::isfinite(r)) finite = false;
        err = std::max(err, r);
      }
      if (!finite) {
        h *= 0.1;
        continue;
      }
      if (err <= 1.0) {
        x = x_new;
        y.swap(y5);
        k1.swap(k7);
        if (!obs(x, y)) return;
      }
      double factor = err == 0 ? 5.0 : 0.9 * std::pow(err, -0.2);
      h *= std::clamp(factor, 0.2, 5.0);
    }
  }
}

std::vector<Compiled> compile(const CoeffSeq& a, std::size_t count) {
  std::vector<Compiled> out;
  for (std::size_t i = 1; i <= count; ++i) out.emplace_back(a[static_cast<int>(i)]);
  return out;
}

}  // namespace

std::vector<Complex> variational_all(const CoeffSeq& a, int n, OdeTolerance tol) {
  if (n < 1 || n > 16) throw PreconditionError("variational: n must be in 1..16");
  if (tol.rtol < 1e-13) throw PreconditionError("variational: tolerance below 1e-13");
  const auto fns = compile(a, static_cast<std::size_t>(n));
  const std::size_t len = static_cast<std::size_t>(n) + 2;  // coefficients of r^0 .. r^{n+1}
  std::vector<Complex> vals(fns.size());
  Rhs rhs = [&](double x, double mid, const State& y, State& dy) {
    // y[k] = coefficient of r^{k+1}; build v as a dense series in r and its powers.
    State v(len, 0.0), power(len, 0.0), next(len, 0.0);
    for (std::size_t k = 0; k + 1 < len; ++k) v[k + 1] = y[k];
    std::fill(dy.begin(), dy.end(), Complex(0));
    power = v;
    for (std::size_t i = 0; i < fns.size(); ++i) {
      // power <- v^{i+2}
      std::fill(next.begin(), next.end(), Complex(0));
      for (std::size_t p = 0; p < len; ++p) {
        if (power[p] == Complex(0)) continue;
        for (std::size_t q = 1; p + q < len; ++q) next[p + q] += power[p] * v[q];
      }
      power.swap(next);
      if (fns[i].zero()) continue;
      Complex ai = fns[i].eval(x, mid);
      for (std::size_t k = 0; k + 1 < len; ++k) dy[k] += ai * power[k + 1];
    }
  };
  State y(len - 1, 0.0);
  y[0] = 1.0;
  integrate(rhs, y, segment_points(a), tol, [](double, const State&) { return true; });
  return {y.begin() + 1, y.end()};
}

Complex variational(const CoeffSeq& a, int n, OdeTolerance tol) { return variational_all(a, n, tol).back(); }

double safe_radius(const CoeffSeq& a) { return std::exp(-kTwoPi) / (2.0 * std::max(1.0, a.bound())); }

Trajectory trajectory(const CoeffSeq& a, Complex r0, OdeTolerance tol, bool force, bool record_path) {
  if (!force && !(std::abs(r0) < safe_radius(a))) {
    throw PreconditionError("|r0| = " + std::to_string(std::abs(r0)) + " is not below the safe radius " +
                            std::to_string(safe_radius(a)));
  }
  const auto fns = compile(a, a.size());
  Rhs rhs = [&](double x, double mid, const State& y, State& dy) {
    Complex v = y[0], p = v, s = 0;
    for (const auto& f : fns) {
      p *= v;
      if (!f.zero()) s += f.eval(x, mid) * p;
    }
    dy[0] = s;
  };
  Trajectory t;
  const double limit = 1e8 * std::max(std::abs(r0), 1e-300);
  State y{r0};
  try {
    integrate(rhs, y, segment_points(a), tol, [&](double x, const State& s) {
      if (record_path) t.path.emplace_back(x, s[0]);
      if (!std::isfinite(std::abs(s[0])) || std::abs(s[0]) > limit) {
        t.blew_up = true;
        return false;
      }
      return true;
    });
  } catch (const IntegrationError&) {
    if (!force) throw;
    t.blew_up = true;
  }
  t.end = y[0];
  return t;
}

DisplacementScan displacement_scan(const CoeffSeq& a, const std::vector<double>& radii, OdeTolerance tol,
                                   double verdict_tol) {
  DisplacementScan scan;
  for (double r : radii) {
    if (!(r > 0)) throw InputError("scan radii must be positive");
    Trajectory t = trajectory(a, r, tol);
    Complex d = t.end - r;
    scan.points.push_back({r, d});
    if (std::abs(d) > verdict_tol * r) scan.center_like = false;
  }
  return scan;
}

}  // namespace csig
