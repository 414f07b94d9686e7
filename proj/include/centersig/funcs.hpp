#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "centersig/scalar.hpp"

namespace csig {

/// A point of (0, 2pi]. Exact points are rational multiples of pi.
class Breakpoint {
 public:
  static Breakpoint pi_multiple(const mpq_class& q);
  static Breakpoint radians(double x);
  static Breakpoint two_pi() { return pi_multiple(2); }
  static Breakpoint zero() { return pi_multiple(0); }

  bool is_exact() const { return pi_multiple_.has_value(); }
  const std::optional<mpq_class>& exact_multiple() const { return pi_multiple_; }
  double value() const { return value_; }
  /// q*pi as an exact scalar, or the float position.
  Scalar as_scalar() const;

  friend bool operator==(const Breakpoint& a, const Breakpoint& b);
  friend bool operator<(const Breakpoint& a, const Breakpoint& b);

 private:
  std::optional<mpq_class> pi_multiple_;
  double value_ = 0.0;
};

/// Which one-sided limit to take at a discontinuity.
enum class Side { Left, Right };

struct TrigKey {
  int p = 0;  // power of x
  int m = 0;  // frequency of e^{imx}
  friend auto operator<=>(const TrigKey&, const TrigKey&) = default;
};

/// Finite sum of c * x^p * e^{imx}. Canonical: no zero coefficients.
class QuasiTrigPoly {
 public:
  using Terms = std::map<TrigKey, Scalar>;

  QuasiTrigPoly() = default;
  static QuasiTrigPoly constant(const Scalar& c);
  static QuasiTrigPoly monomial(int p, int m, const Scalar& c);
  static QuasiTrigPoly exp_i(int m);  // e^{imx}
  static QuasiTrigPoly sin(int k = 1);
  static QuasiTrigPoly cos(int k = 1);
  static QuasiTrigPoly x_power(int p);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_exact() const;
  /// No x^p factors with p > 0.
  bool is_pure_trig() const;
  int max_power() const;
  int fourier_degree() const;

  void add_term(const TrigKey& key, const Scalar& c);
  QuasiTrigPoly& operator+=(const QuasiTrigPoly& o);
  QuasiTrigPoly& operator-=(const QuasiTrigPoly& o);
  friend QuasiTrigPoly operator+(QuasiTrigPoly a, const QuasiTrigPoly& b) { return a += b; }
  friend QuasiTrigPoly operator-(QuasiTrigPoly a, const QuasiTrigPoly& b) { return a -= b; }
  friend QuasiTrigPoly operator*(const QuasiTrigPoly& a, const QuasiTrigPoly& b);
  QuasiTrigPoly scaled(const Scalar& c) const;
  QuasiTrigPoly operator-() const { return scaled(Scalar(-1)); }

  /// F with F(0) = 0 and F' = f.
  QuasiTrigPoly antiderivative() const;
  QuasiTrigPoly derivative() const;
  /// x -> f(alpha*x + beta*pi), integer alpha and beta.
  QuasiTrigPoly affine(int alpha, int beta) const;
  QuasiTrigPoly to_float() const;

  /// Raw formula at x (no periodic reduction).
  Complex eval_raw(double x) const;
  /// Raw formula at a breakpoint; exact when e^{imx} lands in {1, i, -1, -i}.
  Scalar eval_at(const Breakpoint& x) const;
  /// Triangle-inequality bound of |f| on [0, hi].
  double abs_bound(double hi) const;

  friend bool operator==(const QuasiTrigPoly&, const QuasiTrigPoly&) = default;

 private:
  Terms terms_;
};

/// Piecewise quasi-trigonometric function on (0, 2pi]. Piece j is valid on
/// (end_{j-1}, end_j] with end_{-1} = 0; the last end is exactly 2pi.
class PiecewisePoly {
 public:
  struct Piece {
    Breakpoint end;
    QuasiTrigPoly f;
  };

  PiecewisePoly();  // zero function, one piece
  explicit PiecewisePoly(std::vector<Piece> pieces);
  static PiecewisePoly single(QuasiTrigPoly f);

  const std::vector<Piece>& pieces() const { return pieces_; }
  Breakpoint start(std::size_t j) const { return j == 0 ? Breakpoint::zero() : pieces_[j - 1].end; }
  bool is_zero() const;
  bool is_exact() const;

  /// Same function on a finer partition containing `ends`.
  PiecewisePoly refined(const std::vector<Breakpoint>& ends) const;
  std::vector<Breakpoint> ends() const;
  /// Merges adjacent equal pieces.
  PiecewisePoly simplified() const;

  friend PiecewisePoly operator+(const PiecewisePoly& a, const PiecewisePoly& b);
  friend PiecewisePoly operator-(const PiecewisePoly& a, const PiecewisePoly& b);
  friend PiecewisePoly operator*(const PiecewisePoly& a, const PiecewisePoly& b);
  PiecewisePoly scaled(const Scalar& c) const;

  PiecewisePoly antiderivative() const;
  PiecewisePoly derivative() const;
  PiecewisePoly to_float() const;

  Complex eval(double x, Side side = Side::Left) const;
  /// Value at 2pi (left limit), exact when possible.
  Scalar value_at_two_pi() const;
  /// Value at 0 (right limit), exact when possible.
  Scalar value_at_zero() const;
  double abs_bound() const;

  friend bool operator==(const PiecewisePoly& a, const PiecewisePoly& b);

 private:
  std::size_t locate(double x, Side side) const;
  std::vector<Piece> pieces_;
};

/// Uniform samples: values()[j] = f(2*pi*j/n) for j = 1..n, and values()[0] is
/// the right limit at 0.
class Sampled {
 public:
  static constexpr std::size_t kDefaultGrid = 4096;
  static constexpr std::size_t kMinGrid = 64;

  Sampled() : Sampled(std::vector<Complex>(kDefaultGrid + 1, Complex(0))) {}
  /// Takes n+1 values (including x = 0).
  explicit Sampled(std::vector<Complex> values_with_zero);
  /// Takes the n values on (0, 2pi]; the value at 0 is taken from 2pi.
  static Sampled from_periodic(std::vector<Complex> values);

  std::size_t grid() const { return v_.size() - 1; }
  const std::vector<Complex>& values() const { return v_; }
  double step() const { return kTwoPi / static_cast<double>(grid()); }

  Complex eval(double x, Side side = Side::Left) const;
  Sampled resampled(std::size_t n) const;
  Sampled antiderivative() const;  // cumulative trapezoid
  bool is_zero() const;
  double max_abs() const;

 private:
  std::vector<Complex> v_;
};

/// A coefficient function on the circle.
class CoeffFn {
 public:
  enum class Kind { Trig, Piecewise, Sampled };

  CoeffFn() : rep_(QuasiTrigPoly{}) {}
  CoeffFn(QuasiTrigPoly f) : rep_(std::move(f)) {}  // NOLINT(google-explicit-constructor)
  CoeffFn(PiecewisePoly f) : rep_(std::move(f)) {}  // NOLINT(google-explicit-constructor)
  CoeffFn(Sampled f) : rep_(std::move(f)) {}  // NOLINT(google-explicit-constructor)
  static CoeffFn constant(const Scalar& c) { return QuasiTrigPoly::constant(c); }

  Kind kind() const { return static_cast<Kind>(rep_.index()); }
  const QuasiTrigPoly* trig() const { return std::get_if<QuasiTrigPoly>(&rep_); }
  const PiecewisePoly* piecewise() const { return std::get_if<PiecewisePoly>(&rep_); }
  const Sampled* sampled() const { return std::get_if<Sampled>(&rep_); }

  bool is_zero() const;
  /// Trig or piecewise with only exact scalars.
  bool is_exact() const;
  /// Trig or piecewise (scalars may still be floats).
  bool is_symbolic() const { return kind() != Kind::Sampled; }

  /// Pointwise value; x is reduced into (0, 2pi] (or [0, 2pi) for Side::Right).
  Complex eval(double x, Side side = Side::Left) const;
  /// Upper bound on sup |f| (triangle inequality for symbolic classes, grid max for samples).
  double sup_bound() const;
  /// Grid estimate of sup |f|.
  double sup_estimate(std::size_t grid = 4096) const;

  PiecewisePoly as_piecewise() const;  // symbolic classes only
  Sampled as_sampled(std::size_t n = Sampled::kDefaultGrid) const;
  CoeffFn to_float() const;
  /// Breakpoints interior to (0, 2pi) where the function may jump.
  std::vector<double> discontinuities() const;

  friend bool operator==(const CoeffFn& a, const CoeffFn& b);

 private:
  std::variant<QuasiTrigPoly, PiecewisePoly, Sampled> rep_;
};

CoeffFn fn_add(const CoeffFn& f, const CoeffFn& g);
CoeffFn fn_sub(const CoeffFn& f, const CoeffFn& g);
CoeffFn fn_mul(const CoeffFn& f, const CoeffFn& g);
CoeffFn fn_scale(const CoeffFn& f, const Scalar& c);
CoeffFn antiderivative(const CoeffFn& f);
/// Derivative; symbolic classes only (throws PreconditionError on Sampled).
CoeffFn derivative(const CoeffFn& f);
Complex eval(const CoeffFn& f, double x);
/// antiderivative(f) at 2pi; exact for exact classes.
Scalar integral_over_period(const CoeffFn& f);
/// Value at 2pi (left limit); exact for exact classes.
Scalar value_at_two_pi(const CoeffFn& f);
/// Value at 0 (right limit).
Scalar value_at_zero(const CoeffFn& f);
/// True iff the period integral vanishes (exactly, or within 1e-9 scaled for samples).
bool mean_free(const CoeffFn& f);

/// Truncated element a = (a_1, ..., a_m, 0, ...) with growth bound sup|a_i| <= l^i.
class CoeffSeq {
 public:
  CoeffSeq() = default;
  /// Without a bound, the smallest l compatible with sup_bound() is used.
  explicit CoeffSeq(std::vector<CoeffFn> coeffs, std::optional<double> bound = std::nullopt);

  /// Number of stored coefficients (trailing zeros trimmed).
  std::size_t size() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }
  /// 1-based; zero beyond size().
  const CoeffFn& operator[](int i) const;
  const std::vector<CoeffFn>& coeffs() const { return coeffs_; }
  double bound() const { return bound_; }
  /// Indices i with a_i not identically zero, ascending.
  std::vector<int> support() const;
  bool is_exact() const;
  bool has_sampled() const;
  std::vector<double> discontinuities() const;

 private:
  std::vector<CoeffFn> coeffs_;
  double bound_ = 1.0;
};

/// Smallest l with bounds[i-1] <= l^i for all i (at least tiny positive).
double growth_bound(const std::vector<double>& sup_bounds);

}  // namespace csig
