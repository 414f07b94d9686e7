#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <string>
#include <variant>

namespace csig {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Gaussian rational re + i*im.
struct GaussQ {
  mpq_class re;
  mpq_class im;

  GaussQ() = default;
  GaussQ(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussQ(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  static GaussQ i_unit() { return {0, 1}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  Complex to_complex() const { return {re.get_d(), im.get_d()}; }
  GaussQ conj() const { return {re, -im}; }
  GaussQ inverse() const;  // throws on zero

  GaussQ& operator+=(const GaussQ& o);
  GaussQ& operator-=(const GaussQ& o);
  GaussQ& operator*=(const GaussQ& o);
  GaussQ& operator/=(const GaussQ& o);
  friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
  friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
  friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }
  friend GaussQ operator/(GaussQ a, const GaussQ& b) { return a /= b; }
  GaussQ operator-() const { return {-re, -im}; }
  friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }
};

/// Parse "p/q", "p", or a decimal literal such as "-0.25" into an exact rational.
mpq_class parse_rational(const std::string& text);
std::string rational_to_string(const mpq_class& q);

/// Laurent polynomial in the free symbol pi with Gaussian-rational coefficients.
/// No zero coefficients are stored; the zero polynomial is the empty map.
class PiPoly {
 public:
  using Terms = std::map<int, GaussQ>;

  PiPoly() = default;
  explicit PiPoly(GaussQ c, int pi_degree = 0);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when the only term has pi-degree 0 (or the polynomial is zero).
  bool is_pi_free() const;
  /// Single term c*pi^k.
  bool is_monomial() const { return terms_.size() == 1; }
  Complex to_complex() const;

  PiPoly& operator+=(const PiPoly& o);
  PiPoly& operator-=(const PiPoly& o);
  PiPoly& operator*=(const PiPoly& o);
  PiPoly operator-() const;
  PiPoly times(const GaussQ& c) const;
  PiPoly shifted(int pi_power) const;

  friend bool operator==(const PiPoly&, const PiPoly&) = default;

 private:
  void add_term(int k, const GaussQ& c);
  Terms terms_;
};

/// Either an exact element of Q(i)[pi, 1/pi] or a double-precision complex.
/// Exact op Float promotes to Float.
class Scalar {
 public:
  Scalar() : rep_(PiPoly{}) {}
  Scalar(long v) : rep_(PiPoly(GaussQ(v))) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : Scalar(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const GaussQ& c, int pi_degree = 0) : rep_(PiPoly(c, pi_degree)) {}  // NOLINT
  explicit Scalar(PiPoly p) : rep_(std::move(p)) {}
  static Scalar rational(const mpq_class& q) { return Scalar(GaussQ(q)); }
  static Scalar pi_power(int k, const GaussQ& c = GaussQ(1)) { return Scalar(c, k); }
  static Scalar from_float(Complex z) {
    Scalar s;
    s.rep_ = z;
    return s;
  }
  static Scalar i_unit() { return Scalar(GaussQ::i_unit()); }

  bool is_exact() const { return std::holds_alternative<PiPoly>(rep_); }
  bool is_float() const { return !is_exact(); }
  bool is_zero() const;
  const PiPoly& exact() const;  // throws std::logic_error on Float
  Complex to_complex() const;
  double abs() const { return std::abs(to_complex()); }
  Scalar to_float() const { return from_float(to_complex()); }

  /// Divides by c*pi^k; exact stays exact.
  Scalar divided_by(const GaussQ& c, int pi_degree = 0) const;
  Scalar times_pi(int k) const;
  Scalar conj() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  Scalar operator-() const;

  /// Exact structural equality when both are exact; value equality otherwise.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "2π²/3" style for exact values, "%.17g" real/imag otherwise.
  std::string to_string() const;

 private:
  std::variant<PiPoly, Complex> rep_;
};

/// Integer power of a scalar.
Scalar pow(const Scalar& base, int e);

}  // namespace csig
