#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "centersig/fnseries.hpp"
#include "centersig/funcs.hpp"

namespace csig {

/// Bivariate polynomial sum c_ij x^i y^j.
class BiPoly {
 public:
  using Terms = std::map<std::pair<int, int>, Scalar>;

  BiPoly() = default;
  static BiPoly monomial(int i, int j, const Scalar& c);
  static BiPoly x() { return monomial(1, 0, Scalar(1)); }
  static BiPoly y() { return monomial(0, 1, Scalar(1)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(int i, int j, const Scalar& c);
  /// Lowest and highest total degree (0 for the zero polynomial).
  int min_degree() const;
  int max_degree() const;
  bool is_homogeneous() const;
  /// p(x, -y) == sign * p(x, y).
  bool has_y_parity(int sign) const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly scaled(const Scalar& c) const;
  BiPoly dx() const;
  BiPoly dy() const;
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// p(cos phi, sin phi) as a trigonometric polynomial.
  QuasiTrigPoly on_circle() const;
  Complex eval(Complex x, Complex y) const;

 private:
  Terms terms_;
};

/// Univariate polynomial coefficients c_0, c_1, ... applied to a BiPoly.
BiPoly compose(const std::vector<Scalar>& poly, const BiPoly& h);

/// x' = -y + F, y' = x + G with F, G free of constant and linear terms.
struct PlanarField {
  BiPoly F;
  BiPoly G;
  PlanarField() = default;
  PlanarField(BiPoly f, BiPoly g);  // validates
};

/// dr/dphi = r P/(1+Q) expanded as sum a_i r^{i+1}, i <= N.
CoeffSeq polar_reduce(const PlanarField& v, int cutoff);

/// Power series of P and Q in r: coefficient k is the r^k term (k = 0..N).
std::pair<FnSeries, FnSeries> polar_parts(const PlanarField& v, int cutoff);

struct QuadraticParams {
  Scalar l2, l3, l4, l5, l6;
};

PlanarField dulac_field(const QuadraticParams& l);

enum class DulacComponent { LotkaVolterra, Symmetric, Hamiltonian, Darboux };
const char* component_name(DulacComponent c);
std::set<DulacComponent> dulac_component(const QuadraticParams& l);

/// f = (xF + yG)/r^3 and g = (xG - yF)/r^3 for a quadratic field.
std::pair<CoeffFn, CoeffFn> quadratic_fg(const PlanarField& v);

/// a_{k+1} = f (-g)^k for dr/dphi = f r^2/(1 + g r).
CoeffSeq quadratic_seq(const CoeffFn& f, const CoeffFn& g, int cutoff);

struct AbelPair {
  CoeffFn p, q;
  CoeffFn P, Q;  // antiderivatives
};

/// p = f - g', q = -f g.
AbelPair cherkas(const CoeffFn& f, const CoeffFn& g);

/// Abel equation as an element (p, q, 0, ...).
CoeffSeq abel_seq(const AbelPair& ab);

struct CompositionResult {
  bool ok = false;
  std::vector<std::vector<Scalar>> polys;  // coefficients of p_i, ascending
};

/// Solves atilde_i = p_i(q) for polynomials p_i. Throws PreconditionError for constant q.
CompositionResult composition_check(const std::vector<CoeffFn>& atilde, const CoeffFn& q);

/// Candidate inner functions: H(cos, sin) for Hamiltonian-type data, cos for symmetric data.
CoeffFn candidate_q_hamiltonian(const BiPoly& h);
CoeffFn candidate_q_symmetric();

}  // namespace csig
