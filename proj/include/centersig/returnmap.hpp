#pragma once

#include <vector>

#include "centersig/iint.hpp"

namespace csig {

/// c_n(a) = sum over compositions w of n of coeff_c(w) * I_w(a).
Scalar return_coeff(const CoeffSeq& a, int n);
Scalar return_coeff(const Signature& sig, int n);

/// Numeric zero scale for c_n: the word thresholds weighted by coeff_c.
double return_coeff_threshold(const CoeffSeq& a, int n);

/// r + sum_{n=1}^{N} d_n r^{n+1}.
class ReturnSeries {
 public:
  explicit ReturnSeries(int cutoff);  // identity
  ReturnSeries(int cutoff, std::vector<Scalar> d);

  int cutoff() const { return static_cast<int>(d_.size()); }
  /// 1-based coefficient d_n.
  const Scalar& d(int n) const { return d_[static_cast<std::size_t>(n - 1)]; }
  void set(int n, Scalar v) { d_[static_cast<std::size_t>(n - 1)] = std::move(v); }
  const std::vector<Scalar>& coeffs() const { return d_; }
  bool is_identity() const;
  /// Coefficients of r^0 .. r^{N+1}.
  std::vector<Scalar> dense() const;

  friend bool operator==(const ReturnSeries&, const ReturnSeries&) = default;

 private:
  std::vector<Scalar> d_;
};

ReturnSeries return_series(const CoeffSeq& a, int cutoff);
ReturnSeries return_series(const Signature& sig);

/// g o f, truncated at r^{N+1}.
ReturnSeries compose(const ReturnSeries& f, const ReturnSeries& g);
/// Compositional inverse.
ReturnSeries invert(const ReturnSeries& f);

struct Classification {
  bool center = true;  // no nonzero c_n up to cutoff
  int cutoff = 0;
  int order = 0;       // first n with c_n != 0 (focus only)
  Scalar value;        // that c_n
};
Classification classify(const CoeffSeq& a, int cutoff);

}  // namespace csig
