#pragma once

#include <vector>

#include "centersig/funcs.hpp"

namespace csig {

/// Truncated power series sum_{k=0}^{N} c_k(x) t^k with function coefficients.
class FnSeries {
 public:
  explicit FnSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {}
  FnSeries(int order, std::vector<CoeffFn> coeffs);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const CoeffFn& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  void set(int k, CoeffFn f);
  const std::vector<CoeffFn>& coeffs() const { return c_; }

  FnSeries operator+(const FnSeries& o) const;
  FnSeries operator-(const FnSeries& o) const;
  /// Product truncated at order().
  FnSeries operator*(const FnSeries& o) const;
  FnSeries scaled(const Scalar& s) const;
  /// Multiplication by t^k (truncated).
  FnSeries shifted(int k) const;

  /// 1/(1+E) for E = *this with vanishing constant term (Neumann series).
  FnSeries one_plus_inverse() const;

 private:
  std::vector<CoeffFn> c_;
};

}  // namespace csig
