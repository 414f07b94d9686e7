#include "centersig/fnseries.hpp"

#include <stdexcept>

namespace csig {

FnSeries::FnSeries(int order, std::vector<CoeffFn> coeffs) : c_(std::move(coeffs)) {
  c_.resize(static_cast<std::size_t>(order) + 1);
}

void FnSeries::set(int k, CoeffFn f) {
  if (k < 0 || k > order()) throw std::out_of_range("FnSeries::set");
  c_[static_cast<std::size_t>(k)] = std::move(f);
}

FnSeries FnSeries::operator+(const FnSeries& o) const {
  FnSeries r(std::min(order(), o.order()));
  for (int k = 0; k <= r.order(); ++k) r.set(k, fn_add((*this)[k], o[k]));
  return r;
}

FnSeries FnSeries::operator-(const FnSeries& o) const {
  FnSeries r(std::min(order(), o.order()));
  for (int k = 0; k <= r.order(); ++k) r.set(k, fn_sub((*this)[k], o[k]));
  return r;
}

FnSeries FnSeries::operator*(const FnSeries& o) const {
  FnSeries r(std::min(order(), o.order()));
  for (int i = 0; i <= r.order(); ++i) {
    if ((*this)[i].is_zero()) continue;
    for (int j = 0; i + j <= r.order(); ++j) {
      if (o[j].is_zero()) continue;
      r.c_[static_cast<std::size_t>(i + j)] = fn_add(r[i + j], fn_mul((*this)[i], o[j]));
    }
  }
  return r;
}

FnSeries FnSeries::scaled(const Scalar& s) const {
  FnSeries r(order());
  for (int k = 0; k <= order(); ++k)
    if (!(*this)[k].is_zero()) r.set(k, fn_scale((*this)[k], s));
  return r;
}

FnSeries FnSeries::shifted(int k) const {
  FnSeries r(order());
  for (int j = 0; j + k <= order(); ++j)
    if (j + k >= 0) r.set(j + k, (*this)[j]);
  return r;
}

FnSeries FnSeries::one_plus_inverse() const {
  if (!(*this)[0].is_zero()) throw std::invalid_argument("one_plus_inverse: constant term must vanish");
  // 1/(1+E) = sum_k (-E)^k; (-E)^k starts at t^k so order() terms suffice.
  FnSeries neg = scaled(Scalar(-1));
  FnSeries result(order());
  result.set(0, CoeffFn::constant(Scalar(1)));
  FnSeries power = result;
  for (int k = 1; k <= order(); ++k) {
    power = power * neg;
    result = result + power;
  }
  return result;
}

}  // namespace csig
