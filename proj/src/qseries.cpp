#include "parityperm/qseries.hpp"

#include <stdexcept>

namespace parityperm {

QSeries::QSeries(int order, QMode mode) : mode_(mode) {
  if (order < 0) throw std::invalid_argument("QSeries: negative order");
  coeffs_.resize(order + 1);
}

QSeries QSeries::build(int order, QMode mode,
                       const std::function<MultiPoly(int)>& coeff) {
  QSeries s(order, mode);
  for (int n = 0; n <= order; ++n) s.set_coeff(n, coeff(n));
  return s;
}

void QSeries::check_qmode(const MultiPoly& c) const {
  // At q = 1 no coefficient may mention q; a violation means some caller
  // forgot to specialize, which would silently corrupt the convolution.
  if (mode_ == QMode::QOne && c.degree(Var::Q) > 0)
    throw std::logic_error("QSeries: q present in a q=1 series coefficient");
}

void QSeries::check_compatible(const QSeries& o) const {
  if (mode_ != o.mode_ || coeffs_.size() != o.coeffs_.size())
    throw std::invalid_argument("QSeries: incompatible operands");
}

void QSeries::set_coeff(int n, MultiPoly c) {
  check_qmode(c);
  coeffs_.at(n) = std::move(c);
}

QSeries QSeries::operator+(const QSeries& o) const {
  check_compatible(o);
  QSeries r = *this;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) r.coeffs_[n] += o.coeffs_[n];
  return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
  check_compatible(o);
  QSeries r = *this;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) r.coeffs_[n] -= o.coeffs_[n];
  return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
  check_compatible(o);
  const int N = order();
  auto tri = q_binomial_triangle(N, mode_);
  QSeries r(N, mode_);
  for (int n = 0; n <= N; ++n) {
    MultiPoly c;
    for (int m = 0; m <= n; ++m) {
      if (coeffs_[m].is_zero() || o.coeffs_[n - m].is_zero()) continue;
      c += tri[n][m] * coeffs_[m] * o.coeffs_[n - m];
    }
    r.coeffs_[n] = std::move(c);
  }
  return r;
}

QSeries QSeries::scaled(const MultiPoly& c) const {
  check_qmode(c);
  QSeries r = *this;
  for (auto& cf : r.coeffs_) cf *= c;
  return r;
}

QSeries qs_one(int order, QMode mode) {
  return QSeries::build(order, mode,
                        [](int n) { return MultiPoly(n == 0 ? 1 : 0); });
}

QSeries qs_exp(int order, QMode mode, const MultiPoly& u) {
  return QSeries::build(order, mode, [&](int n) { return u.pow(n); });
}

QSeries qs_cos(int order, QMode mode, const MultiPoly& u) {
  return QSeries::build(order, mode, [&](int n) {
    if (n % 2) return MultiPoly();
    MultiPoly c = u.pow(n);
    return (n / 2) % 2 ? -c : c;
  });
}

QSeries qs_sin(int order, QMode mode, const MultiPoly& u) {
  return QSeries::build(order, mode, [&](int n) {
    if (n % 2 == 0) return MultiPoly();
    MultiPoly c = u.pow(n);
    return ((n - 1) / 2) % 2 ? -c : c;
  });
}

QSeries qs_cosh(int order, QMode mode, const MultiPoly& u) {
  return QSeries::build(order, mode, [&](int n) {
    return n % 2 ? MultiPoly() : u.pow(n);
  });
}

QSeries qs_sinh(int order, QMode mode, const MultiPoly& u) {
  return QSeries::build(order, mode, [&](int n) {
    return n % 2 ? u.pow(n) : MultiPoly();
  });
}

std::optional<MismatchInfo> cross_check(const QSeries& lhs, const QSeries& num,
                                        const QSeries& den) {
  QSeries prod = lhs * den;
  for (int n = 0; n <= lhs.order(); ++n) {
    if (prod.coeff(n) != num.coeff(n))
      return MismatchInfo{n, prod.coeff(n), num.coeff(n)};
  }
  return std::nullopt;
}

}  // namespace parityperm
