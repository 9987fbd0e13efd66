#pragma once

// Truncated q-exponential generating series: sum_{n<=order} c_n t^n / n!_q
// with polynomial coefficients. Multiplication is the q-binomial convolution
//   (fg)_n = sum_m [n m]_q f_m g_{n-m}.
// Rational identities are checked by cross-multiplication, never division.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "parityperm/multipoly.hpp"
#include "parityperm/qnum.hpp"

namespace parityperm {

class QSeries {
 public:
  QSeries(int order, QMode mode);
  static QSeries build(int order, QMode mode,
                       const std::function<MultiPoly(int)>& coeff);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  QMode qmode() const { return mode_; }
  const MultiPoly& coeff(int n) const { return coeffs_.at(n); }
  void set_coeff(int n, MultiPoly c);

  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;
  QSeries scaled(const MultiPoly& c) const;
  bool operator==(const QSeries& o) const = default;

 private:
  void check_qmode(const MultiPoly& c) const;
  void check_compatible(const QSeries& o) const;
  std::vector<MultiPoly> coeffs_;
  QMode mode_;
};

// Classic building blocks; the argument scale u means the series in (u*t).
QSeries qs_one(int order, QMode mode);
QSeries qs_exp(int order, QMode mode, const MultiPoly& u);
QSeries qs_cos(int order, QMode mode, const MultiPoly& u);
QSeries qs_sin(int order, QMode mode, const MultiPoly& u);
QSeries qs_cosh(int order, QMode mode, const MultiPoly& u);
QSeries qs_sinh(int order, QMode mode, const MultiPoly& u);

struct MismatchInfo {
  int n = 0;
  MultiPoly lhs, rhs;
  bool operator==(const MismatchInfo&) const = default;
};

// Verifies lhs == num/den by checking lhs*den - num == 0 coefficientwise.
// Returns the first differing order, or nullopt when all agree.
std::optional<MismatchInfo> cross_check(const QSeries& lhs, const QSeries& num,
                                        const QSeries& den);

struct IdentityReport {
  std::string id;
  int nmax = 0;
  QMode qmode = QMode::QOne;
  bool pass = true;
  std::optional<MismatchInfo> first_mismatch;
  std::int64_t elapsed_ms = 0;
};

}  // namespace parityperm
