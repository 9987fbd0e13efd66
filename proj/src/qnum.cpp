#include "parityperm/qnum.hpp"

#include <numeric>
#include <stdexcept>

namespace parityperm {

std::string_view qmode_name(QMode m) {
  return m == QMode::Generic ? "generic" : "one";
}

MultiPoly q_integer(int n, QMode mode) {
  if (n < 0) throw std::invalid_argument("q_integer: negative n");
  if (mode == QMode::QOne) return MultiPoly(n);
  MultiPoly r;
  for (int i = 0; i < n; ++i) r += MultiPoly::variable(Var::Q, i);
  return r;
}

MultiPoly q_factorial(int n, QMode mode) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative n");
  MultiPoly r(1);
  for (int i = 1; i <= n; ++i) r *= q_integer(i, mode);
  return r;
}

std::vector<std::vector<MultiPoly>> q_binomial_triangle(int n, QMode mode) {
  if (n < 0) throw std::invalid_argument("q_binomial_triangle: negative n");
  std::vector<std::vector<MultiPoly>> tri(n + 1);
  for (int m = 0; m <= n; ++m) {
    tri[m].resize(m + 1);
    tri[m][0] = MultiPoly(1);
    tri[m][m] = MultiPoly(1);
    for (int k = 1; k < m; ++k) {
      MultiPoly shifted = mode == QMode::QOne
                              ? tri[m - 1][k]
                              : MultiPoly::variable(Var::Q, k) * tri[m - 1][k];
      tri[m][k] = tri[m - 1][k - 1] + shifted;
    }
  }
  return tri;
}

MultiPoly q_binomial(int n, int k, QMode mode) {
  if (n < 0) throw std::invalid_argument("q_binomial: negative n");
  if (k < 0 || k > n) return MultiPoly();
  return q_binomial_triangle(n, mode)[n][k];
}

BigInt binomial_int(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

MultiPoly q_multinomial(int n, const std::vector<int>& parts, QMode mode) {
  if (n < 0) throw std::invalid_argument("q_multinomial: negative n");
  int sum = 0;
  for (int p : parts) {
    if (p <= 0) throw std::invalid_argument("q_multinomial: nonpositive part");
    sum += p;
  }
  if (sum != n) throw std::invalid_argument("q_multinomial: parts do not sum to n");
  MultiPoly den(1);
  for (int p : parts) den *= q_factorial(p, mode);
  auto quot = q_factorial(n, mode).divided_exactly_by(den);
  if (!quot)
    throw std::logic_error("q_multinomial: division left a remainder");
  return *quot;
}

}  // namespace parityperm
