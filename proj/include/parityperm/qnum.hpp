#pragma once

// q-analogues: [n]_q! and the Gaussian binomial/multinomial coefficients,
// computed either at generic q (polynomials in q) or at q = 1 (integers,
// still carried as MultiPoly constants so callers stay uniform).

#include <string_view>
#include <vector>

#include "parityperm/multipoly.hpp"

namespace parityperm {

enum class QMode { Generic, QOne };

std::string_view qmode_name(QMode m);  // "generic" / "one"

// [n]_q = 1 + q + ... + q^(n-1)
MultiPoly q_integer(int n, QMode mode);

// n!_q
MultiPoly q_factorial(int n, QMode mode);

// Rows 0..n of the Gaussian binomial triangle, built by the Pascal recurrence
//   [n k] = [n-1 k-1] + q^k [n-1 k].
std::vector<std::vector<MultiPoly>> q_binomial_triangle(int n, QMode mode);

MultiPoly q_binomial(int n, int k, QMode mode);

// n!_q / (parts_1!_q * ... * parts_r!_q) by exact polynomial division.
// parts must be positive and sum to n. Throws std::logic_error if the
// division leaves a remainder (it never should).
MultiPoly q_multinomial(int n, const std::vector<int>& parts, QMode mode);

// Ordinary binomial coefficient; 0 outside 0 <= k <= n.
BigInt binomial_int(int n, int k);

}  // namespace parityperm
