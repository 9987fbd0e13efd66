#pragma once

// Exact sparse multivariate polynomials over the fixed ordered alphabet
// (x0, x1, y0, y1, x, y, q) with arbitrary-precision integer coefficients.
// The term map is keyed by exponent tuples in ascending lexicographic order,
// which doubles as the canonical term order for the text form.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace parityperm {

using BigInt = boost::multiprecision::cpp_int;

enum class Var : std::uint8_t { X0 = 0, X1, Y0, Y1, X, Y, Q };
inline constexpr std::size_t kVarCount = 7;

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

// Exponent tuple, indexed by Var. std::array's operator< is lexicographic,
// so std::map<Monomial, ...> iterates in the canonical order for free.
using Monomial = std::array<std::uint16_t, kVarCount>;

inline constexpr Monomial kUnitMonomial{};  // all exponents zero

class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(const BigInt& constant);
  explicit MultiPoly(long long constant);

  static MultiPoly variable(Var v, int exponent = 1);
  static MultiPoly term(const BigInt& coeff, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, BigInt>& terms() const { return terms_; }

  // Largest exponent of v appearing in any term; 0 for the zero polynomial.
  int degree(Var v) const;

  // Coefficient of v^k, a polynomial in the remaining variables.
  MultiPoly coeff_of(Var v, int k) const;

  // v := 0 (drop every term with positive v-exponent).
  MultiPoly substitute_zero(Var v) const;
  // v := 1 (erase v, merging terms).
  MultiPoly substitute_one(Var v) const;
  // v := p for an arbitrary polynomial p.
  MultiPoly substitute(Var v, const MultiPoly& p) const;
  // from := to, merging exponents. No-op if from == to.
  MultiPoly rename_var(Var from, Var to) const;
  // exponent e of v becomes bound - e; throws std::invalid_argument if
  // degree(v) > bound.
  MultiPoly reverse_var(Var v, int bound) const;

  BigInt coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const BigInt& c);

  MultiPoly pow(int e) const;

  // Exact division: returns q with *this == q * d, or nullopt if no such
  // polynomial exists. Throws std::invalid_argument when d is zero.
  std::optional<MultiPoly> divided_exactly_by(const MultiPoly& d) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  bool operator==(const MultiPoly& o) const = default;

  // Canonical text form: terms ascending by exponent tuple, each rendered as
  // coeff or coeff*var^e*... with variables in ASCII name order and the
  // coefficient always printed; terms joined by " + "; zero renders as "0".
  std::string render() const;
  static MultiPoly parse(std::string_view text);  // throws std::invalid_argument

 private:
  std::map<Monomial, BigInt> terms_;  // no zero coefficients stored
};

inline MultiPoly operator*(long long c, const MultiPoly& p) {
  return MultiPoly(c) * p;
}

}  // namespace parityperm
