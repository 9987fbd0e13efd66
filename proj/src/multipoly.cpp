#include "parityperm/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace parityperm {

namespace {

// Variables in ASCII name order, used only for rendering term factors.
constexpr std::array<Var, kVarCount> kNameOrder = {
    Var::Q, Var::X, Var::X0, Var::X1, Var::Y, Var::Y0, Var::Y1};

constexpr std::array<std::string_view, kVarCount> kNames = {
    "x0", "x1", "y0", "y1", "x", "y", "q"};

bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial monomial_quotient(const Monomial& b, const Monomial& a) {
  Monomial r{};
  for (std::size_t i = 0; i < kVarCount; ++i)
    r[i] = static_cast<std::uint16_t>(b[i] - a[i]);
  return r;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial r{};
  for (std::size_t i = 0; i < kVarCount; ++i) {
    unsigned s = static_cast<unsigned>(a[i]) + b[i];
    if (s > 0xffffu) throw std::overflow_error("monomial exponent overflow");
    r[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

}  // namespace

std::string_view var_name(Var v) { return kNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (kNames[i] == name) return static_cast<Var>(i);
  return std::nullopt;
}

MultiPoly::MultiPoly(const BigInt& constant) {
  if (constant != 0) terms_.emplace(kUnitMonomial, constant);
}

MultiPoly::MultiPoly(long long constant) : MultiPoly(BigInt(constant)) {}

MultiPoly MultiPoly::variable(Var v, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  MultiPoly p;
  Monomial m{};
  m[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(exponent);
  p.terms_.emplace(m, 1);
  return p;
}

MultiPoly MultiPoly::term(const BigInt& coeff, const Monomial& m) {
  MultiPoly p;
  if (coeff != 0) p.terms_.emplace(m, coeff);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == kUnitMonomial);
}

int MultiPoly::degree(Var v) const {
  int d = 0;
  const auto i = static_cast<std::size_t>(v);
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[i]));
  return d;
}

MultiPoly MultiPoly::coeff_of(Var v, int k) const {
  MultiPoly r;
  const auto i = static_cast<std::size_t>(v);
  for (const auto& [m, c] : terms_) {
    if (m[i] != k) continue;
    Monomial rest = m;
    rest[i] = 0;
    r.add_term(rest, c);
  }
  return r;
}

MultiPoly MultiPoly::substitute_zero(Var v) const {
  MultiPoly r;
  const auto i = static_cast<std::size_t>(v);
  for (const auto& [m, c] : terms_)
    if (m[i] == 0) r.terms_.emplace(m, c);
  return r;
}

MultiPoly MultiPoly::substitute_one(Var v) const {
  MultiPoly r;
  const auto i = static_cast<std::size_t>(v);
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    n[i] = 0;
    r.add_term(n, c);
  }
  return r;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& p) const {
  const auto i = static_cast<std::size_t>(v);
  // Cache powers of the replacement up to the degree actually used.
  std::vector<MultiPoly> powers = {MultiPoly(1)};
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    while (powers.size() <= m[i]) powers.push_back(powers.back() * p);
    Monomial rest = m;
    rest[i] = 0;
    r += MultiPoly::term(c, rest) * powers[m[i]];
  }
  return r;
}

MultiPoly MultiPoly::rename_var(Var from, Var to) const {
  if (from == to) return *this;
  MultiPoly r;
  const auto f = static_cast<std::size_t>(from);
  const auto t = static_cast<std::size_t>(to);
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    unsigned s = static_cast<unsigned>(n[t]) + n[f];
    if (s > 0xffffu) throw std::overflow_error("monomial exponent overflow");
    n[t] = static_cast<std::uint16_t>(s);
    n[f] = 0;
    r.add_term(n, c);
  }
  return r;
}

MultiPoly MultiPoly::reverse_var(Var v, int bound) const {
  const auto i = static_cast<std::size_t>(v);
  if (degree(v) > bound)
    throw std::invalid_argument("reverse_var: degree exceeds bound");
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    n[i] = static_cast<std::uint16_t>(bound - m[i]);
    r.add_term(n, c);
  }
  return r;
}

BigInt MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  MultiPoly r(1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add_term(monomial_product(ma, mb), ca * cb);
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

std::optional<MultiPoly> MultiPoly::divided_exactly_by(const MultiPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  // Long division in the lex term order. The order is multiplicative and a
  // well-order on exponent tuples, so the leading term of the remainder
  // strictly decreases and the loop terminates.
  MultiPoly rem = *this;
  MultiPoly quot;
  const auto& [dm, dc] = *d.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms_.rbegin();
    if (!monomial_divides(dm, rm)) return std::nullopt;
    BigInt q = rc / dc;
    if (q * dc != rc) return std::nullopt;  // coefficient not divisible
    MultiPoly t = MultiPoly::term(q, monomial_quotient(rm, dm));
    quot += t;
    rem -= t * d;
  }
  return quot;
}

std::string MultiPoly::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += c.str();
    for (Var v : kNameOrder) {
      const auto e = m[static_cast<std::size_t>(v)];
      if (e == 0) continue;
      out += '*';
      out += var_name(v);
      if (e != 1) {
        out += '^';
        out += std::to_string(e);
      }
    }
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_fail(std::string_view text) {
  throw std::invalid_argument("malformed polynomial text: " +
                              std::string(text));
}

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) {
  std::string_view rest = trim(text);
  if (rest.empty()) parse_fail(text);
  if (rest == "0") return MultiPoly();
  MultiPoly result;
  while (true) {
    std::size_t split = rest.find(" + ");
    std::string_view termtext =
        split == std::string_view::npos ? rest : rest.substr(0, split);
    termtext = trim(termtext);
    if (termtext.empty()) parse_fail(text);

    // integer coefficient
    std::size_t pos = 0;
    if (termtext[pos] == '-') ++pos;
    std::size_t digits_begin = pos;
    while (pos < termtext.size() &&
           std::isdigit(static_cast<unsigned char>(termtext[pos])))
      ++pos;
    if (pos == digits_begin) parse_fail(text);
    BigInt coeff(std::string(termtext.substr(0, pos)));

    Monomial m{};
    while (pos < termtext.size()) {
      if (termtext[pos] != '*') parse_fail(text);
      ++pos;
      std::size_t name_begin = pos;
      while (pos < termtext.size() &&
             (std::isalnum(static_cast<unsigned char>(termtext[pos]))))
        ++pos;
      // variable names are x, y, q optionally followed by 0/1 — handled by
      // the name table lookup
      auto v = var_from_name(termtext.substr(name_begin, pos - name_begin));
      if (!v) parse_fail(text);
      int exp = 1;
      if (pos < termtext.size() && termtext[pos] == '^') {
        ++pos;
        std::size_t exp_begin = pos;
        while (pos < termtext.size() &&
               std::isdigit(static_cast<unsigned char>(termtext[pos])))
          ++pos;
        if (pos == exp_begin) parse_fail(text);
        auto sv = termtext.substr(exp_begin, pos - exp_begin);
        auto res = std::from_chars(sv.data(), sv.data() + sv.size(), exp);
        if (res.ec != std::errc()) parse_fail(text);
      }
      const auto idx = static_cast<std::size_t>(*v);
      if (m[idx] != 0) parse_fail(text);  // duplicate variable in one term
      if (exp < 0 || exp > 0xffff) parse_fail(text);
      m[idx] = static_cast<std::uint16_t>(exp);
    }
    result.add_term(m, coeff);

    if (split == std::string_view::npos) break;
    rest = rest.substr(split + 3);
  }
  return result;
}

}  // namespace parityperm
