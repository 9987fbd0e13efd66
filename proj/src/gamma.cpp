#include "parityperm/gamma.hpp"

#include <algorithm>
#include <stdexcept>

#include "parityperm/qnum.hpp"

namespace parityperm {

namespace {

const MultiPoly& poly_x() {
  static const MultiPoly p = MultiPoly::variable(Var::X);
  return p;
}

const MultiPoly& poly_y() {
  static const MultiPoly p = MultiPoly::variable(Var::Y);
  return p;
}

MultiPoly basis_element(SymBasis basis, int j, int m) {
  const MultiPoly xy = poly_x() * poly_y();
  const MultiPoly body = basis == SymBasis::Sym
                             ? MultiPoly(1) + xy
                             : MultiPoly(1) + poly_x() + poly_y() + xy;
  return (poly_x() + poly_y()).pow(j) * body.pow(m - j);
}

void require_xy_only(const MultiPoly& p) {
  for (Var v : {Var::X0, Var::X1, Var::Y0, Var::Y1, Var::Q})
    if (p.degree(v) > 0)
      throw std::invalid_argument("expand_in_basis: polynomial not in x,y");
}

}  // namespace

std::optional<BasisExpansion> expand_in_basis(const MultiPoly& p, int m,
                                              SymBasis basis) {
  if (m < 0) throw std::invalid_argument("expand_in_basis: negative m");
  require_xy_only(p);
  BasisExpansion e{m, basis, std::vector<BigInt>(m + 1, 0)};
  // At y = 0 the basis triangularizes; peel coefficients off p(x,0).
  MultiPoly r = p.substitute_zero(Var::Y);
  if (r.degree(Var::X) > m) return std::nullopt;
  const MultiPoly one_plus_x = MultiPoly(1) + poly_x();
  for (int j = 0; j <= m; ++j) {
    MultiPoly cj = r.coeff_of(Var::X, j);
    if (!cj.is_constant()) return std::nullopt;  // cannot happen for x,y input
    e.coeffs[j] = cj.coefficient(kUnitMonomial);
    if (e.coeffs[j] == 0) continue;
    MultiPoly used = MultiPoly(e.coeffs[j]) * MultiPoly::variable(Var::X, j);
    if (basis == SymBasis::Gamma) used *= one_plus_x.pow(m - j);
    r -= used;
  }
  if (!r.is_zero()) return std::nullopt;
  // Certificate: the extracted coefficients must rebuild p exactly.
  if (basis_combination(e) != p) return std::nullopt;
  return e;
}

MultiPoly basis_combination(const BasisExpansion& e) {
  MultiPoly out;
  for (int j = 0; j <= e.m; ++j) {
    if (e.coeffs[j] == 0) continue;
    out += MultiPoly(e.coeffs[j]) * basis_element(e.basis, j, e.m);
  }
  return out;
}

std::vector<BigInt> count_table(int n, CountKind kind) {
  if (n < 1) throw std::invalid_argument("count_table: n must be positive");
  std::vector<BigInt> table(n / 2 + 1, 0);
  switch (kind) {
    case CountKind::A:
    case CountKind::Abar:
      enumerate(n, PermKind::Plain, [&](std::span<const int> w) {
        StatProfile s = stat_profile(Permutation{{w.begin(), w.end()}});
        const int excluded =
            kind == CountKind::A ? s.des_even : s.asc_even;
        if (excluded == 0) table.at(s.des_odd) += 1;
      });
      break;
    case CountKind::B:
    case CountKind::Bbar:
      enumerate(n, PermKind::Signed, [&](std::span<const int> w) {
        StatProfile s = stat_profile(SignedPermutation{{w.begin(), w.end()}});
        const int excluded =
            kind == CountKind::B ? s.des_even : s.asc_even;
        if (excluded == 0) table.at(s.des_odd) += 1;
      });
      break;
    case CountKind::G:
      enumerate(n, PermKind::Plain, [&](std::span<const int> w) {
        StatProfile s = stat_profile(Permutation{{w.begin(), w.end()}});
        table.at(s.lpk) += 1;
      });
      break;
    case CountKind::Gbar: {
      std::vector<BigInt> g = count_table(n, CountKind::G);
      const int m = n / 2;
      for (int j = 0; j <= m; ++j) {
        BigInt acc = 0;
        for (int i = 0; i + j <= m; ++i)
          acc += binomial_int(i + j, j) * g[i + j] * (BigInt(1) << i);
        table[j] = acc;
      }
      break;
    }
  }
  return table;
}

PosClass classify_position(const Permutation& u, int i) {
  const int n = u.size();
  if (i < 1 || i > n)
    throw std::invalid_argument("classify_position: out of range");
  const int here = u.values[i - 1];
  const int left = i == 1 ? 0 : u.values[i - 2];
  const int right = i == n ? n + 1 : u.values[i];
  if (left < here && here > right) return PosClass::Peak;
  if (left > here && here < right) return PosClass::Valley;
  if (left < here && here < right) return PosClass::DoubleAscent;
  return PosClass::DoubleDescent;
}

std::vector<int> valley_positions(const Permutation& u) {
  validate(u);
  std::vector<int> v;
  for (int i = 1; i <= u.size(); ++i)
    if (classify_position(u, i) == PosClass::Valley) v.push_back(i);
  return v;
}

namespace {

// Descent positions contributed by the peaks once even peaks carry a minus:
// an odd peak descends at its own position, a signed even peak one earlier.
std::vector<int> peak_descent_positions(const Permutation& u) {
  std::vector<int> out;
  for (int i = 1; i <= u.size(); ++i)
    if (classify_position(u, i) == PosClass::Peak)
      out.push_back(i % 2 ? i : i - 1);
  return out;
}

}  // namespace

std::vector<int> choice_set(const Permutation& u) {
  validate(u);
  std::vector<int> lpk = peak_descent_positions(u);
  std::vector<int> c;
  for (int l = 1; l <= 2 * (u.size() / 2) - 1; l += 2)
    if (std::find(lpk.begin(), lpk.end(), l) == lpk.end()) c.push_back(l);
  return c;
}

SignedPermutation process_a(const Permutation& u,
                            std::span<const int> valley_signs,
                            const std::vector<int>& D) {
  validate(u);
  const int n = u.size();
  const std::vector<int> valleys = valley_positions(u);
  StatProfile prof = stat_profile(u);
  if (static_cast<int>(valleys.size()) != prof.lpk)
    throw std::logic_error("process_a: valley count != lpk");
  if (valley_signs.size() != valleys.size())
    throw std::invalid_argument("process_a: need one sign per valley");
  for (int s : valley_signs)
    if (s != 1 && s != -1)
      throw std::invalid_argument("process_a: signs must be +-1");
  const std::vector<int> c = choice_set(u);
  for (int l : D)
    if (std::find(c.begin(), c.end(), l) == c.end())
      throw std::invalid_argument("process_a: D not within the choice set");

  std::vector<int> sign(n + 1, 1);
  // valleys as requested; they never alter the descent set
  for (std::size_t k = 0; k < valleys.size(); ++k)
    sign[valleys[k]] = valley_signs[k];
  // even peaks minus: their descent moves to the odd position one earlier
  for (int i = 1; i <= n; ++i)
    if (classify_position(u, i) == PosClass::Peak && i % 2 == 0) sign[i] = -1;
  // toggle descents across the chosen odd positions
  for (int l : c) {
    const bool chosen = std::find(D.begin(), D.end(), l) != D.end();
    const bool descent = u.values[l - 1] > u.values[l];  // u(l) > u(l+1)
    if (chosen && !descent) sign[l + 1] = -1;  // create the descent at l
    if (!chosen && descent) sign[l] = -1;      // erase the double descent
  }
  // erase what is left: double descents at even positions
  for (int i = 2; i <= n; i += 2)
    if (classify_position(u, i) == PosClass::DoubleDescent) sign[i] = -1;

  SignedPermutation w;
  w.values.resize(n);
  for (int i = 1; i <= n; ++i) w.values[i - 1] = sign[i] * u.values[i - 1];
  return w;
}

std::vector<SignedPermutation> process_a_images(const Permutation& u, int j) {
  validate(u);
  const std::vector<int> valleys = valley_positions(u);
  const std::vector<int> c = choice_set(u);
  const int i = static_cast<int>(valleys.size());
  std::vector<SignedPermutation> out;
  if (j < i || j - i > static_cast<int>(c.size())) return out;

  // all D subsets of the choice set with |D| = j - i
  std::vector<std::vector<int>> dchoices;
  std::vector<int> pick;
  const int want = j - i;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(pick.size()) == want) {
      dchoices.push_back(pick);
      return;
    }
    for (std::size_t k = from; k < c.size(); ++k) {
      pick.push_back(c[k]);
      self(self, k + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);

  std::vector<int> signs(i, 1);
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << i); ++mask) {
    for (int k = 0; k < i; ++k) signs[k] = (mask >> k & 1) ? -1 : 1;
    for (const auto& d : dchoices) out.push_back(process_a(u, signs, d));
  }
  return out;
}

}  // namespace parityperm
