#include "parityperm/sieve.hpp"

#include <stdexcept>

#include "parityperm/permutation.hpp"

namespace parityperm {

int Composition::total() const {
  int t = 0;
  for (int p : parts) t += p;
  return t;
}

void validate(const PositionSubset& s) {
  if (s.n < 1) throw std::invalid_argument("PositionSubset: n must be positive");
  int prev = 0;
  for (int m : s.members) {
    if (m <= prev || m > s.n - 1)
      throw std::invalid_argument("PositionSubset: members must increase within [n-1]");
    prev = m;
  }
}

void validate(const Composition& c) {
  if (c.parts.empty())
    throw std::invalid_argument("Composition: must have at least one part");
  for (int p : c.parts)
    if (p <= 0) throw std::invalid_argument("Composition: parts must be positive");
}

Composition code(const PositionSubset& s) {
  validate(s);
  Composition c;
  int prev = 0;
  for (int m : s.members) {
    c.parts.push_back(m - prev);
    prev = m;
  }
  c.parts.push_back(s.n - prev);
  return c;
}

PositionSubset decode(const Composition& c) {
  validate(c);
  PositionSubset s;
  s.n = c.total();
  int acc = 0;
  for (std::size_t i = 0; i + 1 < c.parts.size(); ++i) {
    acc += c.parts[i];
    s.members.push_back(acc);
  }
  return s;
}

MultiPoly alpha_plain_closed(const PositionSubset& s, QMode mode) {
  return q_multinomial(s.n, code(s).parts, mode);
}

MultiPoly alpha_plain_brute(const PositionSubset& s, QMode mode) {
  validate(s);
  std::uint32_t allowed = 0;
  for (int m : s.members) allowed |= std::uint32_t(1) << m;
  MultiPoly out;
  enumerate(s.n, PermKind::Plain, [&](std::span<const int> w) {
    for (std::size_t i = 1; i < w.size(); ++i)
      if (w[i - 1] > w[i] && !(allowed >> i & 1)) return;
    StatProfile st = stat_profile(Permutation{{w.begin(), w.end()}});
    Monomial m{};
    if (mode == QMode::Generic)
      m[static_cast<std::size_t>(Var::Q)] =
          static_cast<std::uint16_t>(st.inv);
    out.add_term(m, 1);
  });
  return out;
}

BigInt alpha_bplus_closed(const PositionSubset& s) {
  validate(s);
  MultiPoly mult = q_multinomial(s.n, code(s).parts, QMode::QOne);
  const int s1 = s.members.empty() ? s.n : s.members.front();
  BigInt pow2 = BigInt(1) << (s.n - s1);
  return mult.coefficient(kUnitMonomial) * pow2;
}

BigInt alpha_bplus_brute(const PositionSubset& s) {
  validate(s);
  std::uint32_t allowed = 0;
  for (int m : s.members) allowed |= std::uint32_t(1) << m;
  BigInt count = 0;
  enumerate(s.n, PermKind::SignedFirstPos, [&](std::span<const int> w) {
    // position 0 compares 0 with w(1) > 0, never a descent here
    for (std::size_t i = 1; i < w.size(); ++i)
      if (w[i - 1] > w[i] && !(allowed >> i & 1)) return;
    ++count;
  });
  return count;
}

namespace {

PositionSubset subset_from_mask(int n, std::uint32_t mask) {
  PositionSubset s;
  s.n = n;
  for (int i = 1; i <= n - 1; ++i)
    if (mask >> i & 1) s.members.push_back(i);
  return s;
}

}  // namespace

MultiPoly sieve_poly(int n, SieveFamily f, QMode mode) {
  if (n < 1) throw std::invalid_argument("sieve_poly: n must be positive");
  if (f == SieveFamily::BPlus && mode == QMode::Generic)
    throw std::invalid_argument("sieve_poly: B+ form has no generic-q version");
  MultiPoly out;
  const std::uint32_t limit = std::uint32_t(1) << std::max(0, n - 1);
  for (std::uint32_t bits = 0; bits < limit; ++bits) {
    PositionSubset s = subset_from_mask(n, bits << 1);
    int odd = 0, even = 0;
    for (int m : s.members) (m % 2 ? odd : even)++;
    MultiPoly alpha = f == SieveFamily::Plain
                          ? alpha_plain_closed(s, mode)
                          : MultiPoly(alpha_bplus_closed(s));
    Monomial mono{};
    mono[static_cast<std::size_t>(Var::X)] = static_cast<std::uint16_t>(odd);
    mono[static_cast<std::size_t>(Var::Y)] = static_cast<std::uint16_t>(even);
    out += MultiPoly::term(1, mono) * alpha;
  }
  return out;
}

MultiPoly odd_subset_sum(int n, OddBlockWeight w, QMode mode) {
  if (n < 1) throw std::invalid_argument("odd_subset_sum: n must be positive");
  if (w != OddBlockWeight::QAlpha && mode == QMode::Generic)
    throw std::invalid_argument("odd_subset_sum: weight has no generic-q version");
  std::vector<int> odd_positions;
  for (int i = 1; i <= n - 1; i += 2) odd_positions.push_back(i);
  MultiPoly out;
  const std::uint32_t limit = std::uint32_t(1)
                              << odd_positions.size();
  for (std::uint32_t bits = 0; bits < limit; ++bits) {
    PositionSubset s;
    s.n = n;
    for (std::size_t j = 0; j < odd_positions.size(); ++j)
      if (bits >> j & 1) s.members.push_back(odd_positions[j]);
    MultiPoly weight;
    switch (w) {
      case OddBlockWeight::QAlpha:
        weight = alpha_plain_closed(s, mode);
        break;
      case OddBlockWeight::BPlusAlpha:
        weight = MultiPoly(alpha_bplus_closed(s));
        break;
      case OddBlockWeight::PlainTimesPow2:
        weight = q_multinomial(s.n, code(s).parts, QMode::QOne) *
                 MultiPoly(BigInt(1) << n);
        break;
    }
    Monomial mono{};
    mono[static_cast<std::size_t>(Var::X)] =
        static_cast<std::uint16_t>(s.members.size());
    out += MultiPoly::term(1, mono) * weight;
  }
  return out;
}

namespace {

bool block_is_even(BlockSeries b) {
  return b == BlockSeries::BPrinted || b == BlockSeries::BProof ||
         b == BlockSeries::G || b == BlockSeries::H;
}

OddBlockWeight block_weight(BlockSeries b) {
  switch (b) {
    case BlockSeries::BPrinted:
    case BlockSeries::BProof:
    case BlockSeries::C:
      return OddBlockWeight::QAlpha;
    case BlockSeries::G:
    case BlockSeries::L:
      return OddBlockWeight::BPlusAlpha;
    case BlockSeries::H:
    case BlockSeries::F:
      return OddBlockWeight::PlainTimesPow2;
  }
  throw std::invalid_argument("unknown block series");
}

}  // namespace

QSeries block_series_brute(BlockSeries b, int order, QMode mode) {
  const bool even = block_is_even(b);
  const OddBlockWeight w = block_weight(b);
  return QSeries::build(order, mode, [&](int m) {
    if (m == 0 || m % 2 != (even ? 0 : 1)) return MultiPoly();
    return odd_subset_sum(m, w, mode);
  });
}

RationalSeries block_series_closed(BlockSeries b, int order, QMode mode) {
  if (mode == QMode::Generic && block_weight(b) != OddBlockWeight::QAlpha)
    throw std::invalid_argument("block_series_closed: q=1 only for this block");
  const MultiPoly one(1);
  const MultiPoly x = MultiPoly::variable(Var::X);
  if (b == BlockSeries::BPrinted || b == BlockSeries::BProof ||
      b == BlockSeries::C) {
    QSeries cosh1 = qs_cosh(order, mode, one) - qs_one(order, mode);
    QSeries den = qs_one(order, mode) - cosh1.scaled(x);
    switch (b) {
      case BlockSeries::BPrinted:
        return {cosh1.scaled(one + MultiPoly(2) * x), den};
      case BlockSeries::BProof: {
        QSeries sinh = qs_sinh(order, mode, one);
        return {cosh1 * den + (sinh * sinh).scaled(x), den};
      }
      default:
        return {qs_sinh(order, mode, one), den};
    }
  }
  // q-free half-block forms in cosh/sinh of t and 2t
  QSeries cosh2_1 = qs_cosh(order, mode, MultiPoly(2)) - qs_one(order, mode);
  QSeries den = qs_one(order, mode) - cosh2_1.scaled(x);
  switch (b) {
    case BlockSeries::G: {
      QSeries cosh1 = qs_cosh(order, mode, one) - qs_one(order, mode);
      QSeries cross = qs_sinh(order, mode, one) * qs_sinh(order, mode, MultiPoly(2));
      return {cosh1 * den + cross.scaled(x), den};
    }
    case BlockSeries::H: {
      QSeries sinh2 = qs_sinh(order, mode, MultiPoly(2));
      return {cosh2_1 * den + (sinh2 * sinh2).scaled(x), den};
    }
    case BlockSeries::F:
      return {qs_sinh(order, mode, MultiPoly(2)), den};
    case BlockSeries::L:
      return {qs_sinh(order, mode, one), den};
    default:
      throw std::invalid_argument("unknown block series");
  }
}

std::vector<BigInt> stirling2_row(int n) {
  if (n < 0) throw std::invalid_argument("stirling2_row: negative n");
  std::vector<BigInt> row = {1};  // S(0,0)
  for (int m = 1; m <= n; ++m) {
    std::vector<BigInt> next(m + 1, 0);
    for (int k = 1; k <= m; ++k) {
      next[k] = row[k - 1];
      if (k < static_cast<int>(row.size())) next[k] += k * row[k];
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace parityperm
