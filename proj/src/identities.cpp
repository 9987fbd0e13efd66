#include "parityperm/identities.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "parityperm/gamma.hpp"
#include "parityperm/minmax_tree.hpp"
#include "parityperm/sieve.hpp"

namespace parityperm {
namespace {

MultiPoly pv(Var v, int e = 1) { return MultiPoly::variable(v, e); }
MultiPoly cnst(long long v) { return MultiPoly(v); }

int expo(const Monomial& m, Var v) { return m[static_cast<std::size_t>(v)]; }
void set_expo(Monomial& m, Var v, int e) {
  m[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(e);
}

MultiPoly drop_q(const MultiPoly& p, QMode mode) {
  return mode == QMode::QOne ? p.substitute_one(Var::Q) : p;
}

BigInt factorial_int(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<MultiPoly> powers(const MultiPoly& base, int top) {
  std::vector<MultiPoly> p{MultiPoly(1)};
  p.reserve(static_cast<std::size_t>(top) + 1);
  for (int k = 1; k <= top; ++k) p.push_back(p.back() * base);
  return p;
}

MultiPoly table_poly(const std::vector<BigInt>& t, Var v) {
  MultiPoly out;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t[j] == 0) continue;
    Monomial m{};
    set_expo(m, v, static_cast<int>(j));
    out.add_term(m, t[j]);
  }
  return out;
}

int descents_of(std::span<const int> w) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) ++d;
  return d;
}

// andre_tables walks all of S_n and S_{n-1}; several entries share it.
const AndreTable& cached_andre(int n) {
  static std::mutex mu;
  static std::map<int, AndreTable> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(n);
  if (it == memo.end()) it = memo.emplace(n, andre_tables(n)).first;
  return it->second;
}

IdentityReport from_cross(const QSeries& lhs, const QSeries& num,
                          const QSeries& den) {
  IdentityReport r;
  r.first_mismatch = cross_check(lhs, num, den);
  r.pass = !r.first_mismatch.has_value();
  return r;
}

IdentityReport join(IdentityReport a, IdentityReport b) {
  return a.pass ? std::move(b) : std::move(a);
}

IdentityReport per_n(
    int nmax, const std::function<std::optional<MismatchInfo>(int)>& check) {
  IdentityReport r;
  for (int n = 1; n <= nmax; ++n) {
    if (auto mm = check(n)) {
      r.pass = false;
      r.first_mismatch = std::move(mm);
      break;
    }
  }
  return r;
}

std::optional<MismatchInfo> poly_eq(int n, const MultiPoly& lhs,
                                    const MultiPoly& rhs) {
  if (lhs == rhs) return std::nullopt;
  return MismatchInfo{n, lhs, rhs};
}

std::optional<MismatchInfo> count_eq(int n, const BigInt& lhs,
                                     const BigInt& rhs) {
  if (lhs == rhs) return std::nullopt;
  return MismatchInfo{n, MultiPoly(lhs), MultiPoly(rhs)};
}

std::optional<MismatchInfo> flag_eq(int n, bool ok) {
  if (ok) return std::nullopt;
  return MismatchInfo{n, MultiPoly(0), MultiPoly(1)};
}

// ----- geometric half-series: sums of beta^k t^(2k+r) / (2k+r)!_q --------

// sum_{k>=1} beta^(k-1) t^(2k)/(2k)!_q
QSeries even_geo(int order, QMode mode, const MultiPoly& beta) {
  return QSeries::build(order, mode, [&](int n) {
    if (n < 2 || n % 2 != 0) return MultiPoly();
    return beta.pow(n / 2 - 1);
  });
}

// sum_{k>=0} beta^k t^(2k+1)/(2k+1)!_q  — sinh(a t)/a with a^2 = beta
QSeries odd_geo(int order, QMode mode, const MultiPoly& beta) {
  return QSeries::build(order, mode, [&](int n) {
    if (n % 2 == 0) return MultiPoly();
    return beta.pow((n - 1) / 2);
  });
}

// sum_{k>=0} beta^(k+1) t^(2k)/(2k)!
QSeries even_geo_shift(int order, QMode mode, const MultiPoly& beta) {
  return QSeries::build(order, mode, [&](int n) {
    if (n % 2 != 0) return MultiPoly();
    return beta.pow(n / 2 + 1);
  });
}

// sum_{k>=0} beta^(k+1) t^(2k+1)/(2k+1)!
QSeries odd_geo_shift(int order, QMode mode, const MultiPoly& beta) {
  return QSeries::build(order, mode, [&](int n) {
    if (n % 2 == 0) return MultiPoly();
    return beta.pow((n - 1) / 2 + 1);
  });
}

// cosh(a t) with a^2 = beta
QSeries cosh_a(int order, QMode mode, const MultiPoly& beta) {
  return QSeries::build(order, mode, [&](int n) {
    if (n % 2 != 0) return MultiPoly();
    return beta.pow(n / 2);
  });
}

// cosh(2 a t) with a^2 = beta
QSeries cosh_2a(int order, QMode mode, const MultiPoly& beta) {
  const MultiPoly four_beta = 4 * beta;
  return QSeries::build(order, mode, [&](int n) {
    if (n % 2 != 0) return MultiPoly();
    return four_beta.pow(n / 2);
  });
}

enum class Parity { All, Even, Odd };

QSeries family_series(
    VerifyContext& ctx, int order, QMode mode, FamilyId f, Parity par,
    MultiPoly c0 = {},
    const std::function<MultiPoly(int, MultiPoly)>& tr = {}) {
  return QSeries::build(order, mode, [&](int n) -> MultiPoly {
    if (n == 0) return c0;
    if (par == Parity::Even && n % 2 != 0) return MultiPoly();
    if (par == Parity::Odd && n % 2 == 0) return MultiPoly();
    MultiPoly p = drop_q(ctx.store.get(f, n), mode);
    return tr ? tr(n, std::move(p)) : std::move(p);
  });
}

// ----- exponential generating function identities, plain families --------

IdentityReport run_cs_q(VerifyContext& ctx, int nmax, QMode mode) {
  const MultiPoly x0 = pv(Var::X0), x1 = pv(Var::X1);
  const MultiPoly y0 = pv(Var::Y0), y1 = pv(Var::Y1);
  const MultiPoly alpha = (y0 - x0) * (y1 - x1);
  QSeries lhs = family_series(ctx, nmax, mode, FamilyId::PA, Parity::All);
  QSeries even = even_geo(nmax, mode, alpha);
  QSeries num = even.scaled(x1 + y1) + odd_geo(nmax, mode, alpha);
  QSeries den = qs_one(nmax, mode) - even.scaled(x0 * y1 + x1 * y0);
  return from_cross(lhs, num, den);
}

IdentityReport run_andre_q(VerifyContext& ctx, int nmax, QMode mode) {
  // The four-variable polynomial at x0 = y1 = 0, x1 = y0 = 1 must retain
  // exactly the up-down contributions.
  IdentityReport specialization = per_n(nmax, [&](int n) {
    MultiPoly p = drop_q(ctx.store.get(FamilyId::PA, n), mode);
    p = p.substitute_zero(Var::X0).substitute_zero(Var::Y1);
    p = p.substitute_one(Var::X1).substitute_one(Var::Y0);
    return poly_eq(n, drop_q(ctx.store.get(FamilyId::E, n), mode), p);
  });
  QSeries lhs = family_series(ctx, nmax, mode, FamilyId::E, Parity::All,
                              MultiPoly(1));
  QSeries num = qs_one(nmax, mode) + qs_sin(nmax, mode, MultiPoly(1));
  QSeries den = qs_cos(nmax, mode, MultiPoly(1));
  return join(std::move(specialization), from_cross(lhs, num, den));
}

IdentityReport run_pz1(VerifyContext& ctx, int nmax, QMode mode) {
  const MultiPoly x = pv(Var::X), y = pv(Var::Y);
  const MultiPoly alpha = (cnst(1) - x) * (cnst(1) - y);
  QSeries lhs = family_series(ctx, nmax, mode, FamilyId::A, Parity::All);
  QSeries even = even_geo(nmax, mode, alpha);
  QSeries num = even.scaled(cnst(1) + x) + odd_geo(nmax, mode, alpha);
  QSeries den = qs_one(nmax, mode) - even.scaled(x + y);
  return from_cross(lhs, num, den);
}

IdentityReport run_pz2(VerifyContext& ctx, int nmax, QMode mode) {
  const MultiPoly x = pv(Var::X), y = pv(Var::Y);
  const MultiPoly beta = -((cnst(1) - x) * (cnst(1) - y));
  QSeries lhs = family_series(ctx, nmax, mode, FamilyId::Ahat, Parity::All);
  QSeries even = even_geo(nmax, mode, beta);
  QSeries num = even.scaled(cnst(1) + x) + odd_geo(nmax, mode, beta);
  QSeries den = qs_one(nmax, mode) - even.scaled(cnst(1) + x * y);
  return from_cross(lhs, num, den);
}

IdentityReport run_stanley_q(VerifyContext& ctx, int nmax, QMode mode) {
  const MultiPoly x = pv(Var::X);
  QSeries lhs = family_series(
      ctx, nmax, mode, FamilyId::A, Parity::All, MultiPoly(1),
      [&](int, MultiPoly p) { return x * p.rename_var(Var::Y, Var::X); });
  QSeries num = qs_one(nmax, mode).scaled(cnst(1) - x);
  QSeries den =
      qs_one(nmax, mode) - qs_exp(nmax, mode, cnst(1) - x).scaled(x);
  return from_cross(lhs, num, den);
}

IdentityReport run_cf(VerifyContext& ctx, int nmax, QMode mode) {
  const MultiPoly x = pv(Var::X), y = pv(Var::Y);
  QSeries lhs = family_series(
      ctx, nmax, mode, FamilyId::PA, Parity::All, MultiPoly(),
      [](int, MultiPoly p) {
        return p.rename_var(Var::X0, Var::Y)
            .rename_var(Var::X1, Var::Y)
            .rename_var(Var::Y0, Var::X)
            .rename_var(Var::Y1, Var::X);
      });
  QSeries ex = qs_exp(nmax, mode, x), ey = qs_exp(nmax, mode, y);
  return from_cross(lhs, ex - ey, ey.scaled(x) - ex.scaled(y));
}

IdentityReport run_chebikin(VerifyContext& ctx, int nmax, QMode mode) {
  const MultiPoly x = pv(Var::X);
  const MultiPoly u = cnst(1) - x;
  QSeries lhs = family_series(
      ctx, nmax, mode, FamilyId::Ahat, Parity::All, MultiPoly(1),
      [&](int, MultiPoly p) { return x * p.rename_var(Var::Y, Var::X); });
  QSeries cosu = qs_cos(nmax, mode, u);
  QSeries num = cosu.scaled(cnst(1) - x);
  QSeries den = cosu - (qs_one(nmax, mode) + qs_sin(nmax, mode, u)).scaled(x);
  return from_cross(lhs, num, den);
}

IdentityReport run_tilde_rel(VerifyContext& ctx, int nmax, QMode mode) {
  return per_n(nmax, [&](int n) {
    MultiPoly a = drop_q(ctx.store.get(FamilyId::A, n), mode);
    MultiPoly ahat = drop_q(ctx.store.get(FamilyId::Ahat, n), mode);
    return poly_eq(n, ahat, a.reverse_var(Var::Y, (n - 1) / 2));
  });
}

IdentityReport run_prel(VerifyContext& ctx, int nmax, QMode mode) {
  return per_n(nmax, [&](int n) -> std::optional<MismatchInfo> {
    const int m1 = n / 2, m0 = (n - 1) / 2;
    MultiPoly pa = drop_q(ctx.store.get(FamilyId::PA, n), mode);
    for (const auto& [mon, c] : pa.terms()) {
      const bool linked = expo(mon, Var::X0) + expo(mon, Var::Y0) == m0 &&
                          expo(mon, Var::X1) + expo(mon, Var::Y1) == m1;
      if (!linked) return MismatchInfo{n, pa, MultiPoly::term(c, mon)};
    }
    MultiPoly a = drop_q(ctx.store.get(FamilyId::A, n), mode);
    MultiPoly rhs;
    for (const auto& [mon, c] : a.terms()) {
      const int d1 = expo(mon, Var::X), d0 = expo(mon, Var::Y);
      Monomial out{};
      set_expo(out, Var::Y1, d1);
      set_expo(out, Var::X1, m1 - d1);
      set_expo(out, Var::Y0, d0);
      set_expo(out, Var::X0, m0 - d0);
      set_expo(out, Var::Q, expo(mon, Var::Q));
      rhs.add_term(out, c);
    }
    return poly_eq(n, pa, rhs);
  });
}

// ----- exponential generating function identities, signed families -------

IdentityReport run_b1(VerifyContext& ctx, int nmax, QMode mode) {
  const MultiPoly x = pv(Var::X), y = pv(Var::Y);
  const MultiPoly alpha = (cnst(1) - x) * (cnst(1) - y);
  const MultiPoly one_xy = cnst(1) + x * y, x_plus_y = x + y;
  QSeries lhs = family_series(ctx, nmax, mode, FamilyId::B, Parity::Even);
  QSeries c2 = cosh_2a(nmax, mode, alpha);
  QSeries num = c2.scaled(x_plus_y) + even_geo_shift(nmax, mode, alpha) -
                qs_one(nmax, mode).scaled(one_xy);
  QSeries den = qs_one(nmax, mode).scaled(one_xy) - c2.scaled(x_plus_y);
  return from_cross(lhs, num, den);
}

IdentityReport run_b2(VerifyContext& ctx, int nmax, QMode mode) {
  const MultiPoly x = pv(Var::X), y = pv(Var::Y);
  const MultiPoly alpha = (cnst(1) - x) * (cnst(1) - y);
  QSeries lhs = family_series(ctx, nmax, mode, FamilyId::B, Parity::Odd);
  QSeries num = odd_geo(nmax, mode, alpha)
                    .scaled((y * y - cnst(1)) * (x - cnst(1)));
  QSeries den = qs_one(nmax, mode).scaled(cnst(1) + x * y) -
                cosh_2a(nmax, mode, alpha).scaled(x + y);
  return from_cross(lhs, num, den);
}

IdentityReport run_typeb_euler(VerifyContext& ctx, int nmax, QMode mode) {
  const MultiPoly x = pv(Var::X);
  QSeries lhs = family_series(
      ctx, nmax, mode, FamilyId::B, Parity::All, MultiPoly(1),
      [](int, MultiPoly p) { return p.rename_var(Var::Y, Var::X); });
  QSeries num = qs_exp(nmax, mode, x - cnst(1)).scaled(x - cnst(1));
  QSeries den =
      qs_one(nmax, mode).scaled(x) - qs_exp(nmax, mode, 2 * (x - cnst(1)));
  return from_cross(lhs, num, den);
}

IdentityReport run_z1(VerifyContext& ctx, int nmax, QMode mode) {
  const MultiPoly x = pv(Var::X), y = pv(Var::Y);
  const MultiPoly beta = -((cnst(1) - x) * (cnst(1) - y));
  const MultiPoly one_xy = cnst(1) + x * y, x_plus_y = x + y;
  QSeries lhs = family_series(ctx, nmax, mode, FamilyId::Bhat, Parity::Even);
  QSeries c2 = cosh_2a(nmax, mode, beta);
  QSeries num = c2.scaled(one_xy) + even_geo_shift(nmax, mode, beta) -
                qs_one(nmax, mode).scaled(x_plus_y);
  QSeries den = qs_one(nmax, mode).scaled(x_plus_y) - c2.scaled(one_xy);
  return from_cross(lhs, num, den);
}

IdentityReport run_z2(VerifyContext& ctx, int nmax, QMode mode) {
  const MultiPoly x = pv(Var::X), y = pv(Var::Y);
  const MultiPoly beta = -((cnst(1) - x) * (cnst(1) - y));
  QSeries lhs = family_series(ctx, nmax, mode, FamilyId::Bhat, Parity::Odd);
  QSeries num = odd_geo_shift(nmax, mode, beta).scaled(cnst(1) + y);
  QSeries den = qs_one(nmax, mode).scaled(x + y) -
                cosh_2a(nmax, mode, beta).scaled(cnst(1) + x * y);
  return from_cross(lhs, num, den);
}

IdentityReport run_p6(VerifyContext& ctx, int nmax, QMode mode) {
  const MultiPoly x = pv(Var::X);
  const MultiPoly u = cnst(1) - x;
  QSeries lhs = family_series(
      ctx, nmax, mode, FamilyId::Bhat, Parity::All, MultiPoly(1),
      [](int, MultiPoly p) { return p.rename_var(Var::Y, Var::X); });
  QSeries num = qs_one(nmax, mode).scaled(x - cnst(1));
  QSeries den = qs_cos(nmax, mode, u).scaled(x - cnst(1)) +
                qs_sin(nmax, mode, u).scaled(x + cnst(1));
  return from_cross(lhs, num, den);
}

IdentityReport run_bb_rel(VerifyContext& ctx, int nmax, QMode mode) {
  return per_n(nmax, [&](int n) {
    MultiPoly b = drop_q(ctx.store.get(FamilyId::B, n), mode);
    MultiPoly bhat = drop_q(ctx.store.get(FamilyId::Bhat, n), mode);
    return poly_eq(n, bhat, b.reverse_var(Var::Y, (n + 1) / 2));
  });
}

IdentityReport run_pbb_rel(VerifyContext& ctx, int nmax, QMode mode) {
  return per_n(nmax, [&](int n) -> std::optional<MismatchInfo> {
    const int m1 = n / 2, m0 = (n + 1) / 2;
    MultiPoly pb = drop_q(ctx.store.get(FamilyId::PB, n), mode);
    for (const auto& [mon, c] : pb.terms()) {
      const bool linked = expo(mon, Var::X0) + expo(mon, Var::Y0) == m0 &&
                          expo(mon, Var::X1) + expo(mon, Var::Y1) == m1;
      if (!linked) return MismatchInfo{n, pb, MultiPoly::term(c, mon)};
    }
    MultiPoly b = drop_q(ctx.store.get(FamilyId::B, n), mode);
    MultiPoly rhs;
    for (const auto& [mon, c] : b.terms()) {
      const int d1 = expo(mon, Var::X), d0 = expo(mon, Var::Y);
      Monomial out{};
      set_expo(out, Var::Y1, d1);
      set_expo(out, Var::X1, m1 - d1);
      set_expo(out, Var::Y0, d0);
      set_expo(out, Var::X0, m0 - d0);
      rhs.add_term(out, c);
    }
    return poly_eq(n, pb, rhs);
  });
}

IdentityReport run_tb3e(VerifyContext& ctx, int nmax, QMode mode) {
  const MultiPoly x0 = pv(Var::X0), x1 = pv(Var::X1);
  const MultiPoly y0 = pv(Var::Y0), y1 = pv(Var::Y1);
  const MultiPoly alpha = (y0 - x0) * (y1 - x1);
  const MultiPoly cross_pair = x0 * y1 + x1 * y0;
  const MultiPoly straight_pair = x0 * x1 + y0 * y1;
  QSeries lhs = family_series(ctx, nmax, mode, FamilyId::PB, Parity::Even);
  QSeries c2 = cosh_2a(nmax, mode, alpha);
  QSeries num = c2.scaled(cross_pair) + even_geo_shift(nmax, mode, alpha) -
                qs_one(nmax, mode).scaled(straight_pair);
  QSeries den =
      qs_one(nmax, mode).scaled(straight_pair) - c2.scaled(cross_pair);
  return from_cross(lhs, num, den);
}

IdentityReport run_tb3o(VerifyContext& ctx, int nmax, QMode mode) {
  const MultiPoly x0 = pv(Var::X0), x1 = pv(Var::X1);
  const MultiPoly y0 = pv(Var::Y0), y1 = pv(Var::Y1);
  const MultiPoly alpha = (y0 - x0) * (y1 - x1);
  QSeries lhs = family_series(ctx, nmax, mode, FamilyId::PB, Parity::Odd);
  QSeries num = odd_geo(nmax, mode, alpha)
                    .scaled((pv(Var::Y0, 2) - pv(Var::X0, 2)) * (y1 - x1));
  QSeries den = qs_one(nmax, mode).scaled(x0 * x1 + y0 * y1) -
                cosh_2a(nmax, mode, alpha).scaled(x0 * y1 + x1 * y0);
  return from_cross(lhs, num, den);
}

// ----- restricted-descent subset sums and block series -------------------

IdentityReport run_key0(VerifyContext&, int nmax, QMode mode) {
  return per_n(nmax, [&](int n) -> std::optional<MismatchInfo> {
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      PositionSubset s;
      s.n = n;
      for (int i = 1; i < n; ++i)
        if (mask & (1u << (i - 1))) s.members.push_back(i);
      auto mm = poly_eq(n, alpha_plain_brute(s, mode),
                        alpha_plain_closed(s, mode));
      if (mm) return mm;
    }
    return std::nullopt;
  });
}

IdentityReport run_alphab(VerifyContext&, int nmax, QMode) {
  return per_n(nmax, [&](int n) -> std::optional<MismatchInfo> {
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      PositionSubset s;
      s.n = n;
      for (int i = 1; i < n; ++i)
        if (mask & (1u << (i - 1))) s.members.push_back(i);
      auto mm = count_eq(n, alpha_bplus_brute(s), alpha_bplus_closed(s));
      if (mm) return mm;
    }
    return std::nullopt;
  });
}

std::optional<MismatchInfo> padded_descent_link(int n, const MultiPoly& lhs,
                                                const MultiPoly& source,
                                                int odd_slots,
                                                int even_slots) {
  const MultiPoly x = pv(Var::X), y = pv(Var::Y);
  const std::vector<MultiPoly> padx = powers(cnst(1) + x, odd_slots);
  const std::vector<MultiPoly> pady = powers(cnst(1) + y, even_slots);
  MultiPoly rhs;
  for (const auto& [mon, c] : source.terms()) {
    const int d_odd = expo(mon, Var::X), d_even = expo(mon, Var::Y);
    MultiPoly term = MultiPoly::term(c, [&] {
      Monomial m{};
      set_expo(m, Var::Q, expo(mon, Var::Q));
      return m;
    }());
    term *= pv(Var::X).pow(d_odd) * padx.at(odd_slots - d_odd);
    term *= pv(Var::Y).pow(d_even) * pady.at(even_slots - d_even);
    rhs += term;
  }
  return poly_eq(n, lhs, rhs);
}

IdentityReport run_pa_link(VerifyContext& ctx, int nmax, QMode mode) {
  return per_n(nmax, [&](int n) {
    MultiPoly lhs = sieve_poly(n, SieveFamily::Plain, mode);
    MultiPoly a = drop_q(ctx.store.get(FamilyId::A, n), mode);
    return padded_descent_link(n, lhs, a, n / 2, (n - 1) / 2);
  });
}

IdentityReport run_bqlink(VerifyContext& ctx, int nmax, QMode mode) {
  return per_n(nmax, [&](int n) {
    MultiPoly lhs = sieve_poly(n, SieveFamily::BPlus, mode);
    MultiPoly bp = ctx.store.get(FamilyId::BPlus, n);
    return padded_descent_link(n, lhs, bp, n / 2, (n - 1) / 2);
  });
}

IdentityReport run_key2b_printed(VerifyContext&, int nmax, QMode mode) {
  QSeries lhs = block_series_brute(BlockSeries::BPrinted, nmax, mode);
  RationalSeries rs = block_series_closed(BlockSeries::BPrinted, nmax, mode);
  return from_cross(lhs, rs.num, rs.den);
}

IdentityReport run_key2b_proof(VerifyContext&, int nmax, QMode mode) {
  QSeries lhs = block_series_brute(BlockSeries::BProof, nmax, mode);
  RationalSeries rs = block_series_closed(BlockSeries::BProof, nmax, mode);
  return from_cross(lhs, rs.num, rs.den);
}

IdentityReport run_key2c(VerifyContext&, int nmax, QMode mode) {
  QSeries lhs = block_series_brute(BlockSeries::C, nmax, mode);
  RationalSeries rs = block_series_closed(BlockSeries::C, nmax, mode);
  return from_cross(lhs, rs.num, rs.den);
}

IdentityReport run_key3(VerifyContext&, int nmax, QMode mode) {
  QSeries lhs_even = QSeries::build(nmax, mode, [&](int n) {
    if (n < 2 || n % 2 != 0) return MultiPoly();
    return sieve_poly(n, SieveFamily::Plain, mode);
  });
  QSeries lhs_odd = QSeries::build(nmax, mode, [&](int n) {
    if (n % 2 == 0) return MultiPoly();
    return sieve_poly(n, SieveFamily::Plain, mode);
  });
  RationalSeries b = block_series_closed(BlockSeries::BProof, nmax, mode);
  RationalSeries c = block_series_closed(BlockSeries::C, nmax, mode);
  if (!(b.den == c.den))
    throw std::logic_error("run_key3: block denominators disagree");
  QSeries den = b.den - b.num.scaled(pv(Var::Y));
  return join(from_cross(lhs_even, b.num, den),
              from_cross(lhs_odd, c.num, den));
}

IdentityReport run_gh(VerifyContext&, int nmax, QMode mode) {
  QSeries lhs_g = block_series_brute(BlockSeries::G, nmax, mode);
  RationalSeries g = block_series_closed(BlockSeries::G, nmax, mode);
  QSeries lhs_h = block_series_brute(BlockSeries::H, nmax, mode);
  RationalSeries h = block_series_closed(BlockSeries::H, nmax, mode);
  return join(from_cross(lhs_g, g.num, g.den),
              from_cross(lhs_h, h.num, h.den));
}

IdentityReport run_fl(VerifyContext&, int nmax, QMode mode) {
  QSeries lhs_f = block_series_brute(BlockSeries::F, nmax, mode);
  RationalSeries f = block_series_closed(BlockSeries::F, nmax, mode);
  QSeries lhs_l = block_series_brute(BlockSeries::L, nmax, mode);
  RationalSeries l = block_series_closed(BlockSeries::L, nmax, mode);
  return join(from_cross(lhs_f, f.num, f.den),
              from_cross(lhs_l, l.num, l.den));
}

IdentityReport run_gfq(VerifyContext&, int nmax, QMode mode) {
  QSeries lhs_even = QSeries::build(nmax, mode, [&](int n) {
    if (n < 2 || n % 2 != 0) return MultiPoly();
    return sieve_poly(n, SieveFamily::BPlus, mode);
  });
  QSeries lhs_odd = QSeries::build(nmax, mode, [&](int n) {
    if (n % 2 == 0) return MultiPoly();
    return sieve_poly(n, SieveFamily::BPlus, mode);
  });
  RationalSeries g = block_series_closed(BlockSeries::G, nmax, mode);
  RationalSeries h = block_series_closed(BlockSeries::H, nmax, mode);
  RationalSeries f = block_series_closed(BlockSeries::F, nmax, mode);
  RationalSeries l = block_series_closed(BlockSeries::L, nmax, mode);
  if (!(g.den == h.den && h.den == f.den && f.den == l.den))
    throw std::logic_error("run_gfq: block denominators disagree");
  const MultiPoly y = pv(Var::Y);
  QSeries geom = h.den - h.num.scaled(y);
  IdentityReport even_part = from_cross(lhs_even, g.num, geom);
  QSeries odd_num = l.num * geom + (f.num * g.num).scaled(y);
  QSeries odd_den = l.den * geom;
  return join(std::move(even_part), from_cross(lhs_odd, odd_num, odd_den));
}

// ----- positive- and negative-first signed series ------------------------

IdentityReport run_bp12(VerifyContext& ctx, int nmax, QMode mode) {
  const MultiPoly x = pv(Var::X), y = pv(Var::Y);
  const MultiPoly alpha = (cnst(1) - x) * (cnst(1) - y);
  QSeries lhs = family_series(ctx, nmax, mode, FamilyId::BPlus, Parity::Even);
  QSeries ca = cosh_a(nmax, mode, alpha);
  QSeries one = qs_one(nmax, mode);
  QSeries num = (ca - one) * (ca.scaled(2 * x) + one.scaled(x + cnst(1)));
  QSeries den = one.scaled(cnst(1) + x * y) -
                cosh_2a(nmax, mode, alpha).scaled(x + y);
  return from_cross(lhs, num, den);
}

IdentityReport run_obp13(VerifyContext& ctx, int nmax, QMode mode) {
  const MultiPoly x = pv(Var::X), y = pv(Var::Y);
  const MultiPoly alpha = (cnst(1) - x) * (cnst(1) - y);
  QSeries lhs = family_series(ctx, nmax, mode, FamilyId::BPlus, Parity::Odd);
  QSeries ca = cosh_a(nmax, mode, alpha);
  QSeries one = qs_one(nmax, mode);
  QSeries num = (odd_geo(nmax, mode, alpha) *
                 (ca.scaled(2 * y) - one.scaled(y + cnst(1))))
                    .scaled(x - cnst(1));
  QSeries den = one.scaled(cnst(1) + x * y) -
                cosh_2a(nmax, mode, alpha).scaled(x + y);
  return from_cross(lhs, num, den);
}

IdentityReport run_bp11(VerifyContext& ctx, int nmax, QMode mode) {
  const MultiPoly x = pv(Var::X), y = pv(Var::Y);
  const MultiPoly alpha = (cnst(1) - x) * (cnst(1) - y);
  QSeries lhs = family_series(ctx, nmax, mode, FamilyId::BMinus, Parity::Even);
  QSeries ca = cosh_a(nmax, mode, alpha);
  QSeries one = qs_one(nmax, mode);
  QSeries num =
      ((ca - one) * (ca.scaled(cnst(2)) + one.scaled(x + cnst(1)))).scaled(y);
  QSeries den = one.scaled(cnst(1) + x * y) -
                cosh_2a(nmax, mode, alpha).scaled(x + y);
  return from_cross(lhs, num, den);
}

IdentityReport run_obp14(VerifyContext& ctx, int nmax, QMode mode) {
  const MultiPoly x = pv(Var::X), y = pv(Var::Y);
  const MultiPoly alpha = (cnst(1) - x) * (cnst(1) - y);
  QSeries lhs = family_series(ctx, nmax, mode, FamilyId::BMinus, Parity::Odd);
  QSeries ca = cosh_a(nmax, mode, alpha);
  QSeries one = qs_one(nmax, mode);
  QSeries num = (odd_geo(nmax, mode, alpha) *
                 (one.scaled(y + cnst(1)) - ca.scaled(cnst(2))))
                    .scaled(y * (x - cnst(1)));
  QSeries den = one.scaled(cnst(1) + x * y) -
                cosh_2a(nmax, mode, alpha).scaled(x + y);
  return from_cross(lhs, num, den);
}

IdentityReport run_rholink(VerifyContext& ctx, int nmax, QMode mode) {
  IdentityReport split = per_n(nmax, [&](int n) {
    MultiPoly whole = drop_q(ctx.store.get(FamilyId::B, n), mode);
    MultiPoly plus = ctx.store.get(FamilyId::BPlus, n);
    MultiPoly minus = ctx.store.get(FamilyId::BMinus, n);
    return poly_eq(n, whole, plus + minus);
  });
  IdentityReport reflect = per_n(nmax, [&](int n) {
    MultiPoly plus = ctx.store.get(FamilyId::BPlus, n);
    MultiPoly minus = ctx.store.get(FamilyId::BMinus, n);
    return poly_eq(n, minus,
                   plus.reverse_var(Var::X, n / 2)
                       .reverse_var(Var::Y, (n + 1) / 2));
  });
  IdentityReport involution = per_n(nmax, [&](int n) {
    bool ok = true;
    enumerate(n, PermKind::Signed, [&](std::span<const int> w) {
      if (!ok) return;
      SignedPermutation tau{{w.begin(), w.end()}};
      StatProfile a = stat_profile(tau);
      StatProfile b = stat_profile(negate(tau));
      ok = a.des_odd + b.des_odd == n / 2 &&
           a.des_even + b.des_even == (n + 1) / 2;
    });
    return flag_eq(n, ok);
  });
  return join(std::move(split), join(std::move(reflect),
                                     std::move(involution)));
}

// ----- partition-count expansions -----------------------------------------

IdentityReport run_frobenius(VerifyContext& ctx, int nmax, QMode) {
  const MultiPoly x = pv(Var::X);
  return per_n(nmax, [&](int n) -> std::optional<MismatchInfo> {
    const std::vector<BigInt> s2 = stirling2_row(n);
    MultiPoly subset_sum = sieve_poly(n, SieveFamily::Plain, QMode::QOne)
                               .rename_var(Var::Y, Var::X);
    MultiPoly surjections;
    for (int k = 0; k <= n - 1; ++k)
      surjections +=
          MultiPoly(factorial_int(k + 1) * s2[k + 1]) * x.pow(k);
    if (auto mm = poly_eq(n, subset_sum, surjections)) return mm;

    MultiPoly eulerian = ctx.store.get(FamilyId::A, n)
                             .substitute_one(Var::Q)
                             .rename_var(Var::Y, Var::X);
    const std::vector<MultiPoly> pads = powers(cnst(1) - x, n);
    MultiPoly rhs;
    for (int k = 1; k <= n; ++k)
      rhs += MultiPoly(factorial_int(k) * s2[k]) * x.pow(k - 1) * pads[n - k];
    return poly_eq(n, eulerian, rhs);
  });
}

// ----- symmetric and gamma-type basis expansions --------------------------

std::optional<MismatchInfo> check_basis(int n, const MultiPoly& p,
                                        SymBasis basis,
                                        const std::vector<BigInt>& want) {
  const int m = n / 2;
  BasisExpansion target{m, basis, want};
  MultiPoly rhs = basis_combination(target);
  if (auto mm = poly_eq(n, p, rhs)) return mm;
  auto got = expand_in_basis(p, m, basis);
  if (!got.has_value() || !(got.value() == target))
    return MismatchInfo{n, p, rhs};
  return std::nullopt;
}

IdentityReport run_sym_s(VerifyContext& ctx, int nmax, QMode) {
  return per_n(nmax, [&](int n) {
    return check_basis(n, ctx.store.get(FamilyId::Atilde, n), SymBasis::Sym,
                       count_table(n, CountKind::A));
  });
}

IdentityReport run_sym_t(VerifyContext& ctx, int nmax, QMode) {
  return per_n(nmax, [&](int n) {
    return check_basis(n, ctx.store.get(FamilyId::Abar, n), SymBasis::Sym,
                       count_table(n, CountKind::Abar));
  });
}

IdentityReport run_abar_sym(VerifyContext&, int nmax, QMode) {
  return per_n(nmax, [&](int n) {
    std::vector<BigInt> a = count_table(n, CountKind::A);
    std::vector<BigInt> abar = count_table(n, CountKind::Abar);
    std::vector<BigInt> flipped(a.rbegin(), a.rend());
    return poly_eq(n, table_poly(abar, Var::X), table_poly(flipped, Var::X));
  });
}

IdentityReport run_sd(VerifyContext&, int nmax, QMode) {
  return per_n(nmax, [&](int n) {
    const int m = n / 2;
    std::vector<BigInt> a = count_table(n, CountKind::A);
    const std::vector<BigInt>& d = cached_andre(n).d;
    std::vector<BigInt> rhs(m + 1, 0);
    for (int j = 0; j <= m; ++j)
      for (int i = 0; i <= j; ++i)
        rhs[j] += binomial_int(m - i, j - i) * d[i];
    return poly_eq(n, table_poly(a, Var::X), table_poly(rhs, Var::X));
  });
}

IdentityReport run_gamma_sun(VerifyContext& ctx, int nmax, QMode) {
  return per_n(nmax, [&](int n) {
    return check_basis(n, ctx.store.get(FamilyId::Atilde, n), SymBasis::Gamma,
                       cached_andre(n).d);
  });
}

IdentityReport run_gamma_euler(VerifyContext& ctx, int nmax, QMode) {
  const MultiPoly x = pv(Var::X);
  return per_n(nmax, [&](int n) {
    MultiPoly lhs = ctx.store.get(FamilyId::A, n)
                        .substitute_one(Var::Q)
                        .rename_var(Var::Y, Var::X);
    const std::vector<BigInt>& d = cached_andre(n).d;
    const std::vector<MultiPoly> pads = powers(cnst(1) + x, n);
    MultiPoly rhs;
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (d[j] == 0) continue;
      const int jj = static_cast<int>(j);
      rhs += MultiPoly(d[j] * (BigInt(1) << jj)) * x.pow(jj) *
             pads.at(n - 1 - 2 * jj);
    }
    return poly_eq(n, lhs, rhs);
  });
}

IdentityReport run_gamma_alt(VerifyContext& ctx, int nmax, QMode) {
  return per_n(nmax, [&](int n) {
    const std::vector<BigInt>& dbar = cached_andre(n).dbar;
    std::vector<BigInt> signed_dbar(dbar.size());
    for (std::size_t i = 0; i < dbar.size(); ++i)
      signed_dbar[i] = (i % 2 == 0) ? dbar[i] : -dbar[i];
    return check_basis(n, ctx.store.get(FamilyId::Abar, n), SymBasis::Gamma,
                       signed_dbar);
  });
}

IdentityReport run_rs_andre(VerifyContext&, int nmax, QMode) {
  IdentityReport equidistribution = per_n(nmax, [&](int n) {
    const AndreTable& t = cached_andre(n);
    return poly_eq(n, t.descent_poly, t.rs_prev);
  });
  IdentityReport shifted = per_n(nmax, [&](int n) {
    const AndreTable& t = cached_andre(n);
    MultiPoly lhs = t.rs_prev.substitute(Var::X, cnst(1) + pv(Var::X));
    return poly_eq(n, lhs, table_poly(t.dbar, Var::X));
  });
  return join(std::move(equidistribution), std::move(shifted));
}

IdentityReport run_sym_u(VerifyContext& ctx, int nmax, QMode) {
  return per_n(nmax, [&](int n) {
    return check_basis(n, ctx.store.get(FamilyId::Btilde, n), SymBasis::Sym,
                       count_table(n, CountKind::B));
  });
}

IdentityReport run_sym_v(VerifyContext& ctx, int nmax, QMode) {
  return per_n(nmax, [&](int n) {
    return check_basis(n, ctx.store.get(FamilyId::Bbar, n), SymBasis::Sym,
                       count_table(n, CountKind::Bbar));
  });
}

IdentityReport run_u_gamma(VerifyContext& ctx, int nmax, QMode) {
  return per_n(nmax, [&](int n) {
    std::vector<BigInt> g = count_table(n, CountKind::G);
    for (std::size_t j = 0; j < g.size(); ++j)
      g[j] <<= static_cast<int>(j);
    return check_basis(n, ctx.store.get(FamilyId::Btilde, n), SymBasis::Gamma,
                       g);
  });
}

IdentityReport run_v_gamma(VerifyContext& ctx, int nmax, QMode) {
  return per_n(nmax, [&](int n) {
    std::vector<BigInt> gbar = count_table(n, CountKind::Gbar);
    for (std::size_t j = 0; j < gbar.size(); ++j) {
      gbar[j] <<= static_cast<int>(j);
      if (j % 2 == 1) gbar[j] = -gbar[j];
    }
    return check_basis(n, ctx.store.get(FamilyId::Bbar, n), SymBasis::Gamma,
                       gbar);
  });
}

IdentityReport run_tbb_id(VerifyContext& ctx, int nmax, QMode) {
  const MultiPoly x = pv(Var::X), y = pv(Var::Y);
  return per_n(nmax, [&](int n) {
    const int m = n / 2;
    const std::vector<BigInt> g = count_table(n, CountKind::G);
    const std::vector<MultiPoly> inner = powers(cnst(1) + x * y, m);
    const std::vector<MultiPoly> outer =
        powers(cnst(1) + x + y + x * y, m);
    MultiPoly rhs;
    for (int j = 0; j <= m; ++j)
      rhs += MultiPoly(g[j] * (BigInt(1) << j)) * inner[j] * outer[m - j];
    return poly_eq(n, ctx.store.get(FamilyId::Bbar, n), rhs);
  });
}

IdentityReport run_gbar_poly(VerifyContext&, int nmax, QMode) {
  const MultiPoly x = pv(Var::X);
  return per_n(nmax, [&](int n) {
    const int m = n / 2;
    std::vector<BigInt> g = count_table(n, CountKind::G);
    std::vector<BigInt> gbar = count_table(n, CountKind::Gbar);
    const std::vector<MultiPoly> shifted = powers(cnst(2) + x, m);
    MultiPoly rhs;
    for (int k = 0; k <= m; ++k) rhs += MultiPoly(g[k]) * shifted[k];
    return poly_eq(n, table_poly(gbar, Var::X), rhs);
  });
}

IdentityReport run_petersen(VerifyContext& ctx, int nmax, QMode) {
  const MultiPoly x = pv(Var::X);
  return per_n(nmax, [&](int n) {
    MultiPoly lhs =
        ctx.store.get(FamilyId::B, n).rename_var(Var::Y, Var::X);
    const std::vector<BigInt> g = count_table(n, CountKind::G);
    const std::vector<MultiPoly> pads = powers(cnst(1) + x, n);
    MultiPoly rhs;
    for (std::size_t j = 0; j < g.size(); ++j) {
      const int jj = static_cast<int>(j);
      rhs += MultiPoly(g[j]) * (4 * x).pow(jj) * pads[n - 2 * jj];
    }
    return poly_eq(n, lhs, rhs);
  });
}

IdentityReport run_mfmy(VerifyContext& ctx, int nmax, QMode) {
  const MultiPoly x = pv(Var::X);
  return per_n(nmax, [&](int n) {
    MultiPoly lhs =
        ctx.store.get(FamilyId::Bhat, n).rename_var(Var::Y, Var::X);
    const std::vector<BigInt> gbar = count_table(n, CountKind::Gbar);
    const std::vector<MultiPoly> pads = powers(cnst(1) + x, n);
    MultiPoly rhs;
    for (std::size_t j = 0; j < gbar.size(); ++j) {
      const int jj = static_cast<int>(j);
      rhs += MultiPoly(gbar[j]) * (-4 * x).pow(jj) * pads[n - 2 * jj];
    }
    return poly_eq(n, lhs, rhs);
  });
}

// ----- the signing process and its bound ----------------------------------

IdentityReport run_l1_bound(VerifyContext&, int nmax, QMode) {
  return per_n(nmax, [&](int n) {
    bool ok = true;
    enumerate(n, PermKind::Signed, [&](std::span<const int> w) {
      if (!ok) return;
      StatProfile p = stat_profile(SignedPermutation{{w.begin(), w.end()}});
      if (p.des_even == 0 && p.lpk > p.des_odd) ok = false;
    });
    return flag_eq(n, ok);
  });
}

IdentityReport run_process_a(VerifyContext&, int nmax, QMode) {
  return per_n(nmax, [&](int n) -> std::optional<MismatchInfo> {
    const int m = n / 2;
    std::map<std::vector<int>, int> expected;  // word -> odd descents
    enumerate(n, PermKind::Signed, [&](std::span<const int> w) {
      StatProfile p = stat_profile(SignedPermutation{{w.begin(), w.end()}});
      if (p.des_even == 0)
        expected.emplace(std::vector<int>(w.begin(), w.end()), p.des_odd);
    });
    const std::vector<BigInt> b = count_table(n, CountKind::B);
    std::vector<BigInt> produced(m + 1, 0);
    std::set<std::vector<int>> seen;
    bool ok = true;
    enumerate(n, PermKind::Plain, [&](std::span<const int> w) {
      if (!ok) return;
      Permutation u{{w.begin(), w.end()}};
      const int i = stat_profile(u).lpk;
      for (int j = i; j <= m && ok; ++j) {
        std::vector<SignedPermutation> images = process_a_images(u, j);
        if (BigInt(images.size()) !=
            binomial_int(m - i, j - i) * (BigInt(1) << i)) {
          ok = false;
          break;
        }
        for (const SignedPermutation& omega : images) {
          StatProfile p = stat_profile(omega);
          std::vector<int> absolutes(omega.values.size());
          for (std::size_t k = 0; k < absolutes.size(); ++k)
            absolutes[k] = std::abs(omega.values[k]);
          auto hit = expected.find(omega.values);
          if (p.des_even != 0 || p.des_odd != j ||
              absolutes != u.values || hit == expected.end() ||
              hit->second != j || !seen.insert(omega.values).second) {
            ok = false;
            break;
          }
          produced[j] += 1;
        }
      }
    });
    if (!ok || seen.size() != expected.size()) return flag_eq(n, false);
    return poly_eq(n, table_poly(produced, Var::X), table_poly(b, Var::X));
  });
}

// ----- tree model checks ---------------------------------------------------

IdentityReport run_tree_golden(VerifyContext&, int, QMode) {
  const std::vector<int> word{5, 6, 2, 3, 1, 4};
  MinMaxTree t = MinMaxTree::build(std::span<const int>(word));
  const std::string golden_before =
      "6 (max)\n"
      "  L: 5\n"
      "  R: 1 (min)\n"
      "    L: 2 (min)\n"
      "      R: 3\n"
      "    R: 4\n";
  const std::string golden_after =
      "1 (min)\n"
      "  L: 5\n"
      "  R: 2 (min)\n"
      "    L: 3 (min)\n"
      "      R: 4\n"
      "    R: 6\n";
  bool ok = t.inorder() == word && t.render_ascii() == golden_before;
  MinMaxTree u = t.apply_psi(2);
  ok = ok && u.inorder() == std::vector<int>{5, 1, 3, 4, 2, 6} &&
       u.render_ascii() == golden_after && u.apply_psi(2) == t;
  IdentityReport r;
  r.first_mismatch = flag_eq(6, ok);
  r.pass = !r.first_mismatch.has_value();
  return r;
}

IdentityReport run_tree_inorder(VerifyContext&, int nmax, QMode) {
  return per_n(nmax, [&](int n) {
    bool ok = true;
    enumerate(n, PermKind::Plain, [&](std::span<const int> w) {
      if (!ok) return;
      MinMaxTree t = MinMaxTree::build(w);
      std::vector<int> got = t.inorder();
      ok = std::equal(got.begin(), got.end(), w.begin(), w.end());
    });
    return flag_eq(n, ok);
  });
}

IdentityReport run_tree_involution(VerifyContext&, int nmax, QMode) {
  return per_n(nmax, [&](int n) {
    bool ok = true;
    enumerate(n, PermKind::Plain, [&](std::span<const int> w) {
      if (!ok) return;
      MinMaxTree t = MinMaxTree::build(w);
      for (int i = 1; i <= n && ok; ++i)
        ok = t.apply_psi(i).apply_psi(i) == t;
    });
    return flag_eq(n, ok);
  });
}

IdentityReport run_tree_commute(VerifyContext&, int nmax, QMode) {
  return per_n(nmax, [&](int n) {
    bool ok = true;
    enumerate(n, PermKind::Plain, [&](std::span<const int> w) {
      if (!ok) return;
      MinMaxTree t = MinMaxTree::build(w);
      for (int i = 1; i <= n && ok; ++i)
        for (int j = i + 1; j <= n && ok; ++j)
          ok = t.apply_psi(i).apply_psi(j) == t.apply_psi(j).apply_psi(i);
    });
    return flag_eq(n, ok);
  });
}

IdentityReport run_tree_andre_hr(VerifyContext&, int nmax, QMode) {
  return per_n(nmax, [&](int n) {
    bool ok = true;
    enumerate(n, PermKind::Plain, [&](std::span<const int> w) {
      if (!ok) return;
      Permutation p{{w.begin(), w.end()}};
      ok = is_andre_first_definition(p) == is_andre_first_tree(p);
    });
    return flag_eq(n, ok);
  });
}

std::set<std::vector<int>> collect_class(int n,
                                         bool (*pred)(const Permutation&)) {
  std::set<std::vector<int>> out;
  enumerate(n, PermKind::Plain, [&](std::span<const int> w) {
    Permutation p{{w.begin(), w.end()}};
    if (pred(p)) out.emplace(w.begin(), w.end());
  });
  return out;
}

IdentityReport run_tree_andre_sets(VerifyContext&, int nmax, QMode) {
  const std::set<std::vector<int>> first4{{1, 2, 3, 4},
                                          {1, 3, 2, 4},
                                          {2, 3, 1, 4},
                                          {2, 1, 3, 4},
                                          {3, 1, 2, 4}};
  const std::set<std::vector<int>> simsun3{
      {2, 3, 1}, {1, 3, 2}, {3, 1, 2}, {1, 2, 3}, {2, 1, 3}};
  const std::set<std::vector<int>> second4{{1, 2, 3, 4},
                                           {1, 4, 2, 3},
                                           {3, 1, 2, 4},
                                           {3, 4, 1, 2},
                                           {4, 1, 2, 3}};
  bool golden = collect_class(4, is_andre_first) == first4 &&
                collect_class(3, is_simsun) == simsun3 &&
                collect_class(4, is_andre_second) == second4;
  IdentityReport fixed;
  fixed.first_mismatch = flag_eq(4, golden);
  fixed.pass = !fixed.first_mismatch.has_value();

  // Second-kind descent counts follow the same table as the first kind.
  IdentityReport histogram = per_n(nmax, [&](int n) {
    const std::vector<BigInt>& d = cached_andre(n).d;
    std::vector<BigInt> counted(d.size(), 0);
    bool in_range = true;
    enumerate(n, PermKind::Plain, [&](std::span<const int> w) {
      if (!in_range) return;
      Permutation p{{w.begin(), w.end()}};
      if (!is_andre_second(p)) return;
      const std::size_t des = static_cast<std::size_t>(descents_of(w));
      if (des >= counted.size()) {
        in_range = false;
        return;
      }
      counted[des] += 1;
    });
    if (!in_range) return flag_eq(n, false);
    return poly_eq(n, table_poly(counted, Var::X), table_poly(d, Var::X));
  });
  return join(std::move(fixed), std::move(histogram));
}

IdentityReport run_tree_euler_sum(VerifyContext&, int nmax, QMode) {
  return per_n(nmax, [&](int n) {
    const std::vector<BigInt>& d = cached_andre(n).d;
    BigInt total = 0;
    for (const BigInt& v : d) total += v;
    return count_eq(n, total, enumeration_count(n, PermKind::UpDown));
  });
}

// ----- catalog assembly ----------------------------------------------------

CatalogEntry make(std::string id, QScope scope, bool signed_scale,
                  int default_nmax, int max_nmax, std::string summary,
                  IdentityReport (*run)(VerifyContext&, int, QMode)) {
  CatalogEntry e;
  e.id = std::move(id);
  e.qscope = scope;
  e.signed_scale = signed_scale;
  e.default_nmax = default_nmax;
  e.max_nmax = max_nmax;
  e.summary = std::move(summary);
  e.run = run;
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  constexpr QScope kFree = QScope::QFree;
  constexpr QScope kGeneric = QScope::GenericRequired;
  constexpr QScope kRecorded = QScope::QOneRequiredGenericRecorded;
  std::vector<CatalogEntry> entries;
  entries.push_back(make(
      "CS_Q", kRecorded, false, 8, 10,
      "four-variable ascent/descent-parity series against its closed form",
      run_cs_q));
  entries.push_back(make(
      "ANDRE_Q", kGeneric, false, 8, 10,
      "up-down inversion series equals (1 + sin_q)/cos_q", run_andre_q));
  entries.push_back(make(
      "PZ1", kRecorded, false, 8, 10,
      "descent-parity series A against its closed form", run_pz1));
  entries.push_back(make(
      "PZ2", kRecorded, false, 8, 10,
      "mixed descent/ascent-parity series against its closed form",
      run_pz2));
  entries.push_back(make(
      "STANLEY_Q", kGeneric, false, 8, 10,
      "Eulerian series as a geometric q-exponential ratio", run_stanley_q));
  entries.push_back(make(
      "CF", kFree, false, 8, 10,
      "homogeneous ascent/descent series as an exponential ratio", run_cf));
  entries.push_back(make(
      "CHEBIKIN", kFree, false, 8, 10,
      "alternating-descent series in secant/tangent form", run_chebikin));
  entries.push_back(make(
      "TILDE_REL", kGeneric, false, 8, 10,
      "Ahat_n is the bounded y-reversal of A_n", run_tilde_rel));
  entries.push_back(make(
      "PREL", kGeneric, false, 8, 10,
      "four-variable polynomial reconstructs from A_n via slot counts",
      run_prel));
  entries.push_back(make(
      "B1", kFree, true, 7, 8,
      "even-length signed descent-parity series closed form", run_b1));
  entries.push_back(make(
      "B2", kFree, true, 7, 8,
      "odd-length signed descent-parity series closed form", run_b2));
  entries.push_back(make(
      "TYPEB_EULER", kFree, true, 7, 8,
      "signed Eulerian series as an exponential ratio", run_typeb_euler));
  entries.push_back(make(
      "Z1", kFree, true, 7, 8,
      "even-length signed mixed-parity series closed form", run_z1));
  entries.push_back(make(
      "Z2", kFree, true, 7, 8,
      "odd-length signed mixed-parity series closed form", run_z2));
  entries.push_back(make(
      "P6", kFree, true, 7, 8,
      "signed alternating Eulerian series in trigonometric form", run_p6));
  entries.push_back(make(
      "BB_REL", kFree, true, 7, 8,
      "Bhat_n is the bounded y-reversal of B_n", run_bb_rel));
  entries.push_back(make(
      "PBB_REL", kFree, true, 7, 8,
      "signed four-variable polynomial reconstructs from B_n", run_pbb_rel));
  entries.push_back(make(
      "TB3E", kFree, true, 7, 8,
      "even-length signed four-variable series closed form", run_tb3e));
  entries.push_back(make(
      "TB3O", kFree, true, 7, 8,
      "odd-length signed four-variable series closed form", run_tb3o));
  entries.push_back(make(
      "KEY0", kGeneric, false, 7, 9,
      "restricted-descent inversion sums equal Gaussian multinomials",
      run_key0));
  entries.push_back(make(
      "ALPHAB", kFree, true, 7, 7,
      "positive-first restricted-descent counts in product form",
      run_alphab));
  entries.push_back(make(
      "PA_LINK", kGeneric, false, 8, 10,
      "subset-sum polynomial equals the padded descent polynomial",
      run_pa_link));
  entries.push_back(make(
      "BQLINK", kFree, true, 7, 8,
      "signed subset-sum polynomial equals the padded positive-first form",
      run_bqlink));
  entries.push_back(make(
      "KEY2B_PRINTED", kRecorded, false, 8, 10,
      "even odd-block series against the compact closed form",
      run_key2b_printed));
  entries.push_back(make(
      "KEY2B_PROOF", kGeneric, false, 8, 10,
      "even odd-block series against the expanded closed form",
      run_key2b_proof));
  entries.push_back(make(
      "KEY2C", kGeneric, false, 8, 10,
      "odd odd-block series against its closed form", run_key2c));
  entries.push_back(make(
      "KEY3", kGeneric, false, 8, 10,
      "full subset-sum series as geometric combinations of block series",
      run_key3));
  entries.push_back(make(
      "GH", kFree, true, 7, 10,
      "even signed block series G and H against their closed forms",
      run_gh));
  entries.push_back(make(
      "FL", kFree, true, 7, 10,
      "odd signed block series F and L against their closed forms", run_fl));
  entries.push_back(make(
      "GFQ", kFree, true, 7, 10,
      "signed subset-sum series as geometric combinations of G, H, F, L",
      run_gfq));
  entries.push_back(make(
      "BP12", kFree, true, 7, 8,
      "even-length positive-first series closed form", run_bp12));
  entries.push_back(make(
      "OBP13", kFree, true, 7, 8,
      "odd-length positive-first series closed form", run_obp13));
  entries.push_back(make(
      "BP11", kFree, true, 7, 8,
      "even-length negative-first series closed form", run_bp11));
  entries.push_back(make(
      "OBP14", kFree, true, 7, 8,
      "odd-length negative-first series closed form", run_obp14));
  entries.push_back(make(
      "RHOLINK", kFree, true, 7, 8,
      "negation links the positive- and negative-first polynomials",
      run_rholink));
  entries.push_back(make(
      "FROBENIUS", kFree, false, 9, 10,
      "descent polynomials via ordered set partitions", run_frobenius));
  entries.push_back(make(
      "SYM_S", kFree, false, 9, 10,
      "rescaled A-polynomials expand in the symmetric basis", run_sym_s));
  entries.push_back(make(
      "SYM_T", kFree, false, 9, 10,
      "rescaled Ahat-polynomials expand in the symmetric basis", run_sym_t));
  entries.push_back(make(
      "ABAR_SYM", kFree, false, 9, 10,
      "the two plain count tables are reverses of each other",
      run_abar_sym));
  entries.push_back(make(
      "SD", kFree, false, 9, 10,
      "plain count table from the tree-class descent table", run_sd));
  entries.push_back(make(
      "GAMMA_SUN", kFree, false, 9, 10,
      "rescaled A-polynomials expand in the gamma basis", run_gamma_sun));
  entries.push_back(make(
      "GAMMA_EULER", kFree, false, 9, 10,
      "Eulerian polynomials in gamma form with doubled coefficients",
      run_gamma_euler));
  entries.push_back(make(
      "GAMMA_ALT", kFree, false, 9, 10,
      "rescaled Ahat-polynomials expand with alternating gamma coefficients",
      run_gamma_alt));
  entries.push_back(make(
      "RS_ANDRE", kFree, false, 9, 9,
      "descent polynomial equidistribution and its binomial shift",
      run_rs_andre));
  entries.push_back(make(
      "SYM_U", kFree, true, 7, 8,
      "rescaled B-polynomials expand in the symmetric basis", run_sym_u));
  entries.push_back(make(
      "SYM_V", kFree, true, 7, 8,
      "rescaled Bhat-polynomials expand in the symmetric basis", run_sym_v));
  entries.push_back(make(
      "U_GAMMA", kFree, true, 7, 8,
      "rescaled B-polynomials expand in the gamma basis by left peaks",
      run_u_gamma));
  entries.push_back(make(
      "V_GAMMA", kFree, true, 7, 8,
      "rescaled Bhat-polynomials expand with alternating gamma coefficients",
      run_v_gamma));
  entries.push_back(make(
      "TBB_ID", kFree, true, 7, 8,
      "rescaled Bhat-polynomials in the third two-variable basis",
      run_tbb_id));
  entries.push_back(make(
      "GBAR_POLY", kFree, false, 7, 10,
      "the shifted left-peak table as a polynomial substitution",
      run_gbar_poly));
  entries.push_back(make(
      "PETERSEN", kFree, true, 7, 8,
      "signed Eulerian polynomials in gamma form by left peaks",
      run_petersen));
  entries.push_back(make(
      "MFMY", kFree, true, 7, 8,
      "signed alternating polynomials in alternating gamma form", run_mfmy));
  entries.push_back(make(
      "L1_BOUND", kFree, true, 6, 7,
      "no even descents bounds left peaks by odd descents", run_l1_bound));
  entries.push_back(make(
      "PROCESS_A", kFree, true, 5, 7,
      "the four-step signing process hits every target word exactly once",
      run_process_a));
  entries.push_back(make(
      "TREE_GOLDEN", kFree, false, 6, 6,
      "fixed six-letter tree build, render, and pivot image", run_tree_golden));
  entries.push_back(make(
      "TREE_INORDER", kFree, false, 7, 9,
      "inorder readout of the tree recovers the word", run_tree_inorder));
  entries.push_back(make(
      "TREE_INVOLUTION", kFree, false, 6, 8,
      "every pivot operator is an involution", run_tree_involution));
  entries.push_back(make(
      "TREE_COMMUTE", kFree, false, 6, 8,
      "pivot operators at different positions commute", run_tree_commute));
  entries.push_back(make(
      "TREE_ANDRE_HR", kFree, false, 8, 9,
      "factorization and all-min-tree characterizations agree",
      run_tree_andre_hr));
  entries.push_back(make(
      "TREE_ANDRE_SETS", kFree, false, 8, 9,
      "fixed small classes plus the second-kind descent histogram",
      run_tree_andre_sets));
  entries.push_back(make(
      "TREE_EULER_SUM", kFree, false, 9, 9,
      "tree-class descent counts sum to the up-down count",
      run_tree_euler_sum));

  std::set<std::string> ids;
  for (const CatalogEntry& e : entries)
    if (!ids.insert(e.id).second)
      throw std::logic_error("catalog: duplicate id " + e.id);
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_entry(const std::string& id) {
  for (const CatalogEntry& e : catalog())
    if (e.id == id) return &e;
  return nullptr;
}

IdentityReport run_identity(VerifyContext& ctx, const CatalogEntry& entry,
                            int nmax, QMode qmode) {
  if (nmax < 2)
    throw std::invalid_argument("run_identity: truncation below 2 for " +
                                entry.id);
  if (nmax > entry.max_nmax)
    throw std::invalid_argument("run_identity: truncation beyond " +
                                std::to_string(entry.max_nmax) + " for " +
                                entry.id);
  const QMode mode = entry.qscope == QScope::QFree ? QMode::QOne : qmode;
  const auto started = std::chrono::steady_clock::now();
  IdentityReport r = entry.run(ctx, nmax, mode);
  r.id = entry.id;
  r.nmax = nmax;
  r.qmode = mode;
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  return r;
}

nlohmann::json report_to_json(const IdentityReport& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["nmax"] = r.nmax;
  j["qmode"] = std::string(qmode_name(r.qmode));
  j["status"] = r.pass ? "pass" : "fail";
  if (r.first_mismatch.has_value()) {
    j["first_mismatch"] = {{"n", r.first_mismatch->n},
                           {"lhs", r.first_mismatch->lhs.render()},
                           {"rhs", r.first_mismatch->rhs.render()}};
  } else {
    j["first_mismatch"] = nullptr;
  }
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

bool CatalogRun::all_required_pass() const {
  for (const IdentityReport& r : required)
    if (!r.pass) return false;
  return true;
}

CatalogRun run_catalog(VerifyContext& ctx, int nmax_plain, int nmax_signed,
                       int jobs) {
  struct Task {
    const CatalogEntry* entry;
    int nmax;
    QMode mode;
    bool recorded;
  };
  std::vector<Task> tasks;
  for (const CatalogEntry& e : catalog()) {
    const int override_depth = e.signed_scale ? nmax_signed : nmax_plain;
    int depth = e.default_nmax;
    if (override_depth > 0) depth = std::min(depth, override_depth);
    depth = std::max(depth, 2);
    if (e.qscope == QScope::QOneRequiredGenericRecorded) {
      tasks.push_back({&e, depth, QMode::QOne, false});
      tasks.push_back({&e, depth, QMode::Generic, true});
    } else if (e.qscope == QScope::GenericRequired) {
      tasks.push_back({&e, depth, QMode::Generic, false});
    } else {
      tasks.push_back({&e, depth, QMode::QOne, false});
    }
  }

  std::vector<IdentityReport> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        results[i] =
            run_identity(ctx, *tasks[i].entry, tasks[i].nmax, tasks[i].mode);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  const int workers =
      std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  CatalogRun out;
  for (std::size_t i = 0; i < tasks.size(); ++i)
    (tasks[i].recorded ? out.recorded : out.required)
        .push_back(std::move(results[i]));
  return out;
}

nlohmann::json catalog_run_to_json(const CatalogRun& run) {
  nlohmann::json j;
  j["required"] = nlohmann::json::array();
  for (const IdentityReport& r : run.required)
    j["required"].push_back(report_to_json(r));
  j["recorded"] = nlohmann::json::array();
  for (const IdentityReport& r : run.recorded)
    j["recorded"].push_back(report_to_json(r));
  j["all_required_pass"] = run.all_required_pass();
  return j;
}

}  // namespace parityperm
