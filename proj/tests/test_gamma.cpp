#include <doctest.h>

#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "parityperm/families.hpp"
#include "parityperm/gamma.hpp"
#include "parityperm/qnum.hpp"

using namespace parityperm;

namespace {

MultiPoly X(int e = 1) { return MultiPoly::variable(Var::X, e); }
MultiPoly Y(int e = 1) { return MultiPoly::variable(Var::Y, e); }
MultiPoly C(long long v) { return MultiPoly(v); }

Permutation perm(std::vector<int> v) { return Permutation{std::move(v)}; }

}  // namespace

TEST_CASE("basis combinations expand correctly") {
  // (x+y)^0 (1+xy)^2 + 2 (x+y)^1 (1+xy)^1
  BasisExpansion e{2, SymBasis::Sym, {1, 2, 0}};
  MultiPoly p = basis_combination(e);
  MultiPoly want = (C(1) + X() * Y()).pow(2) +
                   2 * (X() + Y()) * (C(1) + X() * Y());
  CHECK(p == want);

  BasisExpansion g{1, SymBasis::Gamma, {3, -1}};
  CHECK(basis_combination(g) ==
        3 * (C(1) + X() + Y() + X() * Y()) - (X() + Y()));
}

TEST_CASE("expansion inverts combination in both bases") {
  for (SymBasis basis : {SymBasis::Sym, SymBasis::Gamma}) {
    BasisExpansion e{3, basis, {5, -2, 7, 1}};
    auto back = expand_in_basis(basis_combination(e), 3, basis);
    REQUIRE(back.has_value());
    CHECK(*back == e);
  }
}

TEST_CASE("polynomials outside the span are rejected gently") {
  CHECK(!expand_in_basis(X(), 1, SymBasis::Sym).has_value());
  CHECK(!expand_in_basis(X(2), 1, SymBasis::Gamma).has_value());
  // wrong variables are a hard error
  CHECK_THROWS_AS(
      (void)expand_in_basis(MultiPoly::variable(Var::Q), 1, SymBasis::Sym),
      std::invalid_argument);
}

TEST_CASE("count tables at small length") {
  CHECK(count_table(3, CountKind::A) == std::vector<BigInt>{1, 2});
  CHECK(count_table(3, CountKind::Abar) == std::vector<BigInt>{2, 1});
  CHECK(count_table(2, CountKind::G) == std::vector<BigInt>{1, 1});
  CHECK(count_table(2, CountKind::Gbar) == std::vector<BigInt>{3, 1});
  CHECK(count_table(2, CountKind::B) == std::vector<BigInt>{1, 3});
  CHECK(count_table(2, CountKind::Bbar) == std::vector<BigInt>{3, 1});
  CHECK(count_table(1, CountKind::A) == std::vector<BigInt>{1});
}

TEST_CASE("count tables match direct enumeration") {
  for (int n = 1; n <= 5; ++n) {
    const int m = n / 2;
    std::vector<BigInt> a(m + 1, 0), abar(m + 1, 0), g(m + 1, 0);
    enumerate(n, PermKind::Plain, [&](std::span<const int> w) {
      StatProfile s = stat_profile(Permutation{{w.begin(), w.end()}});
      if (s.des_even == 0) a.at(s.des_odd) += 1;
      if (s.asc_even == 0) abar.at(s.des_odd) += 1;
      g.at(s.lpk) += 1;
    });
    CHECK(count_table(n, CountKind::A) == a);
    CHECK(count_table(n, CountKind::Abar) == abar);
    CHECK(count_table(n, CountKind::G) == g);

    std::vector<BigInt> b(m + 1, 0), bbar(m + 1, 0);
    enumerate(n, PermKind::Signed, [&](std::span<const int> w) {
      StatProfile s = stat_profile(SignedPermutation{{w.begin(), w.end()}});
      if (s.des_even == 0) b.at(s.des_odd) += 1;
      if (s.asc_even == 0) bbar.at(s.des_odd) += 1;
    });
    CHECK(count_table(n, CountKind::B) == b);
    CHECK(count_table(n, CountKind::Bbar) == bbar);

    // gbar(n,j) = sum_i C(i+j, j) g(n, i+j) 2^i
    std::vector<BigInt> gbar(m + 1, 0);
    for (int j = 0; j <= m; ++j)
      for (int i = 0; i + j <= m; ++i)
        gbar[j] += binomial_int(i + j, j) * g[i + j] * (BigInt(1) << i);
    CHECK(count_table(n, CountKind::Gbar) == gbar);
  }
}

TEST_CASE("position classes under zero padding") {
  Permutation u = perm({2, 1, 3});
  CHECK(classify_position(u, 1) == PosClass::Peak);
  CHECK(classify_position(u, 2) == PosClass::Valley);
  CHECK(classify_position(u, 3) == PosClass::DoubleAscent);
  CHECK(valley_positions(u) == std::vector<int>{2});

  // the first position ascends out of the padded zero
  Permutation v = perm({1, 2, 3});
  CHECK(classify_position(v, 1) == PosClass::DoubleAscent);
  CHECK(valley_positions(v).empty());

  Permutation w = perm({3, 2, 1});
  CHECK(classify_position(w, 1) == PosClass::Peak);
  CHECK(classify_position(w, 2) == PosClass::DoubleDescent);
  // the final position compares against the padded n+1
  CHECK(classify_position(w, 3) == PosClass::Valley);
}

TEST_CASE("choice set size leaves room to reach every target") {
  for (int n = 1; n <= 6; ++n) {
    enumerate(n, PermKind::Plain, [&](std::span<const int> w) {
      Permutation u{{w.begin(), w.end()}};
      StatProfile s = stat_profile(u);
      CHECK(static_cast<int>(choice_set(u).size()) == n / 2 - s.lpk);
      for (int c : choice_set(u)) CHECK(c % 2 == 1);
    });
  }
}

TEST_CASE("signing images hit the right statistics") {
  for (int n = 1; n <= 4; ++n) {
    const int m = n / 2;
    enumerate(n, PermKind::Plain, [&](std::span<const int> w) {
      Permutation u{{w.begin(), w.end()}};
      const int i = stat_profile(u).lpk;
      for (int j = i; j <= m; ++j) {
        std::vector<SignedPermutation> images = process_a_images(u, j);
        CHECK(BigInt(images.size()) ==
              binomial_int(m - i, j - i) * (BigInt(1) << i));
        std::set<std::vector<int>> distinct;
        for (const SignedPermutation& omega : images) {
          StatProfile s = stat_profile(omega);
          CHECK(s.des_even == 0);
          CHECK(s.des_odd == j);
          for (std::size_t k = 0; k < omega.values.size(); ++k)
            CHECK(std::abs(omega.values[k]) == u.values[k]);
          distinct.insert(omega.values);
        }
        CHECK(distinct.size() == images.size());
      }
    });
  }
}

TEST_CASE("signing images partition the no-even-descent class") {
  for (int n = 1; n <= 4; ++n) {
    const int m = n / 2;
    std::map<std::vector<int>, int> expected;
    enumerate(n, PermKind::Signed, [&](std::span<const int> w) {
      StatProfile s = stat_profile(SignedPermutation{{w.begin(), w.end()}});
      if (s.des_even == 0)
        expected.emplace(std::vector<int>(w.begin(), w.end()), s.des_odd);
    });
    std::set<std::vector<int>> seen;
    enumerate(n, PermKind::Plain, [&](std::span<const int> w) {
      Permutation u{{w.begin(), w.end()}};
      for (int j = stat_profile(u).lpk; j <= m; ++j)
        for (const SignedPermutation& omega : process_a_images(u, j)) {
          auto hit = expected.find(omega.values);
          REQUIRE(hit != expected.end());
          CHECK(hit->second == j);
          CHECK(seen.insert(omega.values).second);
        }
    });
    CHECK(seen.size() == expected.size());
  }
}

TEST_CASE("no even descents bounds left peaks by odd descents") {
  for (int n = 1; n <= 4; ++n) {
    enumerate(n, PermKind::Signed, [&](std::span<const int> w) {
      StatProfile s = stat_profile(SignedPermutation{{w.begin(), w.end()}});
      if (s.des_even == 0) CHECK(s.lpk <= s.des_odd);
    });
  }
}

TEST_CASE("rescaled polynomials expand in both bases") {
  DistributionStore store;
  for (int n = 2; n <= 6; ++n) {
    const int m = n / 2;
    auto sym = expand_in_basis(store.get(FamilyId::Atilde, n), m,
                               SymBasis::Sym);
    REQUIRE(sym.has_value());
    CHECK(sym->coeffs == count_table(n, CountKind::A));

    auto gam = expand_in_basis(store.get(FamilyId::Btilde, n), m,
                               SymBasis::Gamma);
    REQUIRE(gam.has_value());
    std::vector<BigInt> want = count_table(n, CountKind::G);
    for (std::size_t j = 0; j < want.size(); ++j)
      want[j] <<= static_cast<int>(j);
    CHECK(gam->coeffs == want);
  }
}
