#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "parityperm/families.hpp"
#include "parityperm/permutation.hpp"

using namespace parityperm;

namespace {

MultiPoly X(int e = 1) { return MultiPoly::variable(Var::X, e); }
MultiPoly Y(int e = 1) { return MultiPoly::variable(Var::Y, e); }
MultiPoly Q(int e = 1) { return MultiPoly::variable(Var::Q, e); }
MultiPoly X0() { return MultiPoly::variable(Var::X0); }
MultiPoly X1() { return MultiPoly::variable(Var::X1); }
MultiPoly Y0() { return MultiPoly::variable(Var::Y0); }
MultiPoly Y1() { return MultiPoly::variable(Var::Y1); }
MultiPoly C(long long v) { return MultiPoly(v); }

}  // namespace

TEST_CASE("names round-trip") {
  for (FamilyId f : {FamilyId::PA, FamilyId::A, FamilyId::Ahat, FamilyId::E,
                     FamilyId::AltA, FamilyId::B, FamilyId::Bhat, FamilyId::PB,
                     FamilyId::BPlus, FamilyId::BMinus, FamilyId::AltB,
                     FamilyId::Atilde, FamilyId::Abar, FamilyId::Btilde,
                     FamilyId::Bbar})
    CHECK(family_from_name(family_name(f)) == f);
  CHECK(!family_from_name("nope").has_value());
  CHECK(family_max_n(FamilyId::A) == 10);
  CHECK(family_max_n(FamilyId::B) == 8);
  CHECK(!family_is_signed(FamilyId::A));
  CHECK(family_is_signed(FamilyId::Btilde));
}

TEST_CASE("small plain distributions") {
  CHECK(distribution(2, FamilyId::A).render() == "1 + 1*q*x");
  CHECK(distribution(2, FamilyId::PA) == X1() + Q() * Y1());
  CHECK(distribution(3, FamilyId::A).substitute_one(Var::Q) ==
        C(1) + 2 * X() + 2 * Y() + X() * Y());
  CHECK(distribution(3, FamilyId::Ahat).substitute_one(Var::Q) ==
        C(2) + X() + Y() + 2 * X() * Y());
  CHECK(distribution(1, FamilyId::A) == C(1));
  CHECK(distribution(4, FamilyId::E) == Q() + 2 * Q(2) + Q(3) + Q(4));
}

TEST_CASE("small signed distributions") {
  CHECK(distribution(1, FamilyId::B) == C(1) + Y());
  CHECK(distribution(1, FamilyId::Bhat) == C(1) + Y());
  CHECK(distribution(2, FamilyId::B) ==
        C(1) + 3 * X() + 3 * Y() + X() * Y());
  CHECK(distribution(2, FamilyId::Bhat) ==
        C(3) + X() + Y() + 3 * X() * Y());
  CHECK(distribution(2, FamilyId::BPlus) == C(1) + 3 * X());
  CHECK(distribution(2, FamilyId::BMinus) == 3 * Y() + X() * Y());
  CHECK(distribution(1, FamilyId::BMinus) == Y());
  CHECK(distribution(1, FamilyId::PB) == X0() + Y0());
  CHECK(distribution(2, FamilyId::PB) ==
        X0() * X1() + 3 * X0() * Y1() + 3 * X1() * Y0() + Y0() * Y1());
}

TEST_CASE("total mass is the class size") {
  for (int n = 1; n <= 5; ++n) {
    MultiPoly a = distribution(n, FamilyId::A)
                      .substitute_one(Var::Q)
                      .substitute_one(Var::X)
                      .substitute_one(Var::Y);
    CHECK(a == MultiPoly(enumeration_count(n, PermKind::Plain)));
  }
  for (int n = 1; n <= 4; ++n) {
    MultiPoly b = distribution(n, FamilyId::B)
                      .substitute_one(Var::X)
                      .substitute_one(Var::Y);
    CHECK(b == MultiPoly(enumeration_count(n, PermKind::Signed)));
  }
}

TEST_CASE("up-down counts at q = 1") {
  const long long expected[] = {1, 1, 2, 5, 16, 61, 272, 1385, 7936};
  for (int n = 1; n <= 9; ++n)
    CHECK(distribution(n, FamilyId::E).substitute_one(Var::Q) ==
          MultiPoly(expected[n - 1]));
}

TEST_CASE("degree bounds follow the position split") {
  for (int n = 1; n <= 6; ++n) {
    MultiPoly a = distribution(n, FamilyId::A);
    CHECK(a.degree(Var::X) <= n / 2);
    CHECK(a.degree(Var::Y) <= (n - 1) / 2);
  }
  for (int n = 1; n <= 4; ++n) {
    MultiPoly b = distribution(n, FamilyId::B);
    CHECK(b.degree(Var::X) <= n / 2);
    CHECK(b.degree(Var::Y) <= (n + 1) / 2);
  }
}

TEST_CASE("alternating specializations") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(distribution(n, FamilyId::AltA) ==
          distribution(n, FamilyId::Ahat)
              .substitute_one(Var::Q)
              .rename_var(Var::Y, Var::X));
  }
  for (int n = 1; n <= 4; ++n) {
    CHECK(distribution(n, FamilyId::AltB) ==
          distribution(n, FamilyId::Bhat).rename_var(Var::Y, Var::X));
  }
}

TEST_CASE("rescaled families") {
  MultiPoly one_plus_y = C(1) + Y();
  for (int n = 1; n <= 6; ++n) {
    MultiPoly a = distribution(n, FamilyId::A).substitute_one(Var::Q);
    MultiPoly at = distribution(n, FamilyId::Atilde);
    CHECK(at == (n % 2 == 0 ? one_plus_y * a : a));
    MultiPoly ah = distribution(n, FamilyId::Ahat).substitute_one(Var::Q);
    MultiPoly ab = distribution(n, FamilyId::Abar);
    CHECK(ab == (n % 2 == 0 ? one_plus_y * ah : ah));
  }
  for (int n = 1; n <= 5; ++n) {
    MultiPoly b = distribution(n, FamilyId::B);
    MultiPoly bt = distribution(n, FamilyId::Btilde);
    CHECK((n % 2 == 0 ? bt : one_plus_y * bt) == b);
    MultiPoly bh = distribution(n, FamilyId::Bhat);
    MultiPoly bb = distribution(n, FamilyId::Bbar);
    CHECK((n % 2 == 0 ? bb : one_plus_y * bb) == bh);
    // the odd-length divisions are exact by construction
    if (n % 2 == 1)
      CHECK(b.divided_exactly_by(one_plus_y).has_value());
  }
}

TEST_CASE("range checks") {
  CHECK_THROWS_AS((void)distribution(0, FamilyId::A), std::invalid_argument);
  CHECK_THROWS_AS((void)distribution(11, FamilyId::A), std::invalid_argument);
  CHECK_THROWS_AS((void)distribution(9, FamilyId::B), std::invalid_argument);
}

TEST_CASE("store memoizes in memory") {
  DistributionStore store;
  CHECK(store.dir().empty());
  MultiPoly first = store.get(FamilyId::A, 4);
  CHECK(first == distribution(4, FamilyId::A));
  CHECK(store.get(FamilyId::A, 4) == first);
}

TEST_CASE("store round-trips through disk") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "parityperm_store_test";
  fs::remove_all(dir);
  {
    DistributionStore store{dir};
    CHECK(store.get(FamilyId::A, 3) == distribution(3, FamilyId::A));
    CHECK(store.get(FamilyId::B, 2) == distribution(2, FamilyId::B));
  }
  CHECK(fs::exists(dir / "A" / "3.poly"));
  CHECK(fs::exists(dir / "B" / "2.poly"));

  // a fresh store must reuse the files; corrupt content would fail to parse
  {
    DistributionStore store{dir};
    CHECK(store.get(FamilyId::A, 3) == distribution(3, FamilyId::A));
  }

  // cached text is the canonical render plus newline
  std::ifstream in{dir / "A" / "3.poly"};
  std::string text;
  std::getline(in, text);
  CHECK(text == distribution(3, FamilyId::A).render());
  fs::remove_all(dir);
}
