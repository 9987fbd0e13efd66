#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "parityperm/permutation.hpp"

using namespace parityperm;

namespace {

Permutation perm(std::vector<int> v) { return Permutation{std::move(v)}; }
SignedPermutation sperm(std::vector<int> v) {
  return SignedPermutation{std::move(v)};
}

}  // namespace

TEST_CASE("plain statistics") {
  StatProfile s = stat_profile(perm({5, 6, 2, 3, 1, 4}));
  CHECK(s.asc_odd == 3);
  CHECK(s.des_even == 2);
  CHECK(s.asc_even == 0);
  CHECK(s.des_odd == 0);
  CHECK(s.inv == 10);
  CHECK(s.alt_des == 0);
  CHECK(s.lpk == 2);

  StatProfile id = stat_profile(Permutation::identity(4));
  CHECK(id.asc_odd == 2);
  CHECK(id.asc_even == 1);
  CHECK(id.des_odd == 0);
  CHECK(id.des_even == 0);
  CHECK(id.inv == 0);
  CHECK(id.lpk == 0);

  StatProfile one = stat_profile(perm({1}));
  CHECK(one.asc_odd == 0);
  CHECK(one.des_odd == 0);
  CHECK(one.lpk == 0);
}

TEST_CASE("signed statistics include position zero") {
  // (-2, 1): position 0 compares 0 > -2, position 1 compares -2 < 1
  StatProfile s = stat_profile(sperm({-2, 1}));
  CHECK(s.des_even == 1);
  CHECK(s.asc_odd == 1);
  CHECK(s.des_odd == 0);
  CHECK(s.asc_even == 0);
  CHECK(s.inv == 0);
  CHECK(s.lpk == 1);  // |w| = (2,1) has the left peak at position 1

  // (2, -1): position 0 ascends, position 1 descends
  StatProfile t = stat_profile(sperm({2, -1}));
  CHECK(t.asc_even == 1);
  CHECK(t.des_odd == 1);
  CHECK(t.inv == 1);
}

TEST_CASE("complement swaps ascents and descents in place") {
  Permutation w = perm({5, 6, 2, 3, 1, 4});
  CHECK(complement(w) == perm({2, 1, 5, 4, 6, 3}));
  for (int n = 1; n <= 5; ++n) {
    enumerate(n, PermKind::Plain, [&](std::span<const int> v) {
      Permutation u{{v.begin(), v.end()}};
      StatProfile a = stat_profile(u), b = stat_profile(complement(u));
      CHECK(a.asc_odd == b.des_odd);
      CHECK(a.asc_even == b.des_even);
      CHECK(a.des_odd == b.asc_odd);
      CHECK(a.des_even == b.asc_even);
      CHECK(a.inv + b.inv == static_cast<long long>(n) * (n - 1) / 2);
    });
  }
}

TEST_CASE("negation pairs the descent counts") {
  // des_odd(t) + des_odd(-t) = floor(n/2),
  // des_even(t) + des_even(-t) = floor((n+1)/2)
  for (int n = 1; n <= 4; ++n) {
    enumerate(n, PermKind::Signed, [&](std::span<const int> w) {
      SignedPermutation t{{w.begin(), w.end()}};
      StatProfile a = stat_profile(t);
      StatProfile b = stat_profile(negate(t));
      CHECK(a.des_odd + b.des_odd == n / 2);
      CHECK(a.des_even + b.des_even == (n + 1) / 2);
    });
  }
}

TEST_CASE("position parity counts split the positions") {
  for (int n = 1; n <= 5; ++n) {
    enumerate(n, PermKind::Plain, [&](std::span<const int> w) {
      StatProfile s = stat_profile(Permutation{{w.begin(), w.end()}});
      CHECK(s.des_even + s.asc_even == (n - 1) / 2);
      CHECK(s.des_odd + s.asc_odd == n / 2);
      CHECK(s.alt_des == s.des_odd + s.asc_even);
    });
  }
  for (int n = 1; n <= 3; ++n) {
    enumerate(n, PermKind::Signed, [&](std::span<const int> w) {
      StatProfile s = stat_profile(SignedPermutation{{w.begin(), w.end()}});
      CHECK(s.des_even + s.asc_even == (n + 1) / 2);
      CHECK(s.des_odd + s.asc_odd == n / 2);
    });
  }
}

TEST_CASE("enumeration sizes") {
  auto count = [](int n, PermKind k) {
    BigInt c = 0;
    enumerate(n, k, [&](std::span<const int> w) {
      CHECK(static_cast<int>(w.size()) == n);
      ++c;
    });
    return c;
  };
  CHECK(count(4, PermKind::Plain) == 24);
  CHECK(count(3, PermKind::Signed) == 48);
  CHECK(count(3, PermKind::SignedFirstPos) == 24);
  CHECK(count(3, PermKind::SignedFirstNeg) == 24);
  CHECK(count(4, PermKind::UpDown) == 5);
  for (PermKind k : {PermKind::Plain, PermKind::Signed,
                     PermKind::SignedFirstPos, PermKind::SignedFirstNeg,
                     PermKind::UpDown})
    for (int n = 1; n <= 4; ++n) CHECK(count(n, k) == enumeration_count(n, k));
  CHECK_THROWS_AS(enumerate(0, PermKind::Plain, [](std::span<const int>) {}),
                  std::invalid_argument);
}

TEST_CASE("up-down words of length four") {
  std::set<std::vector<int>> got;
  enumerate(4, PermKind::UpDown, [&](std::span<const int> w) {
    got.emplace(w.begin(), w.end());
  });
  std::set<std::vector<int>> want = {{1, 3, 2, 4},
                                     {1, 4, 2, 3},
                                     {2, 3, 1, 4},
                                     {2, 4, 1, 3},
                                     {3, 4, 1, 2}};
  CHECK(got == want);
}

TEST_CASE("up-down counts follow the classical sequence") {
  const long long expected[] = {1, 1, 2, 5, 16, 61, 272};
  for (int n = 1; n <= 7; ++n)
    CHECK(enumeration_count(n, PermKind::UpDown) == expected[n - 1]);
}

TEST_CASE("signed classes split by first letter sign") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(enumeration_count(n, PermKind::SignedFirstPos) +
              enumeration_count(n, PermKind::SignedFirstNeg) ==
          enumeration_count(n, PermKind::Signed));
    enumerate(n, PermKind::SignedFirstPos,
              [&](std::span<const int> w) { CHECK(w[0] > 0); });
    enumerate(n, PermKind::SignedFirstNeg,
              [&](std::span<const int> w) { CHECK(w[0] < 0); });
  }
}

TEST_CASE("validation") {
  CHECK_NOTHROW(validate(perm({2, 1, 3})));
  CHECK_THROWS_AS(validate(perm({1, 1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(validate(perm({1, 3})), std::invalid_argument);
  CHECK_THROWS_AS(validate(perm({})), std::invalid_argument);
  CHECK_NOTHROW(validate(sperm({-2, 1})));
  CHECK_THROWS_AS(validate(sperm({-2, 2})), std::invalid_argument);
  CHECK_THROWS_AS(validate(sperm({0, 1})), std::invalid_argument);
}
