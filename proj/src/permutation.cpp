#include "parityperm/permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace parityperm {

Permutation Permutation::identity(int n) {
  Permutation w;
  w.values.resize(n);
  std::iota(w.values.begin(), w.values.end(), 1);
  return w;
}

void validate(const Permutation& w) {
  const int n = w.size();
  if (n == 0) throw std::invalid_argument("not a permutation of 1..n");
  std::vector<bool> seen(n + 1, false);
  for (int v : w.values) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[v] = true;
  }
}

void validate(const SignedPermutation& w) {
  const int n = w.size();
  if (n == 0) throw std::invalid_argument("not a signed permutation of 1..n");
  std::vector<bool> seen(n + 1, false);
  for (int v : w.values) {
    int a = std::abs(v);
    if (a < 1 || a > n || seen[a])
      throw std::invalid_argument("not a signed permutation of 1..n");
    seen[a] = true;
  }
}

namespace {

// Shared statistics kernel. Positions are 1..n-1 for plain words and
// {0} union [n-1] for signed ones (w(0) = 0 prepended).
StatProfile profile_word(std::span<const int> w, bool signed_domain) {
  StatProfile s;
  const int n = static_cast<int>(w.size());
  auto record = [&](int pos, bool descent) {
    const bool even = pos % 2 == 0;
    if (descent)
      (even ? s.des_even : s.des_odd)++;
    else
      (even ? s.asc_even : s.asc_odd)++;
  };
  if (signed_domain && n > 0) record(0, 0 > w[0]);
  for (int i = 1; i < n; ++i) record(i, w[i - 1] > w[i]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w[i] > w[j]) s.inv++;
  s.alt_des = s.des_odd + s.asc_even;
  // Left peaks of the absolute word: u(0) = 0, peaks at i in 1..n-1.
  auto abs_at = [&](int i) { return i == 0 ? 0 : std::abs(w[i - 1]); };
  for (int i = 1; i < n; ++i)
    if (abs_at(i - 1) < abs_at(i) && abs_at(i) > abs_at(i + 1)) s.lpk++;
  return s;
}

}  // namespace

StatProfile stat_profile(const Permutation& w) {
  return profile_word(w.values, false);
}

StatProfile stat_profile(const SignedPermutation& w) {
  return profile_word(w.values, true);
}

Permutation complement(const Permutation& w) {
  validate(w);
  Permutation r = w;
  for (int& v : r.values) v = w.size() + 1 - v;
  return r;
}

SignedPermutation negate(const SignedPermutation& w) {
  validate(w);
  SignedPermutation r = w;
  for (int& v : r.values) v = -v;
  return r;
}

namespace {

bool is_up_down(std::span<const int> w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    const bool want_ascent = i % 2 == 1;  // w(1)<w(2), w(2)>w(3), ...
    if (want_ascent ? w[i - 1] > w[i] : w[i - 1] < w[i]) return false;
  }
  return true;
}

}  // namespace

void enumerate(int n, PermKind kind,
               const std::function<void(std::span<const int>)>& fn) {
  if (n <= 0) throw std::invalid_argument("enumerate: n must be positive");
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 1);
  std::vector<int> word(n);
  const bool signed_domain = kind == PermKind::Signed ||
                             kind == PermKind::SignedFirstPos ||
                             kind == PermKind::SignedFirstNeg;
  do {
    if (!signed_domain) {
      if (kind == PermKind::UpDown && !is_up_down(base)) continue;
      fn(base);
      continue;
    }
    const std::uint64_t masks = std::uint64_t(1) << n;
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      if (kind == PermKind::SignedFirstPos && (mask & 1)) continue;
      if (kind == PermKind::SignedFirstNeg && !(mask & 1)) continue;
      for (int i = 0; i < n; ++i)
        word[i] = (mask >> i) & 1 ? -base[i] : base[i];
      fn(word);
    }
  } while (std::next_permutation(base.begin(), base.end()));
}

BigInt enumeration_count(int n, PermKind kind) {
  BigInt count = 0;
  enumerate(n, kind, [&](std::span<const int>) { ++count; });
  return count;
}

}  // namespace parityperm
