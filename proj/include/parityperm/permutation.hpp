#pragma once

// Plain and signed permutations with descent/ascent statistics split by the
// parity of the position.
//
// Plain w in S_n: positions 1..n-1, position i compares w(i) with w(i+1).
// Signed w in B_n: w(1..n) is a signing of a permutation of [n]; an implicit
// w(0) = 0 prepends position 0, so positions run over {0} union [n-1].
// desE/ascE count descents/ascents at even positions, desO/ascO at odd ones.

#include <functional>
#include <span>
#include <vector>

#include "parityperm/multipoly.hpp"

namespace parityperm {

struct Permutation {
  std::vector<int> values;  // w(1..n), a rearrangement of 1..n
  int size() const { return static_cast<int>(values.size()); }
  static Permutation identity(int n);
  bool operator==(const Permutation&) const = default;
};

struct SignedPermutation {
  std::vector<int> values;  // w(1..n), |values| a rearrangement of 1..n
  int size() const { return static_cast<int>(values.size()); }
  bool operator==(const SignedPermutation&) const = default;
};

void validate(const Permutation& w);        // throws std::invalid_argument
void validate(const SignedPermutation& w);  // throws std::invalid_argument

struct StatProfile {
  int asc_even = 0, asc_odd = 0, des_even = 0, des_odd = 0;
  long long inv = 0;   // inversions of the word as written
  int alt_des = 0;     // des_odd + asc_even
  int lpk = 0;         // left peaks of |w| under the padding u(0) = 0
  bool operator==(const StatProfile&) const = default;
};

StatProfile stat_profile(const Permutation& w);
StatProfile stat_profile(const SignedPermutation& w);

// w(i) -> n+1-w(i); swaps ascents and descents at every position.
Permutation complement(const Permutation& w);
// w(i) -> -w(i); position 0 always flips, interior comparisons all flip.
SignedPermutation negate(const SignedPermutation& w);

enum class PermKind {
  Plain,          // S_n
  Signed,         // B_n
  SignedFirstPos, // B_n with w(1) > 0
  SignedFirstNeg, // B_n with w(1) < 0
  UpDown,         // alternating w(1)<w(2)>w(3)<...
};

// Streams every element of the chosen class in a fixed deterministic order.
// The span is only valid during the callback. Throws for n <= 0.
void enumerate(int n, PermKind kind,
               const std::function<void(std::span<const int>)>& fn);

// |class| as a sanity value (n!, 2^n n!, 2^(n-1) n!, Euler count by streaming).
BigInt enumeration_count(int n, PermKind kind);

}  // namespace parityperm
