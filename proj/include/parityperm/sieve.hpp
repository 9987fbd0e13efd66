#pragma once

// Descent-set sieve machinery. For S a subset of [n-1] with elements
// s_1 < ... < s_k, its composition code is co(S) = (s_1, s_2-s_1, ...,
// n-s_k). alpha_n(S) counts words whose descent set is CONTAINED in S:
//   plain, inversion-graded:  [n co(S)]_q        (Gaussian multinomial)
//   signed with w(1) > 0:     (n co(S)) 2^(n-s_1), s_1 := n when S is empty.
// Summing x^{|odd members|} y^{|even members|} over all S gives the sieve
// form of the parity-split descent polynomials; restricting to all-odd S
// gives the half-block series paired with their closed forms below.

#include <vector>

#include "parityperm/multipoly.hpp"
#include "parityperm/qnum.hpp"
#include "parityperm/qseries.hpp"

namespace parityperm {

struct PositionSubset {
  int n = 0;                 // ambient word length; members within [n-1]
  std::vector<int> members;  // strictly increasing
};

struct Composition {
  std::vector<int> parts;  // positive, nonempty
  int total() const;
};

void validate(const PositionSubset& s);  // throws std::invalid_argument
void validate(const Composition& c);     // throws std::invalid_argument

Composition code(const PositionSubset& s);
PositionSubset decode(const Composition& c);

MultiPoly alpha_plain_closed(const PositionSubset& s, QMode mode);
MultiPoly alpha_plain_brute(const PositionSubset& s, QMode mode);
BigInt alpha_bplus_closed(const PositionSubset& s);
BigInt alpha_bplus_brute(const PositionSubset& s);

enum class SieveFamily { Plain, BPlus };

// sum over all S subseteq [n-1] of alpha(S) x^|S_odd| y^|S_even|.
MultiPoly sieve_poly(int n, SieveFamily f, QMode mode);

// sum over all-odd S subseteq [n-1] of w(S) x^|S|, where the weight is the
// q-multinomial (QAlpha), the B+ count (BPlusAlpha), or the plain
// multinomial scaled by 2^n (PlainTimesPow2).
enum class OddBlockWeight { QAlpha, BPlusAlpha, PlainTimesPow2 };
MultiPoly odd_subset_sum(int n, OddBlockWeight w, QMode mode);

// Half-block generating series: brute sides assemble the defining sums,
// closed sides return (numerator, denominator) for cross-multiplication.
//   BPrinted/BProof : even plain blocks  sum P_2n(x,0,q) t^2n/(2n)!_q
//   C               : odd plain blocks   sum P_2n-1(x,0,q) t^2n-1/(2n-1)!_q
//   G / L           : even / odd B+ blocks  (q-free, factorials plain)
//   H / F           : even / odd all-subset blocks scaled by 2^m
enum class BlockSeries { BPrinted, BProof, C, G, H, F, L };

struct RationalSeries {
  QSeries num, den;
};

QSeries block_series_brute(BlockSeries b, int order, QMode mode);
// The G/H/F/L forms exist only at q = 1; requesting them at generic q throws.
RationalSeries block_series_closed(BlockSeries b, int order, QMode mode);

// Stirling numbers of the second kind S(n,0..n).
std::vector<BigInt> stirling2_row(int n);

}  // namespace parityperm
