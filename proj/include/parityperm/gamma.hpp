#pragma once

// Symmetric and gamma-type basis expansions for polynomials in x, y, the
// count tables they are governed by, and the signing process that proves the
// type-B gamma formula.
//
// Bases, indexed j = 0..m:
//   Sym:    (x+y)^j (1+xy)^(m-j)
//   Gamma:  (x+y)^j (1+x+y+xy)^(m-j)
// Setting y = 0 sends the Sym basis to x^j and the Gamma basis to
// x^j (1+x)^(m-j), so coefficients are read off p(x,0) — directly for Sym,
// by a triangular peel for Gamma — then certified by re-expansion.

#include <optional>
#include <span>
#include <vector>

#include "parityperm/multipoly.hpp"
#include "parityperm/permutation.hpp"

namespace parityperm {

enum class SymBasis { Sym, Gamma };

struct BasisExpansion {
  int m = 0;
  SymBasis basis = SymBasis::Sym;
  std::vector<BigInt> coeffs;  // size m+1
  bool operator==(const BasisExpansion&) const = default;
};

// Requires p to involve only x and y (std::invalid_argument otherwise).
// Returns nullopt when p is not in the span — a meaningful negative result.
std::optional<BasisExpansion> expand_in_basis(const MultiPoly& p, int m,
                                              SymBasis basis);

// Rebuild sum_j coeffs[j] * basis_j as a polynomial (the certificate side).
MultiPoly basis_combination(const BasisExpansion& e);

// Count tables, all of length floor(n/2)+1:
//   A     plain, no even descents, by odd descents        a(n,j)
//   Abar  plain, no even ascents, by odd descents         abar(n,j)
//   B     signed, no even descents, by odd descents       b(n,j)
//   Bbar  signed, no even ascents, by odd descents        bbar(n,j)
//   G     plain, by left peaks                            g(n,j)
//   Gbar  gbar(n,j) = sum_i C(i+j,j) g(n,i+j) 2^i
enum class CountKind { A, Abar, B, Bbar, G, Gbar };
std::vector<BigInt> count_table(int n, CountKind kind);

// Position classes of u under the padding u(0) = 0, u(n+1) = n+1.
enum class PosClass { Peak, Valley, DoubleAscent, DoubleDescent };
PosClass classify_position(const Permutation& u, int i);
std::vector<int> valley_positions(const Permutation& u);

// Positions eligible for the descent-toggling choice: the odd positions
// 1, 3, ..., 2*floor(n/2)-1 minus the peak-descent positions (an odd peak
// holds its own position; an even peak's sign shifts its descent one left).
std::vector<int> choice_set(const Permutation& u);

// The four-step signing: sign the valleys as requested, sign even peaks
// minus, toggle the descents indexed by D (a subset of choice_set(u) whose
// size sets the target odd-descent count j = lpk(u) + |D|), then erase the
// remaining even double descents. The result has j odd descents and no even
// descents. valley_signs are +1/-1 per valley in position order.
SignedPermutation process_a(const Permutation& u,
                            std::span<const int> valley_signs,
                            const std::vector<int>& D);

// Every image of u with target j: all valley signings x all choices of D.
std::vector<SignedPermutation> process_a_images(const Permutation& u, int j);

}  // namespace parityperm
