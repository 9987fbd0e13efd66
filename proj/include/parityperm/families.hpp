#pragma once

// Joint distribution polynomials of the parity-split descent statistics over
// the classical families, computed by exhaustive enumeration and cached on
// disk as canonical polynomial text under <dir>/<family>/<n>.poly.
//
//   P_A    sum over S_n of x0^ascE x1^ascO y0^desE y1^desO q^inv
//   A      sum over S_n of x^desO y^desE q^inv
//   Ahat   sum over S_n of x^desO y^ascE q^inv
//   E      sum over up-down permutations of q^inv
//   ALT_A  Ahat at q=1, y=x  (alternating descents)
//   B      sum over B_n of x^desO y^desE        (position 0 included in even)
//   Bhat   sum over B_n of x^desO y^ascE
//   P_B    sum over B_n of x0^ascE x1^ascO y0^desE y1^desO
//   B_plus / B_minus   B restricted by the sign of w(1)
//   ALT_B  Bhat at y=x
//   Atilde/Abar        (1+y)-rescalings of A/Ahat at q=1 (even n only)
//   Btilde/Bbar        B/Bhat, divided exactly by (1+y) for odd n

#include <filesystem>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <string_view>

#include "parityperm/multipoly.hpp"

namespace parityperm {

enum class FamilyId {
  PA, A, Ahat, E, AltA,
  B, Bhat, PB, BPlus, BMinus, AltB,
  Atilde, Abar, Btilde, Bbar,
};

std::string_view family_name(FamilyId f);
std::optional<FamilyId> family_from_name(std::string_view name);
bool family_is_signed(FamilyId f);  // enumerates B_n rather than S_n

// Largest n the desk-scale enumeration supports (10 plain, 8 signed).
int family_max_n(FamilyId f);

// Pure computation, no caching. n >= 1; throws std::invalid_argument beyond
// the supported range, std::logic_error if an exact (1+y)-division fails.
MultiPoly distribution(int n, FamilyId f);

// Memoizing front-end. An empty directory path keeps the cache in memory
// only. Safe for concurrent use; each polynomial is computed once.
class DistributionStore {
 public:
  explicit DistributionStore(std::filesystem::path dir = {});
  MultiPoly get(FamilyId f, int n);
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::mutex mu_;
  std::map<std::pair<int, int>, std::shared_future<MultiPoly>> memo_;
};

}  // namespace parityperm
