#include "parityperm/families.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "parityperm/permutation.hpp"

namespace parityperm {

namespace {

struct FamilyInfo {
  FamilyId id;
  std::string_view name;
  bool signed_domain;
};

constexpr FamilyInfo kFamilies[] = {
    {FamilyId::PA, "P_A", false},    {FamilyId::A, "A", false},
    {FamilyId::Ahat, "Ahat", false}, {FamilyId::E, "E", false},
    {FamilyId::AltA, "ALT_A", false},
    {FamilyId::B, "B", true},        {FamilyId::Bhat, "Bhat", true},
    {FamilyId::PB, "P_B", true},     {FamilyId::BPlus, "B_plus", true},
    {FamilyId::BMinus, "B_minus", true}, {FamilyId::AltB, "ALT_B", true},
    {FamilyId::Atilde, "Atilde", false}, {FamilyId::Abar, "Abar", false},
    {FamilyId::Btilde, "Btilde", true},  {FamilyId::Bbar, "Bbar", true},
};

const FamilyInfo& info(FamilyId f) {
  for (const auto& fi : kFamilies)
    if (fi.id == f) return fi;
  throw std::invalid_argument("unknown family");
}

// Accumulate x^desO y^desE (or with ascE substituted for desE) plus the
// four-variable and inversion-graded variants from one enumeration pass.
MultiPoly brute(int n, FamilyId f) {
  MultiPoly out;
  const bool signed_domain = family_is_signed(f);
  PermKind kind = signed_domain ? PermKind::Signed : PermKind::Plain;
  if (f == FamilyId::E) kind = PermKind::UpDown;
  if (f == FamilyId::BPlus) kind = PermKind::SignedFirstPos;
  if (f == FamilyId::BMinus) kind = PermKind::SignedFirstNeg;

  enumerate(n, kind, [&](std::span<const int> w) {
    StatProfile s = signed_domain
                        ? stat_profile(SignedPermutation{{w.begin(), w.end()}})
                        : stat_profile(Permutation{{w.begin(), w.end()}});
    Monomial m{};
    auto set = [&](Var v, int e) { m[static_cast<std::size_t>(v)] = e; };
    switch (f) {
      case FamilyId::PA:
        set(Var::X0, s.asc_even);
        set(Var::X1, s.asc_odd);
        set(Var::Y0, s.des_even);
        set(Var::Y1, s.des_odd);
        set(Var::Q, static_cast<int>(s.inv));
        break;
      case FamilyId::A:
        set(Var::X, s.des_odd);
        set(Var::Y, s.des_even);
        set(Var::Q, static_cast<int>(s.inv));
        break;
      case FamilyId::Ahat:
        set(Var::X, s.des_odd);
        set(Var::Y, s.asc_even);
        set(Var::Q, static_cast<int>(s.inv));
        break;
      case FamilyId::E:
        set(Var::Q, static_cast<int>(s.inv));
        break;
      case FamilyId::B:
      case FamilyId::BPlus:
      case FamilyId::BMinus:
        set(Var::X, s.des_odd);
        set(Var::Y, s.des_even);
        break;
      case FamilyId::Bhat:
        set(Var::X, s.des_odd);
        set(Var::Y, s.asc_even);
        break;
      case FamilyId::PB:
        set(Var::X0, s.asc_even);
        set(Var::X1, s.asc_odd);
        set(Var::Y0, s.des_even);
        set(Var::Y1, s.des_odd);
        break;
      default:
        throw std::logic_error("brute: derived family");
    }
    out.add_term(m, 1);
  });
  return out;
}

MultiPoly one_plus_y() { return MultiPoly(1) + MultiPoly::variable(Var::Y); }

}  // namespace

std::string_view family_name(FamilyId f) { return info(f).name; }

std::optional<FamilyId> family_from_name(std::string_view name) {
  for (const auto& fi : kFamilies)
    if (fi.name == name) return fi.id;
  return std::nullopt;
}

bool family_is_signed(FamilyId f) { return info(f).signed_domain; }

int family_max_n(FamilyId f) { return family_is_signed(f) ? 8 : 10; }

MultiPoly distribution(int n, FamilyId f) {
  if (n < 1) throw std::invalid_argument("distribution: n must be positive");
  if (n > family_max_n(f))
    throw std::invalid_argument("distribution: n beyond supported range");
  switch (f) {
    case FamilyId::Atilde: {
      MultiPoly a = distribution(n, FamilyId::A).substitute_one(Var::Q);
      return n % 2 == 0 ? one_plus_y() * a : a;
    }
    case FamilyId::Abar: {
      MultiPoly a = distribution(n, FamilyId::Ahat).substitute_one(Var::Q);
      return n % 2 == 0 ? one_plus_y() * a : a;
    }
    case FamilyId::Btilde:
    case FamilyId::Bbar: {
      MultiPoly b = distribution(
          n, f == FamilyId::Btilde ? FamilyId::B : FamilyId::Bhat);
      if (n % 2 == 0) return b;
      auto q = b.divided_exactly_by(one_plus_y());
      if (!q)
        throw std::logic_error("distribution: (1+y) does not divide odd case");
      return *q;
    }
    case FamilyId::AltA:
      return distribution(n, FamilyId::Ahat)
          .substitute_one(Var::Q)
          .rename_var(Var::Y, Var::X);
    case FamilyId::AltB:
      return distribution(n, FamilyId::Bhat).rename_var(Var::Y, Var::X);
    default:
      return brute(n, f);
  }
}

DistributionStore::DistributionStore(std::filesystem::path dir)
    : dir_(std::move(dir)) {}

MultiPoly DistributionStore::get(FamilyId f, int n) {
  if (n < 1 || n > family_max_n(f))
    throw std::invalid_argument("DistributionStore: n out of range");
  const auto key = std::make_pair(static_cast<int>(f), n);
  std::shared_future<MultiPoly> fut;
  std::packaged_task<MultiPoly()> task;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      fut = it->second;
    } else {
      task = std::packaged_task<MultiPoly()>([this, f, n] {
        if (!dir_.empty()) {
          auto file = dir_ / std::string(family_name(f)) /
                      (std::to_string(n) + ".poly");
          if (std::ifstream in{file}) {
            std::stringstream buf;
            buf << in.rdbuf();
            std::string text = buf.str();
            while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
              text.pop_back();
            return MultiPoly::parse(text);
          }
        }
        MultiPoly p = distribution(n, f);
        if (!dir_.empty()) {
          auto famdir = dir_ / std::string(family_name(f));
          std::filesystem::create_directories(famdir);
          auto file = famdir / (std::to_string(n) + ".poly");
          auto tmp = famdir / (std::to_string(n) + ".poly.tmp");
          {
            std::ofstream out{tmp};
            out << p.render() << '\n';
          }
          std::filesystem::rename(tmp, file);
        }
        return p;
      });
      fut = task.get_future().share();
      memo_.emplace(key, fut);
    }
  }
  if (task.valid()) task();  // compute outside the lock; we own this key
  return fut.get();
}

}  // namespace parityperm
