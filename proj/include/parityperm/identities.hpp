#pragma once

// The verification catalog: every generating-function identity, sieve lemma,
// tree statement, and gamma expansion, each packaged as a runnable check
// that produces an IdentityReport. Rational generating functions are checked
// by cross-multiplication at every order up to the requested truncation;
// per-n statements compare polynomials (or tables rendered as polynomials).
//
// q-scope of an entry:
//   QFree            the statement has no q; runs with plain factorials
//   GenericRequired  holds at generic q; verified with q-binomial weights
//   QOneRequiredGenericRecorded
//                    holds at q = 1 and is printed in a stronger form that
//                    fails at generic q; the generic run is recorded for the
//                    report but never gates an exit code

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "parityperm/families.hpp"
#include "parityperm/qseries.hpp"

namespace parityperm {

enum class QScope { QFree, GenericRequired, QOneRequiredGenericRecorded };

struct VerifyContext {
  DistributionStore& store;
};

struct CatalogEntry {
  std::string id;
  QScope qscope = QScope::QFree;
  bool signed_scale = false;  // true: nmax defaults track the signed bound
  int default_nmax = 0;
  int max_nmax = 0;
  std::string summary;
  std::function<IdentityReport(VerifyContext&, int nmax, QMode qmode)> run;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(const std::string& id);

// Runs one entry with timing. Clamps nothing: nmax must already respect
// max_nmax (std::invalid_argument otherwise). For QFree entries the qmode is
// forced to QOne (the statement has no q in it).
IdentityReport run_identity(VerifyContext& ctx, const CatalogEntry& entry,
                            int nmax, QMode qmode);

nlohmann::json report_to_json(const IdentityReport& r);

struct CatalogRun {
  std::vector<IdentityReport> required;
  std::vector<IdentityReport> recorded;
  bool all_required_pass() const;
};

// Full-catalog run: every entry at its default depth clamped to the plain /
// signed overrides (<= 0 keeps defaults), on `jobs` worker threads. Entries
// scoped QOneRequiredGenericRecorded run twice: once at q = 1 into
// `required`, once at generic q into `recorded`.
CatalogRun run_catalog(VerifyContext& ctx, int nmax_plain, int nmax_signed,
                       int jobs);

nlohmann::json catalog_run_to_json(const CatalogRun& run);

}  // namespace parityperm
