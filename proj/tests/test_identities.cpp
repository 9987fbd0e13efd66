#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "parityperm/identities.hpp"

using namespace parityperm;

namespace {

VerifyContext make_ctx(DistributionStore& store) { return VerifyContext{store}; }

}  // namespace

TEST_CASE("catalog is populated with unique ids") {
  const auto& entries = catalog();
  CHECK(entries.size() == 61);
  std::set<std::string> ids;
  for (const auto& e : entries) {
    CHECK(ids.insert(e.id).second);
    CHECK(e.default_nmax >= 2);
    CHECK(e.default_nmax <= e.max_nmax);
    CHECK(bool(e.run));
  }
  CHECK(find_entry("B1") != nullptr);
  CHECK(find_entry("B1")->id == "B1");
  CHECK(find_entry("NO_SUCH_ID") == nullptr);
}

TEST_CASE("truncation bounds are enforced") {
  DistributionStore store;
  VerifyContext ctx = make_ctx(store);
  const CatalogEntry* e = find_entry("TILDE_REL");
  REQUIRE(e != nullptr);
  CHECK_THROWS_AS((void)run_identity(ctx, *e, 1, QMode::Generic),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)run_identity(ctx, *e, e->max_nmax + 1, QMode::Generic),
                  std::invalid_argument);
}

TEST_CASE("a q-free entry always reports q = 1") {
  DistributionStore store;
  VerifyContext ctx = make_ctx(store);
  const CatalogEntry* e = find_entry("CF");
  REQUIRE(e != nullptr);
  CHECK(e->qscope == QScope::QFree);
  IdentityReport r = run_identity(ctx, *e, 5, QMode::Generic);
  CHECK(r.qmode == QMode::QOne);
  CHECK(r.pass);
  CHECK(r.id == "CF");
  CHECK(r.nmax == 5);
  CHECK(!r.first_mismatch.has_value());
  CHECK(r.elapsed_ms >= 0);
}

TEST_CASE("representative entries pass at a small truncation") {
  DistributionStore store;
  VerifyContext ctx = make_ctx(store);
  for (const char* id : {"TILDE_REL", "STANLEY_Q", "PREL"}) {
    const CatalogEntry* e = find_entry(id);
    REQUIRE(e != nullptr);
    IdentityReport r = run_identity(ctx, *e, 5, QMode::Generic);
    CHECK(r.pass);
    CHECK(r.qmode == QMode::Generic);
  }
  for (const char* id : {"B1", "Z2", "CS_Q"}) {
    const CatalogEntry* e = find_entry(id);
    REQUIRE(e != nullptr);
    IdentityReport r = run_identity(ctx, *e, 5, QMode::QOne);
    CHECK(r.pass);
    CHECK(r.qmode == QMode::QOne);
  }
}

TEST_CASE("the q = 1 identity breaks at generic q with exact coordinates") {
  DistributionStore store;
  VerifyContext ctx = make_ctx(store);
  const CatalogEntry* e = find_entry("CS_Q");
  REQUIRE(e != nullptr);
  CHECK(e->qscope == QScope::QOneRequiredGenericRecorded);
  IdentityReport r = run_identity(ctx, *e, 3, QMode::Generic);
  CHECK(!r.pass);
  REQUIRE(r.first_mismatch.has_value());
  CHECK(r.first_mismatch->n == 2);
  CHECK(r.first_mismatch->lhs.render() == "1*q*y1 + 1*x1");
  CHECK(r.first_mismatch->rhs.render() == "1*y1 + 1*x1");
}

TEST_CASE("reports serialize with the fixed key set") {
  DistributionStore store;
  VerifyContext ctx = make_ctx(store);
  const CatalogEntry* e = find_entry("PZ1");
  REQUIRE(e != nullptr);

  nlohmann::json ok = report_to_json(run_identity(ctx, *e, 4, QMode::QOne));
  CHECK(ok["id"] == "PZ1");
  CHECK(ok["nmax"] == 4);
  CHECK(ok["qmode"] == "one");
  CHECK(ok["status"] == "pass");
  CHECK(ok["first_mismatch"].is_null());
  CHECK(ok["elapsed_ms"].is_number_integer());
  CHECK(ok.size() == 6);

  nlohmann::json bad = report_to_json(run_identity(ctx, *e, 4, QMode::Generic));
  CHECK(bad["qmode"] == "generic");
  CHECK(bad["status"] == "fail");
  REQUIRE(bad["first_mismatch"].is_object());
  CHECK(bad["first_mismatch"]["n"] == 2);
  CHECK(bad["first_mismatch"]["lhs"].is_string());
  CHECK(bad["first_mismatch"]["rhs"].is_string());
}

TEST_CASE("catalog run separates required from recorded") {
  DistributionStore store;
  VerifyContext ctx = make_ctx(store);
  CatalogRun run = run_catalog(ctx, 3, 3, 2);
  CHECK(run.required.size() == catalog().size());
  CHECK(run.all_required_pass());
  for (const auto& r : run.required) CHECK(r.pass);

  std::set<std::string> recorded_ids;
  for (const auto& r : run.recorded) {
    recorded_ids.insert(r.id);
    CHECK(r.qmode == QMode::Generic);
  }
  CHECK(recorded_ids ==
        std::set<std::string>{"CS_Q", "PZ1", "PZ2", "KEY2B_PRINTED"});

  nlohmann::json j = catalog_run_to_json(run);
  CHECK(j["all_required_pass"] == true);
  CHECK(j["required"].is_array());
  CHECK(j["required"].size() == run.required.size());
  CHECK(j["recorded"].size() == run.recorded.size());
}

TEST_CASE("depth overrides clamp but never exceed an entry's default") {
  DistributionStore store;
  VerifyContext ctx = make_ctx(store);
  CatalogRun run = run_catalog(ctx, 4, 3, 1);
  for (const auto& r : run.required) {
    const CatalogEntry* e = find_entry(r.id);
    REQUIRE(e != nullptr);
    const int cap = e->signed_scale ? 3 : 4;
    CHECK(r.nmax == std::min(e->default_nmax, std::max(cap, 2)));
  }
}
