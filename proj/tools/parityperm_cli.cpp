#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parityperm/gamma.hpp"
#include "parityperm/identities.hpp"
#include "parityperm/minmax_tree.hpp"

namespace pp = parityperm;

namespace {

int default_jobs() {
  return std::max(1u, std::thread::hardware_concurrency());
}

// Returns true on success; on failure the content still reaches stdout so a
// bad --out path never loses results.
bool emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return true;
  }
  std::ofstream f(out_path);
  f << content;
  f.flush();
  if (f.good()) return true;
  std::cerr << "failed to write " << out_path << ", dumping to stdout\n";
  std::cout << content;
  return false;
}

pp::QMode natural_mode(const pp::CatalogEntry& e) {
  return e.qscope == pp::QScope::GenericRequired ? pp::QMode::Generic
                                                 : pp::QMode::QOne;
}

int run_verify(const std::vector<std::string>& ids, int nmax,
               const std::string& q_flag, const std::string& format,
               const std::string& out, const std::string& cache, int jobs) {
  if (ids.empty()) {
    std::cerr << "verify: at least one --id is required\n";
    return 2;
  }
  if (format == "csv") {
    std::cerr << "verify: csv output is not defined for reports\n";
    return 2;
  }
  std::vector<const pp::CatalogEntry*> entries;
  for (const std::string& id : ids) {
    const pp::CatalogEntry* e = pp::find_entry(id);
    if (e == nullptr) {
      std::cerr << "verify: unknown identity id '" << id << "'\n";
      return 2;
    }
    if (nmax != 0 && (nmax < 2 || nmax > e->max_nmax)) {
      std::cerr << "verify: --nmax " << nmax << " out of range [2, "
                << e->max_nmax << "] for " << e->id << "\n";
      return 2;
    }
    entries.push_back(e);
  }

  pp::DistributionStore store{cache};
  pp::VerifyContext ctx{store};
  (void)jobs;  // individual ids run serially; `report` parallelizes

  bool any_gating_fail = false;
  std::vector<pp::IdentityReport> reports;
  std::vector<bool> gates;
  for (const pp::CatalogEntry* e : entries) {
    pp::QMode mode = q_flag.empty()
                         ? natural_mode(*e)
                         : (q_flag == "one" ? pp::QMode::QOne
                                            : pp::QMode::Generic);
    const bool gating =
        !(e->qscope == pp::QScope::QOneRequiredGenericRecorded &&
          mode == pp::QMode::Generic);
    const int depth = nmax == 0 ? e->default_nmax : nmax;
    pp::IdentityReport r = pp::run_identity(ctx, *e, depth, mode);
    if (gating && !r.pass) any_gating_fail = true;
    reports.push_back(std::move(r));
    gates.push_back(gating);
  }

  std::string content;
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const pp::IdentityReport& r : reports)
      arr.push_back(pp::report_to_json(r));
    content = arr.dump(2) + "\n";
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const pp::IdentityReport& r = reports[i];
      content += r.id + " " + (r.pass ? "pass" : "fail") +
                 " (nmax=" + std::to_string(r.nmax) +
                 ", q=" + std::string(pp::qmode_name(r.qmode)) + ", " +
                 std::to_string(r.elapsed_ms) + " ms)" +
                 (gates[i] ? "" : " [recorded]") + "\n";
      if (r.first_mismatch.has_value()) {
        content += "  first mismatch at n=" +
                   std::to_string(r.first_mismatch->n) +
                   ": lhs*den = " + r.first_mismatch->lhs.render() +
                   " vs num = " + r.first_mismatch->rhs.render() + "\n";
      }
    }
  }
  const bool wrote = emit(content, out);
  if (any_gating_fail) return 1;
  return wrote ? 0 : 1;
}

int run_table(const std::string& family, int n, const std::string& q_flag,
              const std::string& format, const std::string& out,
              const std::string& cache) {
  std::optional<pp::FamilyId> f = pp::family_from_name(family);
  if (!f.has_value()) {
    std::cerr << "table: unknown family '" << family << "'\n";
    return 2;
  }
  if (n < 1 || n > pp::family_max_n(*f)) {
    std::cerr << "table: --n " << n << " out of range [1, "
              << pp::family_max_n(*f) << "] for " << family << "\n";
    return 2;
  }
  if (format == "csv") {
    std::cerr << "table: csv output is not defined for polynomials\n";
    return 2;
  }
  pp::DistributionStore store{cache};
  pp::MultiPoly p = store.get(*f, n);
  if (q_flag == "one") p = p.substitute_one(pp::Var::Q);

  std::string content;
  if (format == "json") {
    nlohmann::json j;
    j["family"] = std::string(pp::family_name(*f));
    j["n"] = n;
    j["qmode"] = q_flag.empty() ? "generic" : q_flag;
    j["poly"] = p.render();
    content = j.dump(2) + "\n";
  } else {
    content = p.render() + "\n";
  }
  const bool wrote = emit(content, out);
  return wrote ? 0 : 1;
}

int run_gamma(const std::string& kind_name, int nmax,
              const std::string& format, const std::string& out) {
  static const std::map<std::string, pp::CountKind> kinds = {
      {"a", pp::CountKind::A},     {"abar", pp::CountKind::Abar},
      {"b", pp::CountKind::B},     {"bbar", pp::CountKind::Bbar},
      {"g", pp::CountKind::G},     {"gbar", pp::CountKind::Gbar},
  };
  auto it = kinds.find(kind_name);
  if (it == kinds.end()) {
    std::cerr << "gamma: unknown kind '" << kind_name << "'\n";
    return 2;
  }
  const bool is_signed =
      it->second == pp::CountKind::B || it->second == pp::CountKind::Bbar;
  const int top = is_signed ? 8 : 10;
  if (nmax == 0) nmax = is_signed ? 7 : 8;
  if (nmax < 1 || nmax > top) {
    std::cerr << "gamma: --nmax " << nmax << " out of range [1, " << top
              << "] for kind " << kind_name << "\n";
    return 2;
  }

  std::vector<std::vector<pp::BigInt>> rows;
  for (int n = 1; n <= nmax; ++n) rows.push_back(pp::count_table(n, it->second));

  std::string content;
  if (format == "json") {
    nlohmann::json j;
    j["kind"] = kind_name;
    j["rows"] = nlohmann::json::array();
    for (std::size_t n = 0; n < rows.size(); ++n) {
      nlohmann::json row = nlohmann::json::array();
      row.push_back(static_cast<int>(n) + 1);
      for (const pp::BigInt& v : rows[n])
        row.push_back(v.convert_to<long long>());
      j["rows"].push_back(row);
    }
    content = j.dump(2) + "\n";
  } else if (format == "csv") {
    for (std::size_t n = 0; n < rows.size(); ++n) {
      content += std::to_string(n + 1);
      for (const pp::BigInt& v : rows[n]) content += "," + v.str();
      content += "\n";
    }
  } else {
    for (std::size_t n = 0; n < rows.size(); ++n) {
      content += std::to_string(n + 1) + ":";
      for (const pp::BigInt& v : rows[n]) content += " " + v.str();
      content += "\n";
    }
  }
  const bool wrote = emit(content, out);
  return wrote ? 0 : 1;
}

std::optional<std::vector<int>> parse_word(const std::string& text) {
  std::vector<int> word;
  const bool separated =
      text.find_first_of(", \t") != std::string::npos;
  if (separated) {
    std::string token;
    for (char c : text + ",") {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        token += c;
      } else if (c == ',' || c == ' ' || c == '\t') {
        if (!token.empty()) word.push_back(std::stoi(token));
        token.clear();
      } else {
        return std::nullopt;
      }
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
        return std::nullopt;
      word.push_back(c - '0');
    }
  }
  if (word.empty()) return std::nullopt;
  return word;
}

int run_tree(const std::string& word_text, const std::vector<int>& psi,
             const std::string& format, const std::string& out) {
  std::optional<std::vector<int>> word = parse_word(word_text);
  if (!word.has_value()) {
    std::cerr << "tree: cannot parse --word '" << word_text << "'\n";
    return 2;
  }
  pp::Permutation w{*word};
  try {
    pp::validate(w);
  } catch (const std::invalid_argument& e) {
    std::cerr << "tree: " << e.what() << "\n";
    return 2;
  }
  for (int i : psi) {
    if (i < 1 || i > w.size()) {
      std::cerr << "tree: --apply-psi " << i << " out of range [1, "
                << w.size() << "]\n";
      return 2;
    }
  }
  if (format == "csv") {
    std::cerr << "tree: csv output is not defined for trees\n";
    return 2;
  }

  pp::MinMaxTree t = pp::MinMaxTree::build(w);
  for (int i : psi) t = t.apply_psi(i);

  std::string inorder_line;
  for (int v : t.inorder())
    inorder_line += (inorder_line.empty() ? "" : " ") + std::to_string(v);

  std::string content;
  if (format == "json") {
    nlohmann::json j;
    j["word"] = *word;
    j["applied"] = psi;
    j["render"] = t.render_ascii();
    j["inorder"] = t.inorder();
    content = j.dump(2) + "\n";
  } else {
    content = t.render_ascii() + "inorder: " + inorder_line + "\n";
  }
  const bool wrote = emit(content, out);
  return wrote ? 0 : 1;
}

int run_report(int nmax_plain, int nmax_signed, int jobs,
               const std::string& out, const std::string& cache) {
  pp::DistributionStore store{cache};
  pp::VerifyContext ctx{store};
  pp::CatalogRun run = pp::run_catalog(ctx, nmax_plain, nmax_signed, jobs);
  const std::string content = pp::catalog_run_to_json(run).dump(2) + "\n";
  const bool wrote = emit(content, out);
  if (!run.all_required_pass()) return 1;
  return wrote ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact verification of descent-parity identities for plain and signed "
      "permutations"};
  app.require_subcommand(1);

  std::vector<std::string> ids;
  std::string family, kind, word, q_flag, format = "text", out, cache;
  int n = 0, nmax = 0, nmax_signed = 0;
  int jobs = default_jobs();
  std::vector<int> psi;

  CLI::App* verify = app.add_subcommand("verify", "Run identity checks by id");
  verify->add_option("--id", ids, "Identity id (repeatable)");
  verify->add_option("--nmax", nmax, "Truncation order (0 = entry default)");
  verify->add_option("--q", q_flag, "q handling")
      ->check(CLI::IsMember({"one", "generic"}));
  verify->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_option("--out", out, "Write output to this file");
  verify->add_option("--jobs", jobs, "Worker threads");
  verify->add_option("--cache", cache, "Polynomial cache directory");

  CLI::App* table =
      app.add_subcommand("table", "Print a distribution polynomial");
  table->add_option("--family", family, "Family name")->required();
  table->add_option("--n", n, "Word length")->required();
  table->add_option("--q", q_flag, "q handling")
      ->check(CLI::IsMember({"one", "generic"}));
  table->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  table->add_option("--out", out, "Write output to this file");
  table->add_option("--cache", cache, "Polynomial cache directory");

  CLI::App* gamma =
      app.add_subcommand("gamma", "Print a count-table triangle");
  gamma->add_option("--kind", kind, "Table kind")
      ->required()
      ->check(CLI::IsMember({"a", "abar", "b", "bbar", "g", "gbar"}));
  gamma->add_option("--nmax", nmax, "Largest row (0 = default)");
  gamma->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  gamma->add_option("--out", out, "Write output to this file");

  CLI::App* tree =
      app.add_subcommand("tree", "Build a min-max tree and apply pivots");
  tree->add_option("--word", word, "Word, e.g. 562314 or '5 6 2 3 1 4'")
      ->required();
  tree->add_option("--apply-psi", psi, "Pivot position (repeatable)");
  tree->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  tree->add_option("--out", out, "Write output to this file");

  CLI::App* report =
      app.add_subcommand("report", "Run the full catalog and emit JSON");
  report->add_option("--nmax", nmax,
                     "Plain-family truncation override (0 = defaults)");
  report->add_option("--nmax-signed", nmax_signed,
                     "Signed-family truncation override (0 = defaults)");
  report->add_option("--jobs", jobs, "Worker threads");
  report->add_option("--out", out, "Write output to this file");
  report->add_option("--cache", cache, "Polynomial cache directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed())
      return run_verify(ids, nmax, q_flag, format, out, cache, jobs);
    if (table->parsed()) return run_table(family, n, q_flag, format, out, cache);
    if (gamma->parsed()) return run_gamma(kind, nmax, format, out);
    if (tree->parsed()) return run_tree(word, psi, format, out);
    if (report->parsed())
      return run_report(nmax, nmax_signed, jobs, out, cache);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
