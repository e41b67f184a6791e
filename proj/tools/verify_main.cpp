// Command-line verifier: replays classification tables, checks candidate
// files, runs the non-asserting discrepancy scan and a quick selftest.
#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "rankone/campaign.hpp"
#include "rankone/catalog.hpp"
#include "rankone/json_io.hpp"
#include "rankone/sphericity.hpp"

namespace {

using namespace rankone;

std::string dims_text(const CaseResult& r) {
  std::string out = "[";
  for (std::size_t i = 0; i < r.dims.size(); ++i) {
    if (i) out += ", ";
    out += r.dims[i].first + "=" + std::to_string(r.dims[i].second);
  }
  return out + "]";
}

void print_case(const CaseResult& r, bool with_expected) {
  const char* tag = r.status == "PASS"            ? "PASS"
                    : r.status == "FAIL"          ? "FAIL"
                                                  : "DISC";
  std::printf("%s  %-48s computed=%s", tag, r.case_id.c_str(),
              r.computed.c_str());
  if (with_expected && r.status == "FAIL")
    std::printf(" expected=%s", r.expected.c_str());
  if (!r.reason.empty()) std::printf(" reason=%s", r.reason.c_str());
  std::printf(" dims=%s", dims_text(r).c_str());
  if (!r.witness.empty()) {
    std::printf(" witness=(");
    for (std::size_t i = 0; i < r.witness.size(); ++i)
      std::printf("%s%s", i ? "," : "", r.witness[i].c_str());
    std::printf(") rank=%zu/%zu", r.witness_rank, r.required_rank);
  }
  std::printf(" (%.3fs)\n", r.elapsed_seconds);
}

int cmd_table(const std::string& id, std::size_t n_min, std::size_t n_max,
              bool range_given, std::uint64_t seed,
              const std::string& json_path) {
  if (!range_given) {
    auto range = default_rank_range(id);
    n_min = range.first;
    n_max = range.second;
  }
  Report rep = run_campaign(id, n_min, n_max, seed, 0);
  double total = 0.0;
  for (const CaseResult& r : rep.results) {
    print_case(r, true);
    total += r.elapsed_seconds;
  }
  std::printf(
      "table %s n=%zu..%zu: %zu cases, %zu pass, %zu fail, "
      "%zu discrepancy-candidates (%.3fs)\n",
      id.c_str(), rep.n_min, rep.n_max, rep.results.size(), rep.pass_count,
      rep.fail_count, rep.discrepancy_count, total);
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::fprintf(stderr, "cannot write report: %s\n", json_path.c_str());
      return 2;
    }
    out << report_to_jsonl(rep);
  }
  return rep.fail_count == 0 ? 0 : 1;
}

int cmd_check(const std::string& path, std::uint64_t seed) {
  CaseResult r = check_file(path, seed);
  print_case(r, false);
  std::printf("%s\n", case_result_to_json_line(r).c_str());
  return r.status == "PASS" ? 0 : 1;
}

int cmd_explore(const std::string& family_name_arg, std::size_t n,
                std::uint64_t seed) {
  Family family;
  if (family_name_arg == "so")
    family = Family::SO;
  else if (family_name_arg == "su")
    family = Family::SU;
  else if (family_name_arg == "sp")
    family = Family::SP;
  else if (family_name_arg == "f4-model")
    family = Family::F4Model;
  else {
    std::fprintf(stderr, "unknown family: %s\n", family_name_arg.c_str());
    return 2;
  }
  std::vector<CaseResult> probes = run_discrepancy_scan(family, n, seed);
  if (probes.empty()) {
    std::printf(
        "no discrepancy probes for family %s at n=%zu (the exceptional "
        "table carries its probes inline; run: verify table --id 8.5)\n",
        family_name_arg.c_str(), n);
    return 0;
  }
  for (const CaseResult& r : probes) print_case(r, false);
  std::printf("%zu probes evaluated; the scan never asserts\n",
              probes.size());
  return 0;
}

bool selftest_check(const char* what, bool ok, int& failures) {
  std::printf("%s  %s\n", ok ? "PASS" : "FAIL", what);
  if (!ok) ++failures;
  return ok;
}

int cmd_selftest(std::uint64_t seed) {
  int failures = 0;
  // Structure dimensions of every family at small rank.
  struct Row {
    Family family;
    std::size_t n, dim, dim_m, dim_ga, dim_g2a;
  };
  const std::vector<Row> rows = {
      {Family::SO, 4, 10, 3, 3, 0},   {Family::SO, 5, 15, 6, 4, 0},
      {Family::SU, 2, 8, 1, 2, 1},    {Family::SU, 3, 15, 4, 4, 1},
      {Family::SP, 2, 21, 6, 4, 3},   {Family::SP, 3, 36, 13, 8, 3},
      {Family::F4Model, 0, 37, 21, 8, 7}};
  for (const Row& row : rows) {
    AmbientAlgebra alg = construct_algebra(row.family, row.n);
    bool ok = alg.dim == row.dim && alg.m.dim() == row.dim_m &&
              alg.g_alpha.dim() == row.dim_ga &&
              alg.g_2alpha.dim() == row.dim_g2a && alg.a.dim() == 1;
    std::string label = std::string("structure dims ") +
                        family_name(row.family) + " n=" +
                        std::to_string(row.n);
    selftest_check(label.c_str(), ok, failures);
  }
  // One known catalog case per family.
  const std::vector<std::pair<std::string, std::size_t>> spots = {
      {"5.2", 5}, {"6.2", 3}, {"7.3", 2}, {"8.5", 0}};
  for (const auto& [id, n] : spots) {
    AmbientAlgebra alg = construct_algebra(
        id[0] == '8' ? Family::F4Model
        : id[0] == '5' ? Family::SO
        : id[0] == '6' ? Family::SU
                       : Family::SP,
        n);
    std::vector<TableCase> cases = table_cases(id, n);
    bool ok = !cases.empty();
    if (ok) {
      CaseResult r = run_case(alg, cases.front(), seed);
      ok = r.status == "PASS";
    }
    std::string label = "first case of table " + id;
    selftest_check(label.c_str(), ok, failures);
  }
  // JSON round-trip byte fidelity on a small reductive candidate.
  {
    AmbientAlgebra alg = construct_algebra(Family::SO, 4);
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < alg.k.dim(); ++i)
      basis.push_back(alg.k.basis_vector(i));
    std::string text = candidate_to_json(alg, basis);
    ParsedCandidate parsed = parse_candidate(text);
    bool ok = candidate_to_json(parsed.alg, parsed.basis) == text;
    selftest_check("candidate JSON round-trip", ok, failures);
  }
  // Report serialization determinism.
  {
    Report a = run_campaign_serial("7.3", 2, 2, seed);
    Report b = run_campaign("7.3", 2, 2, seed, 0);
    bool ok = report_to_jsonl(a) == report_to_jsonl(b);
    selftest_check("parallel report identical to serial", ok, failures);
  }
  std::printf("selftest: %s\n", failures == 0 ? "all checks passed"
                                              : "FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for rank-one sphericity classifications"};
  app.set_version_flag("--version", rankone::kToolVersion);
  app.require_subcommand(1);
  std::uint64_t seed = 12345;
  app.add_option("--seed", seed, "seed of the pseudo-random sample vector");

  auto* table = app.add_subcommand("table", "replay one classification table");
  std::string id;
  table->add_option("--id", id, "table id")
      ->required()
      ->check(CLI::IsMember(rankone::table_ids()));
  std::size_t n_min = 0, n_max = 0;
  auto* nmin_opt = table->add_option("--n-min", n_min, "lowest rank");
  auto* nmax_opt = table->add_option("--n-max", n_max, "highest rank");
  std::string json_path;
  table->add_option("--json", json_path, "write the JSONL report here");

  auto* check = app.add_subcommand("check", "evaluate a candidate file");
  std::string file;
  check->add_option("--file", file, "candidate JSON file")->required();

  auto* explore = app.add_subcommand(
      "explore", "non-asserting discrepancy scan for one family and rank");
  std::string family_arg = "so";
  explore->add_option("--family", family_arg, "so | su | sp | f4-model");
  std::size_t explore_n = 6;
  explore->add_option("--n", explore_n, "ambient rank");

  auto* selftest = app.add_subcommand("selftest", "quick invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (table->parsed()) {
      const bool range_given = nmin_opt->count() > 0 || nmax_opt->count() > 0;
      if (nmin_opt->count() > 0 && nmax_opt->count() == 0) n_max = n_min;
      if (nmax_opt->count() > 0 && nmin_opt->count() == 0)
        n_min = rankone::default_rank_range(id).first;
      return cmd_table(id, n_min, n_max, range_given, seed, json_path);
    }
    if (check->parsed()) return cmd_check(file, seed);
    if (explore->parsed()) return cmd_explore(family_arg, explore_n, seed);
    if (selftest->parsed()) return cmd_selftest(seed);
  } catch (const rankone::ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
