// Benchmark: one table campaign run serially and with the parallel runner,
// checking that both serialize to identical bytes before reporting timings.
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <string>

#include "rankone/campaign.hpp"
#include "rankone/catalog.hpp"
#include "rankone/json_io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel campaign benchmark"};
  std::string id = "5.2";
  app.add_option("--id", id, "table id")
      ->check(CLI::IsMember(rankone::table_ids()));
  std::size_t n_min = 0, n_max = 0;
  auto* nmin_opt = app.add_option("--n-min", n_min, "lowest rank");
  auto* nmax_opt = app.add_option("--n-max", n_max, "highest rank");
  std::uint64_t seed = 12345;
  app.add_option("--seed", seed, "oracle seed");
  std::size_t threads = 0;
  app.add_option("--threads", threads,
                 "parallel worker count (0: VERIFY_THREADS or OpenMP default)");
  std::size_t repeats = 1;
  app.add_option("--repeats", repeats, "timed repetitions of each runner");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (nmin_opt->count() == 0 && nmax_opt->count() == 0) {
    auto range = rankone::default_rank_range(id);
    n_min = range.first;
    n_max = range.second;
  } else if (nmax_opt->count() == 0) {
    n_max = n_min;
  }
  if (repeats == 0) repeats = 1;

  using clock = std::chrono::steady_clock;
  auto time_runner = [&](auto&& runner, rankone::Report& out) {
    double best = 0.0;
    for (std::size_t i = 0; i < repeats; ++i) {
      auto t0 = clock::now();
      out = runner();
      double s = std::chrono::duration<double>(clock::now() - t0).count();
      if (i == 0 || s < best) best = s;
    }
    return best;
  };

  rankone::Report serial, parallel;
  double t_serial = time_runner(
      [&] { return rankone::run_campaign_serial(id, n_min, n_max, seed); },
      serial);
  double t_parallel = time_runner(
      [&] { return rankone::run_campaign(id, n_min, n_max, seed, threads); },
      parallel);

  const std::string bytes_serial = rankone::report_to_jsonl(serial);
  const std::string bytes_parallel = rankone::report_to_jsonl(parallel);
  const bool identical = bytes_serial == bytes_parallel;

  std::printf("table %s n=%zu..%zu: %zu cases\n", id.c_str(), serial.n_min,
              serial.n_max, serial.results.size());
  std::printf("serial:   %.3fs\n", t_serial);
  std::printf("parallel: %.3fs (speedup %.2fx)\n", t_parallel,
              t_parallel > 0 ? t_serial / t_parallel : 0.0);
  std::printf("reports byte-identical: %s\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
