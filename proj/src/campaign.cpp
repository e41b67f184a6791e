#include "rankone/campaign.hpp"

#include <chrono>
#include <cstdlib>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rankone {
namespace {

Family table_family(const std::string& theorem_id) {
  if (theorem_id == "5.2" || theorem_id == "5.3") return Family::SO;
  if (theorem_id == "6.2" || theorem_id == "6.3") return Family::SU;
  if (theorem_id == "7.3" || theorem_id == "7.4") return Family::SP;
  if (theorem_id == "8.1-facts" || theorem_id == "8.5")
    return Family::F4Model;
  throw std::invalid_argument("unknown table id: " + theorem_id);
}

std::vector<std::string> format_vec(const Vec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const Rat& x : v) out.push_back(x.get_str());
  return out;
}

void fill_orbit(CaseResult& r, const OrbitVerdict& orbit) {
  for (const auto& [point, rank] : orbit.ranks_at_samples)
    r.ranks_at_samples.push_back(rank);
  if (!orbit.transitive) {
    r.witness = format_vec(orbit.witness);
    r.witness_rank = orbit.witness_rank;
    r.required_rank = orbit.required_rank;
  }
}

void finish_status(CaseResult& r, const TableCase& c) {
  if (c.expected == ExpectedStatus::Discrepancy)
    r.status = "DISCREPANCY-CANDIDATE";
  else
    r.status = r.computed == r.expected ? "PASS" : "FAIL";
}

std::size_t resolve_threads(std::size_t threads) {
  if (threads == 0) {
    if (const char* env = std::getenv("VERIFY_THREADS")) {
      char* end = nullptr;
      unsigned long v = std::strtoul(env, &end, 10);
      if (end && *end == '\0' && v > 0) threads = static_cast<std::size_t>(v);
    }
  }
#ifdef _OPENMP
  if (threads == 0) threads = static_cast<std::size_t>(omp_get_max_threads());
#endif
  if (threads == 0) threads = 1;
  return threads;
}

Report run_campaign_impl(const std::string& theorem_id, std::size_t n_min,
                         std::size_t n_max, std::uint64_t seed,
                         std::size_t threads, bool parallel) {
  const Family family = table_family(theorem_id);
  Report rep;
  rep.seed = seed;
  rep.theorem_id = theorem_id;

  std::vector<std::size_t> ranks;
  if (family == Family::F4Model) {
    ranks.push_back(0);
    rep.n_min = rep.n_max = 0;
  } else {
    if (n_min > n_max)
      throw std::invalid_argument("empty rank range");
    for (std::size_t n = n_min; n <= n_max; ++n) ranks.push_back(n);
    rep.n_min = n_min;
    rep.n_max = n_max;
  }

  // Construct each ambient once, then flatten all cases in deterministic
  // order: ranks ascending, catalog order within a rank, discrepancy probes
  // after the asserted rows.
  std::vector<AmbientAlgebra> algebras;
  std::vector<TableCase> cases;
  std::vector<std::size_t> algebra_of;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    algebras.push_back(construct_algebra(family, ranks[i]));
    for (TableCase& c : table_cases(theorem_id, ranks[i])) {
      cases.push_back(std::move(c));
      algebra_of.push_back(i);
    }
    if (theorem_id == "5.2")
      for (TableCase& c : discrepancy_cases(family, ranks[i])) {
        cases.push_back(std::move(c));
        algebra_of.push_back(i);
      }
  }

  rep.results.resize(cases.size());
  const std::size_t workers = resolve_threads(threads);
  if (parallel && workers > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(static_cast<int>(workers))
    for (long long i = 0; i < static_cast<long long>(cases.size()); ++i)
      rep.results[static_cast<std::size_t>(i)] =
          run_case(algebras[algebra_of[static_cast<std::size_t>(i)]],
                   cases[static_cast<std::size_t>(i)], seed);
#else
    for (std::size_t i = 0; i < cases.size(); ++i)
      rep.results[i] = run_case(algebras[algebra_of[i]], cases[i], seed);
#endif
  } else {
    for (std::size_t i = 0; i < cases.size(); ++i)
      rep.results[i] = run_case(algebras[algebra_of[i]], cases[i], seed);
  }

  for (const CaseResult& r : rep.results) {
    if (r.status == "PASS")
      ++rep.pass_count;
    else if (r.status == "FAIL")
      ++rep.fail_count;
    else
      ++rep.discrepancy_count;
  }
  return rep;
}

}  // namespace

CaseResult run_case(const AmbientAlgebra& alg, const TableCase& c,
                    std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  CaseResult r;
  r.case_id = c.case_id;
  r.theorem_id = c.theorem_id;
  r.family = family_name(c.family);
  r.n = c.n;
  r.params = c.params;
  r.expected = expected_status_name(c.expected);
  try {
    if (c.action) {
      LinearAction act = c.action(alg);
      r.dims.emplace_back("module", act.module_dim);
      OrbitVerdict v = transitive_on_spheres(act, seed);
      r.computed = v.transitive ? "Transitive" : "NotTransitive";
      r.reason = v.transitive ? "TransitiveOnSpheres" : "DeficientRank";
      fill_orbit(r, v);
    } else {
      CandidateSubalgebra cand = c.build(alg);
      r.dims.emplace_back("h", cand.span.dim());
      if (c.reductive && cand.reductive) {
        r.dims.emplace_back("k_H", cand.reductive->k_h.dim());
        r.dims.emplace_back("p_H", cand.reductive->p_h.dim());
      } else if (cand.parabolic) {
        r.dims.emplace_back("m_H", cand.parabolic->m_h.dim());
        r.dims.emplace_back("a_H", cand.parabolic->a_h.dim());
        r.dims.emplace_back("n_H", cand.parabolic->n_h.dim());
      }
      SphericityVerdict v = c.reductive
                                ? reductive_spherical(alg, cand, seed)
                                : nonreductive_spherical(alg, cand, seed);
      r.dims.emplace_back("complement", v.complement_dim);
      r.computed = v.spherical ? "Spherical" : "NotSpherical";
      r.reason = reason_name(v.reason);
      if (v.oracle_ran) fill_orbit(r, v.orbit);
    }
  } catch (const std::exception& e) {
    r.computed = std::string("error: ") + e.what();
    r.reason.clear();
  }
  finish_status(r, c);
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return r;
}

Report run_campaign(const std::string& theorem_id, std::size_t n_min,
                    std::size_t n_max, std::uint64_t seed,
                    std::size_t threads) {
  return run_campaign_impl(theorem_id, n_min, n_max, seed, threads, true);
}

Report run_campaign_serial(const std::string& theorem_id, std::size_t n_min,
                           std::size_t n_max, std::uint64_t seed) {
  return run_campaign_impl(theorem_id, n_min, n_max, seed, 1, false);
}

std::vector<CaseResult> run_discrepancy_scan(Family family, std::size_t n,
                                             std::uint64_t seed) {
  AmbientAlgebra alg = construct_algebra(family, n);
  std::vector<CaseResult> out;
  for (const TableCase& c : discrepancy_cases(family, n))
    out.push_back(run_case(alg, c, seed));
  return out;
}

}  // namespace rankone
