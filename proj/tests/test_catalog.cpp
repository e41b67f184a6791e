#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstddef>
#include <string>
#include <vector>

#include "rankone/action.hpp"
#include "rankone/ambient.hpp"
#include "rankone/campaign.hpp"
#include "rankone/catalog.hpp"
#include "rankone/embeddings.hpp"
#include "rankone/json_io.hpp"
#include "rankone/normal_forms.hpp"
#include "rankone/octonion.hpp"
#include "rankone/toolkit.hpp"

using namespace rankone;

namespace {

constexpr std::uint64_t kSeed = 12345;

Vec unit(const AmbientAlgebra& alg, std::size_t t) {
  return alg.g_alpha.basis_vector(t);
}

Vec rotation(const RMat& m7) {
  return f4_element(m7, Rat(0), Vec(8), Vec(7));
}

/// Skew generator with +1 at (r1,c1) and (r2,c2), embedded as a rotation.
Vec coupled_pair(std::size_t r1, std::size_t c1, std::size_t r2,
                 std::size_t c2) {
  RMat m(7, 7);
  m.at(r1, c1) = Rat(1);
  m.at(c1, r1) = Rat(-1);
  m.at(r2, c2) = Rat(1);
  m.at(c2, r2) = Rat(-1);
  return rotation(m);
}

/// First-root-space span of the leading `k` coordinate directions, plus the
/// full second root space: the standard nilpotent subspace with k kept slots.
Subspace kept_slots(const AmbientAlgebra& alg, std::size_t k) {
  std::vector<Vec> kept;
  for (std::size_t t = 0; t < k; ++t) kept.push_back(unit(alg, t));
  return alg.span(kept).sum(alg.g_2alpha);
}

/// Matrix of ad(x) acting on the first root space in its coordinate basis.
RMat root_action(const AmbientAlgebra& alg, const Vec& x) {
  RMat act(8, 8);
  for (std::size_t j = 0; j < 8; ++j) {
    Vec col = f4_galpha_part(alg.bracket(x, unit(alg, j)));
    for (std::size_t i = 0; i < 8; ++i) act.at(i, j) = col[i];
  }
  return act;
}

Subspace flat_span(const std::vector<RMat>& mats) {
  std::vector<Vec> rows;
  for (const RMat& m : mats) {
    Vec v(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
    rows.push_back(v);
  }
  return Subspace::span(rows, mats.empty() ? 0 : mats[0].rows() * mats[0].cols());
}

RMat mat_mul(const RMat& a, const RMat& b) {
  RMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Rat s(0);
      for (std::size_t k = 0; k < a.cols(); ++k) s += Rat(a.at(i, k) * b.at(k, j));
      c.at(i, j) = s;
    }
  return c;
}

const TableCase& find_case(const std::vector<TableCase>& cases,
                           const std::string& id) {
  for (const TableCase& c : cases)
    if (c.case_id == id) return c;
  FAIL("case not found: ", id);
  static TableCase dummy;
  return dummy;
}

}  // namespace

TEST_CASE("table registry") {
  std::vector<std::string> ids = table_ids();
  REQUIRE(ids == std::vector<std::string>{"5.2", "5.3", "6.2", "6.3", "7.3",
                                          "7.4", "8.1-facts", "8.5"});
  CHECK(default_rank_range("5.2") == std::pair<std::size_t, std::size_t>{4, 9});
  CHECK(default_rank_range("6.3") == std::pair<std::size_t, std::size_t>{2, 6});
  CHECK(default_rank_range("7.4") == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(default_rank_range("8.5") == std::pair<std::size_t, std::size_t>{0, 0});
  CHECK_THROWS_AS(table_cases("9.9", 4), std::invalid_argument);
  CHECK_THROWS_AS(table_cases("5.2", 2), std::invalid_argument);
  CHECK(expected_status_name(ExpectedStatus::Spherical) ==
        std::string("Spherical"));
  CHECK(expected_status_name(ExpectedStatus::Discrepancy) ==
        std::string("Discrepancy"));
}

TEST_CASE("exceptional normalizer ladder") {
  AmbientAlgebra alg = f4_model();
  const std::size_t want_n[8] = {21, 14, 9, 6, 6, 6, 9, 14};
  const std::size_t want_c[8] = {21, 14, 8, 3, 0, 0, 0, 0};
  for (std::size_t k = 0; k <= 7; ++k) {
    std::vector<Vec> kept;
    for (std::size_t t = 0; t < k; ++t) kept.push_back(unit(alg, t));
    Subspace N = normalizer_in(alg, alg.m, kept_slots(alg, k));
    Subspace C = centralizer_in(alg, alg.m, alg.span(kept));
    CHECK(N.dim() == want_n[k]);
    CHECK(C.dim() == want_c[k]);
  }
}

TEST_CASE("four-slot normalizer is the aligned pair algebra") {
  AmbientAlgebra alg = f4_model();
  Subspace N = normalizer_in(alg, alg.m, kept_slots(alg, 4));
  REQUIRE(N.dim() == 6);

  // The six coupled rotation pairs that fix the fourth vector slot: each
  // generator rotates one plane among slots {1,2,3} together with one plane
  // among slots {5,6,7}, or couples a plane across the two triples.
  std::vector<Vec> pattern = {
      coupled_pair(1, 0, 5, 4), coupled_pair(2, 0, 6, 4),
      coupled_pair(2, 1, 6, 5), coupled_pair(0, 5, 4, 1),
      coupled_pair(0, 6, 4, 2), coupled_pair(1, 6, 5, 2),
  };
  Subspace P = alg.span(pattern);
  CHECK(P.dim() == 6);
  CHECK(P == N);

  // In the root-space action every element acts by the same 4x4 block on the
  // kept slots and on the complementary slots, with no mixing between them.
  for (std::size_t b = 0; b < N.dim(); ++b) {
    RMat act = root_action(alg, N.basis_vector(b));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        CHECK(act.at(i, j) == act.at(i + 4, j + 4));
        CHECK(act.at(i, j + 4) == 0);
        CHECK(act.at(i + 4, j) == 0);
      }
  }
}

TEST_CASE("slope family normalizers") {
  AmbientAlgebra alg = f4_model();
  for (const char* cs : {"0", "1", "2", "-1", "3/4"}) {
    CAPTURE(cs);
    Rat c = rat_parse(cs);
    Vec tilt = unit(alg, 4);
    Vec e4 = unit(alg, 3);
    for (std::size_t i = 0; i < tilt.size(); ++i) tilt[i] += Rat(c * e4[i]);
    Subspace V = alg.span({unit(alg, 0), unit(alg, 1), unit(alg, 2), tilt});
    Subspace N = normalizer_in(alg, alg.m, V.sum(alg.g_2alpha));
    REQUIRE(N.dim() == 6);

    // w spans the tilted line orthogonal to the cut plane inside slots {4,5}.
    Vec w = e4;
    Vec e5 = unit(alg, 4);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= Rat(c * e5[i]);

    Rat scale = Rat(Rat(1) + Rat(c * c));
    std::vector<Vec> tangent;
    for (std::size_t b = 0; b < N.dim(); ++b) {
      Vec x = N.basis_vector(b);
      RMat act = root_action(alg, x);
      // Root-space shape: the two slot triples never mix, the middle 2x2
      // vanishes, and the middle columns / rows are locked in ratio c.
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 5; j < 8; ++j) {
          CHECK(act.at(i, j) == 0);
          CHECK(act.at(j, i) == 0);
        }
      for (std::size_t i = 3; i < 5; ++i)
        for (std::size_t j = 3; j < 5; ++j) CHECK(act.at(i, j) == 0);
      for (std::size_t i = 0; i < 3; ++i) {
        CHECK(act.at(i, 3) == Rat(c * act.at(i, 4)));
        CHECK(act.at(3, i) == Rat(c * act.at(4, i)));
      }
      for (std::size_t i = 5; i < 8; ++i) {
        CHECK(act.at(4, i) == Rat(-c * act.at(3, i)));
        CHECK(act.at(i, 4) == Rat(-c * act.at(i, 3)));
      }
      // Orbit direction through w: lands in the last three slots, scaled by
      // 1 + c^2 relative to the matrix entries of the action.
      Vec bw = f4_galpha_part(alg.bracket(x, w));
      for (std::size_t i = 0; i < 5; ++i) CHECK(bw[i] == 0);
      CHECK(bw[5] == Rat(scale * act.at(5, 3)));
      CHECK(bw[6] == Rat(scale * act.at(6, 3)));
      CHECK(bw[7] == Rat(scale * act.at(7, 3)));
      Vec t3(3);
      t3[0] = bw[5];
      t3[1] = bw[6];
      t3[2] = bw[7];
      tangent.push_back(t3);
    }
    // The tangent directions at w fill the full sphere tangent space.
    CHECK(Subspace::span(tangent, 3).dim() == 3);
  }
}

TEST_CASE("two- and three-slot stabilizers on the root-space complement") {
  AmbientAlgebra alg = f4_model();

  // Two kept slots: both the full normalizer and the pointwise stabilizer
  // still sweep the spheres of the six remaining root directions.
  {
    Subspace N = normalizer_in(alg, alg.m, kept_slots(alg, 2));
    Subspace C = centralizer_in(alg, alg.m,
                                alg.span({unit(alg, 0), unit(alg, 1)}));
    REQUIRE(N.dim() == 9);
    REQUIRE(C.dim() == 8);
    Subspace kept = alg.span({unit(alg, 0), unit(alg, 1)});
    Subspace комплемент = ortho_complement_in(kept, alg.g_alpha);
    REQUIRE(комплемент.dim() == 6);
    for (const Subspace* h : {&N, &C}) {
      LinearAction act = restrict_action(alg, *h, комплемент);
      OrbitVerdict v = transitive_on_spheres(act, kSeed);
      CHECK(v.transitive);
      for (const auto& [pt, rk] : v.ranks_at_samples) CHECK(rk == 5);
    }
  }

  // Three kept slots: the five remaining directions are NOT swept; the first
  // sample already exhibits the rank deficiency.
  {
    Subspace N = normalizer_in(alg, alg.m, kept_slots(alg, 3));
    Subspace C = centralizer_in(
        alg, alg.m, alg.span({unit(alg, 0), unit(alg, 1), unit(alg, 2)}));
    REQUIRE(N.dim() == 6);
    REQUIRE(C.dim() == 3);
    Subspace kept = alg.span({unit(alg, 0), unit(alg, 1), unit(alg, 2)});
    Subspace comp = ortho_complement_in(kept, alg.g_alpha);
    REQUIRE(comp.dim() == 5);
    LinearAction act = restrict_action(alg, N, comp);
    OrbitVerdict v = transitive_on_spheres(act, kSeed);
    CHECK_FALSE(v.transitive);
    CHECK(v.required_rank == 4);
    CHECK(v.witness_rank == 3);
  }
}

TEST_CASE("fixed-embedding intersections inside so(8)") {
  Subspace sp2 = flat_span(sp_in_so(2));
  Subspace su4 = flat_span(su4_in_so8());
  Subspace s7 = flat_span(spin7_in_so8_basis());
  CHECK(sp2.dim() == 10);
  CHECK(su4.dim() == 15);
  CHECK(s7.dim() == 21);
  // Neither ten- nor fifteen-dimensional algebra sits inside the stabilizer
  // copy at this particular embedding.
  CHECK(sp2.intersect(s7).dim() == 3);
  CHECK(su4.intersect(s7).dim() == 8);
}

TEST_CASE("quaternion right multiplications") {
  std::vector<RMat> R = make_embedding("sp_in_so", 2);
  REQUIRE(R.size() == 10);
  // The three right-multiplication operators live in the quaternionic
  // commutant; rebuild them through the catalog factory used by the
  // reference suite.
  std::vector<OnishchikEntry> entries = onishchik_entries(8);
  const OnishchikEntry* pair_entry = nullptr;
  for (const OnishchikEntry& e : entries)
    if (e.name == "sp(2)+sp(1)-on-r8") pair_entry = &e;
  REQUIRE(pair_entry != nullptr);
  std::vector<RMat> ops = pair_entry->operators();
  REQUIRE(ops.size() == 13);  // sp(2) realified plus the three commutants
  std::vector<RMat> comm(ops.end() - 3, ops.end());
  // R_i R_j = -R_k and R^2 = -1 for the quaternion triple.
  RMat ij = mat_mul(comm[0], comm[1]);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      CHECK(ij.at(i, j) == Rat(-comm[2].at(i, j)));
    }
  for (const RMat& r : comm) {
    RMat r2 = mat_mul(r, r);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j)
        CHECK(r2.at(i, j) == (i == j ? Rat(-1) : Rat(0)));
    // Skew with respect to the Euclidean form.
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) CHECK(r.at(i, j) == Rat(-r.at(j, i)));
  }
  // They commute with the realified quaternion-linear algebra.
  for (const RMat& r : comm)
    for (const RMat& s : R) {
      RMat rs = mat_mul(r, s), sr = mat_mul(s, r);
      for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) CHECK(rs.at(i, j) == sr.at(i, j));
    }
}

TEST_CASE("transitivity reference suite spot checks") {
  std::vector<OnishchikEntry> entries = onishchik_entries(16);
  auto find = [&](const std::string& name) -> const OnishchikEntry& {
    for (const OnishchikEntry& e : entries)
      if (e.name == name) return e;
    FAIL("entry not found: ", name);
    static OnishchikEntry dummy;
    return dummy;
  };
  for (const char* name : {"g2-on-r7", "spin(9)-on-r16", "so(5)-on-r5"}) {
    const OnishchikEntry& e = find(name);
    CHECK(e.transitive);
    LinearAction act = checked_action(e.operators(),
                                      RMat::identity(e.module_dim));
    CHECK(transitive_on_spheres(act, kSeed).transitive);
  }
  const OnishchikEntry& neg = find("neg/g2-on-octonions");
  CHECK_FALSE(neg.transitive);
  LinearAction act = checked_action(neg.operators(),
                                    RMat::identity(neg.module_dim));
  OrbitVerdict v = transitive_on_spheres(act, kSeed);
  CHECK_FALSE(v.transitive);
  CHECK(v.witness_rank < v.required_rank);
  CHECK(v.required_rank == 7);
}

TEST_CASE("case runs reproduce stored verdicts") {
  struct Probe {
    const char* table;
    std::size_t n;
    const char* id;
  };
  const Probe probes[] = {
      {"5.2", 4, "5.2/n=4/block/k=2"},     {"6.2", 2, "6.2/n=2/block/k=1"},
      {"7.3", 2, "7.3/n=2/split-unitary"}, {"8.5", 0, "8.5/free-levi/lH=ma"},
  };
  for (const Probe& p : probes) {
    CAPTURE(p.id);
    std::vector<TableCase> cases = table_cases(p.table, p.n);
    const TableCase& c = find_case(cases, p.id);
    AmbientAlgebra alg = c.family == Family::F4Model
                             ? f4_model()
                             : construct_algebra(c.family, c.n);
    CaseResult r = run_case(alg, c, kSeed);
    CHECK(r.status == "PASS");
    CHECK(r.computed == expected_status_name(c.expected));
  }
  // The split-unitary subalgebra of the rank-two quaternionic ambient is the
  // full unitary relative: dimension (n+1)^2 - 1.
  std::vector<TableCase> q = table_cases("7.3", 2);
  CaseResult r = run_case(construct_algebra(Family::SP, 2),
                          find_case(q, "7.3/n=2/split-unitary"), kSeed);
  REQUIRE(!r.dims.empty());
  CHECK(r.dims[0].first == "h");
  CHECK(r.dims[0].second == 8);
}

TEST_CASE("discrepancy probes report without asserting") {
  std::vector<TableCase> probes = discrepancy_cases(Family::SO, 6);
  REQUIRE(probes.size() == 3);
  for (const TableCase& c : probes) {
    CHECK(c.expected == ExpectedStatus::Discrepancy);
    CaseResult r = run_case(construct_algebra(Family::SO, 6), c, kSeed);
    CHECK(r.status == "DISCREPANCY-CANDIDATE");
    CHECK(r.computed == "Spherical");
  }
  CHECK(discrepancy_cases(Family::SU, 3).empty());
  CHECK(discrepancy_cases(Family::SP, 2).empty());

  Report rep = run_discrepancy_scan(Family::SO, 6, kSeed);
  CHECK(rep.results.size() == 3);
  CHECK(rep.discrepancy_count == 3);
  CHECK(rep.pass_count == 0);
  CHECK(rep.fail_count == 0);
}

TEST_CASE("exceptional discrepancy probes live in their table") {
  std::vector<TableCase> cases = table_cases("8.5", 0);
  std::size_t disc = 0;
  for (const TableCase& c : cases)
    if (c.expected == ExpectedStatus::Discrepancy) {
      ++disc;
      CaseResult r = run_case(f4_model(), c, kSeed);
      CHECK(r.status == "DISCREPANCY-CANDIDATE");
      CHECK(r.computed == "Spherical");
      CHECK(r.reason == "TransitiveOnSpheres");
    }
  CHECK(disc == 2);
}

TEST_CASE("campaign determinism and parallel equivalence") {
  Report serial1 = run_campaign_serial("6.2", 2, 3, kSeed);
  Report serial2 = run_campaign_serial("6.2", 2, 3, kSeed);
  Report parallel = run_campaign("6.2", 2, 3, kSeed, 2);
  std::string a = report_to_jsonl(serial1);
  CHECK(a == report_to_jsonl(serial2));
  CHECK(a == report_to_jsonl(parallel));
  CHECK(serial1.fail_count == 0);
  CHECK(serial1.pass_count == serial1.results.size());
}

TEST_CASE("normal form constructors and detectors round trip") {
  // Unitary family: k zero slots, l real slots; the detector recovers the
  // real dimension and the largest complex subspace.
  AmbientAlgebra su4 = construct_algebra(Family::SU, 4);
  NormalFormSpec spec;
  spec.kind = NormalFormKind::QKL;
  spec.k = 1;
  spec.l = 2;
  Subspace v = make_normal_form(su4, spec);
  CHECK(v.dim() == normal_form_dim(su4, spec));
  auto [real_dim, complex_dim] = detect_unitary_invariants(su4, v);
  CHECK(real_dim == 2 * (4 - 1 - 2) + 2);  // two complex slots + two real lines
  CHECK(complex_dim == 4 - 1 - 2);

  // Quaternion family: slot profile recovery including a xi-plane.
  AmbientAlgebra sp3 = construct_algebra(Family::SP, 3);
  NormalFormSpec qs;
  qs.kind = NormalFormKind::QKLMPXi;
  qs.k = 1;
  qs.l = 1;
  qs.m = 1;
  qs.xi = {{Rat(0), Rat(1), Rat(0)}};
  Subspace qv = make_normal_form(sp3, qs);
  SlotProfile prof = detect_quaternion_profile(sp3, qv, false);
  CHECK(prof.k == 1);
  CHECK(prof.l == 1);
  CHECK(prof.m == 1);
  CHECK(prof.p == 0);
  CHECK(prof.h == 0);
  CHECK(prof.xi_lines.size() == 1);
  CHECK(prof.xi_lines[0] == std::array<Rat, 3>{Rat(0), Rat(1), Rat(0)});

  // Nilpotent variant keeps the second root space.
  NormalFormSpec ns;
  ns.kind = NormalFormKind::NKLMPXi;
  ns.k = 1;
  ns.l = 1;
  Subspace nv = make_normal_form(sp3, ns);
  CHECK(nv.dim() == normal_form_dim(sp3, ns));
  SlotProfile nprof = detect_quaternion_profile(sp3, nv, true);
  CHECK(nprof.k == 1);
  CHECK(nprof.l == 1);

  // Budget violations are rejected.
  NormalFormSpec bad;
  bad.kind = NormalFormKind::QK;
  bad.k = 9;
  CHECK_THROWS_AS(make_normal_form(construct_algebra(Family::SO, 4), bad),
                  std::invalid_argument);
}
