#include "catalog_detail.hpp"
#include "rankone/embeddings.hpp"

namespace rankone::detail {
namespace {

std::size_t so_dim(std::size_t d) { return d * (d - 1) / 2; }

/// p-form of the orthogonal family with the first k slots zero.
Subspace qform(const AmbientAlgebra& alg, std::size_t k) {
  NormalFormSpec spec;
  spec.kind = NormalFormKind::QK;
  spec.k = k;
  return make_normal_form(alg, spec);
}

/// Nilpotent form with the first k slots zero.
Subspace nform(const AmbientAlgebra& alg, std::size_t k) {
  NormalFormSpec spec;
  spec.kind = NormalFormKind::NK;
  spec.k = k;
  return make_normal_form(alg, spec);
}

/// h = (head operators at block 0..k-1) + so(n-k)-block + q_k, split as a
/// reductive candidate.
CandidateSubalgebra block_pair(const AmbientAlgebra& alg,
                               const std::vector<RMat>& head,
                               std::size_t k) {
  const std::size_t s = alg.matrix_size;
  std::vector<CMat> mats = real_block(head, 0, s);
  for (CMat& m : real_block(so_basis(alg.n - k), k, s))
    mats.push_back(std::move(m));
  Subspace h = span_matrices(alg, mats).sum(qform(alg, k));
  return reductive_candidate(alg, h);
}

/// h = (m-part matrices) + a + n_k, split as a parabolic candidate.
CandidateSubalgebra parabolic_rows(const AmbientAlgebra& alg,
                                   const std::vector<CMat>& m_mats,
                                   std::size_t k) {
  Subspace h = span_matrices(alg, m_mats).sum(alg.a).sum(nform(alg, k));
  return parabolic_candidate(alg, h);
}

struct CaseSink {
  std::vector<TableCase>& out;
  std::string prefix;  // e.g. "5.2/n=5/"
  std::string theorem_id;
  std::size_t n;

  void add(const std::string& suffix,
           std::vector<std::pair<std::string, std::string>> params,
           ExpectedStatus expected, bool reductive, std::string note,
           std::function<CandidateSubalgebra(const AmbientAlgebra&)> build) {
    TableCase c;
    c.case_id = prefix + suffix;
    c.theorem_id = theorem_id;
    c.family = Family::SO;
    c.n = n;
    c.params = std::move(params);
    c.expected = expected;
    c.reductive = reductive;
    c.note = std::move(note);
    c.build = std::move(build);
    out.push_back(std::move(c));
  }
};

std::vector<TableCase> reductive_table(std::size_t n) {
  std::vector<TableCase> out;
  CaseSink sink{out, "5.2/n=" + std::to_string(n) + "/", "5.2", n};

  for (std::size_t k = 0; k <= n; ++k) {
    std::string note;
    if (k == n || (k > 2 && k < n)) note = "symmetric pair";
    sink.add("block-pair/k=" + std::to_string(k),
             {{"k", std::to_string(k)}}, ExpectedStatus::Spherical, true,
             note, [k](const AmbientAlgebra& alg) {
               return block_pair(alg, so_basis(k), k);
             });
  }
  for (std::size_t m = 4; 2 * m <= n; ++m)
    sink.add("unitary-block/m=" + std::to_string(m),
             {{"m", std::to_string(m)}}, ExpectedStatus::Spherical, true, "",
             [m](const AmbientAlgebra& alg) {
               return block_pair(alg, su_in_so(m), 2 * m);
             });
  for (std::size_t m = 2; 4 * m <= n; ++m)
    sink.add("quaternion-block/m=" + std::to_string(m),
             {{"m", std::to_string(m)}}, ExpectedStatus::Spherical, true, "",
             [m](const AmbientAlgebra& alg) {
               return block_pair(alg, sp_in_so(m), 4 * m);
             });
  if (n >= 16)
    sink.add("spin9-block", {}, ExpectedStatus::Spherical, true, "",
             [](const AmbientAlgebra& alg) {
               return block_pair(alg, spin9_in_so16_basis(), 16);
             });
  if (n >= 8)
    sink.add("spin7-block", {}, ExpectedStatus::Spherical, true, "",
             [](const AmbientAlgebra& alg) {
               return block_pair(alg, spin7_in_so8_basis(), 8);
             });
  if (n >= 7)
    sink.add("g2-block", {}, ExpectedStatus::Spherical, true, "",
             [](const AmbientAlgebra& alg) {
               return block_pair(alg, g2_in_so7_basis(), 7);
             });
  if (n >= 4) {
    for (std::size_t d : {std::size_t{0}, std::size_t{1}}) {
      const char* name = d == 0 ? "zero" : "torus";
      sink.add(std::string("sp1-l2-block/l2=") + name, {{"l2", name}},
               ExpectedStatus::Spherical, true, "",
               [d](const AmbientAlgebra& alg) {
                 return block_pair(alg, sp1_x_l2_in_so4(true, d), 4);
               });
      sink.add(std::string("l2-sp1-block/l2=") + name, {{"l2", name}},
               ExpectedStatus::Spherical, true, "",
               [d](const AmbientAlgebra& alg) {
                 return block_pair(alg, sp1_x_l2_in_so4(false, d), 4);
               });
    }
    sink.add("negative/diag-sp1", {}, ExpectedStatus::NotSpherical, true,
             "conjugation copy of sp(1): fixes the real axis of its "
             "quaternion block",
             [](const AmbientAlgebra& alg) {
               return block_pair(alg, so4_diagonal_sp1(), 4);
             });
  }
  sink.add("negative/corank-block", {}, ExpectedStatus::NotSpherical, true,
           "compact so(n-1) block leaves the last symmetric-pair coordinate "
           "unreached",
           [](const AmbientAlgebra& alg) {
             const std::size_t s = alg.matrix_size;
             Subspace h = span_matrices(
                 alg, real_block(so_basis(alg.n - 1), 0, s));
             return reductive_candidate(alg, h);
           });
  return out;
}

/// Emits one nonreductive block row (head operators + free so-factor + a +
/// n_k) for every sample of the free factor.
void emit_parabolic_block(CaseSink& sink, const std::string& tag,
                          std::vector<std::pair<std::string, std::string>>
                              base_params,
                          std::function<std::vector<RMat>()> head,
                          std::size_t k, std::size_t n) {
  const std::size_t free_gens = so_dim(n - k - 1);
  for (FactorSample s : factor_samples(free_gens)) {
    auto params = base_params;
    params.emplace_back("c", factor_sample_name(s));
    sink.add(tag + "/c=" + factor_sample_name(s), params,
             ExpectedStatus::Spherical, false, "",
             [head, k, s](const AmbientAlgebra& alg) {
               const std::size_t sz = alg.matrix_size;
               std::vector<CMat> mats = real_block(head(), 0, sz);
               auto free_ops = real_block(so_basis(alg.n - k - 1), k, sz);
               for (CMat& m : take_sample(free_ops, s))
                 mats.push_back(std::move(m));
               return parabolic_rows(alg, mats, k);
             });
  }
}

std::vector<TableCase> parabolic_table(std::size_t n) {
  std::vector<TableCase> out;
  CaseSink sink{out, "5.3/n=" + std::to_string(n) + "/", "5.3", n};

  const std::vector<std::pair<std::string, std::string>> levi = {
      {"zero", "all of n alone"},
      {"a", "a plus n"},
      {"ma", "the full minimal parabolic"}};
  for (const auto& [name, note] : levi)
    sink.add("free-levi/lH=" + name, {{"lH", name}},
             ExpectedStatus::Spherical, false, note,
             [name = name](const AmbientAlgebra& alg) {
               Subspace h = alg.n_nil;
               if (name != "zero") h = h.sum(alg.a);
               if (name == "ma") h = h.sum(alg.m);
               return parabolic_candidate(alg, h);
             });

  for (std::size_t k = 1; k + 2 <= n; ++k)
    emit_parabolic_block(sink, "block-pair/k=" + std::to_string(k),
                         {{"k", std::to_string(k)}},
                         [k] { return so_basis(k); }, k, n);
  for (std::size_t m = 4; 2 * m + 2 <= n; ++m)
    emit_parabolic_block(sink, "unitary-block/m=" + std::to_string(m),
                         {{"m", std::to_string(m)}},
                         [m] { return su_in_so(m); }, 2 * m, n);
  for (std::size_t m = 2; 4 * m + 2 <= n; ++m)
    emit_parabolic_block(sink, "quaternion-block/m=" + std::to_string(m),
                         {{"m", std::to_string(m)}},
                         [m] { return sp_in_so(m); }, 4 * m, n);
  if (n >= 18)
    emit_parabolic_block(sink, "spin9-block", {},
                         [] { return spin9_in_so16_basis(); }, 16, n);
  if (n >= 10)
    emit_parabolic_block(sink, "spin7-block", {},
                         [] { return spin7_in_so8_basis(); }, 8, n);
  if (n >= 9)
    emit_parabolic_block(sink, "g2-block", {},
                         [] { return g2_in_so7_basis(); }, 7, n);
  if (n >= 6) {
    for (std::size_t d : {std::size_t{0}, std::size_t{1}}) {
      const char* name = d == 0 ? "zero" : "torus";
      emit_parabolic_block(sink, std::string("sp1-l2-block/l2=") + name,
                           {{"l2", name}},
                           [d] { return sp1_x_l2_in_so4(true, d); }, 4, n);
      emit_parabolic_block(sink, std::string("l2-sp1-block/l2=") + name,
                           {{"l2", name}},
                           [d] { return sp1_x_l2_in_so4(false, d); }, 4, n);
    }
  }
  if (n >= 4)
    sink.add("negative/bare-rider", {}, ExpectedStatus::NotSpherical, false,
             "free factor alone: it acts trivially on the complement of n_2",
             [](const AmbientAlgebra& alg) {
               const std::size_t sz = alg.matrix_size;
               auto mats = real_block(so_basis(alg.n - 3), 2, sz);
               return parabolic_rows(alg, mats, 2);
             });
  return out;
}

}  // namespace

std::vector<TableCase> orthogonal_cases(const std::string& theorem_id,
                                        std::size_t n) {
  return theorem_id == "5.2" ? reductive_table(n) : parabolic_table(n);
}

}  // namespace rankone::detail

namespace rankone {

std::vector<TableCase> discrepancy_cases(Family family, std::size_t n) {
  std::vector<TableCase> out;
  if (family != Family::SO) return out;
  auto add = [&out, n](const std::string& suffix, std::string note,
                       std::function<CandidateSubalgebra(
                           const AmbientAlgebra&)> build) {
    TableCase c;
    c.case_id = "5.2/n=" + std::to_string(n) + "/" + suffix;
    c.theorem_id = "5.2";
    c.family = Family::SO;
    c.n = n;
    c.expected = ExpectedStatus::Discrepancy;
    c.reductive = true;
    c.note = std::move(note);
    c.build = std::move(build);
    out.push_back(std::move(c));
  };
  if (n >= 6)
    add("discrepancy/su3-block",
        "printed unitary-block range starts at m=4; the m=3 candidate is "
        "evaluated and reported without assertion",
        [](const AmbientAlgebra& alg) {
          return detail::block_pair(alg, su_in_so(3), 6);
        });
  for (std::size_t m = 2; m <= 3 && 2 * m <= n; ++m)
    add("discrepancy/u-block/m=" + std::to_string(m),
        m == 2 ? std::string("full unitary block; coincides with a printed "
                             "row up to conjugacy")
               : std::string("full unitary block; no printed row covers it"),
        [m](const AmbientAlgebra& alg) {
          return detail::block_pair(alg, u_in_so(m), 2 * m);
        });
  return out;
}

}  // namespace rankone
