#include "catalog_detail.hpp"
#include "rankone/embeddings.hpp"
#include "rankone/toolkit.hpp"

namespace rankone::detail {
namespace {

/// The three imaginary quaternion units in (e, f) coordinates (u = e + f j).
const std::array<std::pair<CRat, CRat>, 3>& quat_units() {
  static const std::array<std::pair<CRat, CRat>, 3> units = {
      {{CRat(0, 1), CRat(0)}, {CRat(0), CRat(1)}, {CRat(0), CRat(0, -1)}}};
  return units;
}

/// Nilpotent form with slot budget (k, l, m, p) and optional xi lines.
Subspace nform(const AmbientAlgebra& alg, std::size_t k, std::size_t l,
               std::size_t m, std::size_t p,
               std::vector<std::array<Rat, 3>> xi = {}) {
  NormalFormSpec spec;
  spec.kind = NormalFormKind::NKLMPXi;
  spec.k = k;
  spec.l = l;
  spec.m = m;
  spec.p = p;
  spec.xi = std::move(xi);
  return make_normal_form(alg, spec);
}

/// Symmetric-pair form with k zero slots and l real slots.
Subspace qform(const AmbientAlgebra& alg, std::size_t k, std::size_t l) {
  NormalFormSpec spec;
  spec.kind = NormalFormKind::QKLMPXi;
  spec.k = k;
  spec.l = l;
  return make_normal_form(alg, spec);
}

std::vector<std::array<Rat, 3>> xi_list(std::size_t m,
                                        std::array<Rat, 3> xi) {
  return std::vector<std::array<Rat, 3>>(m, xi);
}

struct CaseSink {
  std::vector<TableCase>& out;
  std::string prefix;
  std::string theorem_id;
  std::size_t n;

  void add(const std::string& suffix,
           std::vector<std::pair<std::string, std::string>> params,
           ExpectedStatus expected, bool reductive, std::string note,
           std::function<CandidateSubalgebra(const AmbientAlgebra&)> build) {
    TableCase c;
    c.case_id = prefix + suffix;
    c.theorem_id = theorem_id;
    c.family = Family::SP;
    c.n = n;
    c.params = std::move(params);
    c.expected = expected;
    c.reductive = reductive;
    c.note = std::move(note);
    c.build = std::move(build);
    out.push_back(std::move(c));
  }
};

/// Pure corner-sector element: (e, f) in the trailing two-by-two quaternion
/// sector, zero everywhere else.
CMat corner_elem(const AmbientAlgebra& alg, const CRat& e, const CRat& f) {
  const std::size_t n = alg.n, half = alg.n + 1;
  CMat m(alg.matrix_size, alg.matrix_size);
  m.at(n, n) = e;
  m.at(half + n, half + n) = e.conj();
  m.at(half + n, n) = f;
  m.at(n, half + n) = -f.conj();
  return m;
}

std::vector<CMat> corner_gens(const AmbientAlgebra& alg) {
  std::vector<CMat> out;
  for (const auto& [e, f] : quat_units())
    out.push_back(corner_elem(alg, e, f));
  return out;
}

/// Left multiplication by the quaternion e + f j on `width` consecutive
/// diagonal slots starting at A-index lo.
CMat scalar_block(const AmbientAlgebra& alg, const CRat& e, const CRat& f,
                  std::size_t lo, std::size_t width) {
  CMat op(2 * width, 2 * width);
  for (std::size_t t = 0; t < width; ++t) {
    op.at(t, t) = e;
    op.at(width + t, width + t) = e.conj();
    op.at(width + t, t) = f;
    op.at(t, width + t) = -f.conj();
  }
  return sp_block_elem(alg, op, lo);
}

/// Conjugation copy of sp(1) over `width` slots at A-index lo: left scalar
/// multiplication coupled with the centralizer-side factor, slot by slot.
std::vector<CMat> conjugation_gens(const AmbientAlgebra& alg, std::size_t lo,
                                   std::size_t width) {
  std::vector<CMat> out;
  for (const auto& [e, f] : quat_units())
    out.push_back(scalar_block(alg, e, f, lo, width)
                      .add(sp_mside_elem(alg, e, f)));
  return out;
}

/// Twisted conjugation copy of sp(1): the centralizer-side unit is the
/// slot unit conjugated by the missing fourth quaternion direction, so the
/// pair fixes that direction in every three-dimensional slot.
std::vector<CMat> twisted_conjugation_gens(const AmbientAlgebra& alg,
                                           std::size_t lo,
                                           std::size_t width) {
  std::vector<CMat> out;
  for (const auto& [e, f] : quat_units())
    out.push_back(scalar_block(alg, e, f, lo, width)
                      .add(sp_mside_elem(alg, -e, -f.conj())));
  return out;
}

/// [[S, 0], [0, S]] for a real operator S: the complex-pattern form of a
/// real block acting on the quaternion slots.
CMat real_pair_op(const RMat& s) {
  const std::size_t d = s.rows();
  CMat op(2 * d, 2 * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      op.at(r, c) = CRat(s.at(r, c));
      op.at(d + r, d + c) = CRat(s.at(r, c));
    }
  return op;
}

std::vector<CMat> real_pair_block(const AmbientAlgebra& alg,
                                  const std::vector<RMat>& ops,
                                  std::size_t lo) {
  std::vector<CMat> out;
  out.reserve(ops.size());
  for (const RMat& s : ops) out.push_back(sp_block_elem(alg, real_pair_op(s), lo));
  return out;
}

/// Complex-linear operators [[Z, 0], [0, conj Z]] at A-index lo.
std::vector<CMat> complex_linear_block(const AmbientAlgebra& alg,
                                       const std::vector<CMat>& zs,
                                       std::size_t lo) {
  std::vector<CMat> out;
  out.reserve(zs.size());
  for (const CMat& z : zs) {
    const std::size_t d = z.rows();
    CMat op(2 * d, 2 * d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        op.at(r, c) = z.at(r, c);
        op.at(d + r, d + c) = z.at(r, c).conj();
      }
    out.push_back(sp_block_elem(alg, op, lo));
  }
  return out;
}

/// The xi-unitary subalgebra of the width-m quaternion block at A-index 1:
/// the normalizer of the given nilpotent form inside the block. Its
/// dimension must be m squared.
Subspace xi_unitary(const AmbientAlgebra& alg, std::size_t m,
                    const Subspace& form) {
  Subspace blk =
      span_matrices(alg, sp_block(alg, sp_basis_complex(m), 1));
  Subspace u = normalizer_in(alg, blk, form);
  if (u.dim() != m * m)
    throw std::runtime_error("xi-unitary block has unexpected dimension " +
                             std::to_string(u.dim()));
  return u;
}

std::vector<TableCase> reductive_table(std::size_t n) {
  std::vector<TableCase> out;
  CaseSink sink{out, "7.3/n=" + std::to_string(n) + "/", "7.3", n};

  sink.add("compact-quaternion", {}, ExpectedStatus::Spherical, true, "",
           [](const AmbientAlgebra& alg) {
             Subspace h = span_matrices(
                 alg, sp_block(alg, sp_basis_complex(alg.n), 0));
             return reductive_candidate(alg, h);
           });
  sink.add("compact-quaternion-circle", {}, ExpectedStatus::Spherical, true,
           "", [](const AmbientAlgebra& alg) {
             std::vector<CMat> mats =
                 sp_block(alg, sp_basis_complex(alg.n), 0);
             mats.push_back(corner_elem(alg, CRat(0, 1), CRat(0)));
             return reductive_candidate(alg, span_matrices(alg, mats));
           });
  sink.add("compact-quaternion-pair", {}, ExpectedStatus::Spherical, true,
           "symmetric pair", [](const AmbientAlgebra& alg) {
             std::vector<CMat> mats =
                 sp_block(alg, sp_basis_complex(alg.n), 0);
             for (CMat& m : corner_gens(alg)) mats.push_back(std::move(m));
             return reductive_candidate(alg, span_matrices(alg, mats));
           });

  for (std::size_t k = 0; k < n; ++k)
    sink.add("split-block/k=" + std::to_string(k),
             {{"k", std::to_string(k)}}, ExpectedStatus::Spherical, true,
             "symmetric pair", [k](const AmbientAlgebra& alg) {
               Subspace h = lie_closure(alg, qform(alg, k, 0));
               if (k > 0)
                 h = h.sum(span_matrices(
                     alg, sp_block(alg, sp_basis_complex(k), 0)));
               return reductive_candidate(alg, h);
             });

  sink.add("split-flat", {}, ExpectedStatus::Spherical, true, "",
           [](const AmbientAlgebra& alg) {
             return reductive_candidate(alg,
                                        lie_closure(alg, qform(alg, 1, 0)));
           });
  sink.add("split-flat-circle", {}, ExpectedStatus::Spherical, true, "",
           [](const AmbientAlgebra& alg) {
             Subspace h = lie_closure(alg, qform(alg, 1, 0));
             h = h.sum(span_matrices(
                 alg, {scalar_block(alg, CRat(0, 1), CRat(0), 0, 1)}));
             return reductive_candidate(alg, h);
           });

  auto unitary_form_gens = [](const AmbientAlgebra& alg) {
    const std::size_t n = alg.n;
    std::vector<CMat> gens;
    const CMat zero_b(n, n);
    const std::vector<CRat> zero_col(n);
    for (const CMat& z : u_basis(n))
      gens.push_back(sp_matrix(n, z, zero_b, zero_col, zero_col, CRat(0),
                               CRat(0)));
    gens.push_back(sp_matrix(n, CMat(n, n), zero_b, zero_col, zero_col,
                             CRat(0, 1), CRat(0)));
    for (std::size_t t = 0; t < n; ++t) {
      std::vector<CRat> z(n);
      z[t] = CRat(1);
      gens.push_back(p_element(alg, z, zero_col));
      z[t] = CRat(0, 1);
      gens.push_back(p_element(alg, z, zero_col));
    }
    return gens;
  };
  sink.add("split-unitary", {}, ExpectedStatus::Spherical, true, "",
           [unitary_form_gens](const AmbientAlgebra& alg) {
             Subspace h = span_with_constraints(
                 alg, unitary_form_gens(alg),
                 {im_trace_block(0, alg.n + 1)});
             return reductive_candidate(alg, h);
           });
  sink.add("split-unitary-circle", {}, ExpectedStatus::Spherical, true,
           "symmetric pair", [unitary_form_gens](const AmbientAlgebra& alg) {
             Subspace h = span_with_constraints(
                 alg, unitary_form_gens(alg),
                 {im_trace_block(0, alg.n + 1)});
             CMat center = scalar_block(alg, CRat(0, 1), CRat(0), 0, alg.n)
                               .add(corner_elem(alg, CRat(0, 1), CRat(0)));
             h = h.sum(span_matrices(alg, {center}));
             return reductive_candidate(alg, h);
           });

  sink.add("negative/real-closure", {}, ExpectedStatus::NotSpherical, true,
           "real form plus the scalar copy of sp(1): the complement is a "
           "real tensor product and the sphere action is not transitive",
           [](const AmbientAlgebra& alg) {
             const std::size_t n = alg.n;
             std::vector<CMat> mats = real_pair_block(alg, so_basis(n), 0);
             const std::vector<CRat> zero_col(n);
             for (std::size_t t = 0; t < n; ++t) {
               std::vector<CRat> z(n);
               z[t] = CRat(1);
               mats.push_back(p_element(alg, z, zero_col));
             }
             for (const auto& [e, f] : quat_units())
               mats.push_back(scalar_block(alg, e, f, 0, n)
                                  .add(corner_elem(alg, e, f)));
             return reductive_candidate(alg, span_matrices(alg, mats));
           });
  sink.add("negative/compact-pair", {}, ExpectedStatus::NotSpherical, true,
           "compact corank-one pair: the symmetric-pair space splits into "
           "two invariant quaternion pieces",
           [](const AmbientAlgebra& alg) {
             std::vector<CMat> mats =
                 sp_block(alg, sp_basis_complex(alg.n - 1), 0);
             for (CMat& m :
                  sp_block(alg, sp_basis_complex(1), alg.n - 1))
               mats.push_back(std::move(m));
             return reductive_candidate(alg, span_matrices(alg, mats));
           });
  return out;
}

/// Shared loop: head generators plus sampled free block rider and sampled
/// centralizer-side factor, summed with a and the given nilpotent form.
void emit_parabolic_row(
    CaseSink& sink, const std::string& tag,
    std::vector<std::pair<std::string, std::string>> base_params,
    std::function<std::vector<CMat>(const AmbientAlgebra&)> head,
    std::size_t width, std::function<Subspace(const AmbientAlgebra&)> form,
    std::size_t n,
    std::function<std::vector<CMat>(const AmbientAlgebra&)> side,
    std::size_t side_gens, const char* side_label,
    std::function<ExpectedStatus(FactorSample, FactorSample)> expected,
    std::function<std::string(FactorSample, FactorSample)> note) {
  const std::size_t free_dim = n - 1 - width;
  const std::size_t rider_gens = free_dim * (2 * free_dim + 1);
  for (FactorSample b : factor_samples(rider_gens)) {
    for (FactorSample c : factor_samples(side_gens)) {
      auto params = base_params;
      params.emplace_back("b", factor_sample_name(b));
      params.emplace_back(side_label, factor_sample_name(c));
      sink.add(tag + "/b=" + factor_sample_name(b) + "/" + side_label +
                   "=" + factor_sample_name(c),
               params, expected(b, c), false, note(b, c),
               [head, width, form, side, b, c](const AmbientAlgebra& alg) {
                 std::vector<CMat> gens = head(alg);
                 auto rider = sp_block(
                     alg, sp_basis_complex(alg.n - 1 - width), 1 + width);
                 for (CMat& m : take_sample(rider, b))
                   gens.push_back(std::move(m));
                 for (CMat& m : take_sample(side(alg), c))
                   gens.push_back(std::move(m));
                 Subspace h = span_matrices(alg, gens)
                                  .sum(alg.a)
                                  .sum(form(alg));
                 return parabolic_candidate(alg, h);
               });
    }
  }
}

std::vector<TableCase> parabolic_table(std::size_t n) {
  std::vector<TableCase> out;
  CaseSink sink{out, "7.4/n=" + std::to_string(n) + "/", "7.4", n};

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

  auto always_spherical = [](FactorSample, FactorSample) {
    return ExpectedStatus::Spherical;
  };
  auto no_note = [](FactorSample, FactorSample) { return std::string(); };
  auto mside = [](const AmbientAlgebra& alg) { return sp_mside_gens(alg); };

  for (std::size_t k = 1; k < n; ++k)
    emit_parabolic_row(
        sink, "block-pair/k=" + std::to_string(k),
        {{"k", std::to_string(k)}},
        [k](const AmbientAlgebra& alg) {
          return sp_block(alg, sp_basis_complex(k), 1);
        },
        k, [k](const AmbientAlgebra& alg) { return nform(alg, k, 0, 0, 0); },
        n, mside, 3, "c", always_spherical, no_note);

  if (n >= 2)
    emit_parabolic_row(
        sink, "slot-pair", {},
        [mside](const AmbientAlgebra& alg) { return mside(alg); }, 1,
        [](const AmbientAlgebra& alg) { return nform(alg, 1, 0, 0, 0); }, n,
        [](const AmbientAlgebra& alg) {
          return sp_block(alg, sp_basis_complex(1), 1);
        },
        3, "c", always_spherical,
        [](FactorSample, FactorSample) {
          return std::string("factor placement per displayed order");
        });

  if (n >= 2)
    for (FactorSample b :
         factor_samples((n - 2) * (2 * (n - 2) + 1)))
      sink.add(std::string("real-slot/b=") + factor_sample_name(b),
               {{"b", factor_sample_name(b)}}, ExpectedStatus::Spherical,
               false, "",
               [b](const AmbientAlgebra& alg) {
                 std::vector<CMat> gens = conjugation_gens(alg, 1, 1);
                 auto rider =
                     sp_block(alg, sp_basis_complex(alg.n - 2), 2);
                 for (CMat& m : take_sample(rider, b))
                   gens.push_back(std::move(m));
                 Subspace h = span_matrices(alg, gens)
                                  .sum(alg.a)
                                  .sum(nform(alg, 0, 1, 0, 0));
                 return parabolic_candidate(alg, h);
               });

  const std::array<Rat, 3> xi_i = {Rat(1), Rat(0), Rat(0)};
  for (std::size_t m = 1; m < n; ++m) {
    const std::size_t rider_dim = n - 1 - m;
    for (FactorSample b :
         factor_samples(rider_dim * (2 * rider_dim + 1)))
      for (FactorSample d : factor_samples(1)) {
        sink.add("plane-slot/m=" + std::to_string(m) + "/b=" +
                     factor_sample_name(b) + "/d=" + factor_sample_name(d),
                 {{"m", std::to_string(m)},
                  {"b", factor_sample_name(b)},
                  {"d", factor_sample_name(d)}},
                 ExpectedStatus::Spherical, false, "",
                 [m, b, d, xi_i](const AmbientAlgebra& alg) {
                   Subspace form = nform(alg, 0, 0, m, 0, xi_list(m, xi_i));
                   Subspace mh = xi_unitary(alg, m, form);
                   std::vector<CMat> gens;
                   auto rider =
                       sp_block(alg, sp_basis_complex(alg.n - 1 - m), 1 + m);
                   for (CMat& g : take_sample(rider, b))
                     gens.push_back(std::move(g));
                   CMat dgen = sp_mside_elem(alg, CRat(0, 1), CRat(0));
                   for (CMat& g : take_sample({dgen}, d))
                     gens.push_back(std::move(g));
                   if (!gens.empty()) mh = mh.sum(span_matrices(alg, gens));
                   Subspace h = mh.sum(alg.a).sum(form);
                   return parabolic_candidate(alg, h);
                 });
        if (m >= 2)
          sink.add("special-plane-slot/m=" + std::to_string(m) + "/b=" +
                       factor_sample_name(b) +
                       "/d=" + factor_sample_name(d),
                   {{"m", std::to_string(m)},
                    {"b", factor_sample_name(b)},
                    {"d", factor_sample_name(d)}},
                   ExpectedStatus::Spherical, false, "",
                   [m, b, d, xi_i](const AmbientAlgebra& alg) {
                     Subspace form =
                         nform(alg, 0, 0, m, 0, xi_list(m, xi_i));
                     Subspace mh = cut_subspace(alg, xi_unitary(alg, m, form),
                                                {im_trace_block(1, m)});
                     std::vector<CMat> gens;
                     auto rider = sp_block(
                         alg, sp_basis_complex(alg.n - 1 - m), 1 + m);
                     for (CMat& g : take_sample(rider, b))
                       gens.push_back(std::move(g));
                     CMat dgen = sp_mside_elem(alg, CRat(0, 1), CRat(0));
                     for (CMat& g : take_sample({dgen}, d))
                       gens.push_back(std::move(g));
                     if (!gens.empty())
                       mh = mh.sum(span_matrices(alg, gens));
                     Subspace h = mh.sum(alg.a).sum(form);
                     return parabolic_candidate(alg, h);
                   });
      }
  }
  if (n >= 2) {
    const std::array<Rat, 3> xi_p = {rat(3, 5), rat(4, 5), Rat(0)};
    sink.add("plane-slot/m=1/xi=pyth", {{"m", "1"}, {"xi", "3/5,4/5,0"}},
             ExpectedStatus::Spherical, false,
             "tilted unit plane direction with rational coordinates",
             [xi_p](const AmbientAlgebra& alg) {
               Subspace form = nform(alg, 0, 0, 1, 0, xi_list(1, xi_p));
               Subspace mh = xi_unitary(alg, 1, form);
               CMat dgen =
                   sp_mside_elem(alg, CRat(Rat(0), rat(3, 5)),
                                 CRat(rat(4, 5), Rat(0)));
               mh = mh.sum(span_matrices(alg, {dgen}));
               Subspace h = mh.sum(alg.a).sum(form);
               return parabolic_candidate(alg, h);
             });
    for (FactorSample d : factor_samples(1)) {
      const bool corner = d == FactorSample::Zero;
      sink.add(std::string("special-plane-slot/m=1/d=") +
                   factor_sample_name(d),
               {{"m", "1"}, {"d", factor_sample_name(d)}},
               corner ? ExpectedStatus::NotSpherical
                      : ExpectedStatus::Spherical,
               false,
               corner ? "degenerate corner: the traceless cut of a "
                        "one-dimensional xi-unitary block is zero"
                      : "the circle factor alone still rotates the plane "
                        "complement",
               [d](const AmbientAlgebra& alg) {
                 const std::array<Rat, 3> xi = {Rat(1), Rat(0), Rat(0)};
                 Subspace form = nform(alg, 0, 0, 1, 0, xi_list(1, xi));
                 Subspace mh = cut_subspace(alg, xi_unitary(alg, 1, form),
                                            {im_trace_block(1, 1)});
                 CMat dgen = sp_mside_elem(alg, CRat(0, 1), CRat(0));
                 std::vector<CMat> gens;
                 for (CMat& g : take_sample({dgen}, d))
                   gens.push_back(std::move(g));
                 if (!gens.empty()) mh = mh.sum(span_matrices(alg, gens));
                 Subspace h = mh.sum(alg.a).sum(form);
                 return parabolic_candidate(alg, h);
               });
    }
  }
  for (std::size_t j = 2; 2 * j < n; ++j) {
    const std::size_t m = 2 * j;
    const std::size_t rider_dim = n - 1 - m;
    for (FactorSample b :
         factor_samples(rider_dim * (2 * rider_dim + 1)))
      for (FactorSample d : factor_samples(1)) {
        auto build = [j, m, b, d, xi_i](const AmbientAlgebra& alg,
                                        bool with_center) {
          Subspace form = nform(alg, 0, 0, m, 0, xi_list(m, xi_i));
          std::vector<CMat> gens =
              complex_linear_block(alg, sp_basis_complex(j), 1);
          if (with_center)
            gens.push_back(scalar_block(alg, CRat(0, 1), CRat(0), 1, m));
          auto rider =
              sp_block(alg, sp_basis_complex(alg.n - 1 - m), 1 + m);
          for (CMat& g : take_sample(rider, b)) gens.push_back(std::move(g));
          CMat dgen = sp_mside_elem(alg, CRat(0, 1), CRat(0));
          for (CMat& g : take_sample({dgen}, d)) gens.push_back(std::move(g));
          Subspace h =
              span_matrices(alg, gens).sum(alg.a).sum(form);
          return parabolic_candidate(alg, h);
        };
        sink.add("plane-quaternion-slot/j=" + std::to_string(j) + "/b=" +
                     factor_sample_name(b) + "/d=" + factor_sample_name(d),
                 {{"j", std::to_string(j)},
                  {"b", factor_sample_name(b)},
                  {"d", factor_sample_name(d)}},
                 ExpectedStatus::Spherical, false, "",
                 [build](const AmbientAlgebra& alg) {
                   return build(alg, false);
                 });
        sink.add("plane-quaternion-circle-slot/j=" + std::to_string(j) +
                     "/b=" + factor_sample_name(b) +
                     "/d=" + factor_sample_name(d),
                 {{"j", std::to_string(j)},
                  {"b", factor_sample_name(b)},
                  {"d", factor_sample_name(d)}},
                 ExpectedStatus::Spherical, false, "",
                 [build](const AmbientAlgebra& alg) {
                   return build(alg, true);
                 });
      }
  }

  auto conj_side = [](std::size_t width) {
    return [width](const AmbientAlgebra& alg) {
      return twisted_conjugation_gens(alg, 1, width);
    };
  };
  for (std::size_t p = 1; p < n; ++p)
    emit_parabolic_row(
        sink, "threedim-slot/p=" + std::to_string(p),
        {{"p", std::to_string(p)}},
        [p](const AmbientAlgebra& alg) {
          return real_pair_block(alg, so_basis(p), 1);
        },
        p, [p](const AmbientAlgebra& alg) { return nform(alg, 0, 0, 0, p); },
        n, conj_side(p), 3, "c", always_spherical,
        p == 1 ? std::function<std::string(FactorSample, FactorSample)>(
                     [](FactorSample, FactorSample) {
                       return std::string("complement is one-dimensional");
                     })
               : no_note);
  for (std::size_t m = 4; 2 * m < n; ++m)
    emit_parabolic_row(
        sink, "threedim-unitary/m=" + std::to_string(m),
        {{"m", std::to_string(m)}},
        [m](const AmbientAlgebra& alg) {
          return real_pair_block(alg, su_in_so(m), 1);
        },
        2 * m,
        [m](const AmbientAlgebra& alg) {
          return nform(alg, 0, 0, 0, 2 * m);
        },
        n, conj_side(2 * m), 3, "c", always_spherical, no_note);
  for (std::size_t m = 2; 4 * m < n; ++m)
    emit_parabolic_row(
        sink, "threedim-quaternion/m=" + std::to_string(m),
        {{"m", std::to_string(m)}},
        [m](const AmbientAlgebra& alg) {
          return real_pair_block(alg, sp_in_so(m), 1);
        },
        4 * m,
        [m](const AmbientAlgebra& alg) {
          return nform(alg, 0, 0, 0, 4 * m);
        },
        n, conj_side(4 * m), 3, "c", always_spherical, no_note);
  if (n >= 17)
    emit_parabolic_row(
        sink, "threedim-spin9", {},
        [](const AmbientAlgebra& alg) {
          return real_pair_block(alg, spin9_in_so16_basis(), 1);
        },
        16, [](const AmbientAlgebra& alg) { return nform(alg, 0, 0, 0, 16); },
        n, conj_side(16), 3, "c", always_spherical, no_note);
  if (n >= 9)
    emit_parabolic_row(
        sink, "threedim-spin7", {},
        [](const AmbientAlgebra& alg) {
          return real_pair_block(alg, spin7_in_so8_basis(), 1);
        },
        8, [](const AmbientAlgebra& alg) { return nform(alg, 0, 0, 0, 8); },
        n, conj_side(8), 3, "c", always_spherical, no_note);
  if (n >= 8)
    emit_parabolic_row(
        sink, "threedim-g2", {},
        [](const AmbientAlgebra& alg) {
          return real_pair_block(alg, g2_in_so7_basis(), 1);
        },
        7, [](const AmbientAlgebra& alg) { return nform(alg, 0, 0, 0, 7); },
        n, conj_side(7), 3, "c", always_spherical, no_note);
  if (n >= 5)
    for (std::size_t d : {std::size_t{0}, std::size_t{1}}) {
      const char* name = d == 0 ? "zero" : "torus";
      emit_parabolic_row(
          sink, std::string("threedim-sp1-l2/l2=") + name, {{"l2", name}},
          [d](const AmbientAlgebra& alg) {
            return real_pair_block(alg, sp1_x_l2_in_so4(true, d), 1);
          },
          4, [](const AmbientAlgebra& alg) { return nform(alg, 0, 0, 0, 4); },
          n, conj_side(4), 3, "c", always_spherical, no_note);
      emit_parabolic_row(
          sink, std::string("threedim-l2-sp1/l2=") + name, {{"l2", name}},
          [d](const AmbientAlgebra& alg) {
            return real_pair_block(alg, sp1_x_l2_in_so4(false, d), 1);
          },
          4, [](const AmbientAlgebra& alg) { return nform(alg, 0, 0, 0, 4); },
          n, conj_side(4), 3, "c", always_spherical, no_note);
    }

  if (n >= 3)
    sink.add("negative/real-pair", {{"l", "2"}},
             ExpectedStatus::NotSpherical, false,
             "two real slots: even the full normalizer mixes them through "
             "a plane-times-rotation action that misses the sphere",
             [](const AmbientAlgebra& alg) {
               Subspace form = nform(alg, 0, 2, 0, 0);
               Subspace mh = normalizer_in(alg, alg.m, form);
               Subspace h = mh.sum(alg.a).sum(form);
               return parabolic_candidate(alg, h);
             });
  return out;
}

}  // namespace

std::vector<TableCase> quaternion_cases(const std::string& theorem_id,
                                        std::size_t n) {
  return theorem_id == "7.3" ? reductive_table(n) : parabolic_table(n);
}

}  // namespace rankone::detail
