#include "catalog_detail.hpp"
#include "rankone/embeddings.hpp"

namespace rankone::detail {
namespace {

/// Nilpotent form of the unitary family: first k root-space slots zero, the
/// next l slots real, plus the full second root space.
Subspace nform(const AmbientAlgebra& alg, std::size_t k, std::size_t l) {
  NormalFormSpec spec;
  spec.kind = NormalFormKind::NKL;
  spec.k = k;
  spec.l = l;
  return make_normal_form(alg, spec);
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
    c.family = Family::SU;
    c.n = n;
    c.params = std::move(params);
    c.expected = expected;
    c.reductive = reductive;
    c.note = std::move(note);
    c.build = std::move(build);
    out.push_back(std::move(c));
  }
};

/// Circle generator at the trailing diagonal slot (the noncompact corner).
CMat corner_circle(const AmbientAlgebra& alg) {
  CMat m(alg.matrix_size, alg.matrix_size);
  m.at(alg.n, alg.n) = CRat(0, 1);
  return m;
}

/// Generators of the full rank-one corner block on slots k..n: the compact
/// unitary part, the corner circle, and both real directions of every
/// symmetric-pair slot from k on.
std::vector<CMat> corner_block_gens(const AmbientAlgebra& alg,
                                    std::size_t k) {
  const std::size_t s = alg.matrix_size, n = alg.n;
  std::vector<CMat> gens = complex_block(u_basis(n - k), k, s);
  gens.push_back(corner_circle(alg));
  for (std::size_t t = k; t < n; ++t) {
    std::vector<CRat> z(n);
    z[t] = CRat(1);
    gens.push_back(p_element(alg, z));
    z[t] = CRat(0, 1);
    gens.push_back(p_element(alg, z));
  }
  return gens;
}

/// Scalar i on the leading d x d block.
CMat leading_circle(const AmbientAlgebra& alg, std::size_t d) {
  CMat m(alg.matrix_size, alg.matrix_size);
  for (std::size_t t = 0; t < d; ++t) m.at(t, t) = CRat(0, 1);
  return m;
}

/// The centralizer circle of the compact part: scalar i on the first n slots
/// with the compensating corner entry, which lands inside the algebra.
CMat compact_center(const AmbientAlgebra& alg) {
  CMat m = leading_circle(alg, alg.n);
  m.at(alg.n, alg.n) = CRat(0, -Rat(static_cast<long>(alg.n)));
  return m;
}

std::vector<TableCase> reductive_table(std::size_t n) {
  std::vector<TableCase> out;
  CaseSink sink{out, "6.2/n=" + std::to_string(n) + "/", "6.2", n};

  sink.add("compact-unitary", {}, ExpectedStatus::Spherical, true,
           "symmetric pair", [](const AmbientAlgebra& alg) {
             return reductive_candidate(alg, alg.k);
           });
  if (n >= 2)
    sink.add("compact-special", {}, ExpectedStatus::Spherical, true, "",
             [](const AmbientAlgebra& alg) {
               Subspace h = span_matrices(
                   alg, complex_block(su_basis(alg.n), 0, alg.matrix_size));
               return reductive_candidate(alg, h);
             });
  if (n % 2 == 0 && n >= 4) {
    const std::size_t m = n / 2;
    sink.add("compact-quaternion/m=" + std::to_string(m),
             {{"m", std::to_string(m)}}, ExpectedStatus::Spherical, true, "",
             [m](const AmbientAlgebra& alg) {
               Subspace h = span_matrices(
                   alg,
                   complex_block(sp_basis_complex(m), 0, alg.matrix_size));
               return reductive_candidate(alg, h);
             });
    sink.add("compact-quaternion-circle/m=" + std::to_string(m),
             {{"m", std::to_string(m)}}, ExpectedStatus::Spherical, true, "",
             [m](const AmbientAlgebra& alg) {
               std::vector<CMat> mats =
                   complex_block(sp_basis_complex(m), 0, alg.matrix_size);
               mats.push_back(compact_center(alg));
               return reductive_candidate(alg, span_matrices(alg, mats));
             });
  }

  for (std::size_t k = 0; k < n; ++k) {
    sink.add("split-unitary-pair/k=" + std::to_string(k),
             {{"k", std::to_string(k)}}, ExpectedStatus::Spherical, true,
             "symmetric pair", [k](const AmbientAlgebra& alg) {
               std::vector<CMat> gens = corner_block_gens(alg, k);
               for (CMat& m : complex_block(u_basis(k), 0, alg.matrix_size))
                 gens.push_back(std::move(m));
               Subspace h = span_with_constraints(alg, gens, {im_trace});
               return reductive_candidate(alg, h);
             });
    sink.add("split-special-pair/k=" + std::to_string(k),
             {{"k", std::to_string(k)}}, ExpectedStatus::Spherical, true, "",
             [k, n](const AmbientAlgebra& alg) {
               std::vector<CMat> gens = corner_block_gens(alg, k);
               for (CMat& m : complex_block(u_basis(k), 0, alg.matrix_size))
                 gens.push_back(std::move(m));
               Subspace h = span_with_constraints(
                   alg, gens,
                   {im_trace_block(0, k), im_trace_block(k, n + 1 - k)});
               return reductive_candidate(alg, h);
             });
  }

  for (std::size_t m = 2; 2 * m < n; ++m) {
    const std::size_t k = 2 * m;
    sink.add("split-quaternion-pair/m=" + std::to_string(m),
             {{"m", std::to_string(m)}, {"k", std::to_string(k)}},
             ExpectedStatus::Spherical, true, "",
             [m, k](const AmbientAlgebra& alg) {
               std::vector<CMat> gens = corner_block_gens(alg, k);
               for (CMat& g :
                    complex_block(sp_basis_complex(m), 0, alg.matrix_size))
                 gens.push_back(std::move(g));
               Subspace h = span_with_constraints(alg, gens, {im_trace});
               return reductive_candidate(alg, h);
             });
    sink.add("split-quaternion-circle-pair/m=" + std::to_string(m),
             {{"m", std::to_string(m)}, {"k", std::to_string(k)}},
             ExpectedStatus::Spherical, true, "",
             [m, k](const AmbientAlgebra& alg) {
               std::vector<CMat> gens = corner_block_gens(alg, k);
               for (CMat& g :
                    complex_block(sp_basis_complex(m), 0, alg.matrix_size))
                 gens.push_back(std::move(g));
               gens.push_back(leading_circle(alg, k));
               Subspace h = span_with_constraints(alg, gens, {im_trace});
               return reductive_candidate(alg, h);
             });
  }

  sink.add("real-form", {}, ExpectedStatus::Spherical, true, "symmetric pair",
           [n](const AmbientAlgebra& alg) {
             std::vector<CMat> gens =
                 real_block(so_basis(n), 0, alg.matrix_size);
             for (std::size_t t = 0; t < n; ++t) {
               std::vector<CRat> z(n);
               z[t] = CRat(1);
               gens.push_back(p_element(alg, z));
             }
             return reductive_candidate(alg, span_matrices(alg, gens));
           });

  for (std::size_t k = 1; k < n; ++k)
    sink.add("negative/real-pair/k=" + std::to_string(k),
             {{"k", std::to_string(k)}}, ExpectedStatus::NotSpherical, true,
             "unitary head with a real corner pair: the complement splits "
             "into a complex and an imaginary part",
             [k, n](const AmbientAlgebra& alg) {
               std::vector<CMat> gens =
                   complex_block(u_basis(k), 0, alg.matrix_size);
               for (CMat& m :
                    real_block(so_basis(n - k), k, alg.matrix_size))
                 gens.push_back(std::move(m));
               for (std::size_t t = k; t < n; ++t) {
                 std::vector<CRat> z(n);
                 z[t] = CRat(1);
                 gens.push_back(p_element(alg, z));
               }
               Subspace h = span_with_constraints(alg, gens, {im_trace});
               return reductive_candidate(alg, h);
             });
  if (n >= 2)
    sink.add("negative/compact-block", {}, ExpectedStatus::NotSpherical, true,
             "compact corank-one special block: it fixes the last complex "
             "symmetric-pair coordinate",
             [](const AmbientAlgebra& alg) {
               Subspace h = span_matrices(
                   alg,
                   complex_block(su_basis(alg.n - 1), 0, alg.matrix_size));
               return reductive_candidate(alg, h);
             });
  return out;
}

/// Circle generator matching the normalizer shape for l real slots at the
/// front: scalar i on those slots and on the two trailing diagonal entries.
CMat real_slot_circle(const AmbientAlgebra& alg, std::size_t l) {
  CMat m = leading_circle(alg, l);
  m.at(alg.n - 1, alg.n - 1) = CRat(0, 1);
  m.at(alg.n, alg.n) = CRat(0, 1);
  return m;
}

/// Circle generator for zero slots at the front: scalar i on the two
/// trailing diagonal entries only.
CMat tail_circle(const AmbientAlgebra& alg) { return real_slot_circle(alg, 0); }

/// Emits one nonreductive row with head operators on the leading slots, a
/// free unitary rider on the next block, an optional circle, and the
/// nilpotent form; loops over all samples of rider and circle.
void emit_parabolic_row(
    CaseSink& sink, const std::string& tag,
    std::vector<std::pair<std::string, std::string>> base_params,
    std::function<std::vector<CMat>(const AmbientAlgebra&)> head,
    bool real_slots, std::size_t width, std::size_t n,
    std::function<ExpectedStatus(FactorSample, FactorSample)> expected,
    std::function<std::string(FactorSample, FactorSample)> note) {
  const std::size_t rider_gens = (n - 1 - width) * (n - 1 - width);
  for (FactorSample b : factor_samples(rider_gens)) {
    for (FactorSample c : factor_samples(1)) {
      auto params = base_params;
      params.emplace_back("b", factor_sample_name(b));
      params.emplace_back("c", factor_sample_name(c));
      sink.add(tag + "/b=" + factor_sample_name(b) +
                   "/c=" + factor_sample_name(c),
               params, expected(b, c), false, note(b, c),
               [head, real_slots, width, b, c](const AmbientAlgebra& alg) {
                 const std::size_t s = alg.matrix_size;
                 std::vector<CMat> gens = head(alg);
                 auto rider =
                     complex_block(u_basis(alg.n - 1 - width), width, s);
                 for (CMat& m : take_sample(rider, b))
                   gens.push_back(std::move(m));
                 CMat circ = real_slots ? real_slot_circle(alg, width)
                                        : tail_circle(alg);
                 for (CMat& m : take_sample({circ}, c))
                   gens.push_back(std::move(m));
                 Subspace mh = span_with_constraints(alg, gens, {im_trace});
                 Subspace h =
                     mh.sum(alg.a).sum(real_slots
                                           ? nform(alg, 0, width)
                                           : nform(alg, width, 0));
                 return parabolic_candidate(alg, h);
               });
    }
  }
}

std::vector<TableCase> parabolic_table(std::size_t n) {
  std::vector<TableCase> out;
  CaseSink sink{out, "6.3/n=" + std::to_string(n) + "/", "6.3", n};

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

  for (std::size_t l = 1; l + 1 <= n; ++l)
    emit_parabolic_row(
        sink, "real-block/l=" + std::to_string(l), {{"l", std::to_string(l)}},
        [l](const AmbientAlgebra& alg) {
          return real_block(so_basis(l), 0, alg.matrix_size);
        },
        true, l, n, always_spherical,
        l == 1 ? std::function<std::string(FactorSample, FactorSample)>(
                     [](FactorSample, FactorSample) {
                       return std::string(
                           "complement is one-dimensional");
                     })
               : no_note);
  for (std::size_t m = 4; 2 * m + 1 <= n; ++m)
    emit_parabolic_row(
        sink, "unitary-real-block/m=" + std::to_string(m),
        {{"m", std::to_string(m)}},
        [m](const AmbientAlgebra& alg) {
          return real_block(su_in_so(m), 0, alg.matrix_size);
        },
        true, 2 * m, n, always_spherical, no_note);
  for (std::size_t m = 2; 4 * m + 1 <= n; ++m)
    emit_parabolic_row(
        sink, "quaternion-real-block/m=" + std::to_string(m),
        {{"m", std::to_string(m)}},
        [m](const AmbientAlgebra& alg) {
          return real_block(sp_in_so(m), 0, alg.matrix_size);
        },
        true, 4 * m, n, always_spherical, no_note);
  if (n >= 17)
    emit_parabolic_row(
        sink, "spin9-block", {},
        [](const AmbientAlgebra& alg) {
          return real_block(spin9_in_so16_basis(), 0, alg.matrix_size);
        },
        true, 16, n, always_spherical, no_note);
  if (n >= 9)
    emit_parabolic_row(
        sink, "spin7-block", {},
        [](const AmbientAlgebra& alg) {
          return real_block(spin7_in_so8_basis(), 0, alg.matrix_size);
        },
        true, 8, n, always_spherical, no_note);
  if (n >= 8)
    emit_parabolic_row(
        sink, "g2-block", {},
        [](const AmbientAlgebra& alg) {
          return real_block(g2_in_so7_basis(), 0, alg.matrix_size);
        },
        true, 7, n, always_spherical, no_note);
  if (n >= 5) {
    for (std::size_t d : {std::size_t{0}, std::size_t{1}}) {
      const char* name = d == 0 ? "zero" : "torus";
      emit_parabolic_row(
          sink, std::string("sp1-l2-block/l2=") + name, {{"l2", name}},
          [d](const AmbientAlgebra& alg) {
            return real_block(sp1_x_l2_in_so4(true, d), 0, alg.matrix_size);
          },
          true, 4, n, always_spherical, no_note);
      emit_parabolic_row(
          sink, std::string("l2-sp1-block/l2=") + name, {{"l2", name}},
          [d](const AmbientAlgebra& alg) {
            return real_block(sp1_x_l2_in_so4(false, d), 0, alg.matrix_size);
          },
          true, 4, n, always_spherical, no_note);
    }
  }

  for (std::size_t k = 1; k < n; ++k)
    emit_parabolic_row(
        sink, "unitary-slot/k=" + std::to_string(k),
        {{"k", std::to_string(k)}},
        [k](const AmbientAlgebra& alg) {
          return complex_block(u_basis(k), 0, alg.matrix_size);
        },
        false, k, n,
        [k](FactorSample b, FactorSample c) {
          return (k == 1 && b == FactorSample::Zero &&
                  c == FactorSample::Zero)
                     ? ExpectedStatus::NotSpherical
                     : ExpectedStatus::Spherical;
        },
        [k](FactorSample b, FactorSample c) {
          return (k == 1 && b == FactorSample::Zero &&
                  c == FactorSample::Zero)
                     ? std::string(
                           "degenerate corner: the determinant-one cut "
                           "removes the lone circle, leaving no rotation "
                           "on the complement")
                     : std::string();
        });
  for (std::size_t k = 2; k < n; ++k)
    emit_parabolic_row(
        sink, "special-slot/k=" + std::to_string(k),
        {{"k", std::to_string(k)}},
        [k](const AmbientAlgebra& alg) {
          return complex_block(su_basis(k), 0, alg.matrix_size);
        },
        false, k, n, always_spherical, no_note);
  for (std::size_t m = 2; 2 * m < n; ++m) {
    const std::size_t k = 2 * m;
    emit_parabolic_row(
        sink, "quaternion-slot/m=" + std::to_string(m),
        {{"m", std::to_string(m)}, {"k", std::to_string(k)}},
        [m](const AmbientAlgebra& alg) {
          return complex_block(sp_basis_complex(m), 0, alg.matrix_size);
        },
        false, k, n, always_spherical, no_note);
    emit_parabolic_row(
        sink, "quaternion-circle-slot/m=" + std::to_string(m),
        {{"m", std::to_string(m)}, {"k", std::to_string(k)}},
        [m, k](const AmbientAlgebra& alg) {
          std::vector<CMat> gens =
              complex_block(sp_basis_complex(m), 0, alg.matrix_size);
          gens.push_back(leading_circle(alg, k));
          return gens;
        },
        false, k, n, always_spherical, no_note);
  }
  if (n >= 2)
    for (FactorSample cs : factor_samples(1))
      for (FactorSample b : factor_samples((n - 2) * (n - 2))) {
        const bool corner =
            cs == FactorSample::Zero && b == FactorSample::Zero;
        sink.add(std::string("circle-slot/c=") + factor_sample_name(cs) +
                     "/b=" + factor_sample_name(b),
                 {{"c", factor_sample_name(cs)},
                  {"b", factor_sample_name(b)}},
                 corner ? ExpectedStatus::NotSpherical
                        : ExpectedStatus::Spherical,
                 false,
                 corner ? "degenerate corner: the determinant-one cut "
                          "removes the lone tail circle"
                        : "factor placement per displayed order",
                 [cs, b](const AmbientAlgebra& alg) {
                   const std::size_t s = alg.matrix_size;
                   std::vector<CMat> gens;
                   CMat slot(s, s);
                   slot.at(0, 0) = CRat(0, 1);
                   for (CMat& m : take_sample({slot}, cs))
                     gens.push_back(std::move(m));
                   auto rider = complex_block(u_basis(alg.n - 2), 1, s);
                   for (CMat& m : take_sample(rider, b))
                     gens.push_back(std::move(m));
                   gens.push_back(tail_circle(alg));
                   Subspace mh =
                       span_with_constraints(alg, gens, {im_trace});
                   Subspace h = mh.sum(alg.a).sum(nform(alg, 1, 0));
                   return parabolic_candidate(alg, h);
                 });
      }
  if (n >= 3)
    sink.add("negative/bare-rider", {}, ExpectedStatus::NotSpherical, false,
             "special rider without any circle: it acts trivially on the "
             "complement slot",
             [](const AmbientAlgebra& alg) {
               Subspace mh = span_matrices(
                   alg,
                   complex_block(su_basis(alg.n - 2), 1, alg.matrix_size));
               Subspace h = mh.sum(alg.a).sum(nform(alg, 1, 0));
               return parabolic_candidate(alg, h);
             });
  return out;
}

}  // namespace

std::vector<TableCase> unitary_cases(const std::string& theorem_id,
                                     std::size_t n) {
  return theorem_id == "6.2" ? reductive_table(n) : parabolic_table(n);
}

}  // namespace rankone::detail
