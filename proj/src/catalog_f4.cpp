#include <stdexcept>
#include <string>

#include "catalog_detail.hpp"
#include "rankone/embeddings.hpp"
#include "rankone/octonion.hpp"

namespace rankone::detail {
namespace {

// --- elementary pieces of the parabolic model --------------------------------

/// t-th unit of the depth-one layer (slot order: seven imaginary units, then
/// the real unit).
Vec alpha_unit(const AmbientAlgebra& alg, std::size_t t) {
  return alg.g_alpha.basis_vector(t);
}

/// Rotation-part element of the model from a 7 x 7 skew matrix.
Vec rotation_elem(const RMat& m7) {
  return f4_element(m7, Rat(0), Vec(8), Vec(7));
}

std::vector<Vec> rotation_elems(const std::vector<RMat>& ops7) {
  std::vector<Vec> out;
  out.reserve(ops7.size());
  for (const RMat& m : ops7) out.push_back(rotation_elem(m));
  return out;
}

/// Nilpotent pattern with the first k depth-one slots plus the whole
/// depth-two layer.
Subspace nk_form(const AmbientAlgebra& alg, std::size_t k) {
  std::vector<Vec> gens;
  for (std::size_t t = 0; t < k; ++t) gens.push_back(alpha_unit(alg, t));
  return alg.span(gens).sum(alg.g_2alpha);
}

/// Tilted pattern: first three slots plus the direction e5 + c e4, plus the
/// whole depth-two layer.
Subspace nc_form(const AmbientAlgebra& alg, const Rat& c) {
  Vec tilt = alpha_unit(alg, 4);
  Vec e4 = alpha_unit(alg, 3);
  for (std::size_t i = 0; i < tilt.size(); ++i) tilt[i] += Rat(c * e4[i]);
  std::vector<Vec> gens = {alpha_unit(alg, 0), alpha_unit(alg, 1),
                           alpha_unit(alg, 2), tilt};
  return alg.span(gens).sum(alg.g_2alpha);
}

/// h = m_part (+) a (+) n_part, split as a parabolic candidate.
CandidateSubalgebra parabolic_rows(const AmbientAlgebra& alg,
                                   const Subspace& m_part,
                                   const Subspace& n_part) {
  return parabolic_candidate(alg, m_part.sum(alg.a).sum(n_part));
}

Subspace assert_dim(Subspace s, std::size_t want, const char* what) {
  if (s.dim() != want)
    throw std::runtime_error(std::string(what) + ": dimension " +
                             std::to_string(s.dim()) + ", expected " +
                             std::to_string(want));
  return s;
}

// --- coupled-pair cuts --------------------------------------------------------

/// Matrix of ad(x) on the span of an orthonormal frame, in frame coordinates.
RMat frame_action(const AmbientAlgebra& alg, const Vec& x,
                  const std::vector<Vec>& frame) {
  RMat b(frame.size(), frame.size());
  for (std::size_t j = 0; j < frame.size(); ++j) {
    Vec img = alg.bracket(x, frame[j]);
    for (std::size_t i = 0; i < frame.size(); ++i)
      b.at(i, j) = alg.inner(img, frame[i]);
  }
  return b;
}

/// Component `comp` (0..2) of the self-dual or anti-self-dual part of a skew
/// 4 x 4 frame matrix. The two parts are the two commuting ideals of the
/// frame rotation algebra; an operator lies in one ideal exactly when the
/// three components of the other vanish.
Rat pair_component(const RMat& b, bool self_dual, std::size_t comp) {
  Rat first = b.at(0, comp + 1);
  Rat second;
  if (comp == 0)
    second = b.at(2, 3);
  else if (comp == 1)
    second = -b.at(1, 3);
  else
    second = b.at(1, 2);
  return self_dual ? Rat(first + second) : Rat(first - second);
}

/// Cut s to the elements whose frame action has the chosen ideal component
/// reduced: all three components when `torus` is false (the other ideal is
/// kept whole and this one killed), components 1 and 2 only when `torus` is
/// true (a one-parameter piece of this ideal survives).
Subspace pair_cut(const AmbientAlgebra& alg, const Subspace& s,
                  const std::vector<Vec>& frame, bool cut_self_dual,
                  bool torus) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < s.dim(); ++i) gens.push_back(s.basis_vector(i));
  std::vector<std::function<Rat(const Vec&)>> fns;
  for (std::size_t comp = torus ? 1 : 0; comp < 3; ++comp)
    fns.push_back([&alg, &frame, cut_self_dual, comp](const Vec& x) {
      return pair_component(frame_action(alg, x, frame), cut_self_dual, comp);
    });
  return cut_span(alg, gens, fns);
}

/// Frame of the complement of the four-slot pattern: slots 5, 6, 7 and the
/// real unit.
std::vector<Vec> tail_frame(const AmbientAlgebra& alg) {
  return {alpha_unit(alg, 4), alpha_unit(alg, 5), alpha_unit(alg, 6),
          alpha_unit(alg, 7)};
}

/// Exact square root of a nonnegative rational; throws when the value is not
/// a rational square.
Rat rat_sqrt(const Rat& x) {
  mpz_class num(x.get_num()), den(x.get_den());
  mpz_class rn(sqrt(num)), rd(sqrt(den));
  if (Rat(rn * rn) != Rat(num) || Rat(rd * rd) != Rat(den))
    throw std::runtime_error("rat_sqrt: not a rational square");
  return Rat(Rat(rn) / Rat(rd));
}

/// Frame of the complement of the tilted pattern: the unit direction
/// (e4 - c e5) / sqrt(1 + c^2) followed by slots 6, 7 and the real unit.
/// Only slopes with 1 + c^2 a rational square admit an exact frame.
std::vector<Vec> slope_frame(const AmbientAlgebra& alg, const Rat& c) {
  Rat root = rat_sqrt(Rat(Rat(1) + Rat(c * c)));
  Vec w1 = alpha_unit(alg, 3);
  Vec e5 = alpha_unit(alg, 4);
  for (std::size_t i = 0; i < w1.size(); ++i) {
    w1[i] -= Rat(c * e5[i]);
    w1[i] = Rat(w1[i] / root);
  }
  return {w1, alpha_unit(alg, 5), alpha_unit(alg, 6), alpha_unit(alg, 7)};
}

/// Elements of s acting trivially on the first `kept` depth-one slots.
Subspace kept_slot_trivial(const AmbientAlgebra& alg, const Subspace& s,
                           std::size_t kept) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < s.dim(); ++i) gens.push_back(s.basis_vector(i));
  std::vector<std::function<Rat(const Vec&)>> fns;
  for (std::size_t i = 0; i < kept; ++i)
    for (std::size_t j = i + 1; j < kept; ++j)
      fns.push_back([&alg, i, j](const Vec& x) {
        return alg.inner(alg.bracket(x, alpha_unit(alg, j)),
                         alpha_unit(alg, i));
      });
  return cut_span(alg, gens, fns);
}

// --- case sink ----------------------------------------------------------------

struct CaseSink {
  std::vector<TableCase>& out;
  std::string prefix;
  std::string theorem_id;

  void add(const std::string& suffix,
           std::vector<std::pair<std::string, std::string>> params,
           ExpectedStatus expected, std::string note,
           std::function<CandidateSubalgebra(const AmbientAlgebra&)> build) {
    TableCase c;
    c.case_id = prefix + suffix;
    c.theorem_id = theorem_id;
    c.family = Family::F4Model;
    c.n = 0;
    c.params = std::move(params);
    c.expected = expected;
    c.reductive = false;
    c.note = std::move(note);
    c.build = std::move(build);
    out.push_back(std::move(c));
  }

  void add_action(const std::string& suffix, ExpectedStatus expected,
                  std::string note,
                  std::function<LinearAction(const AmbientAlgebra&)> action) {
    TableCase c;
    c.case_id = prefix + suffix;
    c.theorem_id = theorem_id;
    c.family = Family::F4Model;
    c.n = 0;
    c.expected = expected;
    c.note = std::move(note);
    c.action = std::move(action);
    out.push_back(std::move(c));
  }
};

// --- the pattern table ----------------------------------------------------------

std::vector<TableCase> pattern_table() {
  std::vector<TableCase> out;
  CaseSink sink{out, "8.5/", "8.5"};

  const std::vector<std::pair<std::string, std::string>> levi = {
      {"zero", "all of n alone"},
      {"a", "a plus n"},
      {"ma", "the full minimal parabolic"}};
  for (const auto& [name, note] : levi)
    sink.add("free-levi/lH=" + name, {{"lH", name}},
             ExpectedStatus::Spherical, note,
             [name = name](const AmbientAlgebra& alg) {
               Subspace h = alg.n_nil;
               if (name != "zero") h = h.sum(alg.a);
               if (name == "ma") h = h.sum(alg.m);
               return parabolic_candidate(alg, h);
             });

  sink.add("full-rotations", {}, ExpectedStatus::Spherical,
           "all rotations with the depth-two layer alone",
           [](const AmbientAlgebra& alg) {
             return parabolic_rows(alg, alg.m, nk_form(alg, 0));
           });

  for (FactorSample s : factor_samples(14))
    sink.add(std::string("rotation-stub/mprime=") + factor_sample_name(s),
             {{"mprime", factor_sample_name(s)}}, ExpectedStatus::Spherical,
             "complement of the seven-slot pattern is one-dimensional",
             [s](const AmbientAlgebra& alg) {
               std::vector<Vec> gens =
                   take_sample_vecs(rotation_elems(g2_in_so7_basis()), s);
               Subspace mh = alg.span(gens);
               if (s == FactorSample::Full)
                 mh = assert_dim(std::move(mh), 14, "seven-slot stabilizer");
               return parabolic_rows(alg, mh, nk_form(alg, 7));
             });

  sink.add("stabilizer-block", {}, ExpectedStatus::Spherical,
           "stabilizer of the first slot unit",
           [](const AmbientAlgebra& alg) {
             Subspace mh = assert_dim(
                 centralizer_in(alg, alg.m,
                                alg.span({alpha_unit(alg, 0)})),
                 14, "first-slot stabilizer");
             return parabolic_rows(alg, mh, nk_form(alg, 1));
           });

  sink.add("aligned-pair", {{"k", "4"}}, ExpectedStatus::Spherical,
           "the complement rotation forces the same rotation on the kept "
           "slots",
           [](const AmbientAlgebra& alg) {
             Subspace n4 = nk_form(alg, 4);
             Subspace mh = assert_dim(normalizer_in(alg, alg.m, n4), 6,
                                      "four-slot normalizer");
             return parabolic_rows(alg, mh, n4);
           });

  for (const char* side : {"left", "right"})
    for (const char* l2 : {"zero", "torus"}) {
      const bool cut_sd = std::string(side) == "right";
      const bool torus = std::string(l2) == "torus";
      sink.add(std::string("aligned-pair-cut/side=") + side + "/l2=" + l2,
               {{"side", side}, {"l2", l2}}, ExpectedStatus::Spherical,
               "one ideal of the complement rotation kept whole, the other "
               "cut",
               [cut_sd, torus](const AmbientAlgebra& alg) {
                 Subspace n4 = nk_form(alg, 4);
                 Subspace nm = assert_dim(normalizer_in(alg, alg.m, n4), 6,
                                          "four-slot normalizer");
                 Subspace mh = assert_dim(
                     pair_cut(alg, nm, tail_frame(alg), cut_sd, torus),
                     torus ? 4 : 3, "pair cut");
                 return parabolic_rows(alg, mh, n4);
               });
    }

  for (std::size_t k : {std::size_t{5}, std::size_t{6}})
    sink.add("block-pair/k=" + std::to_string(k),
             {{"k", std::to_string(k)}}, ExpectedStatus::Spherical,
             "the rider on the kept slots is forced by the complement "
             "rotation",
             [k](const AmbientAlgebra& alg) {
               Subspace nk = nk_form(alg, k);
               Subspace mh =
                   assert_dim(normalizer_in(alg, alg.m, nk), k == 5 ? 6 : 9,
                              "pattern normalizer");
               return parabolic_rows(alg, mh, nk);
             });

  for (int c : {0, 1, 2, -1})
    sink.add("slope-pair/c=" + std::to_string(c),
             {{"c", std::to_string(c)}}, ExpectedStatus::Spherical,
             "tilted slot direction", [c](const AmbientAlgebra& alg) {
               Subspace nc = nc_form(alg, Rat(c));
               Subspace mh = assert_dim(normalizer_in(alg, alg.m, nc), 6,
                                        "tilted normalizer");
               return parabolic_rows(alg, mh, nc);
             });

  const std::vector<std::pair<std::string, Rat>> slopes = {
      {"0", Rat(0)}, {"0.75", Rat(3, 4)}};
  for (const auto& [ctag, c] : slopes)
    for (const char* side : {"left", "right"})
      for (const char* l2 : {"zero", "torus"}) {
        const bool cut_sd = std::string(side) == "right";
        const bool torus = std::string(l2) == "torus";
        sink.add("slope-cut/c=" + ctag + "/side=" + side + "/l2=" + l2,
                 {{"c", ctag == "0.75" ? "3/4" : ctag},
                  {"side", side},
                  {"l2", l2}},
                 ExpectedStatus::Spherical,
                 "tilted pattern with one complement ideal cut",
                 [c = c, cut_sd, torus](const AmbientAlgebra& alg) {
                   Subspace nc = nc_form(alg, c);
                   Subspace nm = assert_dim(normalizer_in(alg, alg.m, nc), 6,
                                            "tilted normalizer");
                   Subspace mh = assert_dim(
                       pair_cut(alg, nm, slope_frame(alg, c), cut_sd, torus),
                       torus ? 4 : 3, "pair cut");
                   return parabolic_rows(alg, mh, nc);
                 });
      }

  sink.add("negative/gap-block/k=3", {{"k", "3"}},
           ExpectedStatus::NotSpherical,
           "three-slot normalizer moves the five-dimensional complement with "
           "deficient orbits",
           [](const AmbientAlgebra& alg) {
             Subspace n3 = nk_form(alg, 3);
             Subspace mh = assert_dim(normalizer_in(alg, alg.m, n3), 6,
                                      "three-slot normalizer");
             return parabolic_rows(alg, mh, n3);
           });

  sink.add("negative/gap-rider/k=3", {{"k", "3"}},
           ExpectedStatus::NotSpherical, "three-slot stabilizer",
           [](const AmbientAlgebra& alg) {
             std::vector<Vec> units = {alpha_unit(alg, 0), alpha_unit(alg, 1),
                                       alpha_unit(alg, 2)};
             Subspace mh = assert_dim(
                 centralizer_in(alg, alg.m, alg.span(units)), 3,
                 "three-slot stabilizer");
             return parabolic_rows(alg, mh, nk_form(alg, 3));
           });

  sink.add("negative/pure-rider", {}, ExpectedStatus::NotSpherical,
           "no rotation acts trivially on the six kept slots; the pattern "
           "with a alone fails",
           [](const AmbientAlgebra& alg) {
             Subspace n6 = nk_form(alg, 6);
             Subspace nm = normalizer_in(alg, alg.m, n6);
             Subspace mh = assert_dim(kept_slot_trivial(alg, nm, 6), 0,
                                      "kept-slot-trivial rider");
             return parabolic_rows(alg, mh, n6);
           });

  sink.add("discrepancy/gap-block/k=2", {{"k", "2"}},
           ExpectedStatus::Discrepancy,
           "printed pattern rows skip the two-slot case; the full two-slot "
           "normalizer is evaluated and reported without assertion",
           [](const AmbientAlgebra& alg) {
             Subspace n2 = nk_form(alg, 2);
             Subspace mh = assert_dim(normalizer_in(alg, alg.m, n2), 9,
                                      "two-slot normalizer");
             return parabolic_rows(alg, mh, n2);
           });

  sink.add("discrepancy/gap-rider/k=2", {{"k", "2"}},
           ExpectedStatus::Discrepancy,
           "two-slot stabilizer; its chain of unit stabilizers still moves "
           "the six-dimensional complement transitively",
           [](const AmbientAlgebra& alg) {
             std::vector<Vec> units = {alpha_unit(alg, 0),
                                       alpha_unit(alg, 1)};
             Subspace mh = assert_dim(
                 centralizer_in(alg, alg.m, alg.span(units)), 8,
                 "two-slot stabilizer");
             return parabolic_rows(alg, mh, nk_form(alg, 2));
           });

  return out;
}

// --- the action table -----------------------------------------------------------

std::vector<TableCase> action_table() {
  std::vector<TableCase> out;
  CaseSink sink{out, "8.1-facts/", "8.1-facts"};

  sink.add_action("action/spin9-r16", ExpectedStatus::Transitive,
                  "spin representation on the sixteen-dimensional module",
                  [](const AmbientAlgebra&) {
                    return checked_action(spin9_in_so16_basis(),
                                          RMat::identity(16));
                  });

  sink.add_action("action/quaternion2-r8", ExpectedStatus::Transitive,
                  "realified quaternion-hermitian algebra at two slots",
                  [](const AmbientAlgebra&) {
                    return checked_action(sp_in_so(2), RMat::identity(8));
                  });

  sink.add_action(
      "action/quaternion2-pair-r8", ExpectedStatus::Transitive,
      "two-slot quaternion algebra together with the scalar right "
      "multiplications",
      [](const AmbientAlgebra&) {
        std::vector<RMat> ops = sp_in_so(2);
        for (RMat& m : quat_right_mults(2)) ops.push_back(std::move(m));
        return checked_action(std::move(ops), RMat::identity(8));
      });

  sink.add_action("action/model-rotations-r8", ExpectedStatus::Transitive,
                  "rotation part of the model on the depth-one layer",
                  [](const AmbientAlgebra& alg) {
                    return restrict_action(alg, alg.m, alg.g_alpha);
                  });

  sink.add_action("action/so8-r8", ExpectedStatus::Transitive,
                  "full rotation algebra on the eight-dimensional module",
                  [](const AmbientAlgebra&) {
                    return checked_action(so_basis(8), RMat::identity(8));
                  });

  sink.add_action("action/g2-r7", ExpectedStatus::Transitive,
                  "automorphism algebra on the seven-dimensional module",
                  [](const AmbientAlgebra&) {
                    return checked_action(g2_in_so7_basis(),
                                          RMat::identity(7));
                  });

  sink.add_action("action/g2-r8", ExpectedStatus::NotTransitive,
                  "the embedded algebra annihilates the first coordinate "
                  "direction",
                  [](const AmbientAlgebra&) {
                    return checked_action(
                        embed_rmats(g2_in_so7_basis(), 1, 8),
                        RMat::identity(8));
                  });

  return out;
}

}  // namespace

std::vector<TableCase> exceptional_cases(const std::string& theorem_id) {
  if (theorem_id == "8.5") return pattern_table();
  if (theorem_id == "8.1-facts") return action_table();
  throw std::invalid_argument("unknown exceptional table: " + theorem_id);
}

}  // namespace rankone::detail
