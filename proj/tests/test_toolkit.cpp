#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankone/sphericity.hpp"

using namespace rankone;

namespace {

CandidateSubalgebra reductive_candidate(const AmbientAlgebra& alg,
                                        const Subspace& h) {
  auto out = split_reductive(alg, h);
  REQUIRE(out.ok());
  CandidateSubalgebra cand;
  cand.span = h;
  cand.reductive = *out.split;
  return cand;
}

CandidateSubalgebra parabolic_candidate(const AmbientAlgebra& alg,
                                        const Subspace& h) {
  auto out = split_parabolic(alg, h);
  REQUIRE(out.ok());
  CandidateSubalgebra cand;
  cand.span = h;
  cand.parabolic = *out.split;
  return cand;
}

}  // namespace

TEST_CASE("derived space and closure") {
  AmbientAlgebra alg = construct_algebra(Family::SO, 4);
  // k = so(4) is perfect
  CHECK(derived_space(alg, alg.k) == alg.k);
  // the first root layer is abelian in the orthogonal family
  CHECK(derived_space(alg, alg.g_alpha).is_zero());
  CHECK(lie_closure(alg, alg.g_alpha) == alg.g_alpha);
  // p generates the whole algebra
  CHECK(lie_closure(alg, alg.p).dim() == alg.dim);
  // closure is idempotent and monotone
  Subspace c = lie_closure(alg, alg.a.sum(alg.g_alpha));
  CHECK(is_subalgebra(alg, c));
  CHECK(c.contains(alg.a));
  CHECK(lie_closure(alg, c) == c);
}

TEST_CASE("normalizers and centralizers") {
  AmbientAlgebra alg = construct_algebra(Family::SO, 4);
  // the normalizer of n in g is the minimal parabolic m + a + n
  Subspace q = alg.m.sum(alg.a).sum(alg.n_nil);
  CHECK(normalizer_in(alg, Subspace::full(alg.dim), alg.n_nil) == q);
  // the centralizer of a in k is m
  CHECK(centralizer_in(alg, alg.k, alg.a) == alg.m);
  // the centralizer of a in g is m + a
  CHECK(centralizer_in(alg, Subspace::full(alg.dim), alg.a) ==
        alg.m.sum(alg.a));
  // everything normalizes the zero subspace
  CHECK(normalizer_in(alg, alg.k, Subspace::zero(alg.dim)) == alg.k);
}

TEST_CASE("subalgebra predicate") {
  AmbientAlgebra alg = construct_algebra(Family::SO, 3);
  CHECK(is_subalgebra(alg, alg.k));
  CHECK(is_subalgebra(alg, alg.m.sum(alg.a)));
  CHECK(is_subalgebra(alg, alg.n_nil));
  CHECK(is_subalgebra(alg, Subspace::full(alg.dim)));
  CHECK(is_subalgebra(alg, Subspace::zero(alg.dim)));
  // two p-directions bracket into k and are not a subalgebra
  Subspace pp = Subspace::span(
      {alg.p.basis_vector(0), alg.p.basis_vector(1)}, alg.dim);
  CHECK(!is_subalgebra(alg, pp));
}

TEST_CASE("reductive splits") {
  AmbientAlgebra alg = construct_algebra(Family::SO, 4);
  auto full = split_reductive(alg, Subspace::full(alg.dim));
  REQUIRE(full.ok());
  CHECK(full.split->k_h == alg.k);
  CHECK(full.split->p_h == alg.p);

  auto onk = split_reductive(alg, alg.k);
  REQUIRE(onk.ok());
  CHECK(onk.split->k_h == alg.k);
  CHECK(onk.split->p_h.is_zero());

  auto ma = split_reductive(alg, alg.m.sum(alg.a));
  REQUIRE(ma.ok());
  CHECK(ma.split->k_h == alg.m);
  CHECK(ma.split->p_h == alg.a);

  // the minimal parabolic is not theta-stable
  Subspace q = alg.m.sum(alg.a).sum(alg.n_nil);
  auto bad = split_reductive(alg, q);
  CHECK(!bad.ok());
  CHECK(bad.error_tag == "NotThetaStable");

  // the model has no involution
  AmbientAlgebra model = f4_model();
  auto nomodel = split_reductive(model, model.m);
  CHECK(!nomodel.ok());
  CHECK(nomodel.error_tag == "NotThetaStable");
}

TEST_CASE("parabolic splits") {
  AmbientAlgebra alg = construct_algebra(Family::SU, 2);
  Subspace q = alg.m.sum(alg.a).sum(alg.n_nil);
  auto onq = split_parabolic(alg, q);
  REQUIRE(onq.ok());
  CHECK(onq.split->m_h == alg.m);
  CHECK(onq.split->a_h == alg.a);
  CHECK(onq.split->n_h == alg.n_nil);

  auto an = split_parabolic(alg, alg.a.sum(alg.n_nil));
  REQUIRE(an.ok());
  CHECK(an.split->m_h.is_zero());
  CHECK(an.split->n_h == alg.n_nil);

  // k does not decompose along the grading
  auto bad = split_parabolic(alg, alg.k);
  CHECK(!bad.ok());
  CHECK(bad.error_tag == "NotInNormalPosition");

  // a diagonal line between two graded pieces does not decompose
  Vec diag = vec_add(alg.m.basis_vector(0), alg.g_alpha.basis_vector(0));
  auto bad2 = split_parabolic(alg, Subspace::span({diag}, alg.dim));
  CHECK(!bad2.ok());
  CHECK(bad2.error_tag == "NotInNormalPosition");
}

TEST_CASE("orbit oracle on explicit actions") {
  // so(3) acting on R^3: transitive on spheres
  auto skew3 = [](std::size_t i, std::size_t j) {
    RMat m(3, 3);
    m.at(i, j) = -1;
    m.at(j, i) = 1;
    return m;
  };
  LinearAction rot = checked_action(
      {skew3(0, 1), skew3(0, 2), skew3(1, 2)}, RMat::identity(3));
  OrbitVerdict v = transitive_on_spheres(rot, 7);
  CHECK(v.transitive);
  CHECK(v.required_rank == 2);
  CHECK(v.ranks_at_samples.size() == 5);  // 3 basis + ones + random

  // a torus in so(4): rotates two planes independently, not transitive on S^3
  RMat t1(4, 4), t2(4, 4);
  t1.at(0, 1) = -1; t1.at(1, 0) = 1;
  t2.at(2, 3) = -1; t2.at(3, 2) = 1;
  LinearAction torus = checked_action({t1, t2}, RMat::identity(4));
  OrbitVerdict w = transitive_on_spheres(torus, 7);
  CHECK(!w.transitive);
  CHECK(w.required_rank == 3);
  CHECK(w.witness_rank < 3);
  CHECK(!w.witness.empty());

  // tiny modules are trivially transitive
  LinearAction tiny = checked_action({}, RMat::identity(1));
  CHECK(transitive_on_spheres(tiny, 7).transitive);

  // the trivial action on a 2-dimensional module is not transitive
  LinearAction none = checked_action({}, RMat::identity(2));
  CHECK(!transitive_on_spheres(none, 7).transitive);

  // a non-skew operator is rejected
  RMat sym(2, 2);
  sym.at(0, 1) = 1;
  sym.at(1, 0) = 1;
  CHECK_THROWS_AS(checked_action({sym}, RMat::identity(2)), std::logic_error);
}

TEST_CASE("restricting the ambient action") {
  AmbientAlgebra alg = construct_algebra(Family::SO, 4);
  // ad(k) on p is the defining so(4) action on R^4 (up to basis): transitive
  LinearAction act = restrict_action(alg, alg.k, alg.p);
  CHECK(act.module_dim == 4);
  CHECK(act.operators.size() == 6);
  CHECK(transitive_on_spheres(act, 7).transitive);

  // ad(m) on g_alpha: so(3) on R^3, transitive
  LinearAction mact = restrict_action(alg, alg.m, alg.g_alpha);
  CHECK(transitive_on_spheres(mact, 7).transitive);

  // a non-invariant module is rejected
  Subspace line = Subspace::span({alg.p.basis_vector(0)}, alg.dim);
  CHECK_THROWS_AS(restrict_action(alg, alg.k, line), std::invalid_argument);
}

TEST_CASE("reductive sphericity criterion") {
  for (std::size_t n = 3; n <= 5; ++n) {
    CAPTURE(n);
    AmbientAlgebra alg = construct_algebra(Family::SO, n);
    // h = k: complement is all of p, k acts transitively on its spheres
    auto ck = reductive_candidate(alg, alg.k);
    SphericityVerdict v = reductive_spherical(alg, ck, 7);
    CHECK(v.spherical);
    CHECK(v.reason == SphericityReason::TransitiveOnSpheres);
    CHECK(v.complement_dim == n);

    // h = m + a: complement is p minus the a-line, m = so(n-1) sweeps it
    auto cma = reductive_candidate(alg, alg.m.sum(alg.a));
    SphericityVerdict w = reductive_spherical(alg, cma, 7);
    CHECK(w.spherical);
    CHECK(w.reason == SphericityReason::TransitiveOnSpheres);
    CHECK(w.complement_dim == n - 1);

    // h = 0: nothing acts, complement too large
    auto czero = reductive_candidate(alg, Subspace::zero(alg.dim));
    SphericityVerdict z = reductive_spherical(alg, czero, 7);
    CHECK(!z.spherical);
    CHECK(z.reason == SphericityReason::DeficientRank);
  }

  // missing split is a usage error
  AmbientAlgebra alg = construct_algebra(Family::SO, 3);
  CandidateSubalgebra bare;
  bare.span = alg.k;
  CHECK_THROWS_AS(reductive_spherical(alg, bare, 7), PreconditionError);
}

TEST_CASE("parabolic sphericity criterion") {
  AmbientAlgebra alg = construct_algebra(Family::SU, 3);

  // full n: spherical regardless of m_h
  auto cq = parabolic_candidate(alg, alg.m.sum(alg.a).sum(alg.n_nil));
  SphericityVerdict v = nonreductive_spherical(alg, cq, 7);
  CHECK(v.spherical);
  CHECK(v.reason == SphericityReason::FullN);
  CHECK(v.contains_g2alpha);
  CHECK(v.complement_dim == 0);

  auto can = parabolic_candidate(alg, alg.a.sum(alg.n_nil));
  v = nonreductive_spherical(alg, can, 7);
  CHECK(v.spherical);
  CHECK(v.reason == SphericityReason::FullN);

  // n_h = g_2alpha with full m and a: the unitary rotations sweep the
  // complement g_alpha
  auto cg2 = parabolic_candidate(alg, alg.m.sum(alg.a).sum(alg.g_2alpha));
  v = nonreductive_spherical(alg, cg2, 7);
  CHECK(v.spherical);
  CHECK(v.reason == SphericityReason::TransitiveOnSpheres);
  CHECK(v.contains_g2alpha);
  CHECK(v.complement_dim == 2 * (3 - 1));

  // same n_h but nothing to rotate: rank deficit
  auto cg2b = parabolic_candidate(alg, alg.a.sum(alg.g_2alpha));
  v = nonreductive_spherical(alg, cg2b, 7);
  CHECK(!v.spherical);
  CHECK(v.reason == SphericityReason::DeficientRank);

  // missing a: immediately not spherical
  auto cnoa = parabolic_candidate(alg, alg.m.sum(alg.g_2alpha));
  v = nonreductive_spherical(alg, cnoa, 7);
  CHECK(!v.spherical);
  CHECK(v.reason == SphericityReason::A_HNotFull);

  // codimension-1 root layer: spherical with a, not without
  {
    // n_h = span(one real g_alpha direction) + g_2alpha inside su(2,1)
    AmbientAlgebra a2 = construct_algebra(Family::SU, 2);
    Subspace n_h =
        Subspace::span({a2.g_alpha.basis_vector(0)}, a2.dim).sum(a2.g_2alpha);
    Subspace h = a2.a.sum(n_h);
    auto cand = parabolic_candidate(a2, h);
    SphericityVerdict s = nonreductive_spherical(a2, cand, 7);
    CHECK(s.spherical);
    CHECK(s.reason == SphericityReason::ComplementDimAtMostOne);
    CHECK(s.complement_dim == 1);

    auto bare = parabolic_candidate(a2, n_h);
    s = nonreductive_spherical(a2, bare, 7);
    CHECK(!s.spherical);
    CHECK(s.reason == SphericityReason::A_HNotFull);
  }

  // zero n_h is outside the criterion's scope
  auto cma = parabolic_candidate(alg, alg.m.sum(alg.a));
  CHECK_THROWS_AS(nonreductive_spherical(alg, cma, 7), PreconditionError);

  // m_h failing to normalize n_h is a usage error
  {
    CandidateSubalgebra broken;
    broken.span = alg.m.sum(alg.a).sum(alg.g_2alpha);
    ParabolicSplit ps;
    ps.m_h = alg.m;
    ps.a_h = alg.a;
    // one real direction of g_alpha: u(2) rotates it out of itself
    ps.n_h = Subspace::span({alg.g_alpha.basis_vector(0)}, alg.dim);
    broken.parabolic = ps;
    CHECK_THROWS_AS(nonreductive_spherical(alg, broken, 7), PreconditionError);
  }
}

TEST_CASE("parabolic criterion on the exceptional model") {
  AmbientAlgebra alg = f4_model();
  // full parabolic
  auto cq = parabolic_candidate(alg, alg.m.sum(alg.a).sum(alg.n_nil));
  SphericityVerdict v = nonreductive_spherical(alg, cq, 7);
  CHECK(v.spherical);
  CHECK(v.reason == SphericityReason::FullN);

  // n_h = g_2alpha, m_h = m: the rotation algebra acts on the 8-dimensional
  // layer by the spin representation, which sweeps the spheres
  auto cspin = parabolic_candidate(alg, alg.m.sum(alg.a).sum(alg.g_2alpha));
  v = nonreductive_spherical(alg, cspin, 7);
  CHECK(v.spherical);
  CHECK(v.reason == SphericityReason::TransitiveOnSpheres);
  CHECK(v.complement_dim == 8);
  CHECK(v.contains_g2alpha);

  // without the scaling line the same candidate fails
  auto cnoa = parabolic_candidate(alg, alg.m.sum(alg.g_2alpha));
  v = nonreductive_spherical(alg, cnoa, 7);
  CHECK(!v.spherical);
  CHECK(v.reason == SphericityReason::A_HNotFull);
}
