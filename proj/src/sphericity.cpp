#include "rankone/sphericity.hpp"

namespace rankone {

std::string reason_name(SphericityReason r) {
  switch (r) {
    case SphericityReason::TransitiveOnSpheres: return "TransitiveOnSpheres";
    case SphericityReason::ComplementDimAtMostOne: return "ComplementDimAtMostOne";
    case SphericityReason::FullN: return "FullN";
    case SphericityReason::DeficientRank: return "DeficientRank";
    case SphericityReason::A_HNotFull: return "A_HNotFull";
  }
  return "?";
}

SphericityVerdict reductive_spherical(const AmbientAlgebra& alg,
                                      const CandidateSubalgebra& cand,
                                      std::uint64_t seed) {
  if (!cand.reductive)
    throw PreconditionError("MissingSplit",
                            "reductive criterion needs k_h (+) p_h");
  const Subspace& k_h = cand.reductive->k_h;
  const Subspace& p_h = cand.reductive->p_h;
  if (!alg.k.contains(k_h) || !alg.p.contains(p_h))
    throw PreconditionError("ConstraintChainViolation",
                            "split parts are not aligned with k and p");
  for (std::size_t i = 0; i < p_h.dim(); ++i)
    for (std::size_t j = i + 1; j < p_h.dim(); ++j)
      if (!k_h.contains(alg.bracket(p_h.basis_vector(i), p_h.basis_vector(j))))
        throw PreconditionError("ConstraintChainViolation",
                                "[p_h, p_h] escapes k_h");
  for (std::size_t i = 0; i < k_h.dim(); ++i)
    for (std::size_t j = 0; j < p_h.dim(); ++j)
      if (!p_h.contains(alg.bracket(k_h.basis_vector(i), p_h.basis_vector(j))))
        throw PreconditionError("ConstraintChainViolation",
                                "k_h does not normalize p_h");

  SphericityVerdict verdict;
  Subspace complement = ortho_complement_in(p_h, alg.p, alg.gram_alg);
  verdict.complement_dim = complement.dim();
  if (verdict.complement_dim <= 1) {
    verdict.spherical = true;
    verdict.reason = SphericityReason::ComplementDimAtMostOne;
    return verdict;
  }
  LinearAction act = restrict_action(alg, k_h, complement);
  verdict.oracle_ran = true;
  verdict.orbit = transitive_on_spheres(act, seed);
  verdict.spherical = verdict.orbit.transitive;
  verdict.reason = verdict.spherical ? SphericityReason::TransitiveOnSpheres
                                     : SphericityReason::DeficientRank;
  return verdict;
}

SphericityVerdict nonreductive_spherical(const AmbientAlgebra& alg,
                                         const CandidateSubalgebra& cand,
                                         std::uint64_t seed) {
  if (!cand.parabolic)
    throw PreconditionError("MissingSplit",
                            "parabolic criterion needs m_h (+) a_h (+) n_h");
  const Subspace& m_h = cand.parabolic->m_h;
  const Subspace& a_h = cand.parabolic->a_h;
  const Subspace& n_h = cand.parabolic->n_h;
  if (n_h.is_zero())
    throw PreconditionError("OutOfScope",
                            "nilpotent part is zero; the parabolic criteria "
                            "do not apply");
  for (std::size_t i = 0; i < m_h.dim(); ++i)
    for (std::size_t j = 0; j < n_h.dim(); ++j)
      if (!n_h.contains(alg.bracket(m_h.basis_vector(i), n_h.basis_vector(j))))
        throw PreconditionError("NormalizerViolation",
                                "m_h does not normalize n_h");

  SphericityVerdict verdict;
  verdict.contains_g2alpha = n_h.contains(alg.g_2alpha);
  Subspace complement = ortho_complement_in(n_h, alg.n_nil, alg.gram_alg);
  verdict.complement_dim = complement.dim();
  if (verdict.complement_dim == 0) {
    verdict.spherical = true;
    verdict.reason = SphericityReason::FullN;
    return verdict;
  }
  bool a_full = a_h.dim() == alg.a.dim();
  if (!a_full) {
    verdict.spherical = false;
    verdict.reason = SphericityReason::A_HNotFull;
    return verdict;
  }
  if (verdict.complement_dim == 1) {
    verdict.spherical = true;
    verdict.reason = SphericityReason::ComplementDimAtMostOne;
    return verdict;
  }
  LinearAction act = restrict_action(alg, m_h, complement);
  verdict.oracle_ran = true;
  verdict.orbit = transitive_on_spheres(act, seed);
  verdict.spherical = verdict.orbit.transitive;
  verdict.reason = verdict.spherical ? SphericityReason::TransitiveOnSpheres
                                     : SphericityReason::DeficientRank;
  return verdict;
}

}  // namespace rankone
