#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "rankone/action.hpp"
#include "rankone/toolkit.hpp"

namespace rankone {

/// Why a candidate was judged spherical or not.
enum class SphericityReason {
  TransitiveOnSpheres,      // spherical: compact factor sweeps the spheres
  ComplementDimAtMostOne,   // spherical: complement too small to obstruct
  FullN,                    // spherical: candidate contains all of n
  DeficientRank,            // not spherical: orbit rank falls short somewhere
  A_HNotFull,               // not spherical: candidate misses the split torus
};

std::string reason_name(SphericityReason r);

/// Verdict of a sphericity criterion, with the evidence that produced it.
struct SphericityVerdict {
  bool spherical = false;
  SphericityReason reason = SphericityReason::ComplementDimAtMostOne;
  std::size_t complement_dim = 0;
  /// Parabolic criteria only: whether n_h contains the full g_2alpha layer.
  bool contains_g2alpha = false;
  bool oracle_ran = false;
  OrbitVerdict orbit;  // populated when oracle_ran
};

/// A candidate that falls outside a criterion's hypotheses. Code paths that
/// hit this are input errors, never sphericity verdicts.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string tag, const std::string& detail)
      : std::runtime_error(tag + ": " + detail), tag_(std::move(tag)) {}
  const std::string& tag() const { return tag_; }

 private:
  std::string tag_;
};

/// Sphericity test for a reductive candidate h = k_h (+) p_h inside a
/// classical ambient algebra: h is spherical exactly when the orthogonal
/// complement of p_h in p has dimension at most 1 or k_h acts transitively on
/// its gram-spheres. Requires cand.reductive; re-verifies the constraint chain
/// [p_h, p_h] within k_h within the normalizer of p_h and throws
/// PreconditionError on violation.
SphericityVerdict reductive_spherical(const AmbientAlgebra& alg,
                                      const CandidateSubalgebra& cand,
                                      std::uint64_t seed);

/// Sphericity test for a candidate h = m_h (+) a_h (+) n_h inside the minimal
/// parabolic: with d the codimension of n_h in n, h is spherical exactly when
/// d = 0, or d = 1 and a_h = a, or d >= 2 and a_h = a and m_h acts
/// transitively on the gram-spheres of the complement of n_h in n. Requires
/// cand.parabolic, a nonzero n_h, and m_h inside the normalizer of n_h in m;
/// violations raise PreconditionError.
SphericityVerdict nonreductive_spherical(const AmbientAlgebra& alg,
                                         const CandidateSubalgebra& cand,
                                         std::uint64_t seed);

}  // namespace rankone
