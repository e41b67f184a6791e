#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rankone/ambient.hpp"

namespace rankone {

/// Result of splitting a theta-stable subalgebra h into h = k_h (+) p_h.
struct ReductiveSplit {
  Subspace k_h;
  Subspace p_h;
};

/// Result of splitting a subalgebra h of m (+) a (+) n into graded parts.
struct ParabolicSplit {
  Subspace m_h;
  Subspace a_h;
  Subspace n_h;
};

/// Outcome of a split attempt: either the split, or a short reason tag with a
/// human-readable detail. Tags are "NotThetaStable", "NotInNormalPosition" and
/// "ConstraintChainViolation".
template <typename SplitT>
struct SplitOutcome {
  std::optional<SplitT> split;
  std::string error_tag;
  std::string error_detail;
  bool ok() const { return split.has_value(); }
};

/// A subalgebra candidate: a subspace of the ambient algebra (in the ambient's
/// algebra coordinates) plus whichever structural splits have been computed.
struct CandidateSubalgebra {
  Subspace span;
  std::optional<ReductiveSplit> reductive;
  std::optional<ParabolicSplit> parabolic;
};

/// Span of all brackets [x, y] for x, y in s.
Subspace derived_space(const AmbientAlgebra& alg, const Subspace& s);

/// Smallest bracket-closed subspace containing s.
Subspace lie_closure(const AmbientAlgebra& alg, const Subspace& s);

/// { x in l : [x, s] is contained in s }. Requires l to be a subalgebra for
/// the result to be one, but the computation is purely linear.
Subspace normalizer_in(const AmbientAlgebra& alg, const Subspace& l,
                       const Subspace& s);

/// { x in l : [x, s] = 0 }.
Subspace centralizer_in(const AmbientAlgebra& alg, const Subspace& l,
                        const Subspace& s);

/// Whether s is closed under the bracket.
bool is_subalgebra(const AmbientAlgebra& alg, const Subspace& s);

/// Split a subalgebra h into h = (h intersect k) (+) (h intersect p). Succeeds
/// exactly when h is stable under the involution theta; on success the pair of
/// parts is verified to satisfy [p_h, p_h] within k_h within the normalizer of
/// p_h in k. Not available for the parabolic model family (which carries no
/// global involution).
SplitOutcome<ReductiveSplit> split_reductive(const AmbientAlgebra& alg,
                                             const Subspace& h);

/// Split a subalgebra h of q = m (+) a (+) n into m_h (+) a_h (+) n_h, where
/// each part is the intersection of h with the corresponding summand. Succeeds
/// exactly when the three parts span h; the nilpotent part is verified to be
/// an ideal of h.
SplitOutcome<ParabolicSplit> split_parabolic(const AmbientAlgebra& alg,
                                             const Subspace& h);

}  // namespace rankone
