#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rankone/ambient.hpp"

namespace rankone {

/// A Lie algebra of linear operators acting on a finite-dimensional rational
/// vector space carrying a positive-definite symmetric form. Operators are
/// expressed in the coordinates of the module's chosen basis; each operator is
/// skew with respect to `gram` (T^t G + G T = 0).
struct LinearAction {
  std::vector<RMat> operators;
  RMat gram;          // module_dim x module_dim, positive definite
  std::size_t module_dim = 0;
};

/// Throws unless every operator is gram-skew; returns the action unchanged.
LinearAction checked_action(std::vector<RMat> operators, RMat gram);

/// The action of the subalgebra l on the invariant subspace v, expressed in
/// the canonical basis of v with the invariant form restricted to v. Throws if
/// v is not invariant under l or if any induced operator fails gram-skewness.
LinearAction restrict_action(const AmbientAlgebra& alg, const Subspace& l,
                             const Subspace& v);

/// Outcome of the sphere-transitivity test for a gram-skew action.
struct OrbitVerdict {
  bool transitive = false;
  /// Rank of the tangent span at each sample point, in schedule order.
  std::vector<std::pair<Vec, std::size_t>> ranks_at_samples;
  /// For a negative verdict: a point whose orbit tangent span is deficient.
  Vec witness;
  std::size_t witness_rank = 0;
  std::size_t required_rank = 0;
};

/// Decide whether the connected group generated by the action is transitive on
/// the gram-spheres of the module. For a compact-type skew action the orbit of
/// any point is either the full sphere through it or a proper closed subset;
/// the test evaluates the tangent-space rank span{T_i v} at a deterministic
/// schedule of sample points (standard basis vectors, the all-ones vector and
/// a seeded pseudo-random rational vector) and checks the dichotomy: rank
/// equals module_dim - 1 at every sample, or falls short at every sample with
/// nonzero coordinates consistent with an invariant. A module of dimension at
/// most 1 is trivially transitive. A mixed full/deficient outcome across
/// samples would contradict skew-invariance and raises an internal error.
OrbitVerdict transitive_on_spheres(const LinearAction& act, std::uint64_t seed);

}  // namespace rankone
