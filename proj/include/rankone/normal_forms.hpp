#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "rankone/ambient.hpp"

namespace rankone {

// ---------------------------------------------------------------------------
// Element constructors for the distinguished subspaces, parametrized exactly
// as in the block displays of the three classical families.
// ---------------------------------------------------------------------------

/// Symmetric-pair element of the orthogonal / unitary families: the matrix
/// [[0, z], [z*, 0]] for z a complex column of length n. For the quaternion
/// family pass both columns: the element with first-column pair (z, w).
CMat p_element(const AmbientAlgebra& alg, const std::vector<CRat>& z,
               const std::vector<CRat>& w = {});

/// First-root-space element. Orthogonal family: parameter v real of length
/// n-1 (pass as complex with zero imaginary parts). Unitary family: v complex
/// of length n-1. Quaternion family: the pair (z', w') of length n-1 each.
CMat galpha_element(const AmbientAlgebra& alg, const std::vector<CRat>& v,
                    const std::vector<CRat>& w = {});

// ---------------------------------------------------------------------------
// Normal forms: the standard subspaces of p and of n up to conjugation.
// ---------------------------------------------------------------------------

enum class NormalFormKind {
  QK,        // orthogonal family, subspace of p: first k coordinates zero
  QKL,       // unitary family: k zero slots, l real slots, rest complex
  QKLMPXi,   // quaternion family: k zero, l real, m xi-plane, p three-dim,
             // rest quaternion slots
  NK,        // orthogonal family, subspace of n
  NKL,       // unitary family, subspace of n (always contains g_2alpha)
  NKLMPXi,   // quaternion family, subspace of n (contains g_2alpha)
  NCF4,      // exceptional model: the slope-c four-dimensional form plus
             // g_2alpha
};

struct NormalFormSpec {
  NormalFormKind kind = NormalFormKind::QK;
  std::size_t k = 0, l = 0, m = 0, p = 0;
  /// Unit imaginary quaternions (i, j, k coefficients), one per xi-slot.
  std::vector<std::array<Rat, 3>> xi;
  /// Slope for the exceptional form.
  Rat c = Rat(0);
};

/// The subspace of the ambient algebra described by the spec, in algebra
/// coordinates. Validates family/kind compatibility, slot budgets
/// (k + l + m + p at most n for Q-kinds and n - 1 for N-kinds), unit norm of
/// every xi, and the dimension of the result. Throws std::invalid_argument.
Subspace make_normal_form(const AmbientAlgebra& alg, const NormalFormSpec& spec);

/// Expected dimension of the form (the value make_normal_form verifies).
std::size_t normal_form_dim(const AmbientAlgebra& alg,
                            const NormalFormSpec& spec);

// ---------------------------------------------------------------------------
// Detectors: recover the defining invariants from a constructed subspace.
// ---------------------------------------------------------------------------

/// Unitary family, subspace v of p: returns (real dimension, largest complex
/// subspace dimension), the complete invariant pair of the unitary orbit.
std::pair<std::size_t, std::size_t> detect_unitary_invariants(
    const AmbientAlgebra& alg, const Subspace& v);

/// Quaternion-family slot profile of a coordinate-aligned subspace.
struct SlotProfile {
  std::size_t k = 0, l = 0, m = 0, p = 0, h = 0;  // h: full quaternion slots
  /// Canonical primitive integer representatives of the xi lines (first
  /// nonzero coefficient positive), sorted lexicographically.
  std::vector<std::array<Rat, 3>> xi_lines;
};

/// Classifies each quaternion coordinate slot of a product-form subspace
/// (of p when nilpotent is false, of n when true; in the latter case the
/// subspace must contain g_2alpha and split along it). Throws
/// std::invalid_argument when the subspace is not a product of per-slot
/// types.
SlotProfile detect_quaternion_profile(const AmbientAlgebra& alg,
                                      const Subspace& v, bool nilpotent);

}  // namespace rankone
