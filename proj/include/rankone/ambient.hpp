#pragma once

#include <cstddef>
#include <vector>

#include "rankone/linalg.hpp"
#include "rankone/subspace.hpp"

namespace rankone {

enum class Family { SO, SU, SP, F4Model };

const char* family_name(Family f);  // "so", "su", "sp", "f4-model"

/// A constructed real rank-1 matrix Lie algebra (or the exceptional
/// parabolic model), with its Cartan and restricted-root decompositions.
///
/// Two coordinate systems are in play:
///  - ambient matrix coordinates: every complex matrix entry contributes a
///    (re, im) pair, row-major, for a total of 2 * s^2 coordinates;
///  - algebra coordinates: coefficients in `basis`, the canonical reduced
///    echelon basis of the solution space of the family's defining linear
///    constraints. All subspaces below live in algebra coordinates.
///
/// For the exceptional parabolic model there is no matrix realization; the
/// 37 coordinates are (21 rotation coefficients x_{ij} (i<j, ordered
/// lexicographically), 1 scaling coefficient, 8 coordinates of the first
/// root space in the unit order (e1..e7, 1), 7 coordinates of the second
/// root space in the order (e1..e7)), and `basis` is the identity.
struct AmbientAlgebra {
  Family family = Family::SO;
  std::size_t n = 0;            // rank parameter (0 for the exceptional model)
  std::size_t matrix_size = 0;  // complex matrix size (0 for the model)
  std::size_t coord_dim = 0;    // ambient coordinate dimension
  std::size_t dim = 0;          // real dimension of the algebra

  RMat basis;          // dim x coord_dim, canonical reduced echelon rows
  Subspace amb_span;   // row space of `basis` (used for coordinate lookup)
  RMat gram_alg;       // dim x dim Gram of the invariant form in algebra coords

  // Distinguished subspaces, in algebra coordinates (ambient dimension =
  // dim). For the exceptional model k and p are empty (the model covers
  // only the minimal parabolic m + a + n).
  Subspace k, p, m, a, n_nil, g_alpha, g_2alpha;

  Vec a0;  // the distinguished generator of a, in algebra coordinates

  // --- coordinate conversion ---------------------------------------------
  Vec to_ambient(const Vec& alg_coords) const;
  /// Fails (throws std::invalid_argument) if the vector does not satisfy
  /// the defining constraints.
  Vec from_ambient(const Vec& ambient_coords) const;
  CMat to_matrix(const Vec& alg_coords) const;
  Vec from_matrix(const CMat& m) const;

  // --- structure ----------------------------------------------------------
  /// Lie bracket in algebra coordinates (matrix commutator, or the model's
  /// structure maps).
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Cartan involution theta(X) = -X^* in algebra coordinates. Not defined
  /// for the exceptional model (throws).
  Vec theta(const Vec& x) const;

  /// Invariant inner product <X, Y> = Re tr(X^* Y) (Euclidean in the model
  /// coordinates for the exceptional model).
  Rat inner(const Vec& x, const Vec& y) const;

  /// Gram matrix of the invariant inner product on the stored basis of S
  /// (S in algebra coordinates).
  RMat gram_of(const Subspace& s) const;

  /// Subspace of algebra-coordinate space spanned by the given vectors.
  Subspace span(const std::vector<Vec>& vectors) const;
};

/// Constructs so(n,1) (n >= 3), su(n,1) (n >= 1), or sp(n,1) (n >= 2).
/// The algebra basis is the canonical kernel basis of the defining linear
/// constraint system:
///   SO: X real, X^T J + J X = 0 with J = diag(1,...,1,-1);
///   SU: X^* J + J X = 0, tr X = 0;
///   SP: the block pattern
///         [[ A,      z, -conj(B), -conj(w)],
///          [ z^*,    e,  w^*,     -conj(f)],
///          [ B,      w,  conj(A),  conj(z)],
///          [-w^T,    f,  z^T,      conj(e)]]
///       with A skew-hermitian (n x n), B symmetric (n x n), e imaginary,
///       z, w in C^n, f in C (complex size 2n+2).
/// a is spanned by the standard generator (the symmetric pair unit in the
/// last off-diagonal slot; for SP the first quaternionic coordinate),
/// k/p are the (+1)/(-1) eigenspaces of theta, m is the centralizer of a
/// in k, and g_alpha / g_2alpha are the ad(a0)-eigenspaces with eigenvalues
/// 1 and 2.
AmbientAlgebra construct_algebra(Family family, std::size_t n);

/// Constructs the exceptional parabolic model: m is the 21-dimensional
/// rotation algebra acting on the 8-dimensional root space through the spin
/// representation and on the 7-dimensional one through the defining
/// representation; the bracket of two first-root-space elements is the
/// equivariant octonionic pairing Im(x * conj(y)).
AmbientAlgebra f4_model();

// --- family-specific matrix builders (callers keep block conventions) -----

/// [[A, x], [x^T, 0]] with A real skew n x n, x in R^n.
CMat so_matrix(std::size_t n, const RMat& a_block, const Vec& x);

/// [[A, z], [z^*, d]] with A skew-hermitian n x n, z in C^n, d imaginary.
/// The caller is responsible for tr A + d = 0.
CMat su_matrix(std::size_t n, const CMat& a_block, const std::vector<CRat>& z,
               const CRat& d);

/// The SP block pattern above.
CMat sp_matrix(std::size_t n, const CMat& a_block, const CMat& b_block,
               const std::vector<CRat>& z, const std::vector<CRat>& w,
               const CRat& e, const CRat& f);

// --- exceptional-model coordinate helpers ---------------------------------

/// 21 lexicographic pair coordinates -> 7x7 skew matrix
/// (X = sum_{i<j} x_ij (E_ji - E_ij)).
RMat f4_coords_to_m7(const Vec& x21);
Vec f4_m7_to_coords(const RMat& m7);

/// Assembles a model element from parts: 7x7 skew matrix, scaling, length-8
/// first-root-space vector (unit order e1..e7, 1), length-7 vector.
Vec f4_element(const RMat& m7, const Rat& a_coef, const Vec& v8, const Vec& w7);

/// Part extractors.
RMat f4_m_part(const Vec& x37);
Rat f4_a_part(const Vec& x37);
Vec f4_galpha_part(const Vec& x37);
Vec f4_g2alpha_part(const Vec& x37);

}  // namespace rankone
