#pragma once

#include <cstddef>

#include "rankone/linalg.hpp"

namespace rankone {

// ---------------------------------------------------------------------------
// Quaternions. Coefficient vectors of length 4 in the basis (1, i, j, k),
// with i^2 = j^2 = k^2 = -1 and ij = k.
// ---------------------------------------------------------------------------

Vec quat_mul(const Vec& x, const Vec& y);
Vec quat_conj(const Vec& x);

/// 4x4 matrix of x -> z x in the basis (1, i, j, k).
RMat quat_left_mult_matrix(const Vec& z);
/// 4x4 matrix of x -> x z in the basis (1, i, j, k).
RMat quat_right_mult_matrix(const Vec& z);

/// Matrix with quaternion entries, stored as four real blocks:
/// M = A + iB + jC + kD.
struct QMat {
  RMat a, b, c, d;

  QMat() = default;
  QMat(std::size_t rows, std::size_t cols)
      : a(rows, cols), b(rows, cols), c(rows, cols), d(rows, cols) {}
  QMat(RMat a_, RMat b_, RMat c_, RMat d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  std::size_t rows() const { return a.rows(); }
  std::size_t cols() const { return a.cols(); }

  QMat mul(const QMat& other) const;
  QMat add(const QMat& other) const;
  QMat sub(const QMat& other) const;
  /// Entrywise quaternion conjugate plus transpose.
  QMat conj_transpose() const;
  bool is_zero() const;
};

/// Complex realization of a quaternion matrix: with Z = A + iB and
/// W = C - iD, the image is [[Z, -conj(W)], [W, conj(Z)]] (size doubles).
/// This is an algebra homomorphism, and the companion vector map
/// (a + ib + jc + kd) -> (a + ib, c - id) intertwines the actions.
CMat qmat_to_complex(const QMat& m);

/// The vector map matching qmat_to_complex: H^n -> C^{2n}.
/// Input: quaternion coordinates as four stacked real vectors.
std::vector<CRat> quat_vec_to_complex(const Vec& a, const Vec& b, const Vec& c,
                                      const Vec& d);

// ---------------------------------------------------------------------------
// Octonions. Coefficient vectors of length 8 in the basis (1, e1, ..., e7),
// with e_i^2 = -1 and the multiplication triples
//   (1,2,3) (1,4,5) (1,7,6) (2,4,6) (2,5,7) (3,4,7) (3,6,5)
// (each triple (i,j,k) meaning e_i e_j = e_k cyclically; products of
// distinct units are antisymmetric, so e.g. e1e2=e3, e1e6=-e7, e6e7=-e1,
// e3e6=e5, e5e6=-e3).
// ---------------------------------------------------------------------------

/// Product of basis units: e_i e_j = sign * e_k (indices 0..7, e_0 = 1).
void oct_basis_mul(std::size_t i, std::size_t j, int& sign, std::size_t& k);

Vec oct_mul(const Vec& x, const Vec& y);
Vec oct_conj(const Vec& x);

/// 8x8 matrix of x -> z x in the basis (1, e1, ..., e7).
RMat oct_left_mult_matrix(const Vec& z);
/// 8x8 matrix of x -> x z in the basis (1, e1, ..., e7).
RMat oct_right_mult_matrix(const Vec& z);

/// Imaginary part Im(x) as a length-7 vector (coefficients of e1..e7).
Vec oct_im_part(const Vec& x);

// ---------------------------------------------------------------------------
// The spin representation of so(7) on the octonions.
//
// so(7) elements are 7x7 matrices X = sum_{i<j} x_ij (E_ji - E_ij) acting on
// span(e1..e7). The operator
//     rho8(X) = (1/2) sum_{i<j} x_ij L_i L_j
// (L_i = left multiplication by e_i) is a Lie algebra homomorphism
// so(7) -> so(8) whose image acts transitively on the unit sphere of R^8;
// the stabilizer of 1 is a 14-dimensional subalgebra (the derivations of
// the octonions).
// ---------------------------------------------------------------------------

/// rho8 of a 7x7 skew matrix, as an 8x8 matrix in the basis order given by
/// `order` (a permutation of 0..7 in the (1, e1..e7) indexing; order[p] is
/// the unit placed at coordinate p).
RMat spin7_rep(const RMat& x7, const std::vector<std::size_t>& order);

/// Basis order (e1, ..., e7, 1): the order used for the 8-dimensional root
/// space of the exceptional parabolic model.
const std::vector<std::size_t>& oct_order_im_first();
/// Basis order (1, e1, ..., e7).
const std::vector<std::size_t>& oct_order_natural();

// ---------------------------------------------------------------------------
// The spin representation of so(9) on R^16 = O + O.
//
// Generators gamma_1..gamma_9 of the Clifford algebra Cl(9,0) on O + O:
// gamma_u (u a unit octonion basis element) maps (x, y) to
// (u y-bar ... ) via the block form [[0, L_u], [L_{conj(u)}, 0]], and
// gamma_9 = diag(Id, -Id). The 36 operators (1/2) gamma_a gamma_b (a < b)
// form a subalgebra of so(16) acting transitively on the unit sphere.
// ---------------------------------------------------------------------------

/// Basis of spin(9) inside so(16): 36 skew 16x16 matrices.
std::vector<RMat> spin9_in_so16_basis();

/// Basis of spin(7) inside so(8): the 21 matrices spin7_rep(E_ji - E_ij) in
/// natural basis order.
std::vector<RMat> spin7_in_so8_basis();

/// Basis of the stabilizer of 1 inside so(7) (7x7 matrices X with
/// rho8(X) * 1 = 0): the 14-dimensional derivation algebra of the octonions.
std::vector<RMat> g2_in_so7_basis();

}  // namespace rankone
