#pragma once

#include <cstddef>
#include <vector>

#include "rankone/linalg.hpp"
#include "rankone/octonion.hpp"

namespace rankone {

// ---------------------------------------------------------------------------
// Bases of the compact matrix algebras used as building blocks, plus their
// standard realifications. All lists are deterministic: the order never
// depends on anything but the arguments.
// ---------------------------------------------------------------------------

/// so(N): N x N real skew matrices. Basis: E_ji - E_ij for i < j (row-lex),
/// matching the letter convention of spin7_rep.
std::vector<RMat> so_basis(std::size_t n);

/// u(m): m x m skew-hermitian complex matrices. Basis: i E_tt (t = 0..m-1),
/// then for s < t (row-lex) the pair E_ts - E_st, i (E_st + E_ts).
std::vector<CMat> u_basis(std::size_t m);

/// su(m): traceless skew-hermitian. Basis: i (E_tt - E_{t+1,t+1}) for
/// t = 0..m-2, then the same off-diagonal pairs as u_basis. (m^2 - 1 elements)
std::vector<CMat> su_basis(std::size_t m);

/// sp(m): m x m quaternion skew-hermitian matrices, complexified to 2m x 2m
/// complex matrices [[Z, -conj W], [W, conj Z]] (they land inside su(2m)).
/// Basis: i E_tt, j E_tt, k E_tt per diagonal slot, then for s < t the four
/// matrices (E_ts - E_st), i (E_st + E_ts), j (E_st + E_ts), k (E_st + E_ts).
/// (m (2m+1) elements)
std::vector<CMat> sp_basis_complex(std::size_t m);

/// Interleaved realification of each matrix in the list (entry z at (s,t)
/// becomes the 2x2 block [[Re z, -Im z], [Im z, Re z]]).
std::vector<RMat> realify_all(const std::vector<CMat>& mats);

/// su(m) inside so(2m): realify_all(su_basis(m)). Dimension m^2 - 1.
std::vector<RMat> su_in_so(std::size_t m);
/// u(m) inside so(2m): realify_all(u_basis(m)). Dimension m^2.
std::vector<RMat> u_in_so(std::size_t m);
/// sp(m) inside so(4m): realify_all(sp_basis_complex(m)). Dimension m(2m+1).
std::vector<RMat> sp_in_so(std::size_t m);

/// The two sp(1) ideals of so(4) in the quaternion picture R^4 = H:
/// left = {L_i, L_j, L_k}, right = {R_i, R_j, R_k} (multiplication operators
/// in the basis (1, i, j, k)).
std::vector<RMat> so4_left_ideal();
std::vector<RMat> so4_right_ideal();

/// One full sp(1) ideal of so(4) plus a subalgebra of the other: the left
/// ideal plus the first `other_dim` (0, 1 or 3) generators of the right ideal
/// when `left_full` is true, and the mirror image otherwise.
std::vector<RMat> sp1_x_l2_in_so4(bool left_full, std::size_t other_dim);

/// sp(2) inside su(4): sp_basis_complex(2) (10 elements; fixed convention
/// [[Z, -conj W],[W, conj Z]] with Z skew-hermitian and W symmetric).
std::vector<CMat> sp2_in_su4();
/// su(4) inside so(8): realify_all(su_basis(4)) (15 elements).
std::vector<RMat> su4_in_so8();

/// The diagonal sp(1) inside so(4): {L_u + R_u : u = i, j, k}. Not transitive
/// on the 3-sphere (it fixes 1); used as a negative control.
std::vector<RMat> so4_diagonal_sp1();

}  // namespace rankone
