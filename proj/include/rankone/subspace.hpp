#pragma once

#include <optional>
#include <vector>

#include "rankone/linalg.hpp"

namespace rankone {

/// A linear subspace of Q^ambient_dim, stored as the rows of a reduced row
/// echelon form basis. The representation is canonical: two Subspace objects
/// are equal exactly when they describe the same subspace.
class Subspace {
 public:
  Subspace() : ambient_dim_(0) {}

  /// Span of the given vectors inside Q^ambient_dim.
  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient_dim);
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Row space of a matrix.
  static Subspace row_space(RMat m);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }

  /// Canonical basis vectors (rows of the RREF matrix).
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }
  const RMat& basis_matrix() const { return basis_; }
  std::vector<Vec> basis() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in the canonical basis, if v lies in the subspace.
  std::optional<Vec> coords_of(const Vec& v) const;

  /// Residue of v after eliminating the components lying in this subspace
  /// (zero exactly when contains(v)).
  Vec reduce(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// Orthogonal complement within Q^ambient_dim with respect to the symmetric
  /// positive-definite form given by gram (defaults to the identity when gram
  /// has size zero).
  Subspace ortho_complement(const RMat& gram = RMat()) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t ambient_dim_;
  RMat basis_;                         // RREF, no zero rows
  std::vector<std::size_t> pivots_;    // pivot column of each basis row
};

/// Vectors of `within` that are orthogonal to all of `s` under the symmetric
/// form `gram` (identity when gram has size zero). Requires s to be contained
/// in `within`; with a positive-definite form the result is a complement of s
/// inside `within`.
Subspace ortho_complement_in(const Subspace& s, const Subspace& within,
                             const RMat& gram = RMat());

}  // namespace rankone
