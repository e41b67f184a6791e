#pragma once

#include <cstddef>
#include <vector>

#include "rankone/scalar.hpp"

namespace rankone {

using Vec = std::vector<Rat>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& c, const Vec& a);
bool vec_is_zero(const Vec& a);

/// Dense matrix of exact rationals, row-major.
class RMat {
 public:
  RMat() : rows_(0), cols_(0) {}
  RMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static RMat identity(std::size_t n);
  static RMat from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  void set_row(std::size_t i, const Vec& v);

  RMat transpose() const;
  RMat mul(const RMat& other) const;
  Vec mul_vec(const Vec& v) const;  // matrix * column vector
  RMat add(const RMat& other) const;
  RMat sub(const RMat& other) const;
  RMat scale(const Rat& c) const;
  Rat trace() const;
  bool is_zero() const;

  friend bool operator==(const RMat& a, const RMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const RMat& a, const RMat& b) { return !(a == b); }

  /// In-place reduction to reduced row echelon form. Returns pivot columns.
  std::vector<std::size_t> rref_in_place();

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

std::size_t rank(RMat m);

/// Basis of the right kernel {x : m x = 0}, one kernel vector per row.
RMat kernel(const RMat& m);

/// Dense matrix of exact complex rationals, row-major.
class CMat {
 public:
  CMat() : rows_(0), cols_(0) {}
  CMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static CMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  CRat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const CRat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  CMat mul(const CMat& other) const;
  CMat add(const CMat& other) const;
  CMat sub(const CMat& other) const;
  CMat scale(const CRat& c) const;
  CMat conj_transpose() const;
  CMat transpose() const;
  CMat conj() const;
  CRat trace() const;
  bool is_zero() const;

  /// [this, other] = this*other - other*this.
  CMat commutator(const CMat& other) const;

  friend bool operator==(const CMat& a, const CMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const CMat& a, const CMat& b) { return !(a == b); }

 private:
  std::size_t rows_, cols_;
  std::vector<CRat> a_;
};

/// Realification of a complex s x s matrix as a real 2s x 2s matrix: each
/// entry z becomes the 2x2 block [[Re z, -Im z], [Im z, Re z]] (interleaved
/// real/imaginary coordinates).
RMat realify(const CMat& m);

/// Flattens a complex s x t matrix into coordinates of length 2 s t:
/// entry (i,j) occupies slots 2(i t + j) (real part) and 2(i t + j)+1
/// (imaginary part). The standard coordinate inner product then equals
/// Re tr(X^* Y).
Vec cmat_to_coords(const CMat& m);
CMat coords_to_cmat(const Vec& v, std::size_t rows, std::size_t cols);

}  // namespace rankone
