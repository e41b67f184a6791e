#include "rankone/linalg.hpp"

#include <stdexcept>

namespace rankone {

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

RMat RMat::identity(std::size_t n) {
  RMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RMat RMat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  RMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw std::invalid_argument("RMat::from_rows: row length mismatch");
    m.set_row(i, rows[i]);
  }
  return m;
}

Vec RMat::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void RMat::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw std::invalid_argument("RMat::set_row: size mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

RMat RMat::transpose() const {
  RMat m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

RMat RMat::mul(const RMat& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("RMat::mul: shape mismatch");
  RMat m(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        Rat prod = x * other.at(k, j);
        m.at(i, j) += prod;
      }
    }
  return m;
}

Vec RMat::mul_vec(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("RMat::mul_vec: size mismatch");
  Vec r(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      Rat prod = at(i, j) * v[j];
      r[i] += prod;
    }
  return r;
}

RMat RMat::add(const RMat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("RMat::add: shape mismatch");
  RMat m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + other.a_[i];
  return m;
}

RMat RMat::sub(const RMat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("RMat::sub: shape mismatch");
  RMat m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - other.a_[i];
  return m;
}

RMat RMat::scale(const Rat& c) const {
  RMat m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = c * a_[i];
  return m;
}

Rat RMat::trace() const {
  Rat t = 0;
  std::size_t n = rows_ < cols_ ? rows_ : cols_;
  for (std::size_t i = 0; i < n; ++i) t += at(i, i);
  return t;
}

bool RMat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

std::vector<std::size_t> RMat::rref_in_place() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = r;
    while (sel < rows_ && at(sel, c) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(r, j), at(sel, j));
    Rat inv = Rat(1) / at(r, c);
    for (std::size_t j = c; j < cols_; ++j) {
      Rat scaled = at(r, j) * inv;
      at(r, j) = scaled;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      Rat f = at(i, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols_; ++j) {
        Rat delta = f * at(r, j);
        at(i, j) -= delta;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(RMat m) { return m.rref_in_place().size(); }

RMat kernel(const RMat& m) {
  RMat red = m;
  std::vector<std::size_t> pivots = red.rref_in_place();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RMat ker(free_cols.size(), m.cols());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    ker.at(k, fc) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      Rat neg = -red.at(i, fc);
      ker.at(k, pivots[i]) = neg;
    }
  }
  return ker;
}

CMat CMat::identity(std::size_t n) {
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = CRat(Rat(1), Rat(0));
  return m;
}

CMat CMat::mul(const CMat& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("CMat::mul: shape mismatch");
  CMat m(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const CRat& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        m.at(i, j) += x * other.at(k, j);
    }
  return m;
}

CMat CMat::add(const CMat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("CMat::add: shape mismatch");
  CMat m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + other.a_[i];
  return m;
}

CMat CMat::sub(const CMat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("CMat::sub: shape mismatch");
  CMat m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - other.a_[i];
  return m;
}

CMat CMat::scale(const CRat& c) const {
  CMat m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = c * a_[i];
  return m;
}

CMat CMat::conj_transpose() const {
  CMat m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j).conj();
  return m;
}

CMat CMat::transpose() const {
  CMat m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

CMat CMat::conj() const {
  CMat m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i].conj();
  return m;
}

CRat CMat::trace() const {
  CRat t;
  std::size_t n = rows_ < cols_ ? rows_ : cols_;
  for (std::size_t i = 0; i < n; ++i) t += at(i, i);
  return t;
}

bool CMat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

CMat CMat::commutator(const CMat& other) const {
  return mul(other).sub(other.mul(*this));
}

RMat realify(const CMat& m) {
  RMat r(2 * m.rows(), 2 * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const CRat& z = m.at(i, j);
      r.at(2 * i, 2 * j) = z.re;
      r.at(2 * i, 2 * j + 1) = -z.im;
      r.at(2 * i + 1, 2 * j) = z.im;
      r.at(2 * i + 1, 2 * j + 1) = z.re;
    }
  return r;
}

Vec cmat_to_coords(const CMat& m) {
  Vec v(2 * m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::size_t base = 2 * (i * m.cols() + j);
      v[base] = m.at(i, j).re;
      v[base + 1] = m.at(i, j).im;
    }
  return v;
}

CMat coords_to_cmat(const Vec& v, std::size_t rows, std::size_t cols) {
  if (v.size() != 2 * rows * cols)
    throw std::invalid_argument("coords_to_cmat: size mismatch");
  CMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::size_t base = 2 * (i * cols + j);
      m.at(i, j) = CRat(v[base], v[base + 1]);
    }
  return m;
}

}  // namespace rankone
