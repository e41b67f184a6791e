#include "rankone/subspace.hpp"

#include <stdexcept>

namespace rankone {

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient_dim) {
  RMat m = RMat::from_rows(vectors, ambient_dim);
  return row_space(std::move(m));
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = RMat(0, ambient_dim);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return row_space(RMat::identity(ambient_dim));
}

Subspace Subspace::row_space(RMat m) {
  Subspace s;
  s.ambient_dim_ = m.cols();
  std::vector<std::size_t> pivots = m.rref_in_place();
  s.basis_ = RMat(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) s.basis_.set_row(i, m.row(i));
  s.pivots_ = std::move(pivots);
  return s;
}

std::vector<Vec> Subspace::basis() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_dim_)
    throw std::invalid_argument("Subspace::reduce: size mismatch");
  Vec r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rat& f = r[pivots_[i]];
    if (f == 0) continue;
    Rat coef = f;  // pivot entries are 1 in RREF
    for (std::size_t j = 0; j < ambient_dim_; ++j) {
      Rat delta = coef * basis_.at(i, j);
      r[j] -= delta;
    }
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coords_of(const Vec& v) const {
  if (v.size() != ambient_dim_)
    throw std::invalid_argument("Subspace::coords_of: size mismatch");
  Vec r = v;
  Vec coords(dim(), Rat(0));
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rat f = r[pivots_[i]];
    if (f == 0) continue;
    coords[i] = f;
    for (std::size_t j = 0; j < ambient_dim_; ++j) {
      Rat delta = f * basis_.at(i, j);
      r[j] -= delta;
    }
  }
  if (!vec_is_zero(r)) return std::nullopt;
  return coords;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_)
    throw std::invalid_argument("Subspace::sum: ambient dimension mismatch");
  RMat stacked(dim() + other.dim(), ambient_dim_);
  for (std::size_t i = 0; i < dim(); ++i) stacked.set_row(i, basis_.row(i));
  for (std::size_t i = 0; i < other.dim(); ++i)
    stacked.set_row(dim() + i, other.basis_.row(i));
  return row_space(std::move(stacked));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_)
    throw std::invalid_argument("Subspace::intersect: ambient dimension mismatch");
  // Zassenhaus-style: the intersection is the set of combinations of our
  // basis that the other subspace also contains. Solve for coefficient pairs
  // (x, y) with x^T A = y^T B, i.e. kernel of [A^T | -B^T].
  std::size_t da = dim(), db = other.dim();
  if (da == 0 || db == 0) return zero(ambient_dim_);
  RMat sys(ambient_dim_, da + db);
  for (std::size_t j = 0; j < ambient_dim_; ++j) {
    for (std::size_t i = 0; i < da; ++i) sys.at(j, i) = basis_.at(i, j);
    for (std::size_t i = 0; i < db; ++i) {
      Rat neg = -other.basis_.at(i, j);
      sys.at(j, da + i) = neg;
    }
  }
  RMat ker = kernel(sys);
  std::vector<Vec> gens;
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    Vec v(ambient_dim_, Rat(0));
    for (std::size_t i = 0; i < da; ++i) {
      const Rat& c = ker.at(k, i);
      if (c == 0) continue;
      for (std::size_t j = 0; j < ambient_dim_; ++j) {
        Rat delta = c * basis_.at(i, j);
        v[j] += delta;
      }
    }
    gens.push_back(std::move(v));
  }
  return span(gens, ambient_dim_);
}

Subspace Subspace::ortho_complement(const RMat& gram) const {
  // v is in the complement iff basis * gram * v = 0.
  if (gram.rows() == 0) {
    return row_space(kernel(basis_));
  }
  if (gram.rows() != ambient_dim_ || gram.cols() != ambient_dim_)
    throw std::invalid_argument("Subspace::ortho_complement: gram shape mismatch");
  RMat sys = basis_.mul(gram);
  return row_space(kernel(sys));
}

Subspace ortho_complement_in(const Subspace& s, const Subspace& within,
                             const RMat& gram) {
  if (s.ambient_dim() != within.ambient_dim())
    throw std::invalid_argument("ortho_complement_in: ambient dimension mismatch");
  if (!within.contains(s))
    throw std::invalid_argument("ortho_complement_in: s not contained in within");
  std::size_t ds = s.dim(), dw = within.dim(), amb = s.ambient_dim();
  if (ds == 0) return within;
  if (dw == 0) return Subspace::zero(amb);
  // Rows of s paired (via gram) against the basis of `within`; the kernel in
  // `within` coefficients is the relative complement.
  RMat pairing = gram.rows() == 0 ? s.basis_matrix()
                                  : s.basis_matrix().mul(gram);
  RMat sys(ds, dw);
  for (std::size_t i = 0; i < ds; ++i)
    for (std::size_t t = 0; t < dw; ++t) {
      Rat sum = 0;
      for (std::size_t j = 0; j < amb; ++j) {
        const Rat& a = pairing.at(i, j);
        if (a == 0) continue;
        const Rat& b = within.basis_matrix().at(t, j);
        if (b == 0) continue;
        Rat prod = a * b;
        sum += prod;
      }
      sys.at(i, t) = sum;
    }
  RMat coeffs = kernel(sys);
  std::vector<Vec> gens;
  for (std::size_t r = 0; r < coeffs.rows(); ++r) {
    Vec v(amb, Rat(0));
    for (std::size_t t = 0; t < dw; ++t) {
      const Rat& c = coeffs.at(r, t);
      if (c == 0) continue;
      v = vec_add(v, vec_scale(c, within.basis_vector(t)));
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(gens, amb);
}

}  // namespace rankone
