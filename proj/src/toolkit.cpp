#include "rankone/toolkit.hpp"

#include <stdexcept>
#include <utility>

namespace rankone {

namespace {

/// Map a matrix of coefficient rows (relative to the basis of `space`) back to
/// vectors in algebra coordinates.
std::vector<Vec> coefficients_to_vectors(const RMat& coeffs,
                                         const Subspace& space) {
  std::vector<Vec> out;
  out.reserve(coeffs.rows());
  for (std::size_t r = 0; r < coeffs.rows(); ++r) {
    Vec v(space.ambient_dim(), Rat(0));
    for (std::size_t j = 0; j < coeffs.cols(); ++j) {
      const Rat& c = coeffs.at(r, j);
      if (c == 0) continue;
      v = vec_add(v, vec_scale(c, space.basis_vector(j)));
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Subspace derived_space(const AmbientAlgebra& alg, const Subspace& s) {
  std::size_t d = s.dim();
  std::vector<Vec> brackets;
  brackets.reserve(d * (d - 1) / 2 + 1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      brackets.push_back(alg.bracket(s.basis_vector(i), s.basis_vector(j)));
  return Subspace::span(brackets, alg.dim);
}

Subspace lie_closure(const AmbientAlgebra& alg, const Subspace& s) {
  Subspace cur = s;
  while (true) {
    Subspace next = cur.sum(derived_space(alg, cur));
    if (next.dim() == cur.dim()) return cur;
    cur = std::move(next);
  }
}

Subspace normalizer_in(const AmbientAlgebra& alg, const Subspace& l,
                       const Subspace& s) {
  std::size_t dl = l.dim(), ds = s.dim();
  if (dl == 0) return Subspace::zero(alg.dim);
  if (ds == 0) return l;
  // Column t of the system records the residues of [l_t, s_i] modulo s for
  // every i; the kernel picks out the combinations of l that preserve s.
  RMat sys(ds * alg.dim, dl);
  for (std::size_t t = 0; t < dl; ++t) {
    Vec lt = l.basis_vector(t);
    for (std::size_t i = 0; i < ds; ++i) {
      Vec res = s.reduce(alg.bracket(lt, s.basis_vector(i)));
      for (std::size_t r = 0; r < alg.dim; ++r)
        sys.at(i * alg.dim + r, t) = res[r];
    }
  }
  return Subspace::span(coefficients_to_vectors(kernel(sys), l), alg.dim);
}

Subspace centralizer_in(const AmbientAlgebra& alg, const Subspace& l,
                        const Subspace& s) {
  std::size_t dl = l.dim(), ds = s.dim();
  if (dl == 0) return Subspace::zero(alg.dim);
  if (ds == 0) return l;
  RMat sys(ds * alg.dim, dl);
  for (std::size_t t = 0; t < dl; ++t) {
    Vec lt = l.basis_vector(t);
    for (std::size_t i = 0; i < ds; ++i) {
      Vec br = alg.bracket(lt, s.basis_vector(i));
      for (std::size_t r = 0; r < alg.dim; ++r)
        sys.at(i * alg.dim + r, t) = br[r];
    }
  }
  return Subspace::span(coefficients_to_vectors(kernel(sys), l), alg.dim);
}

bool is_subalgebra(const AmbientAlgebra& alg, const Subspace& s) {
  std::size_t d = s.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (!s.contains(alg.bracket(s.basis_vector(i), s.basis_vector(j))))
        return false;
  return true;
}

SplitOutcome<ReductiveSplit> split_reductive(const AmbientAlgebra& alg,
                                             const Subspace& h) {
  SplitOutcome<ReductiveSplit> out;
  if (alg.family == Family::F4Model) {
    out.error_tag = "NotThetaStable";
    out.error_detail = "the parabolic model carries no Cartan involution";
    return out;
  }
  std::size_t d = h.dim();
  std::vector<Vec> k_gens, p_gens;
  k_gens.reserve(d);
  p_gens.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    Vec b = h.basis_vector(i);
    Vec tb = alg.theta(b);
    if (!h.contains(tb)) {
      out.error_tag = "NotThetaStable";
      out.error_detail =
          "theta image of basis vector " + std::to_string(i) + " leaves h";
      return out;
    }
    k_gens.push_back(vec_add(b, tb));
    p_gens.push_back(vec_sub(b, tb));
  }
  ReductiveSplit split;
  split.k_h = Subspace::span(k_gens, alg.dim);
  split.p_h = Subspace::span(p_gens, alg.dim);
  if (split.k_h.dim() + split.p_h.dim() != d)
    throw std::logic_error("split_reductive: eigenparts do not sum to h");

  // Constraint chain: [p_h, p_h] within k_h, and k_h normalizes p_h.
  std::size_t dp = split.p_h.dim(), dk = split.k_h.dim();
  for (std::size_t i = 0; i < dp; ++i)
    for (std::size_t j = i + 1; j < dp; ++j)
      if (!split.k_h.contains(alg.bracket(split.p_h.basis_vector(i),
                                          split.p_h.basis_vector(j)))) {
        out.error_tag = "ConstraintChainViolation";
        out.error_detail = "[p_h, p_h] escapes k_h (input not a subalgebra?)";
        return out;
      }
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t j = 0; j < dp; ++j)
      if (!split.p_h.contains(alg.bracket(split.k_h.basis_vector(i),
                                          split.p_h.basis_vector(j)))) {
        out.error_tag = "ConstraintChainViolation";
        out.error_detail = "k_h does not normalize p_h (input not a subalgebra?)";
        return out;
      }
  out.split = std::move(split);
  return out;
}

SplitOutcome<ParabolicSplit> split_parabolic(const AmbientAlgebra& alg,
                                             const Subspace& h) {
  SplitOutcome<ParabolicSplit> out;
  ParabolicSplit split;
  split.m_h = h.intersect(alg.m);
  split.a_h = h.intersect(alg.a);
  split.n_h = h.intersect(alg.n_nil);
  if (split.m_h.dim() + split.a_h.dim() + split.n_h.dim() != h.dim()) {
    out.error_tag = "NotInNormalPosition";
    out.error_detail = "h is not the direct sum of its graded intersections";
    return out;
  }
  // The nilpotent part must be an ideal of h.
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < split.n_h.dim(); ++j)
      if (!split.n_h.contains(
              alg.bracket(h.basis_vector(i), split.n_h.basis_vector(j)))) {
        out.error_tag = "NotInNormalPosition";
        out.error_detail = "the nilpotent part is not an ideal of h";
        return out;
      }
  out.split = std::move(split);
  return out;
}

}  // namespace rankone
