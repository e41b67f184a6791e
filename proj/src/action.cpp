#include "rankone/action.hpp"

#include <stdexcept>
#include <string>

namespace rankone {

namespace {

/// Deterministic 64-bit mixer (splitmix-style) used to draw reproducible
/// rational sample vectors from a seed.
struct DetRng {
  std::uint64_t state;
  explicit DetRng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Small rational with numerator in [-9, 9] and denominator in [1, 9].
  Rat small_rational() {
    long num = static_cast<long>(next() % 19) - 9;
    long den = static_cast<long>(next() % 9) + 1;
    return rat(num, den);
  }
};

void require_skew(const RMat& t, const RMat& gram, std::size_t index) {
  RMat lhs = t.transpose().mul(gram).add(gram.mul(t));
  if (!lhs.is_zero())
    throw std::logic_error("operator " + std::to_string(index) +
                           " is not skew for the module form");
}

std::size_t tangent_rank(const LinearAction& act, const Vec& v) {
  RMat rows(act.operators.size(), act.module_dim);
  for (std::size_t i = 0; i < act.operators.size(); ++i)
    rows.set_row(i, act.operators[i].mul_vec(v));
  return rank(std::move(rows));
}

}  // namespace

LinearAction checked_action(std::vector<RMat> operators, RMat gram) {
  LinearAction act;
  act.module_dim = gram.rows();
  if (gram.cols() != act.module_dim)
    throw std::invalid_argument("checked_action: gram must be square");
  for (std::size_t i = 0; i < operators.size(); ++i) {
    if (operators[i].rows() != act.module_dim ||
        operators[i].cols() != act.module_dim)
      throw std::invalid_argument("checked_action: operator shape mismatch");
    require_skew(operators[i], gram, i);
  }
  act.operators = std::move(operators);
  act.gram = std::move(gram);
  return act;
}

LinearAction restrict_action(const AmbientAlgebra& alg, const Subspace& l,
                             const Subspace& v) {
  std::size_t dl = l.dim(), dv = v.dim();
  std::vector<RMat> ops;
  ops.reserve(dl);
  for (std::size_t t = 0; t < dl; ++t) {
    Vec lt = l.basis_vector(t);
    RMat op(dv, dv);
    for (std::size_t j = 0; j < dv; ++j) {
      Vec img = alg.bracket(lt, v.basis_vector(j));
      auto coords = v.coords_of(img);
      if (!coords)
        throw std::invalid_argument(
            "restrict_action: module is not invariant under the acting algebra");
      for (std::size_t i = 0; i < dv; ++i) op.at(i, j) = (*coords)[i];
    }
    ops.push_back(std::move(op));
  }
  return checked_action(std::move(ops), alg.gram_of(v));
}

OrbitVerdict transitive_on_spheres(const LinearAction& act, std::uint64_t seed) {
  OrbitVerdict verdict;
  std::size_t d = act.module_dim;
  if (d <= 1) {
    // Gram-spheres in dimension <= 1 are single points (or empty).
    verdict.transitive = true;
    verdict.required_rank = 0;
    return verdict;
  }
  std::size_t required = d - 1;
  verdict.required_rank = required;

  std::vector<Vec> samples;
  for (std::size_t i = 0; i < d; ++i) {
    Vec e(d, Rat(0));
    e[i] = 1;
    samples.push_back(std::move(e));
  }
  samples.emplace_back(d, Rat(1));
  {
    DetRng rng(seed);
    Vec r(d);
    bool nonzero = false;
    for (std::size_t i = 0; i < d; ++i) {
      r[i] = rng.small_rational();
      nonzero = nonzero || r[i] != 0;
    }
    if (!nonzero) r[0] = 1;
    samples.push_back(std::move(r));
  }

  bool any_full = false, any_deficient = false;
  for (const Vec& s : samples) {
    std::size_t rk = tangent_rank(act, s);
    verdict.ranks_at_samples.emplace_back(s, rk);
    if (rk > required)
      throw std::logic_error(
          "transitive_on_spheres: tangent rank exceeds the sphere dimension");
    if (rk == required) {
      any_full = true;
    } else {
      any_deficient = true;
      if (verdict.witness.empty()) {
        verdict.witness = s;
        verdict.witness_rank = rk;
      }
    }
  }
  if (any_full && any_deficient)
    throw std::logic_error(
        "transitive_on_spheres: inconsistent ranks across samples");

  // Orbit tangent ranks are invariant under scaling the base point.
  {
    Vec doubled = vec_scale(Rat(2), samples.front());
    if (tangent_rank(act, doubled) != verdict.ranks_at_samples.front().second)
      throw std::logic_error(
          "transitive_on_spheres: rank not scale-invariant");
  }

  verdict.transitive = any_full;
  return verdict;
}

}  // namespace rankone
