#include "rankone/catalog.hpp"

#include <stdexcept>

#include "catalog_detail.hpp"
#include "rankone/embeddings.hpp"
#include "rankone/octonion.hpp"

namespace rankone {

const char* expected_status_name(ExpectedStatus s) {
  switch (s) {
    case ExpectedStatus::Spherical:
      return "Spherical";
    case ExpectedStatus::NotSpherical:
      return "NotSpherical";
    case ExpectedStatus::Transitive:
      return "Transitive";
    case ExpectedStatus::NotTransitive:
      return "NotTransitive";
    case ExpectedStatus::Discrepancy:
      return "Discrepancy";
  }
  return "?";
}

namespace detail {

Subspace span_matrices(const AmbientAlgebra& alg,
                       const std::vector<CMat>& mats) {
  std::vector<Vec> vecs;
  vecs.reserve(mats.size());
  for (const CMat& m : mats) vecs.push_back(alg.from_matrix(m));
  return alg.span(vecs);
}

Subspace cut_span(const AmbientAlgebra& alg, const std::vector<Vec>& gens,
                  const std::vector<std::function<Rat(const Vec&)>>& fns) {
  if (gens.empty()) return Subspace::zero(alg.dim);
  if (fns.empty()) return alg.span(gens);
  RMat f(fns.size(), gens.size());
  for (std::size_t j = 0; j < fns.size(); ++j)
    for (std::size_t i = 0; i < gens.size(); ++i)
      f.at(j, i) = fns[j](gens[i]);
  RMat combos = kernel(f);
  std::vector<Vec> vecs;
  for (std::size_t r = 0; r < combos.rows(); ++r) {
    Vec v(alg.dim, Rat(0));
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Rat& c = combos.at(r, i);
      if (c == 0) continue;
      for (std::size_t t = 0; t < alg.dim; ++t)
        v[t] += Rat(c * gens[i][t]);
    }
    vecs.push_back(std::move(v));
  }
  return alg.span(vecs);
}

Subspace span_with_constraints(
    const AmbientAlgebra& alg, const std::vector<CMat>& gens,
    const std::vector<std::function<Rat(const CMat&)>>& fns) {
  if (gens.empty()) return Subspace::zero(alg.dim);
  std::vector<Vec> vecs;
  if (fns.empty()) {
    for (const CMat& g : gens) vecs.push_back(alg.from_matrix(g));
    return alg.span(vecs);
  }
  RMat f(fns.size(), gens.size());
  for (std::size_t j = 0; j < fns.size(); ++j)
    for (std::size_t i = 0; i < gens.size(); ++i)
      f.at(j, i) = fns[j](gens[i]);
  RMat combos = kernel(f);
  for (std::size_t r = 0; r < combos.rows(); ++r) {
    CMat m(gens[0].rows(), gens[0].cols());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Rat& c = combos.at(r, i);
      if (c == 0) continue;
      m = m.add(gens[i].scale(CRat(Rat(c))));
    }
    vecs.push_back(alg.from_matrix(m));
  }
  return alg.span(vecs);
}

Subspace cut_subspace(const AmbientAlgebra& alg, const Subspace& s,
                      const std::vector<std::function<Rat(const CMat&)>>& fns) {
  std::vector<CMat> gens;
  gens.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    gens.push_back(alg.to_matrix(s.basis_vector(i)));
  if (gens.empty()) return Subspace::zero(alg.dim);
  return span_with_constraints(alg, gens, fns);
}

Rat im_trace(const CMat& x) { return x.trace().im; }

std::function<Rat(const CMat&)> im_trace_block(std::size_t lo, std::size_t d) {
  return [lo, d](const CMat& x) {
    Rat s(0);
    for (std::size_t t = lo; t < lo + d; ++t) s += x.at(t, t).im;
    return s;
  };
}

CandidateSubalgebra reductive_candidate(const AmbientAlgebra& alg,
                                        const Subspace& h) {
  auto out = split_reductive(alg, h);
  if (!out.ok())
    throw std::runtime_error(out.error_tag + ": " + out.error_detail);
  CandidateSubalgebra cand;
  cand.span = h;
  cand.reductive = *out.split;
  return cand;
}

CandidateSubalgebra parabolic_candidate(const AmbientAlgebra& alg,
                                        const Subspace& h) {
  auto out = split_parabolic(alg, h);
  if (!out.ok())
    throw std::runtime_error(out.error_tag + ": " + out.error_detail);
  CandidateSubalgebra cand;
  cand.span = h;
  cand.parabolic = *out.split;
  return cand;
}

std::vector<CMat> real_block(const std::vector<RMat>& ops, std::size_t lo,
                             std::size_t s) {
  std::vector<CMat> out;
  out.reserve(ops.size());
  for (const RMat& op : ops) {
    CMat m(s, s);
    for (std::size_t r = 0; r < op.rows(); ++r)
      for (std::size_t c = 0; c < op.cols(); ++c)
        if (op.at(r, c) != 0) m.at(lo + r, lo + c) = CRat(Rat(op.at(r, c)));
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<CMat> complex_block(const std::vector<CMat>& ops, std::size_t lo,
                                std::size_t s) {
  std::vector<CMat> out;
  out.reserve(ops.size());
  for (const CMat& op : ops) {
    CMat m(s, s);
    for (std::size_t r = 0; r < op.rows(); ++r)
      for (std::size_t c = 0; c < op.cols(); ++c)
        if (!op.at(r, c).is_zero()) m.at(lo + r, lo + c) = op.at(r, c);
    out.push_back(std::move(m));
  }
  return out;
}

CMat sp_block_elem(const AmbientAlgebra& alg, const CMat& op2d,
                   std::size_t lo) {
  const std::size_t s = alg.matrix_size;
  const std::size_t half = alg.n + 1;  // offset of the conjugate half
  const std::size_t d = op2d.rows() / 2;
  CMat m(s, s);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const CRat& z = op2d.at(r, c);      // Z block
      const CRat& w = op2d.at(d + r, c);  // W block
      if (!z.is_zero()) {
        m.at(lo + r, lo + c) = z;
        m.at(half + lo + r, half + lo + c) = z.conj();
      }
      if (!w.is_zero()) {
        m.at(half + lo + r, lo + c) = w;
        m.at(lo + r, half + lo + c) = -w.conj();
      }
    }
  }
  return m;
}

std::vector<CMat> sp_block(const AmbientAlgebra& alg,
                           const std::vector<CMat>& ops2d, std::size_t lo) {
  std::vector<CMat> out;
  out.reserve(ops2d.size());
  for (const CMat& op : ops2d) out.push_back(sp_block_elem(alg, op, lo));
  return out;
}

CMat sp_mside_elem(const AmbientAlgebra& alg, const CRat& e, const CRat& f) {
  const std::size_t s = alg.matrix_size;
  const std::size_t n = alg.n;
  const std::size_t half = n + 1;
  CMat m(s, s);
  if (!e.is_zero()) {
    m.at(0, 0) = e;
    m.at(half, half) = e.conj();
    m.at(n, n) = e;
    m.at(half + n, half + n) = e.conj();
  }
  if (!f.is_zero()) {
    m.at(half, 0) = f;
    m.at(0, half) = -f.conj();
    m.at(half + n, n) = f;
    m.at(n, half + n) = -f.conj();
  }
  return m;
}

std::vector<CMat> sp_mside_gens(const AmbientAlgebra& alg) {
  return {sp_mside_elem(alg, CRat(0, 1), CRat(0)),
          sp_mside_elem(alg, CRat(0), CRat(1)),
          sp_mside_elem(alg, CRat(0), CRat(0, -1))};
}

const char* factor_sample_name(FactorSample s) {
  switch (s) {
    case FactorSample::Zero:
      return "zero";
    case FactorSample::Torus:
      return "torus";
    case FactorSample::Full:
      return "full";
  }
  return "?";
}

std::vector<FactorSample> factor_samples(std::size_t gen_count,
                                         bool proper_only) {
  if (gen_count == 0) return {FactorSample::Zero};
  if (gen_count == 1) {
    if (proper_only) return {FactorSample::Zero};
    return {FactorSample::Zero, FactorSample::Full};
  }
  if (proper_only) return {FactorSample::Zero, FactorSample::Torus};
  return {FactorSample::Zero, FactorSample::Torus, FactorSample::Full};
}

std::vector<CMat> take_sample(const std::vector<CMat>& gens, FactorSample s) {
  switch (s) {
    case FactorSample::Zero:
      return {};
    case FactorSample::Torus:
      return {gens.at(0)};
    case FactorSample::Full:
      return gens;
  }
  return {};
}

std::vector<Vec> take_sample_vecs(const std::vector<Vec>& gens,
                                  FactorSample s) {
  switch (s) {
    case FactorSample::Zero:
      return {};
    case FactorSample::Torus:
      return {gens.at(0)};
    case FactorSample::Full:
      return gens;
  }
  return {};
}

std::vector<RMat> embed_rmats(const std::vector<RMat>& ops, std::size_t lo,
                              std::size_t size) {
  std::vector<RMat> out;
  out.reserve(ops.size());
  for (const RMat& op : ops) {
    RMat m(size, size);
    for (std::size_t r = 0; r < op.rows(); ++r)
      for (std::size_t c = 0; c < op.cols(); ++c)
        if (op.at(r, c) != 0) m.at(lo + r, lo + c) = op.at(r, c);
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<RMat> quat_right_mults(std::size_t slots) {
  // Coordinates follow realify_all(sp_basis_complex(slots)): the first half
  // holds the realified z-coordinates, the second half the realified
  // w-coordinates of q = z + j w. Right multiplication by i sends (z, w) to
  // (i z, i w); by j to (-conj w, conj z); by k to (i conj w, -i conj z).
  const std::size_t half = 2 * slots;
  auto put = [](RMat& m, std::size_t row0, std::size_t col0, int a00, int a01,
                int a10, int a11) {
    m.at(row0, col0) = a00;
    m.at(row0, col0 + 1) = a01;
    m.at(row0 + 1, col0) = a10;
    m.at(row0 + 1, col0 + 1) = a11;
  };
  RMat ri(2 * half, 2 * half);
  RMat rj(2 * half, 2 * half);
  RMat rk(2 * half, 2 * half);
  for (std::size_t s = 0; s < slots; ++s) {
    const std::size_t z = 2 * s;
    const std::size_t w = half + 2 * s;
    put(ri, z, z, 0, -1, 1, 0);
    put(ri, w, w, 0, -1, 1, 0);
    put(rj, z, w, -1, 0, 0, 1);
    put(rj, w, z, 1, 0, 0, -1);
    put(rk, z, w, 0, 1, 1, 0);
    put(rk, w, z, 0, -1, -1, 0);
  }
  std::vector<RMat> out;
  out.push_back(std::move(ri));
  out.push_back(std::move(rj));
  out.push_back(std::move(rk));
  return out;
}

}  // namespace detail

std::vector<std::string> table_ids() {
  return {"5.2", "5.3", "6.2", "6.3", "7.3", "7.4", "8.1-facts", "8.5"};
}

std::pair<std::size_t, std::size_t> default_rank_range(
    const std::string& theorem_id) {
  if (theorem_id == "5.2" || theorem_id == "5.3") return {4, 9};
  if (theorem_id == "6.2" || theorem_id == "6.3") return {2, 6};
  if (theorem_id == "7.3" || theorem_id == "7.4") return {2, 3};
  if (theorem_id == "8.1-facts" || theorem_id == "8.5") return {0, 0};
  throw std::invalid_argument("unknown table id: " + theorem_id);
}

std::vector<TableCase> table_cases(const std::string& theorem_id,
                                   std::size_t n) {
  if (theorem_id == "5.2" || theorem_id == "5.3") {
    if (n < 3)
      throw std::invalid_argument("orthogonal family needs rank at least 3");
    return detail::orthogonal_cases(theorem_id, n);
  }
  if (theorem_id == "6.2" || theorem_id == "6.3") {
    if (n < 1)
      throw std::invalid_argument("unitary family needs rank at least 1");
    return detail::unitary_cases(theorem_id, n);
  }
  if (theorem_id == "7.3" || theorem_id == "7.4") {
    if (n < 2)
      throw std::invalid_argument("quaternion family needs rank at least 2");
    return detail::quaternion_cases(theorem_id, n);
  }
  if (theorem_id == "8.1-facts" || theorem_id == "8.5")
    return detail::exceptional_cases(theorem_id);
  throw std::invalid_argument("unknown table id: " + theorem_id);
}

std::vector<OnishchikEntry> onishchik_entries(std::size_t max_dim) {
  std::vector<OnishchikEntry> all;
  auto add = [&all](std::string name, std::size_t dim, bool transitive,
                    std::function<std::vector<RMat>()> ops) {
    all.push_back({std::move(name), dim, transitive, std::move(ops)});
  };

  for (std::size_t n = 2; n <= 16; ++n)
    add("so(" + std::to_string(n) + ")", n, true,
        [n] { return so_basis(n); });
  for (std::size_t n = 2; n <= 8; ++n)
    add("su(" + std::to_string(n) + ")", 2 * n, true,
        [n] { return su_in_so(n); });
  for (std::size_t n = 1; n <= 8; ++n)
    add("u(" + std::to_string(n) + ")", 2 * n, true, [n] { return u_in_so(n); });
  for (std::size_t n = 1; n <= 4; ++n) {
    add("sp(" + std::to_string(n) + ")", 4 * n, true,
        [n] { return sp_in_so(n); });
    add("sp(" + std::to_string(n) + ")+s1", 4 * n, true, [n] {
      std::vector<RMat> ops = realify_all(sp_basis_complex(n));
      ops.push_back(realify(CMat::identity(2 * n).scale(CRat(0, 1))));
      return ops;
    });
    add("sp(" + std::to_string(n) + ")+sp(1)", 4 * n, true, [n] {
      std::vector<RMat> ops = sp_in_so(n);
      for (RMat& r : detail::quat_right_mults(n)) ops.push_back(std::move(r));
      return ops;
    });
  }
  add("spin(7)", 8, true, [] { return spin7_in_so8_basis(); });
  add("spin(9)", 16, true, [] { return spin9_in_so16_basis(); });
  add("g2", 7, true, [] { return g2_in_so7_basis(); });
  for (std::size_t d : {std::size_t{0}, std::size_t{1}, std::size_t{3}}) {
    add("sp(1)-l2/dim" + std::to_string(d), 4, true,
        [d] { return sp1_x_l2_in_so4(true, d); });
    add("l2-sp(1)/dim" + std::to_string(d), 4, true,
        [d] { return sp1_x_l2_in_so4(false, d); });
  }

  // Negative controls with known deficient points.
  add("neg/diag-sp1-in-so4", 4, false, [] { return so4_diagonal_sp1(); });
  add("neg/so(4)-in-so(5)", 5, false,
      [] { return detail::embed_rmats(so_basis(4), 0, 5); });
  add("neg/sp(1)+sp(1)-in-sp(2)", 8, false, [] {
    // Block-diagonal pair: each factor multiplies its own quaternion slot.
    std::vector<RMat> ops;
    for (std::size_t slot = 0; slot < 2; ++slot) {
      for (const CMat& one : sp_basis_complex(1)) {
        CMat m(4, 4);
        // sp(1) one-slot pattern [[z, -conj(w)], [w, conj(z)]] placed on the
        // doubled 2x2 layout of sp(2): Z-entries at (slot, slot), W-entries
        // at (2 + slot, slot) and mirrors.
        m.at(slot, slot) = one.at(0, 0);
        m.at(2 + slot, 2 + slot) = one.at(0, 0).conj();
        m.at(2 + slot, slot) = one.at(1, 0);
        m.at(slot, 2 + slot) = -one.at(1, 0).conj();
        ops.push_back(realify(m));
      }
    }
    return ops;
  });
  add("neg/g2-on-octonions", 8, false,
      [] { return detail::embed_rmats(g2_in_so7_basis(), 1, 8); });

  std::vector<OnishchikEntry> out;
  for (OnishchikEntry& e : all)
    if (e.module_dim <= max_dim) out.push_back(std::move(e));
  return out;
}

std::vector<RMat> make_embedding(const std::string& name, std::size_t param) {
  if (name == "so") return so_basis(param);
  if (name == "su_in_so") return su_in_so(param);
  if (name == "u_in_so") return u_in_so(param);
  if (name == "sp_in_so") return sp_in_so(param);
  if (name == "spin7") return spin7_in_so8_basis();
  if (name == "spin9") return spin9_in_so16_basis();
  if (name == "g2") return g2_in_so7_basis();
  throw std::invalid_argument("unknown embedding: " + name);
}

}  // namespace rankone
