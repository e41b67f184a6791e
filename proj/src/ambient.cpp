#include "rankone/ambient.hpp"

#include <stdexcept>
#include <utility>

#include "rankone/octonion.hpp"

namespace rankone {

namespace {

constexpr std::size_t kModelDim = 37;
constexpr std::size_t kMDim = 21;
constexpr std::size_t kAIndex = 21;
constexpr std::size_t kAlphaBase = 22;
constexpr std::size_t kTwoAlphaBase = 30;

std::size_t re_idx(std::size_t s, std::size_t i, std::size_t j) {
  return 2 * (i * s + j);
}
std::size_t im_idx(std::size_t s, std::size_t i, std::size_t j) {
  return 2 * (i * s + j) + 1;
}

/// Ambient-coordinate image of theta(X) = -X^*.
Vec theta_ambient(std::size_t s, const Vec& amb) {
  Vec out(2 * s * s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      out[re_idx(s, i, j)] = -amb[re_idx(s, j, i)];
      out[im_idx(s, i, j)] = amb[im_idx(s, j, i)];
    }
  return out;
}

struct ConstraintBuilder {
  std::size_t s;
  std::vector<Vec> rows;

  explicit ConstraintBuilder(std::size_t size) : s(size) {}

  Vec fresh() const { return Vec(2 * s * s, Rat(0)); }

  void push(Vec row) { rows.push_back(std::move(row)); }

  /// re(X_{i1,j1}) + sign * re(X_{i2,j2}) = 0
  void tie_re(std::size_t i1, std::size_t j1, std::size_t i2, std::size_t j2,
              long sign) {
    Vec r = fresh();
    r[re_idx(s, i1, j1)] += 1;
    r[re_idx(s, i2, j2)] += sign;
    push(std::move(r));
  }
  /// im(X_{i1,j1}) + sign * im(X_{i2,j2}) = 0
  void tie_im(std::size_t i1, std::size_t j1, std::size_t i2, std::size_t j2,
              long sign) {
    Vec r = fresh();
    r[im_idx(s, i1, j1)] += 1;
    r[im_idx(s, i2, j2)] += sign;
    push(std::move(r));
  }
  void zero_re(std::size_t i, std::size_t j) {
    Vec r = fresh();
    r[re_idx(s, i, j)] = 1;
    push(std::move(r));
  }
  void zero_im(std::size_t i, std::size_t j) {
    Vec r = fresh();
    r[im_idx(s, i, j)] = 1;
    push(std::move(r));
  }
};

std::vector<Vec> so_constraints(std::size_t n) {
  std::size_t s = n + 1;
  ConstraintBuilder cb(s);
  auto eps = [&](std::size_t i) { return i + 1 == s ? -1L : 1L; };
  // eps_j X_ji + eps_i X_ij = 0, real entries only.
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i; j < s; ++j) {
      if (i == j) {
        cb.zero_re(i, i);
      } else if (eps(i) == eps(j)) {
        cb.tie_re(j, i, i, j, 1);
      } else {
        cb.tie_re(j, i, i, j, -1);
      }
    }
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) cb.zero_im(i, j);
  return std::move(cb.rows);
}

std::vector<Vec> su_constraints(std::size_t n) {
  std::size_t s = n + 1;
  ConstraintBuilder cb(s);
  auto eps = [&](std::size_t i) { return i + 1 == s ? -1L : 1L; };
  // eps_j conj(X_ji) + eps_i X_ij = 0.
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i; j < s; ++j) {
      if (i == j) {
        cb.zero_re(i, i);  // 2 eps_i re(X_ii) = 0
      } else if (eps(i) == eps(j)) {
        cb.tie_re(j, i, i, j, 1);
        cb.tie_im(i, j, j, i, -1);  // eps equal: im parts match
      } else {
        cb.tie_re(j, i, i, j, -1);
        cb.tie_im(i, j, j, i, 1);
      }
    }
  // tr X = 0 (real part redundant after the diagonal rows; both included).
  Vec tr_re = cb.fresh(), tr_im = cb.fresh();
  for (std::size_t i = 0; i < s; ++i) {
    tr_re[re_idx(s, i, i)] = 1;
    tr_im[im_idx(s, i, i)] = 1;
  }
  cb.push(std::move(tr_re));
  cb.push(std::move(tr_im));
  return std::move(cb.rows);
}

std::vector<Vec> sp_constraints(std::size_t n) {
  std::size_t s = 2 * n + 2;
  ConstraintBuilder cb(s);
  auto r3 = [&](std::size_t i) { return n + 1 + i; };
  std::size_t r2 = n, r4 = 2 * n + 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i <= j) {
        // A skew-hermitian: X_ji = -conj(X_ij).
        if (i == j) {
          cb.zero_re(i, i);
        } else {
          cb.tie_re(j, i, i, j, 1);
          cb.tie_im(j, i, i, j, -1);
        }
        // B symmetric: X_{r3(i), j} = X_{r3(j), i}.
        if (i < j) {
          cb.tie_re(r3(i), j, r3(j), i, -1);
          cb.tie_im(r3(i), j, r3(j), i, -1);
        }
      }
      // Block (3,3) = conj(A).
      cb.tie_re(r3(i), r3(j), i, j, -1);
      cb.tie_im(r3(i), r3(j), i, j, 1);
      // Block (1,3) = -conj(B).
      cb.tie_re(i, r3(j), r3(i), j, 1);
      cb.tie_im(i, r3(j), r3(i), j, -1);
    }
    // z ties: row-2 entries = conj(z), block (3,4) = conj(z),
    // row-4 third block = z.
    cb.tie_re(r2, i, i, r2, -1);
    cb.tie_im(r2, i, i, r2, 1);
    cb.tie_re(r3(i), r4, i, r2, -1);
    cb.tie_im(r3(i), r4, i, r2, 1);
    cb.tie_re(r4, r3(i), i, r2, -1);
    cb.tie_im(r4, r3(i), i, r2, -1);
    // w ties: block (1,4) = -conj(w), row-2 third block = conj(w),
    // row-4 first block = -w.
    cb.tie_re(i, r4, r3(i), r2, 1);
    cb.tie_im(i, r4, r3(i), r2, -1);
    cb.tie_re(r2, r3(i), r3(i), r2, -1);
    cb.tie_im(r2, r3(i), r3(i), r2, 1);
    cb.tie_re(r4, i, r3(i), r2, 1);
    cb.tie_im(r4, i, r3(i), r2, 1);
  }
  // e imaginary; bottom corner = conj(e).
  cb.zero_re(r2, r2);
  cb.tie_re(r4, r4, r2, r2, -1);
  cb.tie_im(r4, r4, r2, r2, 1);
  // f: X_{r2, r4} = -conj(X_{r4, r2}).
  cb.tie_re(r2, r4, r4, r2, 1);
  cb.tie_im(r2, r4, r4, r2, -1);
  return std::move(cb.rows);
}

CMat a0_matrix(Family family, std::size_t n) {
  if (family == Family::SO || family == Family::SU) {
    CMat m(n + 1, n + 1);
    m.at(n - 1, n) = CRat(Rat(1), Rat(0));
    m.at(n, n - 1) = CRat(Rat(1), Rat(0));
    return m;
  }
  // SP: first quaternionic coordinate of the symmetric-pair slot.
  std::size_t s = 2 * n + 2;
  CMat m(s, s);
  m.at(0, n) = CRat(Rat(1), Rat(0));
  m.at(n, 0) = CRat(Rat(1), Rat(0));
  m.at(n + 1, 2 * n + 1) = CRat(Rat(1), Rat(0));
  m.at(2 * n + 1, n + 1) = CRat(Rat(1), Rat(0));
  return m;
}

/// Kernel of (op - lambda * Id) as a subspace of algebra coordinates.
Subspace eigenspace(const RMat& op, long lambda) {
  RMat shifted = op;
  for (std::size_t i = 0; i < op.rows(); ++i) shifted.at(i, i) -= lambda;
  return Subspace::row_space(kernel(shifted));
}

// --- exceptional model internals -------------------------------------------

/// The 21 generator images under the spin representation, in the unit order
/// (e1..e7, 1), indexed lexicographically by the pair (i, j).
const std::vector<RMat>& model_spin_images() {
  static const std::vector<RMat> images = [] {
    std::vector<RMat> out;
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = i + 1; j < 7; ++j) {
        RMat x(7, 7);
        x.at(j, i) = 1;
        x.at(i, j) = -1;
        out.push_back(spin7_rep(x, oct_order_im_first()));
      }
    return out;
  }();
  return images;
}

RMat model_spin_of(const Vec& m21) {
  const auto& gens = model_spin_images();
  RMat out(8, 8);
  for (std::size_t t = 0; t < kMDim; ++t) {
    if (m21[t] == 0) continue;
    out = out.add(gens[t].scale(m21[t]));
  }
  return out;
}

/// Octonion coefficient vector (natural order) from a first-root-space
/// coordinate vector (order e1..e7, 1).
Vec model_to_natural(const Vec& v8) {
  Vec nat(8);
  nat[0] = v8[7];
  for (std::size_t i = 0; i < 7; ++i) nat[i + 1] = v8[i];
  return nat;
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::SO:
      return "so";
    case Family::SU:
      return "su";
    case Family::SP:
      return "sp";
    case Family::F4Model:
      return "f4-model";
  }
  return "?";
}

Vec AmbientAlgebra::to_ambient(const Vec& alg_coords) const {
  if (alg_coords.size() != dim)
    throw std::invalid_argument("to_ambient: coordinate size mismatch");
  if (family == Family::F4Model) return alg_coords;
  Vec out(coord_dim, Rat(0));
  for (std::size_t i = 0; i < dim; ++i) {
    const Rat& c = alg_coords[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j < coord_dim; ++j) {
      const Rat& b = basis.at(i, j);
      if (b == 0) continue;
      Rat delta = c * b;
      out[j] += delta;
    }
  }
  return out;
}

Vec AmbientAlgebra::from_ambient(const Vec& ambient_coords) const {
  if (family == Family::F4Model) {
    if (ambient_coords.size() != kModelDim)
      throw std::invalid_argument("from_ambient: coordinate size mismatch");
    return ambient_coords;
  }
  auto coords = amb_span.coords_of(ambient_coords);
  if (!coords)
    throw std::invalid_argument(
        "from_ambient: vector violates the defining constraints");
  return *coords;
}

CMat AmbientAlgebra::to_matrix(const Vec& alg_coords) const {
  if (family == Family::F4Model)
    throw std::logic_error("to_matrix: exceptional model has no matrix form");
  Vec amb = to_ambient(alg_coords);
  return coords_to_cmat(amb, matrix_size, matrix_size);
}

Vec AmbientAlgebra::from_matrix(const CMat& m) const {
  if (family == Family::F4Model)
    throw std::logic_error("from_matrix: exceptional model has no matrix form");
  if (m.rows() != matrix_size || m.cols() != matrix_size)
    throw std::invalid_argument("from_matrix: size mismatch");
  return from_ambient(cmat_to_coords(m));
}

Vec AmbientAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (family != Family::F4Model) {
    CMat mx = to_matrix(x), my = to_matrix(y);
    return from_matrix(mx.commutator(my));
  }
  if (x.size() != kModelDim || y.size() != kModelDim)
    throw std::invalid_argument("bracket: coordinate size mismatch");
  Vec mx(x.begin(), x.begin() + kMDim), my(y.begin(), y.begin() + kMDim);
  const Rat& ax = x[kAIndex];
  const Rat& ay = y[kAIndex];
  Vec vx(x.begin() + kAlphaBase, x.begin() + kTwoAlphaBase);
  Vec vy(y.begin() + kAlphaBase, y.begin() + kTwoAlphaBase);
  Vec wx(x.begin() + kTwoAlphaBase, x.end());
  Vec wy(y.begin() + kTwoAlphaBase, y.end());

  RMat m7x = f4_coords_to_m7(mx), m7y = f4_coords_to_m7(my);

  // m-part: matrix commutator.
  Vec m_out = f4_m7_to_coords(m7x.mul(m7y).sub(m7y.mul(m7x)));

  // First root space: spin action plus scaling weight 1.
  RMat rx = model_spin_of(mx), ry = model_spin_of(my);
  Vec v_out = vec_sub(rx.mul_vec(vy), ry.mul_vec(vx));
  v_out = vec_add(v_out, vec_sub(vec_scale(ax, vy), vec_scale(ay, vx)));

  // Second root space: defining action, scaling weight 2, and the
  // equivariant pairing Im(x * conj(y)) of first-root-space vectors.
  Vec w_out = vec_sub(m7x.mul_vec(wy), m7y.mul_vec(wx));
  Rat two_ax = ax * 2, two_ay = ay * 2;
  w_out = vec_add(w_out, vec_sub(vec_scale(two_ax, wy), vec_scale(two_ay, wx)));
  Vec pairing =
      oct_im_part(oct_mul(model_to_natural(vx), oct_conj(model_to_natural(vy))));
  w_out = vec_add(w_out, pairing);

  Vec out(kModelDim);
  for (std::size_t i = 0; i < kMDim; ++i) out[i] = m_out[i];
  out[kAIndex] = 0;
  for (std::size_t i = 0; i < 8; ++i) out[kAlphaBase + i] = v_out[i];
  for (std::size_t i = 0; i < 7; ++i) out[kTwoAlphaBase + i] = w_out[i];
  return out;
}

Vec AmbientAlgebra::theta(const Vec& x) const {
  if (family == Family::F4Model)
    throw std::logic_error("theta: not defined on the parabolic model");
  return from_ambient(theta_ambient(matrix_size, to_ambient(x)));
}

Rat AmbientAlgebra::inner(const Vec& x, const Vec& y) const {
  Vec ax = to_ambient(x), ay = to_ambient(y);
  Rat sum = 0;
  for (std::size_t i = 0; i < ax.size(); ++i) {
    if (ax[i] == 0 || ay[i] == 0) continue;
    Rat prod = ax[i] * ay[i];
    sum += prod;
  }
  return sum;
}

RMat AmbientAlgebra::gram_of(const Subspace& s) const {
  std::size_t d = s.dim();
  std::vector<Vec> amb;
  amb.reserve(d);
  for (std::size_t i = 0; i < d; ++i) amb.push_back(to_ambient(s.basis_vector(i)));
  RMat g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rat sum = 0;
      for (std::size_t t = 0; t < coord_dim; ++t) {
        if (amb[i][t] == 0 || amb[j][t] == 0) continue;
        Rat prod = amb[i][t] * amb[j][t];
        sum += prod;
      }
      g.at(i, j) = sum;
      g.at(j, i) = sum;
    }
  return g;
}

Subspace AmbientAlgebra::span(const std::vector<Vec>& vectors) const {
  return Subspace::span(vectors, dim);
}

AmbientAlgebra construct_algebra(Family family, std::size_t n) {
  if (family == Family::F4Model) return f4_model();
  if (family == Family::SO && n < 3)
    throw std::invalid_argument("construct_algebra: SO requires n >= 3");
  if (family == Family::SU && n < 1)
    throw std::invalid_argument("construct_algebra: SU requires n >= 1");
  if (family == Family::SP && n < 2)
    throw std::invalid_argument("construct_algebra: SP requires n >= 2");

  AmbientAlgebra alg;
  alg.family = family;
  alg.n = n;
  alg.matrix_size = family == Family::SP ? 2 * n + 2 : n + 1;
  alg.coord_dim = 2 * alg.matrix_size * alg.matrix_size;

  std::vector<Vec> constraints;
  switch (family) {
    case Family::SO:
      constraints = so_constraints(n);
      break;
    case Family::SU:
      constraints = su_constraints(n);
      break;
    case Family::SP:
      constraints = sp_constraints(n);
      break;
    default:
      break;
  }
  RMat sys = RMat::from_rows(constraints, alg.coord_dim);
  alg.amb_span = Subspace::row_space(kernel(sys));
  alg.basis = alg.amb_span.basis_matrix();
  alg.dim = alg.basis.rows();
  alg.gram_alg = alg.basis.mul(alg.basis.transpose());

  // Cartan decomposition: eigenspaces of theta in algebra coordinates.
  RMat theta_op(alg.dim, alg.dim);
  for (std::size_t j = 0; j < alg.dim; ++j) {
    Vec img = alg.from_ambient(theta_ambient(alg.matrix_size, alg.basis.row(j)));
    for (std::size_t i = 0; i < alg.dim; ++i) theta_op.at(i, j) = img[i];
  }
  alg.k = eigenspace(theta_op, 1);
  alg.p = eigenspace(theta_op, -1);

  // Restricted-root decomposition from the distinguished generator.
  alg.a0 = alg.from_matrix(a0_matrix(family, n));
  alg.a = Subspace::span({alg.a0}, alg.dim);
  RMat ad0(alg.dim, alg.dim);
  {
    CMat a0m = a0_matrix(family, n);
    for (std::size_t j = 0; j < alg.dim; ++j) {
      CMat bj = coords_to_cmat(alg.basis.row(j), alg.matrix_size, alg.matrix_size);
      Vec img = alg.from_matrix(a0m.commutator(bj));
      for (std::size_t i = 0; i < alg.dim; ++i) ad0.at(i, j) = img[i];
    }
  }
  alg.g_alpha = eigenspace(ad0, 1);
  alg.g_2alpha = eigenspace(ad0, 2);
  alg.n_nil = alg.g_alpha.sum(alg.g_2alpha);

  // m = centralizer of a in k: kernel of ad(a0) restricted to k.
  {
    std::size_t dk = alg.k.dim();
    RMat sys_m(alg.dim, dk);
    for (std::size_t j = 0; j < dk; ++j) {
      Vec img = ad0.mul_vec(alg.k.basis_vector(j));
      for (std::size_t i = 0; i < alg.dim; ++i) sys_m.at(i, j) = img[i];
    }
    RMat coeffs = kernel(sys_m);
    std::vector<Vec> gens;
    for (std::size_t r = 0; r < coeffs.rows(); ++r) {
      Vec v(alg.dim, Rat(0));
      for (std::size_t j = 0; j < dk; ++j) {
        const Rat& c = coeffs.at(r, j);
        if (c == 0) continue;
        v = vec_add(v, vec_scale(c, alg.k.basis_vector(j)));
      }
      gens.push_back(std::move(v));
    }
    alg.m = Subspace::span(gens, alg.dim);
  }
  return alg;
}

AmbientAlgebra f4_model() {
  AmbientAlgebra alg;
  alg.family = Family::F4Model;
  alg.n = 0;
  alg.matrix_size = 0;
  alg.coord_dim = kModelDim;
  alg.dim = kModelDim;
  alg.basis = RMat::identity(kModelDim);
  alg.amb_span = Subspace::full(kModelDim);
  alg.gram_alg = RMat::identity(kModelDim);

  auto coord_range = [&](std::size_t lo, std::size_t hi) {
    std::vector<Vec> gens;
    for (std::size_t i = lo; i < hi; ++i) {
      Vec v(kModelDim, Rat(0));
      v[i] = 1;
      gens.push_back(std::move(v));
    }
    return Subspace::span(gens, kModelDim);
  };
  alg.m = coord_range(0, kMDim);
  alg.a = coord_range(kAIndex, kAIndex + 1);
  alg.g_alpha = coord_range(kAlphaBase, kTwoAlphaBase);
  alg.g_2alpha = coord_range(kTwoAlphaBase, kModelDim);
  alg.n_nil = alg.g_alpha.sum(alg.g_2alpha);
  alg.k = Subspace::zero(kModelDim);
  alg.p = Subspace::zero(kModelDim);
  alg.a0 = Vec(kModelDim, Rat(0));
  alg.a0[kAIndex] = 1;
  return alg;
}

CMat so_matrix(std::size_t n, const RMat& a_block, const Vec& x) {
  if (a_block.rows() != n || a_block.cols() != n || x.size() != n)
    throw std::invalid_argument("so_matrix: size mismatch");
  CMat m(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = CRat(a_block.at(i, j), Rat(0));
    m.at(i, n) = CRat(x[i], Rat(0));
    m.at(n, i) = CRat(x[i], Rat(0));
  }
  return m;
}

CMat su_matrix(std::size_t n, const CMat& a_block, const std::vector<CRat>& z,
               const CRat& d) {
  if (a_block.rows() != n || a_block.cols() != n || z.size() != n)
    throw std::invalid_argument("su_matrix: size mismatch");
  CMat m(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = a_block.at(i, j);
    m.at(i, n) = z[i];
    m.at(n, i) = z[i].conj();
  }
  m.at(n, n) = d;
  return m;
}

CMat sp_matrix(std::size_t n, const CMat& a_block, const CMat& b_block,
               const std::vector<CRat>& z, const std::vector<CRat>& w,
               const CRat& e, const CRat& f) {
  if (a_block.rows() != n || a_block.cols() != n || b_block.rows() != n ||
      b_block.cols() != n || z.size() != n || w.size() != n)
    throw std::invalid_argument("sp_matrix: size mismatch");
  std::size_t s = 2 * n + 2, r2 = n, r4 = 2 * n + 1;
  auto r3 = [&](std::size_t i) { return n + 1 + i; };
  CMat m(s, s);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = a_block.at(i, j);
      m.at(r3(i), r3(j)) = a_block.at(i, j).conj();
      m.at(r3(i), j) = b_block.at(i, j);
      m.at(i, r3(j)) = -b_block.at(i, j).conj();
    }
    m.at(i, r2) = z[i];
    m.at(r2, i) = z[i].conj();
    m.at(r3(i), r4) = z[i].conj();
    m.at(r4, r3(i)) = z[i];
    m.at(r3(i), r2) = w[i];
    m.at(r2, r3(i)) = w[i].conj();
    m.at(i, r4) = -w[i].conj();
    m.at(r4, i) = -w[i];
  }
  m.at(r2, r2) = e;
  m.at(r4, r4) = e.conj();
  m.at(r2, r4) = -f.conj();
  m.at(r4, r2) = f;
  return m;
}

RMat f4_coords_to_m7(const Vec& x21) {
  if (x21.size() != kMDim)
    throw std::invalid_argument("f4_coords_to_m7: expected 21 coordinates");
  RMat m(7, 7);
  std::size_t t = 0;
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j, ++t) {
      m.at(j, i) = x21[t];
      Rat neg = -x21[t];
      m.at(i, j) = neg;
    }
  return m;
}

Vec f4_m7_to_coords(const RMat& m7) {
  if (m7.rows() != 7 || m7.cols() != 7)
    throw std::invalid_argument("f4_m7_to_coords: expected 7x7");
  Vec x(kMDim);
  std::size_t t = 0;
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j, ++t) x[t] = m7.at(j, i);
  return x;
}

Vec f4_element(const RMat& m7, const Rat& a_coef, const Vec& v8, const Vec& w7) {
  if (v8.size() != 8 || w7.size() != 7)
    throw std::invalid_argument("f4_element: size mismatch");
  Vec m_coords = f4_m7_to_coords(m7);
  Vec out(kModelDim);
  for (std::size_t i = 0; i < kMDim; ++i) out[i] = m_coords[i];
  out[kAIndex] = a_coef;
  for (std::size_t i = 0; i < 8; ++i) out[kAlphaBase + i] = v8[i];
  for (std::size_t i = 0; i < 7; ++i) out[kTwoAlphaBase + i] = w7[i];
  return out;
}

RMat f4_m_part(const Vec& x37) {
  if (x37.size() != kModelDim) throw std::invalid_argument("f4_m_part: size");
  return f4_coords_to_m7(Vec(x37.begin(), x37.begin() + kMDim));
}

Rat f4_a_part(const Vec& x37) {
  if (x37.size() != kModelDim) throw std::invalid_argument("f4_a_part: size");
  return x37[kAIndex];
}

Vec f4_galpha_part(const Vec& x37) {
  if (x37.size() != kModelDim) throw std::invalid_argument("f4_galpha_part: size");
  return Vec(x37.begin() + kAlphaBase, x37.begin() + kTwoAlphaBase);
}

Vec f4_g2alpha_part(const Vec& x37) {
  if (x37.size() != kModelDim)
    throw std::invalid_argument("f4_g2alpha_part: size");
  return Vec(x37.begin() + kTwoAlphaBase, x37.end());
}

}  // namespace rankone
