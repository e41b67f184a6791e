#include "rankone/embeddings.hpp"

#include <stdexcept>

namespace rankone {

namespace {

Vec quat_unit(std::size_t idx) {
  Vec u(4, Rat(0));
  u[idx] = 1;
  return u;
}

/// Quaternion matrix with a single quaternion entry q at (r, c), as a QMat.
QMat qmat_single(std::size_t m, std::size_t r, std::size_t c, const Vec& q) {
  QMat out(m, m);
  out.a.at(r, c) = q[0];
  out.b.at(r, c) = q[1];
  out.c.at(r, c) = q[2];
  out.d.at(r, c) = q[3];
  return out;
}

}  // namespace

std::vector<RMat> so_basis(std::size_t n) {
  std::vector<RMat> out;
  out.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RMat m(n, n);
      m.at(j, i) = 1;
      m.at(i, j) = -1;
      out.push_back(std::move(m));
    }
  return out;
}

std::vector<CMat> u_basis(std::size_t m) {
  std::vector<CMat> out;
  out.reserve(m * m);
  for (std::size_t t = 0; t < m; ++t) {
    CMat x(m, m);
    x.at(t, t) = CRat(Rat(0), Rat(1));
    out.push_back(std::move(x));
  }
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = s + 1; t < m; ++t) {
      CMat x(m, m);
      x.at(t, s) = CRat(Rat(1), Rat(0));
      x.at(s, t) = CRat(Rat(-1), Rat(0));
      out.push_back(x);
      CMat y(m, m);
      y.at(s, t) = CRat(Rat(0), Rat(1));
      y.at(t, s) = CRat(Rat(0), Rat(1));
      out.push_back(std::move(y));
    }
  return out;
}

std::vector<CMat> su_basis(std::size_t m) {
  std::vector<CMat> out;
  if (m == 0) return out;
  out.reserve(m * m - 1);
  for (std::size_t t = 0; t + 1 < m; ++t) {
    CMat x(m, m);
    x.at(t, t) = CRat(Rat(0), Rat(1));
    x.at(t + 1, t + 1) = CRat(Rat(0), Rat(-1));
    out.push_back(std::move(x));
  }
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = s + 1; t < m; ++t) {
      CMat x(m, m);
      x.at(t, s) = CRat(Rat(1), Rat(0));
      x.at(s, t) = CRat(Rat(-1), Rat(0));
      out.push_back(x);
      CMat y(m, m);
      y.at(s, t) = CRat(Rat(0), Rat(1));
      y.at(t, s) = CRat(Rat(0), Rat(1));
      out.push_back(std::move(y));
    }
  return out;
}

std::vector<CMat> sp_basis_complex(std::size_t m) {
  std::vector<CMat> out;
  out.reserve(m * (2 * m + 1));
  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t u = 1; u < 4; ++u)
      out.push_back(qmat_to_complex(qmat_single(m, t, t, quat_unit(u))));
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = s + 1; t < m; ++t) {
      // E_ts - E_st (real antisymmetric part).
      QMat x(m, m);
      x.a.at(t, s) = 1;
      x.a.at(s, t) = -1;
      out.push_back(qmat_to_complex(x));
      // u (E_st + E_ts) for u = i, j, k (imaginary symmetric parts).
      for (std::size_t u = 1; u < 4; ++u) {
        QMat y = qmat_single(m, s, t, quat_unit(u));
        QMat y2 = qmat_single(m, t, s, quat_unit(u));
        out.push_back(qmat_to_complex(y.add(y2)));
      }
    }
  return out;
}

std::vector<RMat> realify_all(const std::vector<CMat>& mats) {
  std::vector<RMat> out;
  out.reserve(mats.size());
  for (const CMat& m : mats) out.push_back(realify(m));
  return out;
}

std::vector<RMat> su_in_so(std::size_t m) { return realify_all(su_basis(m)); }
std::vector<RMat> u_in_so(std::size_t m) { return realify_all(u_basis(m)); }
std::vector<RMat> sp_in_so(std::size_t m) {
  return realify_all(sp_basis_complex(m));
}

std::vector<RMat> so4_left_ideal() {
  std::vector<RMat> out;
  for (std::size_t u = 1; u < 4; ++u)
    out.push_back(quat_left_mult_matrix(quat_unit(u)));
  return out;
}

std::vector<RMat> so4_right_ideal() {
  std::vector<RMat> out;
  for (std::size_t u = 1; u < 4; ++u)
    out.push_back(quat_right_mult_matrix(quat_unit(u)));
  return out;
}

std::vector<RMat> sp1_x_l2_in_so4(bool left_full, std::size_t other_dim) {
  if (other_dim != 0 && other_dim != 1 && other_dim != 3)
    throw std::invalid_argument("sp1_x_l2_in_so4: other_dim must be 0, 1 or 3");
  std::vector<RMat> full = left_full ? so4_left_ideal() : so4_right_ideal();
  std::vector<RMat> other = left_full ? so4_right_ideal() : so4_left_ideal();
  std::vector<RMat> out = std::move(full);
  for (std::size_t t = 0; t < other_dim; ++t) out.push_back(other[t]);
  return out;
}

std::vector<CMat> sp2_in_su4() { return sp_basis_complex(2); }

std::vector<RMat> su4_in_so8() { return realify_all(su_basis(4)); }

std::vector<RMat> so4_diagonal_sp1() {
  // Conjugation operators x -> u x - x u. (The sums L_u + R_u do not close
  // under the bracket, since right multiplication reverses it; the
  // differences do, and they span the diagonal copy, which fixes the real
  // axis of the quaternions.)
  std::vector<RMat> out;
  for (std::size_t u = 1; u < 4; ++u) {
    RMat l = quat_left_mult_matrix(quat_unit(u));
    RMat r = quat_right_mult_matrix(quat_unit(u));
    out.push_back(l.sub(r));
  }
  return out;
}

}  // namespace rankone
