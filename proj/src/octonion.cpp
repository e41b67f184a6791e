#include "rankone/octonion.hpp"

#include <array>
#include <stdexcept>

namespace rankone {

namespace {

// Quaternion unit products: unit_mul[i][j] = signed index s with
// |s| = index of the product unit and sign(s) its sign; basis (1, i, j, k).
constexpr int kQuatTable[4][4] = {
    {1, 2, 3, 4},
    {2, -1, 4, -3},
    {3, -4, -1, 2},
    {4, 3, -2, -1},
};
// Entry t = kQuatTable[i][j]: e_i e_j = sign(t) * e_{|t|-1}.

// Octonion unit products for 1 <= i < j <= 7: e_i e_j = sign * e_k.
struct OctCell {
  int k;
  int sign;
};
constexpr OctCell kOctUpper[7][8] = {
    // row index i = 1..7; column index j = 1..7 (j > i used only)
    {{0, 0}, {0, 0}, {3, 1}, {2, -1}, {5, 1}, {4, -1}, {7, -1}, {6, 1}},   // i=1
    {{0, 0}, {0, 0}, {0, 0}, {1, 1}, {6, 1}, {7, 1}, {4, -1}, {5, -1}},    // i=2
    {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {7, 1}, {6, -1}, {5, 1}, {4, -1}},    // i=3
    {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 1}, {2, 1}, {3, 1}},      // i=4
    {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {3, -1}, {2, 1}},     // i=5
    {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, -1}},     // i=6
    {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}},      // i=7
};

std::vector<std::pair<std::size_t, std::size_t>> so7_pairs() {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j) pairs.emplace_back(i, j);
  return pairs;
}

}  // namespace

Vec quat_mul(const Vec& x, const Vec& y) {
  if (x.size() != 4 || y.size() != 4)
    throw std::invalid_argument("quat_mul: expected length-4 vectors");
  Vec r(4, Rat(0));
  for (std::size_t i = 0; i < 4; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (y[j] == 0) continue;
      int t = kQuatTable[i][j];
      std::size_t k = static_cast<std::size_t>(t < 0 ? -t : t) - 1;
      Rat prod = x[i] * y[j];
      if (t < 0)
        r[k] -= prod;
      else
        r[k] += prod;
    }
  }
  return r;
}

Vec quat_conj(const Vec& x) {
  if (x.size() != 4) throw std::invalid_argument("quat_conj: expected length 4");
  return {x[0], -x[1], -x[2], -x[3]};
}

RMat quat_left_mult_matrix(const Vec& z) {
  RMat m(4, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    Vec ej(4, Rat(0));
    ej[j] = 1;
    Vec col = quat_mul(z, ej);
    for (std::size_t i = 0; i < 4; ++i) m.at(i, j) = col[i];
  }
  return m;
}

RMat quat_right_mult_matrix(const Vec& z) {
  RMat m(4, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    Vec ej(4, Rat(0));
    ej[j] = 1;
    Vec col = quat_mul(ej, z);
    for (std::size_t i = 0; i < 4; ++i) m.at(i, j) = col[i];
  }
  return m;
}

QMat QMat::mul(const QMat& o) const {
  QMat r(rows(), o.cols());
  r.a = a.mul(o.a).sub(b.mul(o.b)).sub(c.mul(o.c)).sub(d.mul(o.d));
  r.b = a.mul(o.b).add(b.mul(o.a)).add(c.mul(o.d)).sub(d.mul(o.c));
  r.c = a.mul(o.c).sub(b.mul(o.d)).add(c.mul(o.a)).add(d.mul(o.b));
  r.d = a.mul(o.d).add(b.mul(o.c)).sub(c.mul(o.b)).add(d.mul(o.a));
  return r;
}

QMat QMat::add(const QMat& o) const {
  QMat r;
  r.a = a.add(o.a);
  r.b = b.add(o.b);
  r.c = c.add(o.c);
  r.d = d.add(o.d);
  return r;
}

QMat QMat::sub(const QMat& o) const {
  QMat r;
  r.a = a.sub(o.a);
  r.b = b.sub(o.b);
  r.c = c.sub(o.c);
  r.d = d.sub(o.d);
  return r;
}

QMat QMat::conj_transpose() const {
  QMat r;
  r.a = a.transpose();
  r.b = b.transpose().scale(Rat(-1));
  r.c = c.transpose().scale(Rat(-1));
  r.d = d.transpose().scale(Rat(-1));
  return r;
}

bool QMat::is_zero() const {
  return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero();
}

CMat qmat_to_complex(const QMat& m) {
  std::size_t r = m.rows(), c = m.cols();
  CMat out(2 * r, 2 * c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      CRat z(m.a.at(i, j), m.b.at(i, j));   // A + iB
      CRat w(m.c.at(i, j), -m.d.at(i, j));  // C - iD
      out.at(i, j) = z;
      out.at(i, c + j) = -w.conj();
      out.at(r + i, j) = w;
      out.at(r + i, c + j) = z.conj();
    }
  return out;
}

std::vector<CRat> quat_vec_to_complex(const Vec& a, const Vec& b, const Vec& c,
                                      const Vec& d) {
  std::size_t n = a.size();
  if (b.size() != n || c.size() != n || d.size() != n)
    throw std::invalid_argument("quat_vec_to_complex: size mismatch");
  std::vector<CRat> out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = CRat(a[i], b[i]);
    out[n + i] = CRat(c[i], -d[i]);
  }
  return out;
}

void oct_basis_mul(std::size_t i, std::size_t j, int& sign, std::size_t& k) {
  if (i > 7 || j > 7) throw std::invalid_argument("oct_basis_mul: bad index");
  if (i == 0) {
    sign = 1;
    k = j;
    return;
  }
  if (j == 0) {
    sign = 1;
    k = i;
    return;
  }
  if (i == j) {
    sign = -1;
    k = 0;
    return;
  }
  if (i < j) {
    const OctCell& cell = kOctUpper[i - 1][j];
    sign = cell.sign;
    k = static_cast<std::size_t>(cell.k);
  } else {
    const OctCell& cell = kOctUpper[j - 1][i];
    sign = -cell.sign;
    k = static_cast<std::size_t>(cell.k);
  }
}

Vec oct_mul(const Vec& x, const Vec& y) {
  if (x.size() != 8 || y.size() != 8)
    throw std::invalid_argument("oct_mul: expected length-8 vectors");
  Vec r(8, Rat(0));
  for (std::size_t i = 0; i < 8; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < 8; ++j) {
      if (y[j] == 0) continue;
      int sign;
      std::size_t k;
      oct_basis_mul(i, j, sign, k);
      Rat prod = x[i] * y[j];
      if (sign < 0)
        r[k] -= prod;
      else
        r[k] += prod;
    }
  }
  return r;
}

Vec oct_conj(const Vec& x) {
  if (x.size() != 8) throw std::invalid_argument("oct_conj: expected length 8");
  Vec r(8);
  r[0] = x[0];
  for (std::size_t i = 1; i < 8; ++i) r[i] = -x[i];
  return r;
}

RMat oct_left_mult_matrix(const Vec& z) {
  RMat m(8, 8);
  for (std::size_t j = 0; j < 8; ++j) {
    Vec ej(8, Rat(0));
    ej[j] = 1;
    Vec col = oct_mul(z, ej);
    for (std::size_t i = 0; i < 8; ++i) m.at(i, j) = col[i];
  }
  return m;
}

RMat oct_right_mult_matrix(const Vec& z) {
  RMat m(8, 8);
  for (std::size_t j = 0; j < 8; ++j) {
    Vec ej(8, Rat(0));
    ej[j] = 1;
    Vec col = oct_mul(ej, z);
    for (std::size_t i = 0; i < 8; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Vec oct_im_part(const Vec& x) {
  if (x.size() != 8) throw std::invalid_argument("oct_im_part: expected length 8");
  Vec r(7);
  for (std::size_t i = 0; i < 7; ++i) r[i] = x[i + 1];
  return r;
}

const std::vector<std::size_t>& oct_order_im_first() {
  static const std::vector<std::size_t> order = {1, 2, 3, 4, 5, 6, 7, 0};
  return order;
}

const std::vector<std::size_t>& oct_order_natural() {
  static const std::vector<std::size_t> order = {0, 1, 2, 3, 4, 5, 6, 7};
  return order;
}

RMat spin7_rep(const RMat& x7, const std::vector<std::size_t>& order) {
  if (x7.rows() != 7 || x7.cols() != 7)
    throw std::invalid_argument("spin7_rep: expected a 7x7 matrix");
  if (order.size() != 8) throw std::invalid_argument("spin7_rep: bad basis order");
  RMat nat(8, 8);
  Rat half(1, 2);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j) {
      // Coefficient of E_{j+1,i+1} - E_{i+1,j+1} in 1-based unit indexing.
      const Rat& coef = x7.at(j, i);
      if (coef == 0) continue;
      Vec zi(8, Rat(0)), zj(8, Rat(0));
      zi[i + 1] = 1;
      zj[j + 1] = 1;
      RMat ll = oct_left_mult_matrix(zi).mul(oct_left_mult_matrix(zj));
      Rat s = coef * half;
      nat = nat.add(ll.scale(s));
    }
  RMat out(8, 8);
  for (std::size_t p = 0; p < 8; ++p)
    for (std::size_t q = 0; q < 8; ++q) out.at(p, q) = nat.at(order[p], order[q]);
  return out;
}

std::vector<RMat> spin7_in_so8_basis() {
  std::vector<RMat> basis;
  for (const auto& [i, j] : so7_pairs()) {
    RMat x(7, 7);
    x.at(j, i) = 1;
    x.at(i, j) = -1;
    basis.push_back(spin7_rep(x, oct_order_natural()));
  }
  return basis;
}

std::vector<RMat> spin9_in_so16_basis() {
  // gamma_1..gamma_7: block [[0, L_{e_a}], [-L_{e_a}, 0]];
  // gamma_8: [[0, Id], [Id, 0]]; gamma_9: diag(Id, -Id).
  std::vector<RMat> gamma;
  for (std::size_t aIdx = 1; aIdx <= 8; ++aIdx) {
    std::size_t unit = aIdx == 8 ? 0 : aIdx;
    Vec z(8, Rat(0));
    z[unit] = 1;
    RMat lu = oct_left_mult_matrix(z);
    RMat lconj = oct_left_mult_matrix(oct_conj(z));
    RMat g(16, 16);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        g.at(i, 8 + j) = lu.at(i, j);
        g.at(8 + i, j) = lconj.at(i, j);
      }
    gamma.push_back(std::move(g));
  }
  RMat g9(16, 16);
  for (std::size_t i = 0; i < 8; ++i) {
    g9.at(i, i) = 1;
    g9.at(8 + i, 8 + i) = -1;
  }
  gamma.push_back(std::move(g9));

  std::vector<RMat> basis;
  Rat half(1, 2);
  for (std::size_t a = 0; a < 9; ++a)
    for (std::size_t b = a + 1; b < 9; ++b)
      basis.push_back(gamma[a].mul(gamma[b]).scale(half));
  return basis;
}

std::vector<RMat> g2_in_so7_basis() {
  // Kernel of X -> rho8(X) * 1 over the 21-dimensional coordinate space.
  auto pairs = so7_pairs();
  RMat sys(8, pairs.size());
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    RMat x(7, 7);
    x.at(pairs[c].second, pairs[c].first) = 1;
    x.at(pairs[c].first, pairs[c].second) = -1;
    RMat rep = spin7_rep(x, oct_order_natural());
    for (std::size_t r = 0; r < 8; ++r) sys.at(r, c) = rep.at(r, 0);
  }
  RMat ker = kernel(sys);
  std::vector<RMat> basis;
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    RMat x(7, 7);
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      const Rat& coef = ker.at(k, c);
      if (coef == 0) continue;
      x.at(pairs[c].second, pairs[c].first) = coef;
      Rat neg = -coef;
      x.at(pairs[c].first, pairs[c].second) = neg;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace rankone
