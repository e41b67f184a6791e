#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankone/ambient.hpp"
#include "rankone/octonion.hpp"

using namespace rankone;

namespace {

/// All structure constants of a graded piece stay inside a target space.
void check_bracket_into(const AmbientAlgebra& alg, const Subspace& x,
                        const Subspace& y, const Subspace& target) {
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < y.dim(); ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(target.contains(alg.bracket(x.basis_vector(i), y.basis_vector(j))));
    }
}

Subspace bracket_span(const AmbientAlgebra& alg, const Subspace& x,
                      const Subspace& y) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < y.dim(); ++j)
      gens.push_back(alg.bracket(x.basis_vector(i), y.basis_vector(j)));
  return Subspace::span(gens, alg.dim);
}

void check_common_structure(const AmbientAlgebra& alg) {
  // decomposition dimensions add up
  CHECK(alg.g_alpha.dim() + alg.g_2alpha.dim() == alg.n_nil.dim());
  CHECK(alg.a.dim() == 1);
  CHECK(alg.a.contains(alg.a0));

  // Cartan relations (the model has no global involution, hence no k/p)
  if (alg.family != Family::F4Model) {
    CHECK(alg.k.dim() + alg.p.dim() == alg.dim);
    check_bracket_into(alg, alg.k, alg.k, alg.k);
    check_bracket_into(alg, alg.k, alg.p, alg.p);
    check_bracket_into(alg, alg.p, alg.p, alg.k);
  }

  // restricted root relations
  check_bracket_into(alg, alg.m, alg.g_alpha, alg.g_alpha);
  check_bracket_into(alg, alg.m, alg.g_2alpha, alg.g_2alpha);
  check_bracket_into(alg, alg.g_alpha, alg.g_alpha, alg.g_2alpha);
  check_bracket_into(alg, alg.g_alpha, alg.g_2alpha, Subspace::zero(alg.dim));
  check_bracket_into(alg, alg.g_2alpha, alg.g_2alpha, Subspace::zero(alg.dim));
  check_bracket_into(alg, alg.m, alg.a, Subspace::zero(alg.dim));

  // ad(a0) weights
  for (std::size_t i = 0; i < alg.g_alpha.dim(); ++i) {
    Vec v = alg.g_alpha.basis_vector(i);
    CHECK(alg.bracket(alg.a0, v) == v);
  }
  for (std::size_t i = 0; i < alg.g_2alpha.dim(); ++i) {
    Vec v = alg.g_2alpha.basis_vector(i);
    CHECK(alg.bracket(alg.a0, v) == vec_scale(Rat(2), v));
  }

  // m is exactly the centralizer of a inside k (for the classical families
  // m sits inside k; in the model it is stored directly)
  if (alg.family != Family::F4Model) {
    CHECK(alg.k.contains(alg.m));
    CHECK(alg.p.contains(alg.a));
  }

  // the invariant form: gram_alg matches inner(), symmetric, positive diagonal
  for (std::size_t i = 0; i < alg.dim; ++i) {
    Vec bi(alg.dim, Rat(0));
    bi[i] = 1;
    Rat diag = alg.gram_alg.at(i, i);
    CHECK(diag > 0);
    for (std::size_t j = i; j < alg.dim; ++j) {
      Vec bj(alg.dim, Rat(0));
      bj[j] = 1;
      CHECK(alg.gram_alg.at(i, j) == alg.gram_alg.at(j, i));
      CHECK(alg.gram_alg.at(i, j) == alg.inner(bi, bj));
    }
  }

  // bracket antisymmetry on a spread of basis pairs
  for (std::size_t i = 0; i < alg.dim; i += 3)
    for (std::size_t j = i; j < alg.dim; j += 5) {
      Vec bi(alg.dim, Rat(0)), bj(alg.dim, Rat(0));
      bi[i] = 1;
      bj[j] = 1;
      CHECK(alg.bracket(bi, bj) ==
            vec_scale(Rat(-1), alg.bracket(bj, bi)));
    }

  // Jacobi identity on a deterministic spread of basis triples
  for (std::size_t i = 0; i < alg.dim; i += 4)
    for (std::size_t j = i + 1; j < alg.dim; j += 5)
      for (std::size_t t = j + 1; t < alg.dim; t += 6) {
        Vec x(alg.dim, Rat(0)), y(alg.dim, Rat(0)), z(alg.dim, Rat(0));
        x[i] = 1;
        y[j] = 1;
        z[t] = 1;
        Vec s = alg.bracket(x, alg.bracket(y, z));
        s = vec_add(s, alg.bracket(y, alg.bracket(z, x)));
        s = vec_add(s, alg.bracket(z, alg.bracket(x, y)));
        CAPTURE(i);
        CAPTURE(j);
        CAPTURE(t);
        CHECK(vec_is_zero(s));
      }
}

void check_theta(const AmbientAlgebra& alg) {
  for (std::size_t i = 0; i < alg.dim; ++i) {
    Vec bi(alg.dim, Rat(0));
    bi[i] = 1;
    CHECK(alg.theta(alg.theta(bi)) == bi);
  }
  // theta is an automorphism: theta[x, y] = [theta x, theta y] on a spread
  for (std::size_t i = 0; i < alg.dim; i += 2)
    for (std::size_t j = i + 1; j < alg.dim; j += 3) {
      Vec x(alg.dim, Rat(0)), y(alg.dim, Rat(0));
      x[i] = 1;
      y[j] = 1;
      CHECK(alg.theta(alg.bracket(x, y)) ==
            alg.bracket(alg.theta(x), alg.theta(y)));
    }
  // k and p are the eigenspaces
  for (std::size_t i = 0; i < alg.k.dim(); ++i) {
    Vec v = alg.k.basis_vector(i);
    CHECK(alg.theta(v) == v);
  }
  for (std::size_t i = 0; i < alg.p.dim(); ++i) {
    Vec v = alg.p.basis_vector(i);
    CHECK(alg.theta(v) == vec_scale(Rat(-1), v));
  }
}

}  // namespace

TEST_CASE("orthogonal family dimensions and structure") {
  for (std::size_t n = 3; n <= 6; ++n) {
    CAPTURE(n);
    AmbientAlgebra alg = construct_algebra(Family::SO, n);
    CHECK(alg.matrix_size == n + 1);
    CHECK(alg.dim == (n + 1) * n / 2);
    CHECK(alg.p.dim() == n);
    CHECK(alg.k.dim() == n * (n - 1) / 2);
    CHECK(alg.g_alpha.dim() == n - 1);
    CHECK(alg.g_2alpha.dim() == 0);
    CHECK(alg.m.dim() == (n - 1) * (n - 2) / 2);
    check_common_structure(alg);
    check_theta(alg);

    // p carries twice the standard form in its canonical basis
    RMat gp = alg.gram_of(alg.p);
    RMat expected = RMat::identity(n);
    expected = expected.scale(Rat(2));
    CHECK(gp == expected);

    // defining constraints at matrix level: X^t J + J X = 0 with
    // J = diag(1, ..., 1, -1)
    for (std::size_t i = 0; i < alg.dim; ++i) {
      Vec bi(alg.dim, Rat(0));
      bi[i] = 1;
      CMat x = alg.to_matrix(bi);
      CMat xt = x.transpose();
      for (std::size_t r = 0; r < alg.matrix_size; ++r)
        for (std::size_t c = 0; c < alg.matrix_size; ++c) {
          CHECK(x.at(r, c).im == 0);
          Rat jr = (r + 1 == alg.matrix_size) ? Rat(-1) : Rat(1);
          Rat jc = (c + 1 == alg.matrix_size) ? Rat(-1) : Rat(1);
          Rat lhs = xt.at(r, c).re * jc;
          Rat rhs = jr * x.at(r, c).re;
          CHECK(lhs + rhs == 0);
        }
    }
  }
  CHECK_THROWS_AS(construct_algebra(Family::SO, 2), std::invalid_argument);
}

TEST_CASE("unitary family dimensions and structure") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CAPTURE(n);
    AmbientAlgebra alg = construct_algebra(Family::SU, n);
    CHECK(alg.matrix_size == n + 1);
    CHECK(alg.dim == (n + 1) * (n + 1) - 1);
    CHECK(alg.p.dim() == 2 * n);
    CHECK(alg.g_alpha.dim() == 2 * (n - 1));
    CHECK(alg.g_2alpha.dim() == 1);
    CHECK(alg.m.dim() == (n - 1) * (n - 1));
    check_common_structure(alg);
    check_theta(alg);
    if (n >= 2) {
      CHECK(bracket_span(alg, alg.g_alpha, alg.g_alpha) == alg.g_2alpha);
    }

    // defining constraints: X^* J + J X = 0 and tr X = 0
    for (std::size_t i = 0; i < alg.dim; ++i) {
      Vec bi(alg.dim, Rat(0));
      bi[i] = 1;
      CMat x = alg.to_matrix(bi);
      CHECK(x.trace().is_zero());
      CMat xs = x.conj_transpose();
      for (std::size_t r = 0; r < alg.matrix_size; ++r)
        for (std::size_t c = 0; c < alg.matrix_size; ++c) {
          Rat jr = (r + 1 == alg.matrix_size) ? Rat(-1) : Rat(1);
          Rat jc = (c + 1 == alg.matrix_size) ? Rat(-1) : Rat(1);
          CRat lhs = xs.at(r, c) * CRat(jc);
          CRat rhs = CRat(jr) * x.at(r, c);
          CHECK((lhs + rhs).is_zero());
        }
    }
  }
  CHECK_THROWS_AS(construct_algebra(Family::SU, 0), std::invalid_argument);
}

TEST_CASE("symplectic family dimensions and structure") {
  for (std::size_t n = 2; n <= 3; ++n) {
    CAPTURE(n);
    AmbientAlgebra alg = construct_algebra(Family::SP, n);
    CHECK(alg.matrix_size == 2 * n + 2);
    CHECK(alg.dim == (n + 1) * (2 * n + 3));
    CHECK(alg.p.dim() == 4 * n);
    CHECK(alg.g_alpha.dim() == 4 * (n - 1));
    CHECK(alg.g_2alpha.dim() == 3);
    CHECK(alg.m.dim() == (n - 1) * (2 * n - 1) + 3);
    check_common_structure(alg);
    check_theta(alg);
    CHECK(bracket_span(alg, alg.g_alpha, alg.g_alpha) == alg.g_2alpha);

    // defining constraints: the quaternionic structure and the form. With
    // m = n + 1 and superblocks X = [[Z, U], [W, V]]: V = conj(Z),
    // U = -conj(W), and X^* J + J X = 0 for J = diag(eps) with eps = -1
    // exactly at positions n and m + n.
    std::size_t m = n + 1;
    for (std::size_t i = 0; i < alg.dim; ++i) {
      Vec bi(alg.dim, Rat(0));
      bi[i] = 1;
      CMat x = alg.to_matrix(bi);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
          CHECK(x.at(m + r, m + c) == x.at(r, c).conj());
          CHECK(x.at(r, m + c) == -(x.at(m + r, c).conj()));
        }
      CMat xs = x.conj_transpose();
      auto eps = [&](std::size_t idx) {
        return (idx == n || idx == m + n) ? Rat(-1) : Rat(1);
      };
      for (std::size_t r = 0; r < alg.matrix_size; ++r)
        for (std::size_t c = 0; c < alg.matrix_size; ++c) {
          CRat lhs = xs.at(r, c) * CRat(eps(c));
          CRat rhs = CRat(eps(r)) * x.at(r, c);
          CHECK((lhs + rhs).is_zero());
        }
    }
  }
  CHECK_THROWS_AS(construct_algebra(Family::SP, 1), std::invalid_argument);
}

TEST_CASE("ambient coordinate round trips and validation") {
  AmbientAlgebra alg = construct_algebra(Family::SU, 2);
  for (std::size_t i = 0; i < alg.dim; ++i) {
    Vec bi(alg.dim, Rat(0));
    bi[i] = 1;
    CHECK(alg.from_ambient(alg.to_ambient(bi)) == bi);
    CHECK(alg.from_matrix(alg.to_matrix(bi)) == bi);
  }
  // a vector violating the defining constraints is rejected
  Vec bad(alg.coord_dim, Rat(0));
  bad[0] = 1;  // real part of the (0,0) entry alone cannot occur
  CHECK_THROWS_AS(alg.from_ambient(bad), std::invalid_argument);
}

TEST_CASE("family names") {
  CHECK(family_name(Family::SO) == "so");
  CHECK(family_name(Family::SU) == "su");
  CHECK(family_name(Family::SP) == "sp");
  CHECK(family_name(Family::F4Model) == "f4-model");
}

TEST_CASE("exceptional model: grading and dimensions") {
  AmbientAlgebra alg = f4_model();
  CHECK(alg.dim == 37);
  CHECK(alg.m.dim() == 21);
  CHECK(alg.a.dim() == 1);
  CHECK(alg.g_alpha.dim() == 8);
  CHECK(alg.g_2alpha.dim() == 7);
  CHECK(alg.n_nil.dim() == 15);
  CHECK(alg.m.dim() + alg.a.dim() + alg.n_nil.dim() == alg.dim);
  check_common_structure(alg);
  CHECK(bracket_span(alg, alg.g_alpha, alg.g_alpha) == alg.g_2alpha);
  // no involution on the model
  Vec v(alg.dim, Rat(0));
  v[0] = 1;
  CHECK_THROWS_AS(alg.theta(v), std::logic_error);
  CHECK_THROWS_AS(alg.to_matrix(v), std::logic_error);
}

TEST_CASE("exceptional model: full Jacobi identity on basis triples") {
  AmbientAlgebra alg = f4_model();
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = i + 1; j < alg.dim; ++j)
      for (std::size_t t = j + 1; t < alg.dim; ++t) {
        Vec x(alg.dim, Rat(0)), y(alg.dim, Rat(0)), z(alg.dim, Rat(0));
        x[i] = 1;
        y[j] = 1;
        z[t] = 1;
        Vec s = alg.bracket(x, alg.bracket(y, z));
        s = vec_add(s, alg.bracket(y, alg.bracket(z, x)));
        s = vec_add(s, alg.bracket(z, alg.bracket(x, y)));
        if (!vec_is_zero(s)) {
          CAPTURE(i);
          CAPTURE(j);
          CAPTURE(t);
          REQUIRE(vec_is_zero(s));
        }
      }
}

TEST_CASE("exceptional model: spin action compatibility") {
  AmbientAlgebra alg = f4_model();
  // The action of the rotation part on the 8-dimensional layer is the spin
  // representation: bracketing the m-part generator against the layer must
  // match rho8 in the layer's basis order, at half the displayed scale of
  // the vector action on the 7-dimensional layer.
  const auto& order = oct_order_im_first();
  for (std::size_t g = 0; g < 21; ++g) {
    Vec mvec(alg.dim, Rat(0));
    mvec[g] = 1;
    RMat x7 = f4_m_part(mvec);
    RMat rho = spin7_rep(x7, order);
    for (std::size_t j = 0; j < 8; ++j) {
      Vec layer(alg.dim, Rat(0));
      layer[22 + j] = 1;
      Vec img = alg.bracket(mvec, layer);
      // expected: column j of rho placed in the layer coordinates
      for (std::size_t i = 0; i < 8; ++i) CHECK(img[22 + i] == rho.at(i, j));
      for (std::size_t i = 0; i < 22; ++i) CHECK(img[i] == 0);
      for (std::size_t i = 30; i < 37; ++i) CHECK(img[i] == 0);
    }
    // vector action on the 7-dimensional layer is the defining action
    for (std::size_t j = 0; j < 7; ++j) {
      Vec layer(alg.dim, Rat(0));
      layer[30 + j] = 1;
      Vec img = alg.bracket(mvec, layer);
      for (std::size_t i = 0; i < 7; ++i) CHECK(img[30 + i] == x7.at(i, j));
      for (std::size_t i = 0; i < 30; ++i) CHECK(img[i] == 0);
    }
  }
}

TEST_CASE("spin representation of so(7): Clifford relations") {
  // L_z L_w + L_w L_z = -2 <z, w> on imaginary units
  for (std::size_t i = 1; i <= 7; ++i)
    for (std::size_t j = 1; j <= 7; ++j) {
      Vec zi(8, Rat(0)), zj(8, Rat(0));
      zi[i] = 1;
      zj[j] = 1;
      RMat li = oct_left_mult_matrix(zi);
      RMat lj = oct_left_mult_matrix(zj);
      RMat anti = li.mul(lj).add(lj.mul(li));
      RMat expect = RMat::identity(8);
      expect = expect.scale(i == j ? Rat(-2) : Rat(0));
      CHECK(anti == expect);
    }
}

TEST_CASE("spin7 and spin9 bases are skew and bracket-closed") {
  auto check_family = [](const std::vector<RMat>& basis, std::size_t n) {
    std::vector<Vec> flat;
    for (const RMat& b : basis) {
      CHECK(b.transpose() == b.scale(Rat(-1)));
      Vec v(n * n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) v[r * n + c] = b.at(r, c);
      flat.push_back(std::move(v));
    }
    Subspace span = Subspace::span(flat, n * n);
    CHECK(span.dim() == basis.size());  // linearly independent
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        RMat comm = basis[i].mul(basis[j]).sub(basis[j].mul(basis[i]));
        Vec v(n * n);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) v[r * n + c] = comm.at(r, c);
        CHECK(span.contains(v));
      }
  };
  auto s7 = spin7_in_so8_basis();
  CHECK(s7.size() == 21);
  check_family(s7, 8);
  auto s9 = spin9_in_so16_basis();
  CHECK(s9.size() == 36);
  check_family(s9, 16);
}

TEST_CASE("octonion derivations: stabilizer of the unit") {
  auto g2 = g2_in_so7_basis();
  CHECK(g2.size() == 14);
  Vec one(8, Rat(0));
  one[0] = 1;
  for (const RMat& x : g2) {
    RMat rho = spin7_rep(x, oct_order_natural());
    CHECK(vec_is_zero(rho.mul_vec(one)));
  }
  // closed under bracket: the commutator kills the unit again and lies in
  // the span
  std::vector<Vec> flat;
  for (const RMat& x : g2) {
    Vec v(49);
    for (std::size_t r = 0; r < 7; ++r)
      for (std::size_t c = 0; c < 7; ++c) v[r * 7 + c] = x.at(r, c);
    flat.push_back(std::move(v));
  }
  Subspace span = Subspace::span(flat, 49);
  CHECK(span.dim() == 14);
  for (std::size_t i = 0; i < g2.size(); ++i)
    for (std::size_t j = i + 1; j < g2.size(); ++j) {
      RMat comm = g2[i].mul(g2[j]).sub(g2[j].mul(g2[i]));
      Vec v(49);
      for (std::size_t r = 0; r < 7; ++r)
        for (std::size_t c = 0; c < 7; ++c) v[r * 7 + c] = comm.at(r, c);
      CHECK(span.contains(v));
    }
}
