#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankone/linalg.hpp"
#include "rankone/octonion.hpp"
#include "rankone/subspace.hpp"

using namespace rankone;

TEST_CASE("rational parsing and printing") {
  CHECK(rat_str(rat_parse("2/4")) == "1/2");
  CHECK(rat_str(rat_parse("-6/4")) == "-3/2");
  CHECK(rat_str(rat_parse("0")) == "0");
  CHECK(rat_str(rat_parse("7")) == "7");
  CHECK(rat(1, -2) == rat(-1, 2));
  CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("1.5"), std::invalid_argument);
}

TEST_CASE("complex rational arithmetic") {
  CRat a(Rat(1), Rat(2));   // 1 + 2i
  CRat b(Rat(3), Rat(4));   // 3 + 4i
  CRat p = a * b;           // (3-8) + (4+6)i
  CHECK(p.re == -5);
  CHECK(p.im == 10);
  CHECK(a.conj().im == -2);
  CRat inv = a.inv();
  CRat unit = a * inv;
  CHECK(unit.re == 1);
  CHECK(unit.im == 0);
  CHECK_THROWS_AS(CRat().inv(), std::domain_error);
  // real fast path agrees with the general product
  CRat r1(Rat(7)), r2(rat(-2, 3));
  CHECK((r1 * r2).re == rat(-14, 3));
  CHECK((r1 * r2).im == 0);
}

TEST_CASE("rref, rank and kernel") {
  RMat m(3, 3);
  long vals[9] = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = vals[3 * i + j];
  CHECK(rank(m) == 2);
  RMat ker = kernel(m);
  REQUIRE(ker.rows() == 1);
  // kernel of the 1..9 matrix is spanned by (1, -2, 1)
  Vec k = ker.row(0);
  Rat scale = k[0];
  CHECK(k[1] == Rat(-2) * scale);
  CHECK(k[2] == scale);
  // m * kernel vector = 0
  Vec img = m.mul_vec(k);
  CHECK(vec_is_zero(img));

  RMat id = RMat::identity(4);
  CHECK(rank(id) == 4);
  CHECK(kernel(id).rows() == 0);
  RMat zero(2, 5);
  CHECK(rank(zero) == 0);
  CHECK(kernel(zero).rows() == 5);
}

TEST_CASE("matrix algebra") {
  RMat a(2, 2), b(2, 2);
  a.at(0, 0) = 1; a.at(0, 1) = 2; a.at(1, 0) = 3; a.at(1, 1) = 4;
  b.at(0, 0) = 0; b.at(0, 1) = 1; b.at(1, 0) = 1; b.at(1, 1) = 0;
  RMat ab = a.mul(b);
  CHECK(ab.at(0, 0) == 2);
  CHECK(ab.at(0, 1) == 1);
  CHECK(ab.at(1, 0) == 4);
  CHECK(ab.at(1, 1) == 3);
  CHECK(a.transpose().at(0, 1) == 3);
  CHECK(a.trace() == 5);
}

TEST_CASE("complex matrices, realification and coordinates") {
  CMat z(1, 1);
  z.at(0, 0) = CRat(Rat(0), Rat(1));  // i
  RMat r = realify(z);
  REQUIRE(r.rows() == 2);
  CHECK(r.at(0, 0) == 0);
  CHECK(r.at(0, 1) == -1);
  CHECK(r.at(1, 0) == 1);
  CHECK(r.at(1, 1) == 0);

  // realify is multiplicative
  CMat u(2, 2), v(2, 2);
  u.at(0, 0) = CRat(Rat(1), Rat(2)); u.at(0, 1) = CRat(Rat(0), Rat(-1));
  u.at(1, 0) = CRat(Rat(3), Rat(0)); u.at(1, 1) = CRat(rat(1, 2), Rat(5));
  v.at(0, 0) = CRat(Rat(2), Rat(1)); v.at(0, 1) = CRat(Rat(4), Rat(0));
  v.at(1, 0) = CRat(Rat(0), Rat(7)); v.at(1, 1) = CRat(Rat(-1), rat(2, 3));
  CHECK(realify(u.mul(v)) == realify(u).mul(realify(v)));

  // coordinate embedding round-trips and preserves the trace pairing
  Vec coords = cmat_to_coords(u);
  REQUIRE(coords.size() == 8);
  CHECK(coords_to_cmat(coords, 2, 2) == u);
  // Re tr(u^* v) equals the coordinate dot product
  Rat lhs = u.conj_transpose().mul(v).trace().re;
  Vec cv = cmat_to_coords(v);
  Rat dot = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    Rat prod = coords[i] * cv[i];
    dot += prod;
  }
  CHECK(lhs == dot);
}

TEST_CASE("subspace canonical form and membership") {
  Vec v1{Rat(1), Rat(2), Rat(3)};
  Vec v2{Rat(2), Rat(4), Rat(6)};
  Vec v3{Rat(0), Rat(1), Rat(1)};
  Subspace s = Subspace::span({v1, v2, v3}, 3);
  CHECK(s.dim() == 2);
  CHECK(s.contains(v1));
  CHECK(s.contains(vec_add(v1, v3)));
  CHECK(!s.contains(Vec{Rat(1), Rat(0), Rat(0)}));
  auto c = s.coords_of(vec_add(v1, vec_scale(Rat(2), v3)));
  REQUIRE(c.has_value());
  // reconstruct from coordinates
  Vec rec(3, Rat(0));
  for (std::size_t i = 0; i < s.dim(); ++i)
    rec = vec_add(rec, vec_scale((*c)[i], s.basis_vector(i)));
  CHECK(rec == vec_add(v1, vec_scale(Rat(2), v3)));
  // same span, different generators -> identical object
  Subspace s2 = Subspace::span({v3, vec_add(v1, v3), vec_sub(v1, v3)}, 3);
  CHECK(s == s2);
}

TEST_CASE("subspace sum, intersection, complements") {
  Vec e1{Rat(1), Rat(0), Rat(0)};
  Vec e2{Rat(0), Rat(1), Rat(0)};
  Vec e3{Rat(0), Rat(0), Rat(1)};
  Subspace u = Subspace::span({vec_add(e1, e2), e3}, 3);
  Subspace w = Subspace::span({e1, vec_add(e2, e3)}, 3);
  Subspace inter = u.intersect(w);
  REQUIRE(inter.dim() == 1);
  // x(1,1,0) + y(0,0,1) = a(1,0,0) + b(0,1,1) forces x = a = b = y
  CHECK(inter.contains(Vec{Rat(1), Rat(1), Rat(1)}));
  CHECK(u.sum(w).dim() == 3);

  Subspace line = Subspace::span({vec_add(e1, e2)}, 3);
  Subspace comp = line.ortho_complement();
  CHECK(comp.dim() == 2);
  CHECK(comp.contains(vec_sub(e1, e2)));
  CHECK(comp.contains(e3));

  // weighted form: gram = diag(1, 2, 1)
  RMat gram = RMat::identity(3);
  gram.at(1, 1) = 2;
  Subspace wcomp = line.ortho_complement(gram);
  CHECK(wcomp.dim() == 2);
  CHECK(wcomp.contains(Vec{Rat(2), Rat(-1), Rat(0)}));

  Subspace within = Subspace::span({e1, e2}, 3);
  Subspace rel = ortho_complement_in(Subspace::span({e1}, 3), within);
  CHECK(rel.dim() == 1);
  CHECK(rel.contains(e2));
  CHECK_THROWS_AS(ortho_complement_in(Subspace::span({e3}, 3), within),
                  std::invalid_argument);
}

TEST_CASE("quaternion multiplication table") {
  // basis order (1, i, j, k)
  Vec qi{Rat(0), Rat(1), Rat(0), Rat(0)};
  Vec qj{Rat(0), Rat(0), Rat(1), Rat(0)};
  Vec qk{Rat(0), Rat(0), Rat(0), Rat(1)};
  CHECK(quat_mul(qi, qj) == qk);
  CHECK(quat_mul(qj, qi) == vec_scale(Rat(-1), qk));
  CHECK(quat_mul(qi, qi) == Vec{Rat(-1), Rat(0), Rat(0), Rat(0)});
  CHECK(quat_mul(qj, qk) == qi);
  CHECK(quat_mul(qk, qi) == qj);
  // left/right multiplication operators realize the product
  Vec x{Rat(1), Rat(2), Rat(-1), rat(1, 2)};
  Vec y{Rat(0), Rat(1), Rat(3), Rat(-2)};
  CHECK(quat_left_mult_matrix(x).mul_vec(y) == quat_mul(x, y));
  CHECK(quat_right_mult_matrix(y).mul_vec(x) == quat_mul(x, y));
  // conjugation reverses products
  CHECK(quat_conj(quat_mul(x, y)) == quat_mul(quat_conj(y), quat_conj(x)));
}

TEST_CASE("quaternionic matrices and the complex embedding") {
  auto rnd = [](long s) {
    RMat m(2, 2);
    m.at(0, 0) = s; m.at(0, 1) = rat(s, 3); m.at(1, 0) = -s + 1; m.at(1, 1) = 2;
    return m;
  };
  QMat m1{rnd(1), rnd(2), rnd(3), rnd(4)};
  QMat m2{rnd(-2), rnd(5), rnd(0), rnd(1)};
  // the complex embedding is an algebra homomorphism
  CHECK(qmat_to_complex(m1.mul(m2)) ==
        qmat_to_complex(m1).mul(qmat_to_complex(m2)));
  // and respects conjugate transpose
  CHECK(qmat_to_complex(m1.conj_transpose()) ==
        qmat_to_complex(m1).conj_transpose());
  // the unit j maps to the standard symplectic rotation
  QMat j{RMat(1, 1), RMat(1, 1), RMat::identity(1), RMat(1, 1)};
  CMat jc = qmat_to_complex(j);
  CHECK(jc.at(0, 0).is_zero());
  CHECK(jc.at(0, 1) == CRat(Rat(-1)));
  CHECK(jc.at(1, 0) == CRat(Rat(1)));
  CHECK(jc.at(1, 1).is_zero());
}

TEST_CASE("octonion multiplication table") {
  auto unit = [](std::size_t i) {
    Vec v(8, Rat(0));
    v[i] = 1;
    return v;
  };
  // natural order: e0 = 1, e1..e7 imaginary units
  CHECK(oct_mul(unit(1), unit(2)) == unit(3));
  CHECK(oct_mul(unit(2), unit(1)) == vec_scale(Rat(-1), unit(3)));
  CHECK(oct_mul(unit(1), unit(4)) == unit(5));
  CHECK(oct_mul(unit(2), unit(4)) == unit(6));
  CHECK(oct_mul(unit(3), unit(4)) == unit(7));
  CHECK(oct_mul(unit(6), unit(7)) == vec_scale(Rat(-1), unit(1)));
  CHECK(oct_mul(unit(1), unit(7)) == unit(6));
  for (std::size_t i = 1; i <= 7; ++i)
    CHECK(oct_mul(unit(i), unit(i)) == vec_scale(Rat(-1), unit(0)));
  // non-associativity witness: (e1 e2) e4 = e7 but e1 (e2 e4) = -e7
  CHECK(oct_mul(oct_mul(unit(1), unit(2)), unit(4)) == unit(7));
  CHECK(oct_mul(unit(1), oct_mul(unit(2), unit(4))) ==
        vec_scale(Rat(-1), unit(7)));
  // multiplicativity of the norm on a dense sample
  Vec x(8), y(8);
  for (std::size_t i = 0; i < 8; ++i) {
    x[i] = rat(static_cast<long>(i) - 3, 2);
    y[i] = rat(2 * static_cast<long>(i) - 7, 3);
  }
  auto norm = [](const Vec& v) {
    Rat s = 0;
    for (const Rat& c : v) {
      Rat sq = c * c;
      s += sq;
    }
    return s;
  };
  Rat prod_norm = norm(oct_mul(x, y));
  Rat lhs = norm(x) * norm(y);
  CHECK(prod_norm == lhs);
  // conjugation reverses products
  CHECK(oct_conj(oct_mul(x, y)) == oct_mul(oct_conj(y), oct_conj(x)));
  // left/right multiplication operators realize the product
  CHECK(oct_left_mult_matrix(x).mul_vec(y) == oct_mul(x, y));
  CHECK(oct_right_mult_matrix(y).mul_vec(x) == oct_mul(x, y));
}
