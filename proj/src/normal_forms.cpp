#include "rankone/normal_forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rankone {

namespace {

CRat cr(long re, long im = 0) { return CRat(Rat(re), Rat(im)); }

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument("make_normal_form: " + what);
}

/// Unit complex column of length len with value v at slot t.
std::vector<CRat> unit_col(std::size_t len, std::size_t t, const CRat& v) {
  std::vector<CRat> z(len, cr(0));
  z.at(t) = v;
  return z;
}

bool xi_is_unit(const std::array<Rat, 3>& xi) {
  return xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2] == 1;
}

/// The four generators (1, i, j, k directions) of one quaternion slot, as
/// column pairs (z, w): 1 -> (e_t, 0), i -> (i e_t, 0), j -> (0, e_t),
/// k -> (0, -i e_t).
struct SlotGens {
  std::vector<CRat> z, w;
};
SlotGens slot_gen(std::size_t len, std::size_t t, std::size_t which) {
  std::vector<CRat> zero(len, cr(0));
  switch (which) {
    case 0:
      return {unit_col(len, t, cr(1)), zero};
    case 1:
      return {unit_col(len, t, cr(0, 1)), zero};
    case 2:
      return {zero, unit_col(len, t, cr(1))};
    default:
      return {zero, unit_col(len, t, cr(0, -1))};
  }
}

/// Column pair of the imaginary quaternion xi = b i + c j + d k at slot t:
/// (z, w) = (i b, c - i d) placed at slot t.
SlotGens xi_gen(std::size_t len, std::size_t t, const std::array<Rat, 3>& xi) {
  std::vector<CRat> zero(len, cr(0));
  SlotGens g{zero, zero};
  g.z.at(t) = CRat(Rat(0), xi[0]);
  g.w.at(t) = CRat(xi[1], -xi[2]);
  return g;
}

/// Quaternion coefficients (a, b, c, d) from a column pair value (z, w) at
/// one slot, via q = (a + i b) + j (c - i d) reading w = c - i d.
std::array<Rat, 4> quat_of_pair(const CRat& z, const CRat& w) {
  return {z.re, z.im, w.re, -w.im};
}

/// Canonical primitive representative of the line through a nonzero
/// rational triple: integer entries, gcd one, first nonzero positive.
std::array<Rat, 3> canonical_line(const std::array<Rat, 3>& v) {
  mpz_class lcm_den(1);
  for (const Rat& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                                 x.get_den().get_mpz_t());
  std::array<mpz_class, 3> ints;
  for (std::size_t t = 0; t < 3; ++t) {
    Rat scaled = v[t] * Rat(lcm_den);
    ints[t] = scaled.get_num();
  }
  mpz_class g(0);
  for (const auto& z : ints) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  if (g == 0) throw std::invalid_argument("canonical_line: zero vector");
  int sign = 1;
  for (const auto& z : ints)
    if (z != 0) {
      sign = (z < 0) ? -1 : 1;
      break;
    }
  std::array<Rat, 3> out;
  for (std::size_t t = 0; t < 3; ++t) out[t] = Rat(ints[t]) * Rat(sign) / Rat(g);
  return out;
}

}  // namespace

CMat p_element(const AmbientAlgebra& alg, const std::vector<CRat>& z,
               const std::vector<CRat>& w) {
  std::size_t n = alg.n;
  if (alg.family == Family::SO || alg.family == Family::SU) {
    if (z.size() != n || !w.empty())
      throw std::invalid_argument("p_element: bad column length");
    CMat x(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      x.at(i, n) = z[i];
      x.at(n, i) = z[i].conj();
      if (alg.family == Family::SO && z[i].im != 0)
        throw std::invalid_argument("p_element: orthogonal family needs real z");
    }
    return x;
  }
  if (alg.family != Family::SP)
    throw std::invalid_argument("p_element: unsupported family");
  if (z.size() != n || w.size() != n)
    throw std::invalid_argument("p_element: bad column length");
  std::size_t m = n + 1, s = 2 * n + 2;
  CMat x(s, s);
  for (std::size_t i = 0; i < n; ++i) {
    x.at(i, n) = z[i];
    x.at(n, i) = z[i].conj();
    x.at(m + i, n) = w[i];
    x.at(n, m + i) = w[i].conj();
    x.at(i, m + n) = -w[i].conj();
    x.at(m + n, i) = -w[i];
    x.at(m + i, m + n) = z[i].conj();
    x.at(m + n, m + i) = z[i];
  }
  return x;
}

CMat galpha_element(const AmbientAlgebra& alg, const std::vector<CRat>& v,
                    const std::vector<CRat>& w) {
  std::size_t n = alg.n;
  if (alg.family == Family::SO || alg.family == Family::SU) {
    if (v.size() != n - 1 || !w.empty())
      throw std::invalid_argument("galpha_element: bad column length");
    CMat x(n + 1, n + 1);
    for (std::size_t t = 0; t + 1 < n; ++t) {
      if (alg.family == Family::SO && v[t].im != 0)
        throw std::invalid_argument(
            "galpha_element: orthogonal family needs real v");
      x.at(t, n - 1) = v[t];
      x.at(t, n) = -v[t];
      x.at(n - 1, t) = -v[t].conj();
      x.at(n, t) = -v[t].conj();
    }
    return x;
  }
  if (alg.family != Family::SP)
    throw std::invalid_argument("galpha_element: unsupported family");
  if (v.size() != n - 1 || w.size() != n - 1)
    throw std::invalid_argument("galpha_element: bad column length");
  std::size_t m = n + 1, s = 2 * n + 2;
  CMat x(s, s);
  for (std::size_t t = 0; t + 1 < n; ++t) {
    const CRat& zp = v[t];
    const CRat& wp = w[t];
    std::size_t r = t + 1;  // ambient coordinate of slot t
    // A block: first row conj(z'), first column -z'.
    x.at(0, r) = zp.conj();
    x.at(r, 0) = -zp;
    // conj(A) block.
    x.at(m + 0, m + r) = zp;
    x.at(m + r, m + 0) = -zp.conj();
    // B block (symmetric): first row and column -w'.
    x.at(m + 0, r) = -wp;
    x.at(m + r, 0) = -wp;
    // -conj(B) block.
    x.at(0, m + r) = wp.conj();
    x.at(r, m + 0) = wp.conj();
    // z column (z = (0, z')) and its ties.
    x.at(r, n) = zp;
    x.at(n, r) = zp.conj();
    x.at(m + r, m + n) = zp.conj();
    x.at(m + n, m + r) = zp;
    // w column (w = (0, w')) and its ties.
    x.at(m + r, n) = wp;
    x.at(n, m + r) = wp.conj();
    x.at(r, m + n) = -wp.conj();
    x.at(m + n, r) = -wp;
  }
  return x;
}

std::size_t normal_form_dim(const AmbientAlgebra& alg,
                            const NormalFormSpec& spec) {
  std::size_t n = alg.n;
  switch (spec.kind) {
    case NormalFormKind::QK:
      return n - spec.k;
    case NormalFormKind::QKL:
      return spec.l + 2 * (n - spec.k - spec.l);
    case NormalFormKind::QKLMPXi:
      return spec.l + 2 * spec.m + 3 * spec.p +
             4 * (n - spec.k - spec.l - spec.m - spec.p);
    case NormalFormKind::NK:
      return (n - 1) - spec.k;
    case NormalFormKind::NKL:
      return spec.l + 2 * ((n - 1) - spec.k - spec.l) + 1;
    case NormalFormKind::NKLMPXi:
      return spec.l + 2 * spec.m + 3 * spec.p +
             4 * ((n - 1) - spec.k - spec.l - spec.m - spec.p) + 3;
    case NormalFormKind::NCF4:
      return 11;
  }
  throw std::invalid_argument("normal_form_dim: bad kind");
}

Subspace make_normal_form(const AmbientAlgebra& alg,
                          const NormalFormSpec& spec) {
  std::size_t n = alg.n;
  const std::size_t k = spec.k, l = spec.l, m = spec.m, p = spec.p;
  std::vector<Vec> gens;

  auto add = [&](const CMat& x) { gens.push_back(alg.from_matrix(x)); };

  switch (spec.kind) {
    case NormalFormKind::QK: {
      require(alg.family == Family::SO, "QK needs the orthogonal family");
      require(l == 0 && m == 0 && p == 0 && spec.xi.empty(),
              "QK takes only k");
      require(k <= n, "k exceeds n");
      for (std::size_t t = k; t < n; ++t)
        add(p_element(alg, unit_col(n, t, cr(1))));
      break;
    }
    case NormalFormKind::QKL: {
      require(alg.family == Family::SU, "QKL needs the unitary family");
      require(m == 0 && p == 0 && spec.xi.empty(), "QKL takes only k, l");
      require(k + l <= n, "k + l exceeds n");
      for (std::size_t t = k; t < n; ++t) {
        add(p_element(alg, unit_col(n, t, cr(1))));
        if (t >= k + l) add(p_element(alg, unit_col(n, t, cr(0, 1))));
      }
      break;
    }
    case NormalFormKind::QKLMPXi: {
      require(alg.family == Family::SP, "QKLMPXi needs the quaternion family");
      require(k + l + m + p <= n, "k + l + m + p exceeds n");
      require(spec.xi.size() == m, "xi list must have length m");
      for (const auto& xi : spec.xi) require(xi_is_unit(xi), "xi must be unit");
      for (std::size_t t = k; t < n; ++t) {
        SlotGens one = slot_gen(n, t, 0);
        add(p_element(alg, one.z, one.w));
        if (t < k + l) continue;
        if (t < k + l + m) {
          SlotGens g = xi_gen(n, t, spec.xi[t - k - l]);
          add(p_element(alg, g.z, g.w));
          continue;
        }
        std::size_t extra = (t < k + l + m + p) ? 3 : 4;
        for (std::size_t which = 1; which < extra; ++which) {
          SlotGens g = slot_gen(n, t, which);
          add(p_element(alg, g.z, g.w));
        }
      }
      break;
    }
    case NormalFormKind::NK: {
      require(alg.family == Family::SO, "NK needs the orthogonal family");
      require(l == 0 && m == 0 && p == 0 && spec.xi.empty(),
              "NK takes only k");
      require(k + 1 <= n, "k exceeds n - 1");
      for (std::size_t t = k; t + 1 < n; ++t)
        add(galpha_element(alg, unit_col(n - 1, t, cr(1))));
      break;
    }
    case NormalFormKind::NKL: {
      require(alg.family == Family::SU, "NKL needs the unitary family");
      require(m == 0 && p == 0 && spec.xi.empty(), "NKL takes only k, l");
      require(k + l + 1 <= n, "k + l exceeds n - 1");
      for (std::size_t t = k; t + 1 < n; ++t) {
        add(galpha_element(alg, unit_col(n - 1, t, cr(1))));
        if (t >= k + l) add(galpha_element(alg, unit_col(n - 1, t, cr(0, 1))));
      }
      break;
    }
    case NormalFormKind::NKLMPXi: {
      require(alg.family == Family::SP, "NKLMPXi needs the quaternion family");
      require(k + l + m + p + 1 <= n, "k + l + m + p exceeds n - 1");
      require(spec.xi.size() == m, "xi list must have length m");
      for (const auto& xi : spec.xi) require(xi_is_unit(xi), "xi must be unit");
      for (std::size_t t = k; t + 1 < n; ++t) {
        SlotGens one = slot_gen(n - 1, t, 0);
        add(galpha_element(alg, one.z, one.w));
        if (t < k + l) continue;
        if (t < k + l + m) {
          SlotGens g = xi_gen(n - 1, t, spec.xi[t - k - l]);
          add(galpha_element(alg, g.z, g.w));
          continue;
        }
        std::size_t extra = (t < k + l + m + p) ? 3 : 4;
        for (std::size_t which = 1; which < extra; ++which) {
          SlotGens g = slot_gen(n - 1, t, which);
          add(galpha_element(alg, g.z, g.w));
        }
      }
      break;
    }
    case NormalFormKind::NCF4: {
      require(alg.family == Family::F4Model, "NCF4 needs the exceptional model");
      require(k == 0 && l == 0 && m == 0 && p == 0 && spec.xi.empty(),
              "NCF4 takes only c");
      RMat zero7(7, 7);
      Vec w0(7, Rat(0));
      for (std::size_t idx : {std::size_t(0), std::size_t(1), std::size_t(2)}) {
        Vec v8(8, Rat(0));
        v8[idx] = 1;
        gens.push_back(f4_element(zero7, Rat(0), v8, w0));
      }
      Vec slope(8, Rat(0));
      slope[3] = spec.c;
      slope[4] = 1;
      gens.push_back(f4_element(zero7, Rat(0), slope, w0));
      break;
    }
  }

  Subspace result = alg.span(gens);
  bool is_q = spec.kind == NormalFormKind::QK || spec.kind == NormalFormKind::QKL ||
              spec.kind == NormalFormKind::QKLMPXi;
  if (is_q) {
    require(alg.p.contains(result), "form escapes the symmetric-pair space");
  } else {
    require(alg.g_alpha.contains(result), "form escapes the first root space");
    result = result.sum(alg.g_2alpha);
  }
  require(result.dim() == normal_form_dim(alg, spec), "dimension mismatch");
  return result;
}

std::pair<std::size_t, std::size_t> detect_unitary_invariants(
    const AmbientAlgebra& alg, const Subspace& v) {
  if (alg.family != Family::SU)
    throw std::invalid_argument("detect_unitary_invariants: unitary family only");
  if (!alg.p.contains(v))
    throw std::invalid_argument("detect_unitary_invariants: not inside p");
  std::size_t n = alg.n;
  std::vector<Vec> jv;
  for (std::size_t r = 0; r < v.dim(); ++r) {
    CMat x = alg.to_matrix(v.basis_vector(r));
    std::vector<CRat> iz(n);
    for (std::size_t t = 0; t < n; ++t)
      iz[t] = CRat(Rat(0), Rat(1)) * x.at(t, n);
    jv.push_back(alg.from_matrix(p_element(alg, iz)));
  }
  Subspace inter = v.intersect(Subspace::span(jv, alg.dim));
  return {v.dim(), inter.dim() / 2};
}

SlotProfile detect_quaternion_profile(const AmbientAlgebra& alg,
                                      const Subspace& v, bool nilpotent) {
  if (alg.family != Family::SP)
    throw std::invalid_argument(
        "detect_quaternion_profile: quaternion family only");
  std::size_t n = alg.n;
  std::size_t slots = nilpotent ? n - 1 : n;
  Subspace va = v;
  if (nilpotent) {
    if (!v.intersect(alg.g_2alpha).contains(alg.g_2alpha))
      throw std::invalid_argument(
          "detect_quaternion_profile: form must contain the second root space");
    va = v.intersect(alg.g_alpha);
    if (va.dim() + alg.g_2alpha.dim() != v.dim())
      throw std::invalid_argument(
          "detect_quaternion_profile: form does not split along the grading");
  } else if (!alg.p.contains(v)) {
    throw std::invalid_argument("detect_quaternion_profile: not inside p");
  }

  auto gen_coords = [&](std::size_t t, std::size_t which) {
    SlotGens g = slot_gen(slots, t, which);
    CMat x = nilpotent ? galpha_element(alg, g.z, g.w)
                       : p_element(alg, g.z, g.w);
    return alg.from_matrix(x);
  };
  // Extract the quaternion value at slot t from an element of the plane.
  std::size_t mcol = n + 1;
  auto quat_at = [&](const Vec& coords, std::size_t t) {
    CMat x = alg.to_matrix(coords);
    std::size_t row = nilpotent ? t + 1 : t;
    return quat_of_pair(x.at(row, n), x.at(mcol + row, n));
  };

  SlotProfile out;
  std::size_t total = 0;
  for (std::size_t t = 0; t < slots; ++t) {
    std::vector<Vec> plane;
    for (std::size_t which = 0; which < 4; ++which)
      plane.push_back(gen_coords(t, which));
    Subspace pt = Subspace::span(plane, alg.dim);
    Subspace wt = va.intersect(pt);
    total += wt.dim();
    switch (wt.dim()) {
      case 0:
        ++out.k;
        break;
      case 1: {
        auto q = quat_at(wt.basis_vector(0), t);
        if (q[1] != 0 || q[2] != 0 || q[3] != 0)
          throw std::invalid_argument(
              "detect_quaternion_profile: one-dimensional slot is not real");
        ++out.l;
        break;
      }
      case 2: {
        if (!wt.contains(gen_coords(t, 0)))
          throw std::invalid_argument(
              "detect_quaternion_profile: plane slot misses the real axis");
        // Eliminate the real component to isolate the imaginary line.
        auto q0 = quat_at(wt.basis_vector(0), t);
        auto q1 = quat_at(wt.basis_vector(1), t);
        std::array<Rat, 3> line;
        if (q0[0] == 0) {
          line = {q0[1], q0[2], q0[3]};
        } else if (q1[0] == 0) {
          line = {q1[1], q1[2], q1[3]};
        } else {
          Rat s = q1[0] / q0[0];
          line = {q1[1] - s * q0[1], q1[2] - s * q0[2], q1[3] - s * q0[3]};
        }
        out.xi_lines.push_back(canonical_line(line));
        ++out.m;
        break;
      }
      case 3: {
        for (std::size_t which = 0; which < 3; ++which)
          if (!wt.contains(gen_coords(t, which)))
            throw std::invalid_argument(
                "detect_quaternion_profile: three-dimensional slot has an "
                "unexpected shape");
        ++out.p;
        break;
      }
      default:
        ++out.h;
        break;
    }
  }
  if (total != va.dim())
    throw std::invalid_argument(
        "detect_quaternion_profile: subspace is not slot-aligned");
  std::sort(out.xi_lines.begin(), out.xi_lines.end());
  return out;
}

}  // namespace rankone
