#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rankone {

/// Exact rational scalar. mpq_class keeps values canonical (gcd 1, positive
/// denominator) through arithmetic; only raw string input needs an explicit
/// canonicalize step, which rat_parse performs.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Rejects anything
/// mpq_set_str would not accept in base 10.
inline Rat rat_parse(const std::string& text) {
  Rat r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational: '" + text + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

/// Lowest-terms decimal string; integers render without "/1".
inline std::string rat_str(const Rat& r) { return r.get_str(); }

/// Complex number with exact rational real and imaginary parts.
struct CRat {
  Rat re;
  Rat im;

  CRat() : re(0), im(0) {}
  CRat(Rat r) : re(std::move(r)), im(0) {}
  CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  CRat(long r) : re(r), im(0) {}
  CRat(long r, long i) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }
  CRat conj() const { return CRat(re, Rat(-im)); }

  CRat operator-() const { return CRat(Rat(-re), Rat(-im)); }
  CRat& operator+=(const CRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  CRat& operator-=(const CRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend CRat operator+(CRat a, const CRat& b) { return a += b; }
  friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
  friend CRat operator*(const CRat& a, const CRat& b) {
    if (a.im == 0 && b.im == 0) return CRat(Rat(a.re * b.re));
    return CRat(Rat(a.re * b.re - a.im * b.im), Rat(a.re * b.im + a.im * b.re));
  }
  friend bool operator==(const CRat& a, const CRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }

  /// Multiplicative inverse; throws on zero.
  CRat inv() const {
    Rat n = re * re + im * im;
    if (n == 0) throw std::domain_error("inverse of complex zero");
    return CRat(Rat(re / n), Rat(-im / n));
  }
};

inline CRat crat(long re, long im = 0) { return CRat(re, im); }

}  // namespace rankone
