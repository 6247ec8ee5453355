#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

// Exact coefficient arithmetic: rationals, the cyclotomic field Q(zeta_8)
// (which contains sqrt(2) = z - z^3 and i = z^2), and polynomials in the
// deformation parameters u, v over that field.

namespace exactnum {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Element of Q(zeta_8), stored as a0 + a1*z + a2*z^2 + a3*z^3 with z^4 = -1.
class Cyc8 {
 public:
  Cyc8() : a_{} {}
  Cyc8(const Rational& r) : a_{} { a_[0] = r; }
  Cyc8(long n) : a_{} { a_[0] = n; }
  static Cyc8 zeta(int k);            // z^k, any integer k
  static Cyc8 sqrt2() { return zeta(1) - zeta(3); }
  static Cyc8 i() { return zeta(2); }

  const Rational& coeff(int j) const { return a_[j]; }
  Rational& coeff(int j) { return a_[j]; }

  bool is_zero() const;
  bool is_rational() const { return a_[1] == 0 && a_[2] == 0 && a_[3] == 0; }
  const Rational& rational_part() const { return a_[0]; }

  Cyc8 operator-() const;
  Cyc8 operator+(const Cyc8& o) const;
  Cyc8 operator-(const Cyc8& o) const;
  Cyc8 operator*(const Cyc8& o) const;
  Cyc8& operator+=(const Cyc8& o) { return *this = *this + o; }
  Cyc8& operator-=(const Cyc8& o) { return *this = *this - o; }
  Cyc8& operator*=(const Cyc8& o) { return *this = *this * o; }
  bool operator==(const Cyc8& o) const { return a_ == o.a_; }
  bool operator!=(const Cyc8& o) const { return a_ != o.a_; }
  bool operator<(const Cyc8& o) const;  // arbitrary total order, for maps

  // Galois conjugate z -> z^k, k odd.
  Cyc8 galois(int k) const;
  // Multiplicative inverse via the norm over Q. Throws on zero.
  Cyc8 inverse() const;
  Cyc8 operator/(const Cyc8& o) const { return *this * o.inverse(); }

  std::string str() const;

 private:
  std::array<Rational, 4> a_;
};

// Polynomial in the deformation parameters u, v with Cyc8 coefficients.
// Keyed by (deg_u, deg_v); zero coefficients are never stored.
class ParamPoly {
 public:
  ParamPoly() = default;
  ParamPoly(const Cyc8& c) { set(0, 0, c); }
  ParamPoly(long n) { set(0, 0, Cyc8(n)); }
  static ParamPoly u() { ParamPoly p; p.set(1, 0, Cyc8(1)); return p; }
  static ParamPoly v() { ParamPoly p; p.set(0, 1, Cyc8(1)); return p; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Cyc8 constant_part() const;
  void set(int du, int dv, const Cyc8& c);
  const std::map<std::pair<int, int>, Cyc8>& terms() const { return terms_; }

  ParamPoly operator-() const;
  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
  ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
  bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const ParamPoly& o) const { return terms_ != o.terms_; }

  Cyc8 eval(const Cyc8& u0, const Cyc8& v0) const;
  ParamPoly substitute(const ParamPoly& u0, const ParamPoly& v0) const;

  std::string str() const;

 private:
  std::map<std::pair<int, int>, Cyc8> terms_;
};

std::string rational_str(const Rational& r);

}  // namespace exactnum
