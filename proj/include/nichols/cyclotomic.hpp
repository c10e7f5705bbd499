#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nichols/multipoly.hpp"
#include "nichols/rational.hpp"

namespace nichols {

// Euler's totient.
unsigned long euler_phi(unsigned long n);

// Coefficients of the N-th cyclotomic polynomial Phi_N, ascending degree,
// computed by exact division of x^N - 1 by the product of lower Phi_d.
// Monic with integer coefficients (stored as Rational).
std::vector<Rational> cyclotomic_polynomial(unsigned long N);

// An element of Q(zeta_N) = Q[x]/(Phi_N), stored as a coefficient vector of
// length phi(N) (reduced representative).  Arithmetic between different
// conductors promotes both operands to the lcm.
class CyclotomicNumber {
public:
  // Zero in Q (conductor 1).
  CyclotomicNumber();

  static CyclotomicNumber zero(unsigned long conductor = 1);
  static CyclotomicNumber one(unsigned long conductor = 1);
  static CyclotomicNumber from_rational(const Rational& q, unsigned long conductor = 1);
  // zeta_N^k, reduced mod Phi_N.
  static CyclotomicNumber zeta(unsigned long N, long k = 1);

  unsigned long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  // True when the element lies in Q (only the constant coordinate may be nonzero).
  bool is_rational() const;
  Rational rational_value() const;  // throws std::domain_error if not rational

  // Re-express in Q(zeta_M); requires conductor() | M.
  CyclotomicNumber to_conductor(unsigned long M) const;

  // The same value at the smallest divisor M of the conductor whose field
  // contains it (found by solving for coordinates over the Q(zeta_M) basis).
  // Distinct literals for one value, e.g. "zeta(2)" and "-1", agree here.
  CyclotomicNumber minimal_conductor_form() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  friend CyclotomicNumber operator+(CyclotomicNumber x, const CyclotomicNumber& y) { return x += y; }
  friend CyclotomicNumber operator-(CyclotomicNumber x, const CyclotomicNumber& y) { return x -= y; }
  friend CyclotomicNumber operator*(CyclotomicNumber x, const CyclotomicNumber& y) { return x *= y; }
  CyclotomicNumber operator-() const;

  friend bool operator==(const CyclotomicNumber& x, const CyclotomicNumber& y);
  friend bool operator!=(const CyclotomicNumber& x, const CyclotomicNumber& y) { return !(x == y); }

  // Field inverse via the extended Euclidean algorithm against Phi_N.
  CyclotomicNumber inverse() const;  // throws std::domain_error on zero
  CyclotomicNumber pow(long n) const;

  // Rendering like "1/2 + 3*z^2" with z = zeta_conductor; "0" for zero.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x);

private:
  unsigned long conductor_;
  std::vector<Rational> c_;  // length phi(conductor_)

  void reduce_from(std::vector<Rational> raw);  // poly of any degree -> canonical
};

// Smallest d >= 1 with x^d = 1, or 0 when x is not a root of unity.
unsigned long multiplicative_order(const CyclotomicNumber& x);

// x^n = 1 and x^d != 1 for every proper divisor d of n.
bool is_primitive_root(const CyclotomicNumber& x, unsigned long n);

// A parameter point (a, b, e), all promoted to one common conductor.
// Construction enforces the precondition a*b*e != 0.
struct ParamPoint {
  CyclotomicNumber a, b, e;

  ParamPoint(CyclotomicNumber a_, CyclotomicNumber b_, CyclotomicNumber e_);
  std::string str() const;
};

// Specialize a polynomial in the formal a, b, e at a parameter point.
CyclotomicNumber evaluate(const MultiPoly& p, const ParamPoint& pt);

// q-integer (n)_b = 1 + b + ... + b^{n-1} and q-factorial; generic over any
// ring type with pow / += / *.  (0)_b = 0 and (0)_b^! = 1.
template <typename S>
S q_int(unsigned long n, const S& b) {
  S r = b.pow(0) - b.pow(0);  // zero of the right ring
  for (unsigned long k = 0; k < n; ++k) r += b.pow(k);
  return r;
}

template <typename S>
S q_factorial(unsigned long n, const S& b) {
  S r = b.pow(0);  // one of the right ring
  for (unsigned long k = 1; k <= n; ++k) r *= q_int(k, b);
  return r;
}

}  // namespace nichols
