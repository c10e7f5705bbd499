#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "nichols/rational.hpp"

namespace nichols {

// Exponent triple of a monomial a^da * b^db * e^de.
struct Expo {
  std::uint32_t a = 0, b = 0, e = 0;
  std::uint64_t total() const {
    return std::uint64_t(a) + b + e;
  }
  friend bool operator==(const Expo& x, const Expo& y) {
    return x.a == y.a && x.b == y.b && x.e == y.e;
  }
};

// Graded lexicographic on (deg_a, deg_b, deg_e): total degree first, then lex.
struct GrlexLess {
  bool operator()(const Expo& x, const Expo& y) const {
    if (x.total() != y.total()) return x.total() < y.total();
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.e < y.e;
  }
};

// Sparse multivariate polynomial in the formal variables a, b, e over Q.
// Canonical form: no stored zero coefficients; equality is term-map equality.
class MultiPoly {
public:
  using TermMap = std::map<Expo, Rational, GrlexLess>;

  MultiPoly() = default;

  static MultiPoly zero() { return MultiPoly(); }
  static MultiPoly one() { return constant(Rational::one()); }
  static MultiPoly constant(const Rational& c);
  static MultiPoly monomial(const Expo& x, const Rational& c);
  static MultiPoly var_a() { return monomial({1, 0, 0}, Rational::one()); }
  static MultiPoly var_b() { return monomial({0, 1, 0}, Rational::one()); }
  static MultiPoly var_e() { return monomial({0, 0, 1}, Rational::one()); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
  friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }
  friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& x, const MultiPoly& y) {
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const MultiPoly& x, const MultiPoly& y) { return !(x == y); }

  MultiPoly pow(unsigned long n) const;

  // Multiply by a single monomial; the workhorse of the braiding rewriter.
  void mul_monomial(const Expo& x, const Rational& c);
  void add_term(const Expo& x, const Rational& c);

  // Substitutions the closed forms and symmetry lemmas are stated with.
  MultiPoly with_e_set_to_one() const;
  MultiPoly with_a_e_swapped() const;
  MultiPoly with_b_set_to(const Rational& v) const;
  // Normal form modulo b^2 - a*e: rewrite b^{2j+r} -> (a*e)^j b^r.
  MultiPoly reduced_mod_b2_ae() const;

  std::uint32_t degree_in_b() const;
  // Coefficient of b^k, as a polynomial in a and e.
  MultiPoly coeff_of_b(std::uint32_t k) const;
  // For a polynomial in a alone: map deg_a -> coefficient (fails on b/e terms).
  Rational coeff_of_a(std::uint32_t k) const;

  // Canonical rendering, ascending grlex, e.g. "1 + 2*a*b + a*b^2".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

private:
  TermMap terms_;
};

}  // namespace nichols
