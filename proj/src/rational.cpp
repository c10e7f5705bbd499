#include "nichols/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace nichols {

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

Rational Rational::pow(unsigned long e) const {
  Rational base = *this, acc = Rational::one();
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

}  // namespace nichols
