#include "nichols/multipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace nichols {

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.emplace(Expo{0, 0, 0}, c);
  return p;
}

MultiPoly MultiPoly::monomial(const Expo& x, const Rational& c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.emplace(x, c);
  return p;
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Expo{0, 0, 0} &&
         terms_.begin()->second.is_one();
}

void MultiPoly::add_term(const Expo& x, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [x, c] : o.terms_) add_term(x, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [x, c] : o.terms_) add_term(x, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
  MultiPoly r;
  for (const auto& [xe, xc] : x.terms_)
    for (const auto& [ye, yc] : y.terms_)
      r.add_term(Expo{xe.a + ye.a, xe.b + ye.b, xe.e + ye.e}, xc * yc);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [x, c] : terms_) r.terms_.emplace(x, -c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned long n) const {
  MultiPoly r = one();
  MultiPoly base = *this;
  while (n > 0) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

void MultiPoly::mul_monomial(const Expo& x, const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return;
  }
  TermMap shifted;
  for (const auto& [e0, c0] : terms_)
    shifted.emplace(Expo{e0.a + x.a, e0.b + x.b, e0.e + x.e}, c0 * c);
  terms_ = std::move(shifted);
}

MultiPoly MultiPoly::with_e_set_to_one() const {
  MultiPoly r;
  for (const auto& [x, c] : terms_) r.add_term(Expo{x.a, x.b, 0}, c);
  return r;
}

MultiPoly MultiPoly::with_a_e_swapped() const {
  MultiPoly r;
  for (const auto& [x, c] : terms_) r.add_term(Expo{x.e, x.b, x.a}, c);
  return r;
}

MultiPoly MultiPoly::with_b_set_to(const Rational& v) const {
  MultiPoly r;
  for (const auto& [x, c] : terms_)
    r.add_term(Expo{x.a, 0, x.e}, c * v.pow(x.b));
  return r;
}

MultiPoly MultiPoly::reduced_mod_b2_ae() const {
  MultiPoly r;
  for (const auto& [x, c] : terms_) {
    std::uint32_t j = x.b / 2, rem = x.b % 2;
    r.add_term(Expo{x.a + j, rem, x.e + j}, c);
  }
  return r;
}

std::uint32_t MultiPoly::degree_in_b() const {
  std::uint32_t d = 0;
  for (const auto& [x, c] : terms_)
    if (x.b > d) d = x.b;
  return d;
}

MultiPoly MultiPoly::coeff_of_b(std::uint32_t k) const {
  MultiPoly r;
  for (const auto& [x, c] : terms_)
    if (x.b == k) r.add_term(Expo{x.a, 0, x.e}, c);
  return r;
}

Rational MultiPoly::coeff_of_a(std::uint32_t k) const {
  Rational r = Rational::zero();
  for (const auto& [x, c] : terms_) {
    if (x.b != 0 || x.e != 0)
      throw std::domain_error("coeff_of_a: polynomial involves b or e");
    if (x.a == k) r = c;
  }
  return r;
}

namespace {

void append_power(std::ostream& os, const char* name, std::uint32_t k, bool& lead) {
  if (k == 0) return;
  if (!lead) os << "*";
  lead = false;
  os << name;
  if (k > 1) os << "^" << k;
}

}  // namespace

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  // Ascending grlex for display: total degree, then a before b before e.
  std::vector<const std::pair<const Expo, Rational>*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const auto* l, const auto* r) {
    if (l->first.total() != r->first.total())
      return l->first.total() < r->first.total();
    return std::tie(r->first.a, r->first.b, r->first.e) <
           std::tie(l->first.a, l->first.b, l->first.e);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* term : order) {
    const auto& [x, c] = *term;
    Rational mag = c;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        mag = -c;
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) mag = -c;
    }
    first = false;
    bool lead = true;
    if (!mag.is_one() || x == Expo{0, 0, 0}) {
      os << mag.str();
      lead = false;
    }
    append_power(os, "a", x.a, lead);
    append_power(os, "b", x.b, lead);
    append_power(os, "e", x.e, lead);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
  return os << p.str();
}

}  // namespace nichols
