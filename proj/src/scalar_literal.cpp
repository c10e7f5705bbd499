#include "nichols/scalar_literal.hpp"

#include <cctype>
#include <stdexcept>

namespace nichols {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool consume_word(const char* w) {
    skip_ws();
    std::size_t j = i;
    for (const char* p = w; *p; ++p, ++j)
      if (j >= s.size() || s[j] != *p) return false;
    i = j;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("scalar literal: " + what + " at position " +
                                std::to_string(i) + " in \"" + s + "\"");
  }
  unsigned long read_uint() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      fail("expected a digit");
    unsigned long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + static_cast<unsigned long>(s[i] - '0');
      ++i;
    }
    return v;
  }
};

CyclotomicNumber parse_factor(Cursor& cur) {
  if (cur.consume_word("zeta")) {
    if (!cur.consume('(')) cur.fail("expected '(' after zeta");
    unsigned long n = cur.read_uint();
    if (n == 0) cur.fail("zeta conductor must be positive");
    if (!cur.consume(')')) cur.fail("expected ')'");
    long k = 1;
    if (cur.consume('^')) {
      long sign = 1;
      if (cur.consume('-'))
        sign = -1;
      else
        cur.consume('+');
      k = sign * static_cast<long>(cur.read_uint());
    }
    return CyclotomicNumber::zeta(n, k);
  }
  long sign = 1;
  if (cur.consume('-'))
    sign = -1;
  else
    cur.consume('+');
  // A signed zeta like "-zeta(3)" arrives here after the sign.
  if (cur.peek() == 'z') {
    CyclotomicNumber z = parse_factor(cur);
    return sign < 0 ? -z : z;
  }
  unsigned long num = cur.read_uint();
  unsigned long den = 1;
  if (cur.consume('/')) {
    den = cur.read_uint();
    if (den == 0) cur.fail("zero denominator");
  }
  Rational q(sign * static_cast<long>(num), static_cast<long>(den));
  return CyclotomicNumber::from_rational(q);
}

}  // namespace

CyclotomicNumber parse_scalar_literal(const std::string& text) {
  Cursor cur{text};
  if (cur.eof()) cur.fail("empty literal");
  CyclotomicNumber v = parse_factor(cur);
  while (cur.consume('*')) v *= parse_factor(cur);
  if (!cur.eof()) cur.fail("trailing garbage");
  return v;
}

}  // namespace nichols
