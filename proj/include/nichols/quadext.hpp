#pragma once

#include <stdexcept>
#include <string>

namespace nichols {

// The rank-2 quotient ring K[s]/(s^2 - x): elements re + im*s.  Both operands
// of a binary operation must come from the same extension (same x).
template <typename K>
class QuadExt {
public:
  QuadExt(K re, K im, K x) : re_(std::move(re)), im_(std::move(im)), x_(std::move(x)) {}

  static QuadExt from_base(const K& v, const K& x) {
    return QuadExt(v, v - v, x);  // (v, 0)
  }

  const K& re() const { return re_; }
  const K& im() const { return im_; }
  const K& sq() const { return x_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  QuadExt& operator+=(const QuadExt& o) {
    check_same(o);
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  QuadExt& operator-=(const QuadExt& o) {
    check_same(o);
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  QuadExt& operator*=(const QuadExt& o) {
    check_same(o);
    // (u + v s)(u' + v' s) = uu' + vv' x + (uv' + vu') s
    K re2 = re_ * o.re_ + im_ * o.im_ * x_;
    K im2 = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re2);
    im_ = std::move(im2);
    return *this;
  }
  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  QuadExt operator-() const { return QuadExt(-re_, -im_, x_); }

  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.x_ == b.x_ && a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

  QuadExt pow(unsigned long n) const {
    QuadExt r = from_base(re_.pow(0), x_);  // one
    QuadExt base = *this;
    while (n > 0) {
      if (n & 1) r *= base;
      base *= base;
      n >>= 1;
    }
    return r;
  }

  // (u + v s)^{-1} = (u - v s) / (u^2 - v^2 x); requires K a field and the
  // norm invertible (fails on zero divisors when x is a square in K).
  QuadExt inverse() const {
    K norm = re_ * re_ - im_ * im_ * x_;
    if (norm.is_zero())
      throw std::domain_error("QuadExt inverse: norm is zero (zero divisor)");
    K ninv = norm.inverse();
    return QuadExt(re_ * ninv, (-im_) * ninv, x_);
  }

  std::string str() const {
    return "(" + re_.str() + ") + (" + im_.str() + ")*s";
  }

private:
  K re_, im_, x_;

  void check_same(const QuadExt& o) const {
    if (!(x_ == o.x_))
      throw std::domain_error("QuadExt operands come from different extensions");
  }
};

// The formal generator s of K[s]/(s^2 - x); x = 0 would make the extension
// degenerate (s nilpotent), which the callers never want.
template <typename K>
QuadExt<K> sqrt_adjoin(const K& x) {
  if (x.is_zero()) throw std::domain_error("sqrt_adjoin: degenerate extension over 0");
  K one = x.pow(0);
  return QuadExt<K>(x - x, one, x);  // 0 + 1*s
}

}  // namespace nichols
