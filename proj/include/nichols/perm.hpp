#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nichols {

// A permutation of {1, ..., n} in one-line notation.  Composition follows
// (p * q)(i) = p(q(i)); generator indices in the public API are 1-based.
class Perm {
public:
  Perm() = default;

  static Perm identity(std::size_t n);
  // Validates that the images form a bijection of {1..n}.
  static Perm from_one_line(std::vector<int> images);
  // Adjacent transposition s_i swapping i and i+1 (1 <= i <= n-1).
  static Perm transposition_s(std::size_t n, std::size_t i);
  // t_i = s_i s_{i+1} s_i, the transposition (i, i+2) (1 <= i <= n-2).
  static Perm transposition_t(std::size_t n, std::size_t i);

  std::size_t degree() const { return img_.size(); }
  // Image of i under the permutation, 1-based.
  int operator()(std::size_t i) const { return img_[i - 1]; }

  bool is_identity() const;
  Perm compose(const Perm& q) const;  // (*this)(q(i))
  friend Perm operator*(const Perm& p, const Perm& q) { return p.compose(q); }
  Perm inverse() const;

  std::string one_line_str() const;  // "[3,2,1]"

  // Injective packing for hash keys; requires degree <= 14.
  std::uint64_t pack() const;

  friend bool operator==(const Perm& x, const Perm& y) { return x.img_ == y.img_; }
  friend bool operator!=(const Perm& x, const Perm& y) { return !(x == y); }
  friend bool operator<(const Perm& x, const Perm& y) { return x.img_ < y.img_; }

private:
  std::vector<std::uint8_t> img_;  // img_[i] = image of i+1
};

// Coxeter length: the inversion number of the one-line notation.
unsigned long sl(const Perm& p);

// A reduced expression [j_1, ..., j_m] with p = s_{j_1} ∘ ... ∘ s_{j_m}
// (1-based indices), chosen by repeated leftmost-descent elimination; the
// canonical word used by the Matsumoto lift.
std::vector<std::size_t> reduced_word(const Perm& p);

}  // namespace nichols
