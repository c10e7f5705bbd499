#include "nichols/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace nichols {

Perm Perm::identity(std::size_t n) {
  Perm p;
  p.img_.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.img_[i] = static_cast<std::uint8_t>(i + 1);
  return p;
}

Perm Perm::from_one_line(std::vector<int> images) {
  const std::size_t n = images.size();
  std::vector<bool> seen(n, false);
  Perm p;
  p.img_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    int v = images[i];
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v) - 1])
      throw std::invalid_argument("Perm::from_one_line: not a bijection of {1..n}");
    seen[static_cast<std::size_t>(v) - 1] = true;
    p.img_[i] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Perm Perm::transposition_s(std::size_t n, std::size_t i) {
  if (i < 1 || i + 1 > n) throw std::out_of_range("transposition_s: index out of range");
  Perm p = identity(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Perm Perm::transposition_t(std::size_t n, std::size_t i) {
  if (i < 1 || i + 2 > n) throw std::out_of_range("transposition_t: index out of range");
  Perm p = identity(n);
  std::swap(p.img_[i - 1], p.img_[i + 1]);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

Perm Perm::compose(const Perm& q) const {
  if (degree() != q.degree())
    throw std::invalid_argument("Perm::compose: degrees differ");
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = img_[q.img_[i] - 1];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    r.img_[img_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return r;
}

std::string Perm::one_line_str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(int(img_[i]));
  }
  return s + "]";
}

std::uint64_t Perm::pack() const {
  if (img_.size() > 14) throw std::length_error("Perm::pack: degree > 14");
  std::uint64_t p = 0;
  for (std::uint8_t v : img_) p = (p << 4) | (v - 1);
  // A degree tag keeps packs of different degrees distinct.
  return (p << 5) | img_.size();
}

unsigned long sl(const Perm& p) {
  unsigned long inv = 0;
  const std::size_t n = p.degree();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (p(i) > p(j)) ++inv;
  return inv;
}

std::vector<std::size_t> reduced_word(const Perm& p) {
  // Repeatedly clear the leftmost descent by right-multiplication with s_i
  // (swap of adjacent one-line entries); the collected indices reversed give
  // p = s_{j_1} ∘ ... ∘ s_{j_m} with m = sl(p).
  std::vector<int> v;
  v.reserve(p.degree());
  for (std::size_t i = 1; i <= p.degree(); ++i) v.push_back(p(i));
  std::vector<std::size_t> word;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] > v[i + 1]) {
        word.push_back(i + 1);  // 1-based generator index
        std::swap(v[i], v[i + 1]);
        progressed = true;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace nichols
