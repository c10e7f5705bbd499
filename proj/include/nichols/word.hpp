#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nichols {

// A word over the alphabet {1, 2}; indexes a basis monomial v_{i_1}...v_{i_n}
// of the n-th tensor power.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<std::uint8_t> letters);

  // "1121" -> word; throws std::invalid_argument on any letter outside {1,2}.
  static Word parse(const std::string& s);
  // letter^n, e.g. repeated(2, 4) = 2222.
  static Word repeated(int letter, std::size_t n);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return letters_[i]; }

  // Swap 1 <-> 2 at every position (the bar involution).
  Word bar() const;
  Word reversed() const;
  Word concat(const Word& o) const;

  // Count of a given letter.
  std::size_t count(int letter) const;

  std::string str() const;

  // Injective packing for hash keys; requires size() <= 63.
  std::uint64_t pack() const;

  friend bool operator==(const Word& x, const Word& y) { return x.letters_ == y.letters_; }
  friend bool operator!=(const Word& x, const Word& y) { return !(x == y); }
  friend bool operator<(const Word& x, const Word& y) { return x.letters_ < y.letters_; }

private:
  std::vector<std::uint8_t> letters_;
};

// All 2^n words of length n in lexicographic order.
std::vector<Word> all_words(std::size_t n);

}  // namespace nichols
