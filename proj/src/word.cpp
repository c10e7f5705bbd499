#include "nichols/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace nichols {

Word::Word(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {
  for (std::uint8_t l : letters_)
    if (l != 1 && l != 2) throw std::invalid_argument("Word: letters must be 1 or 2");
}

Word Word::parse(const std::string& s) {
  std::vector<std::uint8_t> ls;
  ls.reserve(s.size());
  for (char c : s) {
    if (c != '1' && c != '2')
      throw std::invalid_argument("Word::parse: bad letter '" + std::string(1, c) + "'");
    ls.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Word(std::move(ls));
}

Word Word::repeated(int letter, std::size_t n) {
  if (letter != 1 && letter != 2)
    throw std::invalid_argument("Word::repeated: letter must be 1 or 2");
  return Word(std::vector<std::uint8_t>(n, static_cast<std::uint8_t>(letter)));
}

Word Word::bar() const {
  Word w = *this;
  for (std::uint8_t& l : w.letters_) l = static_cast<std::uint8_t>(3 - l);
  return w;
}

Word Word::reversed() const {
  Word w = *this;
  std::reverse(w.letters_.begin(), w.letters_.end());
  return w;
}

Word Word::concat(const Word& o) const {
  Word w = *this;
  w.letters_.insert(w.letters_.end(), o.letters_.begin(), o.letters_.end());
  return w;
}

std::size_t Word::count(int letter) const {
  return static_cast<std::size_t>(
      std::count(letters_.begin(), letters_.end(), static_cast<std::uint8_t>(letter)));
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (std::uint8_t l : letters_) s.push_back(static_cast<char>('0' + l));
  return s;
}

std::uint64_t Word::pack() const {
  if (letters_.size() > 63) throw std::length_error("Word::pack: length > 63");
  std::uint64_t p = 1;  // leading sentinel keeps lengths distinct
  for (std::uint8_t l : letters_) p = (p << 1) | (l - 1);
  return p;
}

std::vector<Word> all_words(std::size_t n) {
  if (n > 24) throw std::length_error("all_words: 2^n too large");
  std::vector<Word> out;
  out.reserve(std::size_t(1) << n);
  std::vector<std::uint8_t> cur(n, 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i)
      cur[i] = static_cast<std::uint8_t>(1 + ((mask >> (n - 1 - i)) & 1));
    out.push_back(Word(cur));
  }
  return out;
}

}  // namespace nichols
