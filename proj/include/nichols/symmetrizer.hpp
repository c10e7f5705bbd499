#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/cyclotomic.hpp"
#include "nichols/multipoly.hpp"
#include "nichols/sym_action.hpp"

namespace nichols {

// Lexicographically ordered basis of one orbit.
struct OrbitBasis {
  std::size_t degree = 0;
  std::vector<Word> words;  // sorted

  std::size_t index_of(const Word& w) const;  // throws if absent
};

// The symmetrizer restricted to one orbit: entries[row y][col x] = F~(x|y).
template <typename Scalar>
struct BlockMatrix {
  OrbitBasis basis;
  std::vector<std::vector<Scalar>> entries;

  std::size_t dim() const { return basis.words.size(); }
};

// Braided symmetrizer images via the recursion
//   S_1 = id,  S_{m,1} = id + S_{m-1,1} c_m,  S_m = S_{m,1.}(S_{m-1} x id),
// computed as rewriting on monomial terms and memoized per word, so lower
// degrees are shared across blocks and across degrees.
template <typename Scalar>
class SymmetrizerEngine {
public:
  using TermMap = std::map<Word, Scalar>;  // word -> coefficient, zero-free

  explicit SymmetrizerEngine(MonomialBraiding<Scalar> braiding)
      : br_(std::move(braiding)) {}

  const MonomialBraiding<Scalar>& braiding() const { return br_; }

  // S_n(v_w) for n = |w|.
  const TermMap& symmetrize(const Word& w) {
    auto it = memo_.find(w.pack());
    if (it != memo_.end()) return it->second;
    TermMap out;
    if (w.size() <= 1) {
      out.emplace(w, br_.one());
    } else {
      const std::size_t m = w.size();
      Word prefix = subword_prefix(w);
      const TermMap& lower = symmetrize(prefix);  // S_{m-1} on the prefix
      Word last = Word::repeated(w[m - 1], 1);
      for (const auto& [u, c] : lower) {
        // (S_{m-1} x id) contribution, then S_{m,1} = id + c_{m-1} +
        // c_{m-2}c_{m-1} + ... + c_1...c_{m-1}, sharing chain prefixes.
        MonomialTerm<Scalar> t{c, u.concat(last)};
        add_term(out, t);
        for (std::size_t j = m - 1; j >= 1; --j) {
          t = br_.apply_c(j, t);
          add_term(out, t);
        }
      }
    }
    auto [pos, inserted] = memo_.emplace(w.pack(), std::move(out));
    return pos->second;
  }

  std::size_t memo_size() const { return memo_.size(); }

private:
  MonomialBraiding<Scalar> br_;
  std::unordered_map<std::uint64_t, TermMap> memo_;

  static Word subword_prefix(const Word& w) {
    std::vector<std::uint8_t> ls;
    ls.reserve(w.size() - 1);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) ls.push_back(w[i]);
    return Word(std::move(ls));
  }

  static void add_term(TermMap& out, const MonomialTerm<Scalar>& t) {
    if (t.coeff.is_zero()) return;
    auto [it, inserted] = out.try_emplace(t.word, t.coeff);
    if (!inserted) {
      it->second += t.coeff;
      if (it->second.is_zero()) out.erase(it);
    }
  }
};

// The (y, x) entry of the orbit block: coefficient of v_y in S_n(v_x).
template <typename Scalar>
Scalar tilde_f(const Word& x, const Word& y, SymmetrizerEngine<Scalar>& engine) {
  if (x.size() != y.size()) throw std::invalid_argument("tilde_f: word lengths differ");
  const auto& image = engine.symmetrize(x);
  auto it = image.find(y);
  if (it == image.end()) return engine.braiding().one() - engine.braiding().one();
  return it->second;
}

// Oracle: enumerate F(x|y) by full S_n scan and sum the Matsumoto lifts.
template <typename Scalar>
Scalar tilde_f_bruteforce(const Word& x, const Word& y,
                          const MonomialBraiding<Scalar>& br,
                          const SearchCaps& caps = {}) {
  if (x.size() != y.size())
    throw std::invalid_argument("tilde_f_bruteforce: word lengths differ");
  Scalar total = br.one() - br.one();
  for (const Perm& p : fset(x, y, caps).members) {
    MonomialTerm<Scalar> t = phi_apply(p, x, br);
    if (t.word != y) throw std::logic_error("phi_apply landed outside the fset target");
    total += t.coeff;
  }
  return total;
}

// Full orbit block of S_n containing rep.
template <typename Scalar>
BlockMatrix<Scalar> symmetrizer_block(std::size_t n, const Word& rep,
                                      SymmetrizerEngine<Scalar>& engine) {
  if (rep.size() != n) throw std::invalid_argument("symmetrizer_block: degree mismatch");
  BlockMatrix<Scalar> block;
  block.basis.degree = n;
  block.basis.words = orbit(rep);
  const std::size_t d = block.basis.words.size();
  const Scalar zero = engine.braiding().one() - engine.braiding().one();
  block.entries.assign(d, std::vector<Scalar>(d, zero));
  for (std::size_t col = 0; col < d; ++col) {
    const auto& image = engine.symmetrize(block.basis.words[col]);
    for (const auto& [y, c] : image)
      block.entries[block.basis.index_of(y)][col] = c;
  }
  return block;
}

// b^k coefficient of F~(1^n|1^n) with e set to 1: a polynomial in a alone.
MultiPoly tilde_f_k(std::size_t n, std::uint32_t k);
// Convenience: the whole polynomial F~(1^n|1^n)|_{e=1}.
MultiPoly tilde_f_1n(std::size_t n);

// Exact rank by fraction-free (Bareiss) elimination with partial pivoting on
// nonzero entries.
std::size_t rank(const BlockMatrix<CyclotomicNumber>& m);

// Sum of orbit-block ranks at degree n; degrees 0 and 1 are 1 and 2 by
// definition (S_1 = id).
std::size_t graded_dim(std::size_t n, const ParamPoint& pt, unsigned jobs = 1);

// Per-degree ranks and termination status of the dimension scan.
struct GradedProfile {
  std::string point;                 // printable parameter point
  std::vector<std::size_t> ranks;    // index = degree, starting at 0
  enum class Status { terminated, cap_exceeded } status = Status::cap_exceeded;
  std::size_t cap = 0;
  // Total dimension; present only when the scan terminated.
  std::optional<unsigned long long> total;
};

// Computes graded dimensions for n = 2, 3, ... until a zero rank (termination:
// degree-1 generation makes every later degree vanish) or until the cap.
// A cap-exceeded result deliberately claims nothing about infiniteness.
GradedProfile nichols_dimension(const ParamPoint& pt, std::size_t cap = 24,
                                unsigned jobs = 1);

}  // namespace nichols
