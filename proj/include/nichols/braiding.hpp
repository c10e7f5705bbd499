#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nichols/cyclotomic.hpp"
#include "nichols/multipoly.hpp"
#include "nichols/perm.hpp"
#include "nichols/quadext.hpp"
#include "nichols/word.hpp"

namespace nichols {

// One scalar multiple of a basis tensor v_{i_1}...v_{i_n}.
template <typename Scalar>
struct MonomialTerm {
  Scalar coeff;
  Word word;
};

// The monomial braiding of V_abe:
//   c(v1 v1) = a v2 v2,  c(v1 v2) = b v1 v2,
//   c(v2 v1) = g v2 v1,  c(v2 v2) = e v1 v1,
// with g identified with b (the braided case).  The raw constructor keeping
// g independent exists only so tests can exercise the g != b failure of the
// braid relation.
template <typename Scalar>
class MonomialBraiding {
public:
  MonomialBraiding(Scalar a, Scalar b, Scalar e)
      : a_(std::move(a)), b_(std::move(b)), e_(std::move(e)), g_(b_) {}

  static MonomialBraiding with_gamma(Scalar a, Scalar b, Scalar g, Scalar e) {
    MonomialBraiding br(std::move(a), std::move(b), std::move(e));
    br.g_ = std::move(g);
    return br;
  }

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& e() const { return e_; }
  const Scalar& gamma() const { return g_; }

  Scalar one() const { return b_.pow(0); }

  // c_i on tensor slots (i, i+1), 1-based i.
  MonomialTerm<Scalar> apply_c(std::size_t i, const MonomialTerm<Scalar>& t) const {
    const Word& w = t.word;
    if (i < 1 || i + 1 > w.size())
      throw std::out_of_range("apply_c: position out of range");
    const std::uint8_t x = w[i - 1], y = w[i];
    if (x == 1 && y == 1) return {t.coeff * a_, s_flip(w, i)};
    if (x == 2 && y == 2) return {t.coeff * e_, s_flip(w, i)};
    if (x == 1) return {t.coeff * b_, w};  // 12
    return {t.coeff * g_, w};              // 21
  }

private:
  Scalar a_, b_, e_, g_;

  static Word s_flip(const Word& w, std::size_t i) {
    std::vector<std::uint8_t> ls;
    ls.reserve(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) ls.push_back(w[j]);
    ls[i - 1] = static_cast<std::uint8_t>(3 - ls[i - 1]);
    ls[i] = static_cast<std::uint8_t>(3 - ls[i]);
    return Word(std::move(ls));
  }
};

// Formal braiding over Q[a, b, e].
MonomialBraiding<MultiPoly> symbolic_braiding();
// Specialized braiding at a parameter point.
MonomialBraiding<CyclotomicNumber> braiding_at(const ParamPoint& pt);

// The Matsumoto lift: apply c along the canonical reduced word of p,
// rightmost factor first.  The resulting word always equals act(p, w).
template <typename Scalar>
MonomialTerm<Scalar> phi_apply(const Perm& p, const Word& w,
                               const MonomialBraiding<Scalar>& br) {
  if (p.degree() != w.size()) throw std::invalid_argument("phi_apply: length mismatch");
  MonomialTerm<Scalar> t{br.one(), w};
  const auto rw = reduced_word(p);
  for (auto it = rw.rbegin(); it != rw.rend(); ++it) t = br.apply_c(*it, t);
  return t;
}

// Compose apply_c along a chain of positions, rightmost entry first.
template <typename Scalar>
MonomialTerm<Scalar> apply_chain(const std::vector<std::size_t>& chain,
                                 const MonomialTerm<Scalar>& t0,
                                 const MonomialBraiding<Scalar>& br) {
  MonomialTerm<Scalar> t = t0;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) t = br.apply_c(*it, t);
  return t;
}

// Braid relation c1 c2 c1 = c2 c1 c2 on all 8 basis words of length 3.
template <typename Scalar>
bool ybe_check(const MonomialBraiding<Scalar>& br) {
  for (const Word& w : all_words(3)) {
    MonomialTerm<Scalar> t{br.one(), w};
    auto lhs = apply_chain<Scalar>({1, 2, 1}, t, br);
    auto rhs = apply_chain<Scalar>({2, 1, 2}, t, br);
    if (lhs.word != rhs.word || !(lhs.coeff == rhs.coeff)) return false;
  }
  return true;
}

// c_i c_j = c_j c_i for |i - j| >= 2, checked on all basis words of the
// smallest separating length.
template <typename Scalar>
bool distant_commutation_check(const MonomialBraiding<Scalar>& br) {
  for (const Word& w : all_words(4)) {
    MonomialTerm<Scalar> t{br.one(), w};
    auto lhs = apply_chain<Scalar>({1, 3}, t, br);
    auto rhs = apply_chain<Scalar>({3, 1}, t, br);
    if (lhs.word != rhs.word || !(lhs.coeff == rhs.coeff)) return false;
  }
  return true;
}

// Diagonal type iff b^2 = ae in the field.
bool is_diagonal_type(const ParamPoint& pt);

// The braiding rewritten in the basis w1 = v1 + s v2, w2 = v1 - s v2 with
// s = sqrt(a/b), entries in the quadratic extension.  coeff(i,j,k,l) is the
// coefficient of w_k (x) w_l in c(w_i (x) w_j), indices in {1,2}.
struct DiagonalBasisTable {
  std::vector<QuadExt<CyclotomicNumber>> entries;  // 16, row-major (i,j,k,l)
  bool matches_printed_table = false;  // the (b, -b, -b, b) pattern with the
                                       // off-diagonal tensor-factor swap

  const QuadExt<CyclotomicNumber>& coeff(int i, int j, int k, int l) const {
    return entries[static_cast<std::size_t>((((i - 1) * 2 + (j - 1)) * 2 + (k - 1)) * 2 +
                                            (l - 1))];
  }
};
// Requires b^2 = ae (throws std::domain_error otherwise).
DiagonalBasisTable diagonal_basis_braiding(const ParamPoint& pt);

// The same verification carried out symbolically: each table identity is
// reduced modulo b^2 - ae with denominators cleared (multiplying through
// by b); returns true when every entry matches the printed table.
bool diagonal_basis_symbolic_check();

// The isomorphism V_abe ~ V_{ae b 1} on parameters.
ParamPoint normalize_to_e1(const ParamPoint& pt);

}  // namespace nichols
