#include "nichols/braiding.hpp"

#include <array>

namespace nichols {

MonomialBraiding<MultiPoly> symbolic_braiding() {
  return MonomialBraiding<MultiPoly>(MultiPoly::var_a(), MultiPoly::var_b(),
                                     MultiPoly::var_e());
}

MonomialBraiding<CyclotomicNumber> braiding_at(const ParamPoint& pt) {
  return MonomialBraiding<CyclotomicNumber>(pt.a, pt.b, pt.e);
}

bool is_diagonal_type(const ParamPoint& pt) {
  return pt.b * pt.b == pt.a * pt.e;
}

DiagonalBasisTable diagonal_basis_braiding(const ParamPoint& pt) {
  if (!is_diagonal_type(pt))
    throw std::domain_error("diagonal_basis_braiding requires b^2 = ae");
  using E = QuadExt<CyclotomicNumber>;
  const unsigned long N = pt.a.conductor();
  const CyclotomicNumber x = pt.a * pt.b.inverse();  // s^2 = a/b
  const E s = sqrt_adjoin(x);
  const E one = E::from_base(CyclotomicNumber::one(N), x);
  const E half = E::from_base(CyclotomicNumber::from_rational(Rational(1, 2), N), x);

  // w_1 = v_1 + s v_2, w_2 = v_1 - s v_2: columns of the basis change.
  const std::array<std::array<E, 2>, 2> wc = {{{one, s}, {one, -s}}};
  // Inverse rows: v-coeff vector -> w-coeff k.
  const E half_sinv = half * s.inverse();
  const std::array<std::array<E, 2>, 2> inv = {{{half, half_sinv}, {half, -half_sinv}}};

  const E ca = E::from_base(pt.a, x), cb = E::from_base(pt.b, x),
          ce = E::from_base(pt.e, x);

  DiagonalBasisTable table;
  table.entries.reserve(16);
  bool matches = true;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      // Image of w_i (x) w_j under c, in v-tensor coordinates rho[x][y].
      std::array<std::array<E, 2>, 2> rho = {{{one - one, one - one}, {one - one, one - one}}};
      // c: v1v1 -> a v2v2, v1v2 -> b v1v2, v2v1 -> b v2v1, v2v2 -> e v1v1.
      rho[1][1] += ca * wc[i][0] * wc[j][0];
      rho[0][1] += cb * wc[i][0] * wc[j][1];
      rho[1][0] += cb * wc[i][1] * wc[j][0];
      rho[0][0] += ce * wc[i][1] * wc[j][1];
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          E c = one - one;
          for (int vx = 0; vx < 2; ++vx)
            for (int vy = 0; vy < 2; ++vy)
              c += inv[k][vx] * inv[l][vy] * rho[vx][vy];
          table.entries.push_back(c);
          // Printed table: diagonal pairs stay with +b, off-diagonal pairs
          // swap tensor factors with -b.
          const bool diag_pair = (i == j);
          E expected = one - one;
          if (diag_pair && k == i && l == j) expected = cb;
          if (!diag_pair && k == j && l == i) expected = -cb;
          if (!(c == expected)) matches = false;
        }
      }
    }
  }
  table.matches_printed_table = matches;
  return table;
}

namespace {

// Polynomial in s of degree <= 2 over Q[a,b,e].
using SPoly = std::array<MultiPoly, 3>;

SPoly smul(const SPoly& p, const SPoly& q) {
  SPoly r = {MultiPoly::zero(), MultiPoly::zero(), MultiPoly::zero()};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j + i < 3; ++j) r[i + j] += p[i] * q[j];
  return r;
}

SPoly sscale(const SPoly& p, const MultiPoly& f) {
  return {p[0] * f, p[1] * f, p[2] * f};
}

// Equality in MultiPoly[s] / (b s^2 - a, b^2 - ae): clear the denominator of
// s^2 = a/b by multiplying the even part through by b.
bool sequal_mod(const SPoly& p, const SPoly& q) {
  const MultiPoly a = MultiPoly::var_a(), b = MultiPoly::var_b();
  MultiPoly even = b * (p[0] - q[0]) + a * (p[2] - q[2]);
  MultiPoly odd = p[1] - q[1];
  return even.reduced_mod_b2_ae().is_zero() && odd.reduced_mod_b2_ae().is_zero();
}

}  // namespace

bool diagonal_basis_symbolic_check() {
  const MultiPoly a = MultiPoly::var_a(), b = MultiPoly::var_b(), e = MultiPoly::var_e();
  const MultiPoly one = MultiPoly::one(), zero = MultiPoly::zero();
  // w-vectors in v-coordinates, coefficients as s-polynomials.
  const SPoly w1v1 = {one, zero, zero}, w1v2 = {zero, one, zero};
  const SPoly w2v1 = {one, zero, zero}, w2v2 = {zero, -one, zero};
  const std::array<std::array<SPoly, 2>, 2> wc = {{{w1v1, w1v2}, {w2v1, w2v2}}};

  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      std::array<std::array<SPoly, 2>, 2> rho = {
          {{SPoly{zero, zero, zero}, SPoly{zero, zero, zero}},
           {SPoly{zero, zero, zero}, SPoly{zero, zero, zero}}}};
      auto acc = [](SPoly& dst, const SPoly& src) {
        for (int t = 0; t < 3; ++t) dst[t] += src[t];
      };
      acc(rho[1][1], sscale(smul(wc[i][0], wc[j][0]), a));
      acc(rho[0][1], sscale(smul(wc[i][0], wc[j][1]), b));
      acc(rho[1][0], sscale(smul(wc[i][1], wc[j][0]), b));
      acc(rho[0][0], sscale(smul(wc[i][1], wc[j][1]), e));
      // Printed claim: +b w_i w_j on the diagonal, -b w_j w_i off it.
      const int k = (i == j) ? i : j, l = (i == j) ? j : i;
      const MultiPoly lambda = (i == j) ? b : -b;
      for (int vx = 0; vx < 2; ++vx)
        for (int vy = 0; vy < 2; ++vy)
          if (!sequal_mod(rho[vx][vy], sscale(smul(wc[k][vx], wc[l][vy]), lambda)))
            return false;
    }
  }
  return true;
}

ParamPoint normalize_to_e1(const ParamPoint& pt) {
  return ParamPoint(pt.a * pt.e, pt.b, CyclotomicNumber::one(1));
}

}  // namespace nichols
