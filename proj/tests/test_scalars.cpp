#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "nichols/cyclotomic.hpp"
#include "nichols/multipoly.hpp"
#include "nichols/quadext.hpp"
#include "nichols/rational.hpp"
#include "nichols/scalar_literal.hpp"

using namespace nichols;

TEST_CASE("rational canonical form and arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational::zero());
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
  CHECK((Rational(1) / Rational(-4)) == Rational(-1, 4));
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
  CHECK(Rational(-2).pow(3) == Rational(-8));
  CHECK(Rational(5).pow(0) == Rational::one());
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK(Rational(7).str() == "7");
  CHECK_THROWS_AS(Rational::zero().inverse(), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational::zero(), std::domain_error);
}

namespace {

MultiPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 2), coeff(-3, 3), terms(1, 4);
  MultiPoly p;
  int t = terms(rng);
  for (int i = 0; i < t; ++i)
    p.add_term({static_cast<std::uint32_t>(deg(rng)),
                static_cast<std::uint32_t>(deg(rng)),
                static_cast<std::uint32_t>(deg(rng))},
               Rational(coeff(rng)));
  return p;
}

CyclotomicNumber random_cyclo(std::mt19937& rng, unsigned long conductor) {
  std::uniform_int_distribution<long> coeff(-2, 2);
  CyclotomicNumber x = CyclotomicNumber::zero(conductor);
  for (unsigned long i = 0; i < euler_phi(conductor); ++i)
    x += CyclotomicNumber::zeta(conductor, static_cast<long>(i)) *
         CyclotomicNumber::from_rational(Rational(coeff(rng)));
  return x;
}

}  // namespace

TEST_CASE("multipoly ring axioms on random elements") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 60; ++trial) {
    MultiPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == MultiPoly::zero());
    CHECK(p * MultiPoly::one() == p);
    CHECK(p * MultiPoly::zero() == MultiPoly::zero());
  }
}

TEST_CASE("multipoly rendering and views") {
  MultiPoly p = MultiPoly::one() +
                MultiPoly::monomial({1, 1, 0}, Rational(2)) +
                MultiPoly::monomial({1, 2, 0}, Rational(1));
  CHECK(p.str() == "1 + 2*a*b + a*b^2");
  CHECK(p.degree_in_b() == 2);
  CHECK(p.coeff_of_b(1) == MultiPoly::monomial({1, 0, 0}, Rational(2)));
  CHECK(p.coeff_of_b(0) == MultiPoly::one());
  CHECK(p.coeff_of_b(3) == MultiPoly::zero());
  CHECK(MultiPoly::zero().str() == "0");

  // grlex: total degree first, then a before b before e
  MultiPoly sum = MultiPoly::one() + MultiPoly::var_e() + MultiPoly::var_b() +
                  MultiPoly::var_a();
  CHECK(sum.str() == "1 + a + b + e");

  MultiPoly abe = MultiPoly::var_a() * MultiPoly::var_b() * MultiPoly::var_e();
  CHECK(abe.with_e_set_to_one() == MultiPoly::var_a() * MultiPoly::var_b());
  CHECK(abe.with_a_e_swapped() == abe);
  CHECK(MultiPoly::var_a().with_a_e_swapped() == MultiPoly::var_e());
  CHECK(MultiPoly::var_b().with_b_set_to(Rational(-1)) ==
        MultiPoly::constant(Rational(-1)));

  // b^3 -> (ae) b modulo b^2 - ae
  CHECK(MultiPoly::var_b().pow(3).reduced_mod_b2_ae() ==
        abe);
  CHECK(MultiPoly::var_b().pow(4).reduced_mod_b2_ae() ==
        (MultiPoly::var_a() * MultiPoly::var_e()).pow(2));
  CHECK_THROWS_AS(abe.coeff_of_a(1), std::domain_error);
  CHECK(MultiPoly::monomial({2, 0, 0}, Rational(5)).coeff_of_a(2) ==
        Rational(5));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(30) == 8);

  auto phi6 = cyclotomic_polynomial(6);   // x^2 - x + 1
  REQUIRE(phi6.size() == 3);
  CHECK(phi6[0] == Rational(1));
  CHECK(phi6[1] == Rational(-1));
  CHECK(phi6[2] == Rational(1));

  auto phi8 = cyclotomic_polynomial(8);   // x^4 + 1
  REQUIRE(phi8.size() == 5);
  CHECK(phi8[0] == Rational(1));
  CHECK(phi8[1] == Rational(0));
  CHECK(phi8[4] == Rational(1));

  auto phi12 = cyclotomic_polynomial(12);  // x^4 - x^2 + 1
  REQUIRE(phi12.size() == 5);
  CHECK(phi12[0] == Rational(1));
  CHECK(phi12[2] == Rational(-1));
  CHECK(phi12[4] == Rational(1));
}

TEST_CASE("cyclotomic field arithmetic") {
  auto z3 = CyclotomicNumber::zeta(3);
  CHECK(z3.pow(3).is_one());
  CHECK((CyclotomicNumber::one() + z3 + z3.pow(2)).is_zero());
  CHECK(CyclotomicNumber::zeta(2) ==
        CyclotomicNumber::from_rational(Rational(-1)));

  // cross-conductor arithmetic promotes to the lcm
  auto mixed = CyclotomicNumber::zeta(4) * CyclotomicNumber::zeta(3);
  CHECK(mixed.conductor() == 12);
  CHECK(mixed.pow(12).is_one());
  CHECK(multiplicative_order(mixed) == 12);

  std::mt19937 rng(987123);
  for (int trial = 0; trial < 40; ++trial) {
    for (unsigned long cond : {3ul, 4ul, 5ul, 8ul, 12ul}) {
      CyclotomicNumber x = random_cyclo(rng, cond);
      if (x.is_zero()) continue;
      CHECK((x * x.inverse()).is_one());
      CHECK(x.pow(-2) == (x * x).inverse());
    }
  }
  CHECK_THROWS_AS(CyclotomicNumber::zero().inverse(), std::domain_error);
}

TEST_CASE("roots of unity and orders") {
  CHECK(multiplicative_order(CyclotomicNumber::one()) == 1);
  CHECK(multiplicative_order(CyclotomicNumber::from_rational(Rational(-1))) ==
        2);
  CHECK(multiplicative_order(CyclotomicNumber::zeta(6)) == 6);
  CHECK(multiplicative_order(CyclotomicNumber::zeta(6).pow(2)) == 3);
  CHECK(multiplicative_order(CyclotomicNumber::from_rational(Rational(2))) ==
        0);
  CHECK(multiplicative_order(
            CyclotomicNumber::from_rational(Rational(1, 2))) == 0);

  CHECK(is_primitive_root(CyclotomicNumber::zeta(6).pow(2), 3));
  CHECK(is_primitive_root(CyclotomicNumber::zeta(4), 4));
  CHECK_FALSE(is_primitive_root(CyclotomicNumber::zeta(4), 2));
  CHECK_FALSE(is_primitive_root(CyclotomicNumber::one(), 3));
}

TEST_CASE("minimal conductor form") {
  auto m1 = CyclotomicNumber::zeta(2).minimal_conductor_form();
  CHECK(m1.conductor() == 1);
  CHECK(m1.rational_value() == Rational(-1));

  auto m2 = CyclotomicNumber::zeta(12).pow(2).minimal_conductor_form();
  CHECK(m2.conductor() == 3);
  CHECK(m2 == CyclotomicNumber::zeta(6).minimal_conductor_form());

  auto sum = CyclotomicNumber::zeta(3) + CyclotomicNumber::zeta(3).pow(2);
  CHECK(sum.minimal_conductor_form().conductor() == 1);
  CHECK(sum.minimal_conductor_form().rational_value() == Rational(-1));

  auto m5 = CyclotomicNumber::zeta(5).minimal_conductor_form();
  CHECK(m5.conductor() == 5);
}

TEST_CASE("parameter points and evaluation") {
  ParamPoint pt(parse_scalar_literal("1"), parse_scalar_literal("zeta(3)"),
                parse_scalar_literal("zeta(3)^2"));
  CHECK(pt.a.conductor() == pt.b.conductor());
  CHECK(pt.b.conductor() == pt.e.conductor());
  CHECK_THROWS_AS(ParamPoint(CyclotomicNumber::zero(), CyclotomicNumber::one(),
                             CyclotomicNumber::one()),
                  std::domain_error);

  std::mt19937 rng(5511);
  for (int trial = 0; trial < 25; ++trial) {
    MultiPoly p = random_poly(rng), q = random_poly(rng);
    CHECK(evaluate(p + q, pt) == evaluate(p, pt) + evaluate(q, pt));
    CHECK(evaluate(p * q, pt) == evaluate(p, pt) * evaluate(q, pt));
  }
  CHECK(evaluate(MultiPoly::var_b(), pt) == pt.b);
  CHECK(evaluate(MultiPoly::one(), pt).is_one());
}

TEST_CASE("q-integers and q-factorials") {
  MultiPoly b = MultiPoly::var_b();
  CHECK(q_int(0, b) == MultiPoly::zero());
  CHECK(q_int(1, b) == MultiPoly::one());
  CHECK(q_int(3, b) == MultiPoly::one() + b + b.pow(2));
  CHECK(q_factorial(0, b) == MultiPoly::one());
  CHECK(q_factorial(2, b) == MultiPoly::one() + b);

  // at b = 1 the q-factorial is the ordinary factorial
  auto one = CyclotomicNumber::one();
  CHECK(q_factorial(4, one).rational_value() == Rational(24));

  // at a primitive n-th root, (n)_b = 0
  auto z5 = CyclotomicNumber::zeta(5);
  CHECK(q_int(5, z5).is_zero());
  CHECK_FALSE(q_int(4, z5).is_zero());
}

TEST_CASE("quadratic extension") {
  auto z3 = CyclotomicNumber::zeta(3);
  auto s = sqrt_adjoin(z3);
  CHECK((s * s) == QuadExt<CyclotomicNumber>::from_base(z3, z3));
  CHECK(s.pow(6) == QuadExt<CyclotomicNumber>::from_base(
                        CyclotomicNumber::one(), z3));
  auto one_plus_s = QuadExt<CyclotomicNumber>::from_base(
                        CyclotomicNumber::one(), z3) +
                    s;
  CHECK((one_plus_s * one_plus_s.inverse()) ==
        QuadExt<CyclotomicNumber>::from_base(CyclotomicNumber::one(), z3));
  CHECK_THROWS_AS(sqrt_adjoin(CyclotomicNumber::zero()), std::domain_error);
}

TEST_CASE("scalar literal grammar") {
  CHECK(parse_scalar_literal("1").is_one());
  CHECK(parse_scalar_literal("-1") ==
        CyclotomicNumber::from_rational(Rational(-1)));
  CHECK(parse_scalar_literal("2/3") ==
        CyclotomicNumber::from_rational(Rational(2, 3)));
  CHECK(parse_scalar_literal("-6/4") ==
        CyclotomicNumber::from_rational(Rational(-3, 2)));
  CHECK(parse_scalar_literal("zeta(3)") == CyclotomicNumber::zeta(3));
  CHECK(parse_scalar_literal("zeta(8)^3") == CyclotomicNumber::zeta(8).pow(3));
  CHECK(parse_scalar_literal("zeta(8)^-1") ==
        CyclotomicNumber::zeta(8).inverse());
  CHECK(parse_scalar_literal("1/2*zeta(4)") ==
        CyclotomicNumber::from_rational(Rational(1, 2)) *
            CyclotomicNumber::zeta(4));
  CHECK(parse_scalar_literal("zeta(3)*zeta(4)") ==
        CyclotomicNumber::zeta(12).pow(7));
  CHECK(parse_scalar_literal(" - 1 ") ==
        CyclotomicNumber::from_rational(Rational(-1)));
  CHECK(parse_scalar_literal("-zeta(3)") == -CyclotomicNumber::zeta(3));

  for (const char* bad : {"", "x", "zeta", "zeta(", "zeta(0)", "zeta(3",
                          "zeta(3)^", "1/0", "1//2", "2**3", "1x", "zeta(3)zeta(4)",
                          "*2", "1*", "3^2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_scalar_literal(bad), std::invalid_argument);
  }
}
