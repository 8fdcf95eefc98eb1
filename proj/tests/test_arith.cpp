#include "xnpr/arith.hpp"
#include "xnpr/cyclotomic.hpp"
#include "xnpr/verify.hpp"

#include <doctest.h>

using namespace xnpr;

TEST_CASE("nu_p") {
  CHECK(nu_p(Rational(12), 2) == 2);
  CHECK(nu_p(Rational(1), 7) == 0);
  CHECK(nu_p(Rational(9, 2), 3) == 2);
  CHECK(nu_p(Rational(2, 9), 3) == -2);
  CHECK_THROWS_WITH_AS(nu_p(Rational(0), 5), "valuation of zero", MathError);
  CHECK(valuation(Rational(0), 3).is_infinite());
  CHECK(valuation(Rational(18), 3) == Valuation::finite(2));
}

TEST_CASE("nu_p_residue") {
  CHECK(nu_p_residue(6, 3, 2) == 1);
  CHECK(nu_p_residue(-1, 5, 1) == 0);
  CHECK(nu_p_residue(4, 2, 3) == 2);
  CHECK_THROWS_AS(nu_p_residue(9, 3, 2), MathError);
}

TEST_CASE("closed-form sums") {
  CHECK(sum_p2vp(3, 2) == 24);
  CHECK(sum_p2vp(2, 1) == 1);
  CHECK(sum_p2vp(5, 1) == 4);
  CHECK(sum_nup(2, 3) == 4);
  CHECK(sum_nup(3, 1) == 0);
  CHECK(sum_nup(3, 2) == 2);
  CHECK(sum_nup_shifted(2, 3, 4) == 2);
  CHECK(sum_nup_shifted(3, 2, 1) == 2);
  CHECK(sum_nup_shifted(5, 1, 2) == 0);
  CHECK_THROWS_AS(sum_nup_shifted(5, 1, 5), std::invalid_argument);
  CHECK(root_of_unity_sum(3, 2, 3) == -3);
  CHECK(root_of_unity_sum(3, 2, 9) == 6);
  CHECK(root_of_unity_sum(5, 1, 2) == -1);
  CHECK(root_of_unity_sum(3, 2, 1) == 0);
}

TEST_CASE("closed-form sums agree with brute force") {
  for (auto [p, r] : std::vector<std::pair<std::int64_t, unsigned>>{{2, 4}, {3, 3}, {5, 2}, {7, 1}}) {
    CHECK(sum_p2vp(p, r) == verify::oracle::sum_p2vp(p, r));
    CHECK(sum_nup(p, r) == verify::oracle::sum_nup(p, r));
    for (std::int64_t i = 1; i < ipow64(p, r); ++i) CHECK(sum_nup_shifted(p, r, i) == verify::oracle::sum_nup_shifted(p, r, i));
  }
  CHECK(verify::oracle::root_of_unity_sum(3, 2, 3) == Cyclotomic::constant(9, -3));
}

TEST_CASE("rational helpers") {
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
  CHECK(to_string(Rational(8, 4)) == "2");
  CHECK(parse_rational("-3/2") == Rational(-3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(frac(Rational(-1, 3)) == Rational(2, 3));
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(rpow(3, -2) == Rational(1, 9));
}

TEST_CASE("cyclotomic ring") {
  CHECK(cyc_mul(Cyclotomic::zeta(4), Cyclotomic::zeta(4)) == Cyclotomic::constant(4, -1));
  CHECK(cyc_add(Cyclotomic::zeta(3), Cyclotomic::zeta(3, 2)) == Cyclotomic::constant(3, -1));
  const Cyclotomic x = Cyclotomic::constant(5, 1) - Cyclotomic::zeta(5);
  const Cyclotomic inv = cyc_inv(x);
  CHECK(inv == Cyclotomic(5, {Rational(4, 5), Rational(3, 5), Rational(2, 5), Rational(1, 5)}));
  CHECK(inv * x == Cyclotomic::constant(5, 1));
  CHECK(Cyclotomic::zeta(7, -1) * Cyclotomic::zeta(7) == Cyclotomic::constant(7, 1));
  CHECK(Cyclotomic::zeta(9).pow(9) == Cyclotomic::constant(9, 1));
  CHECK(Cyclotomic::zeta(8).pow(-3) * Cyclotomic::zeta(8, 3) == Cyclotomic::constant(8, 1));
  CHECK_THROWS_WITH_AS(Cyclotomic::zeta(4) + Cyclotomic::zeta(5), "cyclotomic modulus mismatch", MathError);
  CHECK_THROWS_AS(cyc_inv(Cyclotomic(6)), MathError);
  CHECK_THROWS_AS(Cyclotomic::zeta(5).to_rational(), MathError);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == RationalPoly{-1, 1});
  CHECK(cyclotomic_polynomial(4) == RationalPoly{1, 0, 1});
  CHECK(cyclotomic_polynomial(9) == RationalPoly{1, 0, 0, 1, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == RationalPoly{1, 0, -1, 0, 1});
}

TEST_CASE("norm and pi-adic valuation") {
  const Cyclotomic pi5 = Cyclotomic::constant(5, 1) - Cyclotomic::zeta(5);
  CHECK(pi5.norm() == 5);
  CHECK(pi5.norm() == verify::oracle::norm(pi5));
  CHECK(pi_valuation(pi5, 5, 1) == 1);
  for (auto [p, r] : std::vector<std::pair<std::int64_t, unsigned>>{{2, 2}, {3, 2}, {5, 1}, {2, 3}})
    CHECK(pi_valuation(Cyclotomic::constant(ipow64(p, r), p), p, r) == euler_phi(ipow64(p, r)));
  CHECK(pi_valuation(Cyclotomic::constant(4, 1) - Cyclotomic::zeta(4, 2), 2, 2) == 2);
  CHECK(pi_valuation(Cyclotomic::constant(9, Rational(1, 3)), 3, 2) == -6);
  CHECK_THROWS_AS(pi_valuation(Cyclotomic(5), 5, 1), MathError);
  CHECK_THROWS_AS(pi_valuation(pi5, 5, 2), MathError);
}
