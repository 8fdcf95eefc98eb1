#include "xnpr/klein.hpp"
#include "xnpr/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace xnpr;

namespace {

const KleinFamily kSeven{7, {{3, -2}, {4, -2}, {5, 2}}};
const KleinFamily kFive{5, {{1, 4}, {2, -2}, {3, -4}}};
const KleinFamily kFour{4, {{1, 2}, {2, -2}, {3, -2}}};

}  // namespace

TEST_CASE("family parsing") {
  CHECK(KleinFamily::parse(7, "3:-2,4:-2,5:2") == kSeven);
  CHECK(KleinFamily::parse(7, " 5:2 , 3:-2,4:-2 ").str() == "3:-2,4:-2,5:2");
  CHECK(kSeven.weight() == 2);
  CHECK_THROWS_AS(KleinFamily::parse(7, "7:1"), std::invalid_argument);
  CHECK_THROWS_AS(KleinFamily::parse(7, "1:1,1:2"), std::invalid_argument);
  CHECK_THROWS_AS(KleinFamily::parse(7, "1-1"), std::invalid_argument);
}

TEST_CASE("check_congruence") {
  CHECK(check_congruence(kSeven));
  CHECK(check_congruence(kFive));
  CHECK_FALSE(check_congruence(KleinFamily{5, {{1, 1}}}));
}

TEST_CASE("cusp_order") {
  CHECK(cusp_order(kSeven, {7, 1}) == 2);
  CHECK(cusp_order(kFive, {5, 1}) == fractional_part_sum(kFive, Rational(1, 5)) * 5);
  CHECK(2 * fractional_part_sum(kFive, Rational(1, 5)) == Rational(4, 5));
  CHECK(cusp_order(kSeven, {1, 1}) == 0);
  CHECK(cusp_order(kFive, {1, 1}) == 0);
  CHECK_THROWS_AS(cusp_order(kSeven, {3, 1}), std::invalid_argument);
}

TEST_CASE("fractional-part table") {
  CHECK(fractional_part_sum(kSeven, Rational(1, 5)) == Rational(2, 5));
  CHECK(fractional_part_sum(kSeven, Rational(1, 4)) == 0);
  CHECK(fractional_part_sum(kSeven, Rational(1, 3)) == 0);
  CHECK(fractional_part_sum(kSeven, Rational(2, 5)) == Rational(2, 5));
  CHECK(fractional_part_sum(kSeven, Rational(1, 2)) == 0);
  for (std::int64_t a = 0; a < 7; ++a) CHECK(fractional_part_sum(kSeven, Rational(a, 7)) >= 0);
  // level 5, unhalved
  CHECK(2 * fractional_part_sum(kFive, Rational(0)) == 0);
  CHECK(2 * fractional_part_sum(kFive, Rational(1, 2)) == 0);
  CHECK(2 * fractional_part_sum(kFive, Rational(1, 5)) == Rational(4, 5));
  CHECK(2 * fractional_part_sum(kFive, Rational(2, 5)) == 0);
}

TEST_CASE("is_holomorphic") {
  CHECK(is_holomorphic(kSeven));
  CHECK(is_holomorphic(kFive));
  CHECK(is_holomorphic(kFour));
  CHECK_FALSE(is_holomorphic(KleinFamily{5, {{1, 1}}}));
}

TEST_CASE("standard_family") {
  CHECK(standard_family(7, 1) == kSeven);
  CHECK(standard_family(5, 1) == kFive);
  CHECK(standard_family(2, 2) == kFour);
  CHECK_THROWS_WITH_AS(standard_family(3, 1), "no construction known", MathError);
  CHECK_THROWS_WITH_AS(standard_family(2, 1), "no construction known", MathError);
  for (std::int64_t q : {4, 5, 7, 8, 9, 11, 16, 25}) {
    const auto [p, r] = *prime_power(q);
    const KleinFamily f = standard_family(p, r);
    CHECK(check_congruence(f));
    CHECK(is_holomorphic(f));
    CHECK(valuation_at_zero(f) == valuation_at_zero_cyclotomic(f));
  }
}

TEST_CASE("qexp_infinity") {
  const QSeries s = qexp_infinity(kSeven, 30);
  CHECK(s.leadingExponent == 2);
  CHECK(s.denominatorD == 1);
  const auto oracle = verify::oracle::klein_qexp(kSeven, 30);
  CHECK(s.coeffs == oracle);
  CHECK(s.coeffs[0] == 1);
  const QSeries one = qexp_infinity(KleinFamily{5, {}}, 10);
  CHECK(one.coeffs[0] == 1);
  CHECK(std::all_of(one.coeffs.begin() + 1, one.coeffs.end(), [](const Rational& c) { return c == 0; }));
  const QSeries five = qexp_infinity(kFive, 20);
  CHECK(five.leadingExponent == leading_exponent_infinity(kFive));
  for (const auto& c : five.coeffs) CHECK(is_integer(c));
  for (std::int64_t q : {4, 5, 7, 8, 9, 11, 16, 25}) {
    const auto [p, r] = *prime_power(q);
    const KleinFamily f = standard_family(p, r);
    const QSeries series = qexp_infinity(f, 40);
    for (const auto& c : series.coeffs) CHECK(is_integer(c));
    CHECK(cusp_order(f, {f.n, 1}) == series.leadingExponent);
  }
  CHECK_THROWS_AS(qexp_infinity(kSeven, 0), std::invalid_argument);
}

TEST_CASE("valuation_at_zero") {
  CHECK(valuation_at_zero(kSeven) == -14);
  CHECK(valuation_at_zero(kFive) == -10);
  CHECK(valuation_at_zero(kFour) == -12);
}

TEST_CASE("lower_bound") {
  CHECK(lower_bound(5, 1, 1) == 10);
  CHECK(lower_bound(2, 3, 1) == 32);
  CHECK(standard_family(2, 3) == KleinFamily{8, {{1, 2}, {4, -2}, {7, -2}}});
  CHECK(lower_bound(3, 2, 2) == 2 * 2 * 3 * 5);
}

TEST_CASE("search_families") {
  auto contains = [](const std::vector<KleinFamily>& v, const KleinFamily& f) {
    return std::find(v.begin(), v.end(), f) != v.end();
  };
  const auto seven = search_families(7, 3, 2);
  CHECK(contains(seven, kSeven));
  CHECK(contains(search_families(5, 3, 4), kFive));
  const auto four = search_families(4, 3, 2);
  CHECK(contains(four, kFour));
  for (const auto& f : seven) {
    CHECK(f.weight() == 2);
    CHECK(is_holomorphic(f));
    CHECK(valuation_at_zero(f) == valuation_at_zero_cyclotomic(f));
    const QSeries s = qexp_infinity(f, 10);
    CHECK(cusp_order(f, {f.n, 1}) == s.leadingExponent);
  }
  CHECK_THROWS_WITH_AS(search_families(25, 6, 6), "search space cap exceeded", std::invalid_argument);
}
