#include "xnpr/invariants.hpp"
#include "xnpr/klein.hpp"
#include "xnpr/linalg.hpp"
#include "xnpr/verify.hpp"

#include <doctest.h>

using namespace xnpr;

TEST_CASE("sl2_order") {
  CHECK(sl2_order(3) == 24);
  CHECK(sl2_order(4) == 48);
  CHECK(sl2_order(12) == 1152);
  CHECK(sl2_order(5) == 120);
}

TEST_CASE("num_cusps") {
  CHECK(num_cusps(3) == 4);
  CHECK(num_cusps(4) == 6);
  CHECK(num_cusps(5) == 12);
}

TEST_CASE("deg_ss") {
  CHECK(deg_ss(3, 5) == 4);
  CHECK(deg_ss(3, 2) == 1);
  CHECK(deg_ss(4, 3) == 4);
}

TEST_CASE("cusps_per_component") {
  CHECK(cusps_per_component(3, 5, 1) == 16);
  CHECK(cusps_per_component(3, 2, 2) == 8);
  CHECK(cusps_per_component(4, 3, 1) == 12);
  CHECK(cusps_per_component(3, 5, 1) * 6 == num_cusps(15));
}

TEST_CASE("restricted degrees") {
  CHECK(deg_omega_2k_restricted(3, 5, 1, 1) == 40);
  CHECK(deg_cusp_sheaf_restricted(3, 5, 1, 1) == 24);
  CHECK(deg_omega_2k_restricted(3, 2, 2, 1) == 16);
  CHECK(deg_dualizing_restricted(3, 5, 1) == 24);
  CHECK(deg_dualizing_restricted(3, 2, 1) == 0);
  CHECK(deg_dualizing_restricted(4, 3, 1) == 12);
}

TEST_CASE("degree consistency grid") {
  for (std::int64_t N : {3, 4, 5, 7})
    for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      const auto [p, r] = *prime_power(q);
      if (N % p == 0) continue;
      CHECK(deg_omega_2k_restricted(N, p, r, 1) == deg_dualizing_restricted(N, p, r) + Rational(cusps_per_component(N, p, r)));
      CHECK(cusps_per_component(N, p, r) * (q + q / p) == num_cusps(N * q));
    }
}

TEST_CASE("upper bounds") {
  CHECK(upper_bound_per_component(5, 1, 1, ComponentLabel::A(1)) == 10);
  CHECK(upper_bound_per_component(3, 2, 1, ComponentLabel::A(3)) == 18);
  CHECK(upper_bound_per_component(3, 2, 1, ComponentLabel::B(0)) == 30);
  CHECK(exponent_upper(5, 1, 1) == 10);
  CHECK(exponent_upper(2, 2, 1) == 12);
  CHECK(exponent_upper(7, 1, 3) == 42);
  for (std::int64_t k = 1; k <= 4; ++k) CHECK(exponent_upper(3, 2, k) == k * exponent_upper(3, 2, 1));
}

TEST_CASE("cusp-form and comparison bounds") {
  // the closed formula gives 10 - 4 = 6 here
  CHECK(cusp_form_upper(3, 5, 1, 1) == 6);
  CHECK(edixhoven_bound(3, 5, 1) == 6);
  CHECK(cusp_form_upper(3, 2, 2, 1) == 6);
}

TEST_CASE("exponent_exact") {
  const auto a = exponent_exact(5, 1, 3, 1);
  REQUIRE(a.exact);
  CHECK(*a.exact == 10);
  const auto b = exponent_exact(2, 2, 5, 1);
  REQUIRE(b.exact);
  CHECK(*b.exact == 12);
  const auto c = exponent_exact(3, 1, 4, 1);
  CHECK(c.upper == 6);
  CHECK_FALSE(c.lower);
  CHECK_FALSE(c.exact);
  CHECK(c.note == "lower bound unavailable");
  const auto d = exponent_exact(2, 2, 5, 2);
  REQUIRE(d.exact);
  CHECK(*d.exact == 24);
  CHECK_THROWS_AS(exponent_exact(5, 1, 10, 1), std::invalid_argument);
  for (auto [p, r] : std::vector<std::pair<std::int64_t, unsigned>>{{5, 1}, {7, 1}, {11, 1}, {2, 2}, {2, 3}, {3, 2}})
    for (std::int64_t k : {1, 2}) {
      const auto rep = exponent_exact(p, r, p == 3 ? 4 : 3, k);
      REQUIRE(rep.exact);
      CHECK(*rep.exact == 2 * k * ipow64(p, r - 1) * (p * r - r + 1));
      CHECK(*rep.exact == -k * valuation_at_zero_cyclotomic(standard_family(p, r)));
    }
}

TEST_CASE("per-component bound through the matrix path") {
  for (auto [p, r] : verify::closed_form_grid()) {
    const Mat inv = gauss_inverse(build_T(p, r));
    const auto labels = truncated_labels(p, r);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const Rational viaMatrix = -2 * rpow(p, 2 * static_cast<std::int64_t>(r) - 1) * inv.row(static_cast<Eigen::Index>(i)).sum();
      CHECK(Rational(upper_bound_per_component(p, r, 1, labels[i])) == viaMatrix);
    }
  }
}
