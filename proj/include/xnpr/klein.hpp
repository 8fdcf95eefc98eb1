#pragma once

// Products of Klein forms kappa_(t/n, 0)(n tau)^m(t): validity, orders at
// cusps, q-expansions at infinity and the pi-adic valuation at the cusp 0.

#include "xnpr/cyclotomic.hpp"
#include "xnpr/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace xnpr {

struct KleinFamily {
  std::int64_t n = 0;
  /// t -> m(t) for 1 <= t <= n-1; zero exponents are never stored.
  std::map<std::int64_t, std::int64_t> m;

  std::int64_t weight() const;

  /// "t:m,t:m,..."; an empty string is the empty family.
  static KleinFamily parse(std::int64_t n, std::string_view text);
  std::string str() const;

  friend bool operator==(const KleinFamily&, const KleinFamily&) = default;
};

/// The cusp class with gcd(c, n) = g and a taken mod g.
struct CuspClass {
  std::int64_t g = 1;
  std::int64_t a = 1;
};

/// g over the divisors of n, a over units mod g (a = 1 for g in {1, 2}).
std::vector<CuspClass> cusp_classes(std::int64_t n);

/// Series sum_i coeffs[i] q^(leadingExponent + i/D).
struct QSeries {
  std::int64_t denominatorD = 1;
  Rational leadingExponent;
  std::vector<Rational> coeffs;
  std::int64_t truncationLength = 0;

  Rational exponent(std::size_t i) const { return leadingExponent + Rational(static_cast<std::int64_t>(i), denominatorD); }
};

bool check_congruence(const KleinFamily& f);
Rational cusp_order(const KleinFamily& f, const CuspClass& c);
bool is_holomorphic(const KleinFamily& f);

/// (1/2) sum_t m(t) <tx>(<tx> - 1).
Rational fractional_part_sum(const KleinFamily& f, const Rational& x);

/// Throws MathError("no construction known") for p^r <= 3.
KleinFamily standard_family(std::int64_t p, unsigned r);

/// (1/2) sum_t m(t) t(t - n)/n.
Rational leading_exponent_infinity(const KleinFamily& f);

/// Exponents c_j with the product part equal to prod_j (1 - q^j)^(c_j), j = 1..maxDegree.
std::vector<std::int64_t> product_exponents(const KleinFamily& f, std::int64_t maxDegree);

QSeries qexp_infinity(const KleinFamily& f, std::int64_t trunc = 50);

/// -w r phi(p^r) + sum_t m(t) p^(nu_p(t)), n = p^r, w the weight.
std::int64_t valuation_at_zero(const KleinFamily& f);
/// prod_t (1 - zeta_n^(-t))^m(t) p^(-r w).
Cyclotomic leading_coefficient_at_zero(const KleinFamily& f);
/// pi_valuation of leading_coefficient_at_zero.
std::int64_t valuation_at_zero_cyclotomic(const KleinFamily& f);

Integer lower_bound(std::int64_t p, unsigned r, std::int64_t k);

/// Weight-2 families with support <= maxSupport and |m(t)| <= maxAbsCoeff that
/// satisfy the congruence and are holomorphic, ordered by valuation_at_zero.
std::vector<KleinFamily> search_families(std::int64_t n, std::int64_t maxSupport, std::int64_t maxAbsCoeff);

}  // namespace xnpr
