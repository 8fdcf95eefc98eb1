#pragma once

#include "xnpr/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace xnpr {

/// p-adic (or pi-adic) valuation; infinite exactly for the zero element.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  static Valuation finite(std::int64_t v) { return Valuation(v); }

  bool is_infinite() const { return !value_.has_value(); }
  std::int64_t value() const {
    if (!value_) throw MathError("valuation is infinite");
    return *value_;
  }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  Valuation() = default;
  explicit Valuation(std::int64_t v) : value_(v) {}
  std::optional<std::int64_t> value_;
};

bool is_prime(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::int64_t, unsigned>> factorize(std::int64_t n);
/// Returns (p, r) when n = p^r with r >= 1, nothing otherwise.
std::optional<std::pair<std::int64_t, unsigned>> prime_power(std::int64_t n);
/// Non-negative residue of a modulo m (m > 0).
std::int64_t mod(std::int64_t a, std::int64_t m);

/// Exponent of p in a nonzero rational; throws MathError("valuation of zero").
std::int64_t nu_p(const Rational& x, std::int64_t p);
/// Same as nu_p but returns Valuation::infinity() for zero.
Valuation valuation(const Rational& x, std::int64_t p);

/// nu_p of the class of i in Z/p^rZ, in [0, r-1]; i = 0 mod p^r is an error.
unsigned nu_p_residue(std::int64_t i, std::int64_t p, unsigned r);

/// Sum over nonzero a' in Z/p^rZ of p^(2 nu_p(a')), i.e. p^(2r-1) - p^(r-1).
Integer sum_p2vp(std::int64_t p, unsigned r);

/// Sum_{m=1}^{p^r-1} nu_p(m) = (p^r - pr + r - 1)/(p - 1).
std::int64_t sum_nup(std::int64_t p, unsigned r);

/// Sum over j != i in 1..p^r-1 of nu_p((j - i) mod p^r).
std::int64_t sum_nup_shifted(std::int64_t p, unsigned r, std::int64_t i);

/// Sum over units u mod p^N of zeta_{p^N}^(-uJ); always an integer.
Integer root_of_unity_sum(std::int64_t p, unsigned N, std::int64_t J);

}  // namespace xnpr
