#pragma once

// Closed-form invariants of X(Np^r) and the exponent bounds.

#include "xnpr/rational.hpp"
#include "xnpr/xcurve.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace xnpr {

/// #SL2(Z/MZ), M >= 2.
Integer sl2_order(std::int64_t M);
/// Number of cusps of X(M), M >= 3.
Integer num_cusps(std::int64_t M);
/// deg S(N) = (p-1) #SL2(Z/NZ) / 24.
Rational deg_ss(std::int64_t N, std::int64_t p);
/// Cusps of X(Np^r) lying on one component: phi(p^r) #C(N).
Integer cusps_per_component(std::int64_t N, std::int64_t p, unsigned r);

Rational deg_omega_2k_restricted(std::int64_t N, std::int64_t p, unsigned r, std::int64_t k);
Rational deg_cusp_sheaf_restricted(std::int64_t N, std::int64_t p, unsigned r, std::int64_t k);
Rational deg_dualizing_restricted(std::int64_t N, std::int64_t p, unsigned r);

Integer upper_bound_per_component(std::int64_t p, unsigned r, std::int64_t k, const ComponentLabel& label);
/// 2k p^(r-1) (pr - r + 1).
Integer exponent_upper(std::int64_t p, unsigned r, std::int64_t k);

Rational cusp_form_upper(std::int64_t N, std::int64_t p, unsigned r, std::int64_t k);
Rational edixhoven_bound(std::int64_t N, std::int64_t p, unsigned r);

struct ExponentReport {
  std::int64_t p = 0;
  unsigned r = 0;
  std::int64_t N = 0;
  std::int64_t k = 0;
  Integer upper;
  std::optional<Integer> lower;
  std::optional<Integer> exact;
  std::map<ComponentLabel, Rational> perComponent;
  Rational cuspFormUpper;
  Rational edixhovenBound;
  /// Set when no lower bound is available.
  std::string note;
};

ExponentReport exponent_exact(std::int64_t p, unsigned r, std::int64_t N, std::int64_t k);

}  // namespace xnpr
