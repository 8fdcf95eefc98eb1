#pragma once

// Independent oracles and the check suites built on them. Shared by the
// `verify` CLI subcommand and the acceptance binary.

#include "xnpr/cyclotomic.hpp"
#include "xnpr/klein.hpp"
#include "xnpr/rational.hpp"
#include "xnpr/xcurve.hpp"

#include <functional>
#include <string>
#include <vector>

namespace xnpr::verify {

struct CheckResult {
  std::string id;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

namespace oracle {

/// #((Z/p^r)^2 / (ker l1 + ker l2))^2 by explicit subgroup enumeration;
/// equal labels get minus the sum over all other labels.
Rational local_intersection(const ComponentLabel& l1, const ComponentLabel& l2, std::int64_t p, unsigned r);

Integer sum_p2vp(std::int64_t p, unsigned r);
std::int64_t sum_nup(std::int64_t p, unsigned r);
std::int64_t sum_nup_shifted(std::int64_t p, unsigned r, std::int64_t i);
/// sum over units u mod p^N of zeta^(-uJ), evaluated in Q(zeta_{p^N}).
Cyclotomic root_of_unity_sum(std::int64_t p, unsigned N, std::int64_t J);

/// Determinant of multiplication by x on the power basis.
Rational norm(const Cyclotomic& x);

/// Truncated power series quotient num/den, den(0) != 0.
std::vector<Rational> series_divide(const RationalPoly& num, const RationalPoly& den, std::size_t terms);

/// Product expansion of a Klein family at infinity through q^(L + terms - 1),
/// assembled as one numerator and one denominator polynomial; integer L only.
std::vector<Rational> klein_qexp(const KleinFamily& f, std::size_t terms);

}  // namespace oracle

/// Parameter grids.
std::vector<std::pair<std::int64_t, unsigned>> closed_form_grid();
std::vector<std::pair<std::int64_t, unsigned>> small_grid();  // p^r <= 9

/// Acceptance criteria 1..11.
CheckResult criterion(int index);
std::vector<CheckResult> acceptance();

/// Named suites: arith, linalg, xcurve, invariants, klein, all.
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& name);

}  // namespace xnpr::verify
