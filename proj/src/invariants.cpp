#include "xnpr/invariants.hpp"

#include "xnpr/arith.hpp"
#include "xnpr/klein.hpp"

namespace xnpr {

namespace {

void check_level(std::int64_t N, std::int64_t p) {
  if (N < 3) throw std::invalid_argument("N must be at least 3");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  if (N % p == 0) throw std::invalid_argument("p must not divide N");
}

void check_curve(std::int64_t N, std::int64_t p, unsigned r) {
  check_level(N, p);
  if (r < 1) throw std::invalid_argument("r must be at least 1");
}

void check_k(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
}

std::int64_t s_of(std::int64_t p, unsigned r) { return p * r - r + 1; }

}  // namespace

Integer sl2_order(std::int64_t M) {
  if (M < 2) throw std::invalid_argument("sl2_order expects M >= 2");
  Integer out(1);
  for (const auto& [q, e] : factorize(M)) out *= ipow(Integer(q), 3 * e) - ipow(Integer(q), 3 * e - 2);
  return out;
}

Integer num_cusps(std::int64_t M) {
  if (M < 3) throw std::invalid_argument("num_cusps expects M >= 3");
  return sl2_order(M) / (2 * M);
}

Rational deg_ss(std::int64_t N, std::int64_t p) {
  check_level(N, p);
  return Rational(sl2_order(N) * (p - 1), Integer(24));
}

Integer cusps_per_component(std::int64_t N, std::int64_t p, unsigned r) {
  check_curve(N, p, r);
  return euler_phi(ipow64(p, r)) * num_cusps(N);
}

Rational deg_omega_2k_restricted(std::int64_t N, std::int64_t p, unsigned r, std::int64_t k) {
  check_curve(N, p, r);
  check_k(k);
  return Rational(sl2_order(N) * k * (p - 1)) * rpow(p, 2 * static_cast<std::int64_t>(r) - 1) / 12;
}

Rational deg_cusp_sheaf_restricted(std::int64_t N, std::int64_t p, unsigned r, std::int64_t k) {
  check_curve(N, p, r);
  check_k(k);
  const Rational bracket = rpow(p, 2 * static_cast<std::int64_t>(r) - 1) / 12 - rpow(p, r - 1) / (2 * N);
  return Rational(sl2_order(N) * k * (p - 1)) * bracket;
}

Rational deg_dualizing_restricted(std::int64_t N, std::int64_t p, unsigned r) {
  check_curve(N, p, r);
  const std::int64_t phi = euler_phi(ipow64(p, r));
  return Rational(sl2_order(N) * ipow64(p, r) * phi) / 24 - Rational(num_cusps(N) * phi) +
         deg_ss(N, p) * rpow(p, 2 * static_cast<std::int64_t>(r) - 1);
}

Integer upper_bound_per_component(std::int64_t p, unsigned r, std::int64_t k, const ComponentLabel& label) {
  validate_label(label, p, r);
  check_k(k);
  if (label == ComponentLabel::A(0)) throw std::invalid_argument("bound undefined for A(0)");
  const Integer head = 2 * k * ipow(Integer(p), r - 1);
  Integer out = head * s_of(p, r);
  if (label.kind == ComponentKind::A) out -= head * (p - 1) * nu_p_residue(label.index, p, r);
  return out;
}

Integer exponent_upper(std::int64_t p, unsigned r, std::int64_t k) {
  validate_pr(p, r);
  check_k(k);
  return 2 * k * ipow(Integer(p), r - 1) * s_of(p, r);
}

Rational cusp_form_upper(std::int64_t N, std::int64_t p, unsigned r, std::int64_t k) {
  check_curve(N, p, r);
  check_k(k);
  return Rational(exponent_upper(p, r, k)) - Rational(12 * k, N * p) * s_of(p, r);
}

Rational edixhoven_bound(std::int64_t N, std::int64_t p, unsigned r) {
  check_curve(N, p, r);
  return 2 * rpow(p, 2 * static_cast<std::int64_t>(r) - 1) - 12 * rpow(p, r - 1) / N;
}

ExponentReport exponent_exact(std::int64_t p, unsigned r, std::int64_t N, std::int64_t k) {
  check_curve(N, p, r);
  check_k(k);
  ExponentReport report;
  report.p = p;
  report.r = r;
  report.N = N;
  report.k = k;
  report.upper = exponent_upper(p, r, k);
  for (const auto& label : truncated_labels(p, r))
    report.perComponent.emplace(label, Rational(upper_bound_per_component(p, r, k, label)));
  report.cuspFormUpper = cusp_form_upper(N, p, r, k);
  report.edixhovenBound = edixhoven_bound(N, p, r);
  if (ipow64(p, r) > 3) {
    report.lower = lower_bound(p, r, k);
    if (*report.lower == report.upper) report.exact = report.upper;
  } else {
    report.note = "lower bound unavailable";
  }
  return report;
}

}  // namespace xnpr
