#include "xnpr/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace xnpr {

namespace poly {

void trim(RationalPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const RationalPoly& f) { return static_cast<int>(f.size()) - 1; }

RationalPoly add(const RationalPoly& f, const RationalPoly& g) {
  RationalPoly out(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < f.size(); ++i) out[i] += f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] += g[i];
  trim(out);
  return out;
}

RationalPoly sub(const RationalPoly& f, const RationalPoly& g) {
  RationalPoly out(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < f.size(); ++i) out[i] += f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] -= g[i];
  trim(out);
  return out;
}

RationalPoly mul(const RationalPoly& f, const RationalPoly& g) {
  if (f.empty() || g.empty()) return {};
  RationalPoly out(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  }
  trim(out);
  return out;
}

void divmod(const RationalPoly& f, const RationalPoly& g, RationalPoly& q, RationalPoly& r) {
  if (g.empty()) throw MathError("polynomial division by zero");
  r = f;
  trim(r);
  const int dg = degree(g);
  q.assign(r.size() > g.size() - 1 ? r.size() - g.size() + 1 : 0, Rational(0));
  const Rational lead = g.back();
  while (degree(r) >= dg) {
    const int shift = degree(r) - dg;
    const Rational c = r.back() / lead;
    q[shift] += c;
    for (int i = 0; i <= dg; ++i) r[shift + i] -= c * g[i];
    trim(r);
  }
  trim(q);
}

RationalPoly rem(const RationalPoly& f, const RationalPoly& g) {
  RationalPoly q, r;
  divmod(f, g, q, r);
  return r;
}

Rational resultant(const RationalPoly& f_in, const RationalPoly& g_in) {
  RationalPoly f = f_in, g = g_in;
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) return Rational(0);
  Rational acc(1);
  for (;;) {
    const int m = degree(f), n = degree(g);
    if (n == 0) return acc * qpow(g.back(), static_cast<unsigned>(m));
    if (m == 0) return acc * qpow(f.back(), static_cast<unsigned>(n));
    RationalPoly r = rem(f, g);
    if (r.empty()) return Rational(0);
    // Res(f, g) = (-1)^(mn) lc(g)^(m - deg r) Res(g, r)
    if ((m % 2 == 1) && (n % 2 == 1)) acc = -acc;
    acc *= qpow(g.back(), static_cast<unsigned>(m - degree(r)));
    f = std::move(g);
    g = std::move(r);
  }
}

}  // namespace poly

const RationalPoly& cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic modulus must be positive");
  static std::mutex guard;
  static std::map<std::int64_t, std::unique_ptr<RationalPoly>> cache;
  {
    std::lock_guard lock(guard);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  RationalPoly f(static_cast<std::size_t>(n) + 1, Rational(0));
  f.front() = -1;
  f.back() = 1;
  for (std::int64_t d : divisors(n)) {
    if (d == n) continue;
    RationalPoly q, r;
    poly::divmod(f, cyclotomic_polynomial(d), q, r);
    f = std::move(q);
  }
  std::lock_guard lock(guard);
  auto [it, inserted] = cache.emplace(n, std::make_unique<RationalPoly>(std::move(f)));
  return *it->second;
}

Cyclotomic::Cyclotomic(std::int64_t n) : n_(n) {
  if (n < 1) throw std::invalid_argument("cyclotomic modulus must be positive");
  coeffs_.assign(static_cast<std::size_t>(euler_phi(n)), Rational(0));
}

Cyclotomic::Cyclotomic(std::int64_t n, RationalPoly coefficients) : Cyclotomic(n) {
  poly::trim(coefficients);
  RationalPoly reduced = poly::rem(coefficients, cyclotomic_polynomial(n));
  for (std::size_t i = 0; i < reduced.size(); ++i) coeffs_[i] = reduced[i];
}

Cyclotomic Cyclotomic::constant(std::int64_t n, const Rational& c) {
  Cyclotomic out(n);
  out.coeffs_[0] = c;
  return out;
}

Cyclotomic Cyclotomic::zeta(std::int64_t n, std::int64_t k) {
  RationalPoly mono(static_cast<std::size_t>(mod(k, n)) + 1, Rational(0));
  mono.back() = 1;
  return Cyclotomic(n, std::move(mono));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw MathError("cyclotomic element is not rational");
  return coeffs_[0];
}

void Cyclotomic::check_same_modulus(const Cyclotomic& other) const {
  if (n_ != other.n_) throw MathError("cyclotomic modulus mismatch");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  check_same_modulus(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  check_same_modulus(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  check_same_modulus(other);
  *this = Cyclotomic(n_, poly::mul(as_poly(), other.as_poly()));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

RationalPoly Cyclotomic::as_poly() const {
  RationalPoly f = coeffs_;
  poly::trim(f);
  return f;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw MathError("inversion of zero in cyclotomic field");
  // Invariant: s_i * x = r_i (mod Phi_n).
  RationalPoly r0 = cyclotomic_polynomial(n_), r1 = as_poly();
  RationalPoly s0, s1{Rational(1)};
  while (poly::degree(r1) > 0) {
    RationalPoly q, r;
    poly::divmod(r0, r1, q, r);
    RationalPoly s = poly::sub(s0, poly::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw MathError("element is a zero divisor modulo Phi_n");
  const Rational scale = Rational(1) / r1.front();
  for (auto& c : s1) c *= scale;
  return Cyclotomic(n_, std::move(s1));
}

Cyclotomic Cyclotomic::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result = constant(n_, Rational(1));
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Rational Cyclotomic::norm() const {
  if (is_zero()) return Rational(0);
  return poly::resultant(cyclotomic_polynomial(n_), as_poly());
}

std::int64_t pi_valuation(const Cyclotomic& x, std::int64_t p, unsigned r) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (x.modulus() != ipow64(p, r)) throw MathError("pi_valuation expects an element of Q(zeta_{p^r})");
  if (x.is_zero()) throw MathError("valuation of zero");
  // Over Q the resultant already absorbs any global denominator d through
  // Norm(x/d) = Norm(x) / d^phi(p^r).
  return nu_p(x.norm(), p);
}

}  // namespace xnpr
