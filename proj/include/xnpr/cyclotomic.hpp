#pragma once

// Elements of the cyclotomic field Q(zeta_n), stored as coefficient vectors
// of length phi(n) in the power basis 1, zeta, ..., zeta^(phi(n)-1), i.e.
// polynomials reduced modulo the n-th cyclotomic polynomial.

#include "xnpr/arith.hpp"
#include "xnpr/rational.hpp"

#include <cstdint>
#include <vector>

namespace xnpr {

/// Dense polynomial over Q, lowest degree first, no trailing zeros
/// (the zero polynomial is the empty vector).
using RationalPoly = std::vector<Rational>;

namespace poly {
void trim(RationalPoly& f);
int degree(const RationalPoly& f);  // -1 for zero
RationalPoly add(const RationalPoly& f, const RationalPoly& g);
RationalPoly sub(const RationalPoly& f, const RationalPoly& g);
RationalPoly mul(const RationalPoly& f, const RationalPoly& g);
/// f = q*g + r with deg r < deg g.
void divmod(const RationalPoly& f, const RationalPoly& g, RationalPoly& q, RationalPoly& r);
RationalPoly rem(const RationalPoly& f, const RationalPoly& g);
/// Res(f, g) via the Euclidean remainder sequence.
Rational resultant(const RationalPoly& f, const RationalPoly& g);
}  // namespace poly

/// Phi_n with integer coefficients, computed by dividing x^n - 1 by Phi_d, d | n, d < n.
const RationalPoly& cyclotomic_polynomial(std::int64_t n);

class Cyclotomic {
 public:
  /// Zero element of Q(zeta_n).
  explicit Cyclotomic(std::int64_t n);
  /// Reduces an arbitrary-degree polynomial in zeta modulo Phi_n.
  Cyclotomic(std::int64_t n, RationalPoly coefficients);

  static Cyclotomic constant(std::int64_t n, const Rational& c);
  /// zeta_n^k for any integer k.
  static Cyclotomic zeta(std::int64_t n, std::int64_t k = 1);

  std::int64_t modulus() const { return n_; }
  /// Always phi(n) entries.
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws MathError if any coefficient beyond degree 0 survives.
  Rational to_rational() const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Rational& c);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& c) { return a *= c; }
  friend Cyclotomic operator*(const Rational& c, Cyclotomic a) { return a *= c; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiplicative inverse via the extended Euclidean algorithm against Phi_n.
  Cyclotomic inverse() const;
  Cyclotomic pow(std::int64_t e) const;

  /// Field norm down to Q, computed as Res(Phi_n, x).
  Rational norm() const;

  RationalPoly as_poly() const;

 private:
  void check_same_modulus(const Cyclotomic& other) const;

  std::int64_t n_;
  std::vector<Rational> coeffs_;
};

inline Cyclotomic cyc_add(const Cyclotomic& x, const Cyclotomic& y) { return x + y; }
inline Cyclotomic cyc_mul(const Cyclotomic& x, const Cyclotomic& y) { return x * y; }
inline Cyclotomic cyc_inv(const Cyclotomic& x) { return x.inverse(); }

/// pi-adic valuation in Q(zeta_{p^r}) normalized by nu_pi(1 - zeta_{p^r}) = 1.
/// Total ramification with residue degree 1 makes nu_pi = nu_p(Norm).
std::int64_t pi_valuation(const Cyclotomic& x, std::int64_t p, unsigned r);

}  // namespace xnpr
