#pragma once

// Exact scalars shared by every module: GMP-backed integers and rationals,
// wired into Eigen so dense matrices of rationals behave like any other
// Eigen matrix.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace xnpr {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat = MatrixX<Rational>;
using Vec = VectorX<Rational>;

/// Raised when a computation leaves its mathematical domain
/// (valuation of zero, singular matrix, modulus mismatch, ...).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline Integer numerator(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer denominator(const Rational& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Accepts "a", "-a", "a/b"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// p^e for e >= 0.
Integer ipow(const Integer& base, unsigned exponent);
std::int64_t ipow64(std::int64_t base, unsigned exponent);

/// x^e for e >= 0.
Rational qpow(const Rational& x, unsigned exponent);

/// p^e as an exact rational, negative exponents allowed.
Rational rpow(std::int64_t base, std::int64_t exponent);

/// Fractional part <x> in [0, 1).
Rational frac(const Rational& x);

/// Floor of an exact rational.
Integer floor(const Rational& x);

/// Converts to int64 or throws MathError on overflow / non-integrality.
std::int64_t to_int64(const Rational& x);

}  // namespace xnpr
