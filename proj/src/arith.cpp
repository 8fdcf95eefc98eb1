#include "xnpr/arith.hpp"

#include <charconv>
#include <limits>

namespace xnpr {

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& x) {
  const Integer den = denominator(x);
  if (den == 1) return numerator(x).str();
  return numerator(x).str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("empty integer");
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("malformed integer: " + std::string(text));
  }
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') throw std::invalid_argument("negative denominator");
  const Integer den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

Integer ipow(const Integer& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

Rational qpow(const Rational& x, unsigned exponent) {
  return Rational(ipow(numerator(x), exponent), ipow(denominator(x), exponent));
}

std::int64_t ipow64(std::int64_t base, unsigned exponent) {
  std::int64_t result = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && std::abs(result) > std::numeric_limits<std::int64_t>::max() / std::abs(base)) {
      throw MathError("integer power overflows int64");
    }
    result *= base;
  }
  return result;
}

Rational rpow(std::int64_t base, std::int64_t exponent) {
  if (exponent >= 0) return Rational(ipow(Integer(base), static_cast<unsigned>(exponent)));
  if (base == 0) throw MathError("zero to a negative power");
  return Rational(Integer(1), ipow(Integer(base), static_cast<unsigned>(-exponent)));
}

Integer floor(const Rational& x) {
  Integer q = numerator(x) / denominator(x);  // truncates toward zero
  if (x < 0 && Rational(q) != x) q -= 1;
  return q;
}

Rational frac(const Rational& x) { return x - Rational(floor(x)); }

std::int64_t to_int64(const Rational& x) {
  if (!is_integer(x)) throw MathError("value is not an integer: " + to_string(x));
  const Integer n = numerator(x);
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min()) {
    throw MathError("value does not fit in int64");
  }
  return n.convert_to<std::int64_t>();
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::int64_t, unsigned>> factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize expects n >= 1");
  std::vector<std::pair<std::int64_t, unsigned>> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t phi = n;
  for (const auto& [prime, e] : factorize(n)) phi = phi / prime * (prime - 1);
  return phi;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

std::optional<std::pair<std::int64_t, unsigned>> prime_power(std::int64_t n) {
  if (n < 2) return std::nullopt;
  const auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

namespace {

std::int64_t integer_valuation(Integer n, std::int64_t p) {
  std::int64_t v = 0;
  const Integer prime(p);
  while (n % prime == 0) {
    n /= prime;
    ++v;
  }
  return v;
}

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
}

}  // namespace

std::int64_t nu_p(const Rational& x, std::int64_t p) {
  require_prime(p);
  if (x == 0) throw MathError("valuation of zero");
  return integer_valuation(numerator(x), p) - integer_valuation(denominator(x), p);
}

Valuation valuation(const Rational& x, std::int64_t p) {
  if (x == 0) return Valuation::infinity();
  return Valuation::finite(nu_p(x, p));
}

unsigned nu_p_residue(std::int64_t i, std::int64_t p, unsigned r) {
  require_prime(p);
  if (r < 1) throw std::invalid_argument("r must be positive");
  const std::int64_t modulus = ipow64(p, r);
  std::int64_t c = mod(i, modulus);
  if (c == 0) throw MathError("valuation of zero residue mod p^r");
  unsigned v = 0;
  while (c % p == 0) {
    c /= p;
    ++v;
  }
  return v;
}

Integer sum_p2vp(std::int64_t p, unsigned r) {
  require_prime(p);
  if (r < 1) throw std::invalid_argument("r must be positive");
  return ipow(Integer(p), 2 * r - 1) - ipow(Integer(p), r - 1);
}

std::int64_t sum_nup(std::int64_t p, unsigned r) {
  require_prime(p);
  if (r < 1) throw std::invalid_argument("r must be positive");
  const std::int64_t pr = ipow64(p, r);
  return (pr - p * r + r - 1) / (p - 1);
}

std::int64_t sum_nup_shifted(std::int64_t p, unsigned r, std::int64_t i) {
  const std::int64_t pr = ipow64(p, r);
  if (i < 1 || i > pr - 1) throw std::invalid_argument("index out of range 1..p^r-1");
  return -static_cast<std::int64_t>(nu_p_residue(i, p, r)) + sum_nup(p, r);
}

Integer root_of_unity_sum(std::int64_t p, unsigned N, std::int64_t J) {
  require_prime(p);
  if (N < 1 || J < 1) throw std::invalid_argument("root_of_unity_sum expects N >= 1 and J >= 1");
  const Integer pN = ipow(Integer(p), N);
  const Integer pN1 = ipow(Integer(p), N - 1);
  const Integer j(J);
  if (j % pN1 != 0) return Integer(0);
  if (j % pN != 0) return -pN1;
  return pN - pN1;
}

}  // namespace xnpr
