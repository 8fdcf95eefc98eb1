#include "xnpr/klein.hpp"

#include "xnpr/arith.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <tuple>

namespace xnpr {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s) {
  s = strip(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("malformed integer in family: '" + std::string(s) + "'");
  return v;
}

std::pair<std::int64_t, unsigned> require_prime_power(std::int64_t n) {
  const auto pp = prime_power(n);
  if (!pp) throw std::invalid_argument("level must be a prime power, got " + std::to_string(n));
  return *pp;
}

}  // namespace

std::int64_t KleinFamily::weight() const {
  std::int64_t s = 0;
  for (const auto& [t, e] : m) s += e;
  return -s;
}

KleinFamily KleinFamily::parse(std::int64_t n, std::string_view text) {
  if (n < 2) throw std::invalid_argument("family level must be at least 2");
  KleinFamily f{n, {}};
  text = strip(text);
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("family entries must look like t:m");
    const std::int64_t t = parse_int(item.substr(0, colon));
    const std::int64_t e = parse_int(item.substr(colon + 1));
    if (t < 1 || t > n - 1) throw std::invalid_argument("t out of range 1..n-1: " + std::to_string(t));
    if (f.m.count(t)) throw std::invalid_argument("duplicate t in family: " + std::to_string(t));
    if (e != 0) f.m.emplace(t, e);
    if (comma != std::string_view::npos && strip(text).empty()) throw std::invalid_argument("trailing comma in family");
  }
  return f;
}

std::string KleinFamily::str() const {
  std::string out;
  for (const auto& [t, e] : m) {
    if (!out.empty()) out += ',';
    out += std::to_string(t) + ':' + std::to_string(e);
  }
  return out;
}

std::vector<CuspClass> cusp_classes(std::int64_t n) {
  std::vector<CuspClass> out;
  for (std::int64_t g : divisors(n)) {
    for (std::int64_t a = 1; a <= g; ++a) {
      if (std::gcd(a, g) == 1) out.push_back({g, a});
    }
  }
  return out;
}

bool check_congruence(const KleinFamily& f) {
  Integer s(0);
  for (const auto& [t, e] : f.m) s += Integer(e) * t * t;
  const std::int64_t modulus = std::gcd(std::int64_t{2}, f.n) * f.n;
  return s % modulus == 0;
}

Rational cusp_order(const KleinFamily& f, const CuspClass& c) {
  if (c.g < 1 || f.n % c.g != 0) throw std::invalid_argument("g must divide n");
  if (std::gcd(c.a, c.g) != 1) throw std::invalid_argument("a must be a unit mod g");
  Rational s(0);
  for (const auto& [t, e] : f.m) {
    const Rational x = frac(Rational(c.a * t, c.g));
    s += e * x * (x - 1);
  }
  return Rational(c.g * c.g, 2 * f.n) * s;
}

bool is_holomorphic(const KleinFamily& f) {
  for (const auto& c : cusp_classes(f.n)) {
    if (cusp_order(f, c) < 0) return false;
  }
  return true;
}

Rational fractional_part_sum(const KleinFamily& f, const Rational& x) {
  Rational s(0);
  for (const auto& [t, e] : f.m) {
    const Rational y = frac(x * t);
    s += e * y * (y - 1);
  }
  return s / 2;
}

KleinFamily standard_family(std::int64_t p, unsigned r) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  const std::int64_t n = ipow64(p, r);
  if (n <= 3) throw MathError("no construction known");
  if (r == 1 && p > 5) return {n, {{3, -2}, {4, -2}, {5, 2}}};
  if (r == 1) return {n, {{1, 4}, {2, -2}, {3, -4}}};
  return {n, {{1, 2}, {ipow64(p, r - 1), -2}, {n - 1, -2}}};
}

Rational leading_exponent_infinity(const KleinFamily& f) {
  Rational s(0);
  for (const auto& [t, e] : f.m) s += Rational(e * t * (t - f.n), f.n);
  return s / 2;
}

std::vector<std::int64_t> product_exponents(const KleinFamily& f, std::int64_t maxDegree) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(std::max<std::int64_t>(maxDegree, 0)) + 1, 0);
  auto add = [&](std::int64_t j, std::int64_t e) {
    if (j >= 1 && j <= maxDegree) c[j] += e;
  };
  for (const auto& [t, e] : f.m) {
    add(t, e);
    for (std::int64_t k = 1; f.n * k - t <= maxDegree; ++k) {
      add(f.n * k + t, e);
      add(f.n * k - t, e);
      add(f.n * k, -2 * e);
    }
  }
  return c;
}

QSeries qexp_infinity(const KleinFamily& f, std::int64_t trunc) {
  if (trunc < 1) throw std::invalid_argument("truncation must be positive");
  QSeries out;
  out.leadingExponent = leading_exponent_infinity(f);
  out.denominatorD = denominator(out.leadingExponent).convert_to<std::int64_t>();
  out.truncationLength = trunc;
  const std::int64_t D = out.denominatorD;
  const std::int64_t maxDegree = (trunc - 1) / D;

  std::vector<Rational> s(static_cast<std::size_t>(maxDegree) + 1, Rational(0));
  s[0] = 1;
  const auto c = product_exponents(f, maxDegree);
  for (std::int64_t j = 1; j <= maxDegree; ++j) {
    for (std::int64_t rep = 0; rep < c[j]; ++rep)
      for (std::int64_t i = maxDegree; i >= j; --i) s[i] -= s[i - j];
    for (std::int64_t rep = 0; rep < -c[j]; ++rep)
      for (std::int64_t i = j; i <= maxDegree; ++i) s[i] += s[i - j];
  }
  out.coeffs.assign(static_cast<std::size_t>(trunc), Rational(0));
  for (std::int64_t i = 0; i <= maxDegree; ++i) out.coeffs[i * D] = s[i];
  return out;
}

std::int64_t valuation_at_zero(const KleinFamily& f) {
  const auto [p, r] = require_prime_power(f.n);
  if (f.m.empty()) throw MathError("degenerate family");
  std::int64_t v = -f.weight() * static_cast<std::int64_t>(r) * euler_phi(f.n);
  for (const auto& [t, e] : f.m) v += e * ipow64(p, nu_p_residue(t, p, r));
  return v;
}

Cyclotomic leading_coefficient_at_zero(const KleinFamily& f) {
  const auto [p, r] = require_prime_power(f.n);
  if (f.m.empty()) throw MathError("degenerate family");
  Cyclotomic x = Cyclotomic::constant(f.n, rpow(p, -static_cast<std::int64_t>(r) * f.weight()));
  const Cyclotomic one = Cyclotomic::constant(f.n, Rational(1));
  for (const auto& [t, e] : f.m) x *= (one - Cyclotomic::zeta(f.n, -t)).pow(e);
  return x;
}

std::int64_t valuation_at_zero_cyclotomic(const KleinFamily& f) {
  const auto [p, r] = require_prime_power(f.n);
  return pi_valuation(leading_coefficient_at_zero(f), p, r);
}

Integer lower_bound(std::int64_t p, unsigned r, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  return Integer(-k * valuation_at_zero(standard_family(p, r)));
}

namespace {

constexpr double kSearchCap = 5e6;

void enumerate(const KleinFamily& base, std::int64_t next, std::int64_t supportLeft, std::int64_t maxAbs,
               std::int64_t sum, KleinFamily& current, std::vector<KleinFamily>& out) {
  if (sum == -2 && !current.m.empty() && check_congruence(current) && is_holomorphic(current)) out.push_back(current);
  if (supportLeft == 0) return;
  for (std::int64_t t = next; t < base.n; ++t) {
    for (std::int64_t e = -maxAbs; e <= maxAbs; ++e) {
      if (e == 0) continue;
      current.m[t] = e;
      enumerate(base, t + 1, supportLeft - 1, maxAbs, sum + e, current, out);
      current.m.erase(t);
    }
  }
}

}  // namespace

std::vector<KleinFamily> search_families(std::int64_t n, std::int64_t maxSupport, std::int64_t maxAbsCoeff) {
  if (n < 4) throw std::invalid_argument("search expects n >= 4");
  if (maxSupport < 1 || maxAbsCoeff < 1) throw std::invalid_argument("search bounds must be positive");
  require_prime_power(n);
  double size = 0, choose = 1;
  for (std::int64_t s = 1; s <= std::min(maxSupport, n - 1); ++s) {
    choose = choose * static_cast<double>(n - s) / static_cast<double>(s);
    size += choose * std::pow(2.0 * static_cast<double>(maxAbsCoeff), static_cast<double>(s));
  }
  if (size > kSearchCap) throw std::invalid_argument("search space cap exceeded");

  std::vector<KleinFamily> out;
  KleinFamily current{n, {}};
  enumerate(current, 1, maxSupport, maxAbsCoeff, 0, current, out);
  std::vector<std::pair<std::int64_t, KleinFamily>> keyed;
  keyed.reserve(out.size());
  for (auto& f : out) keyed.emplace_back(valuation_at_zero(f), std::move(f));
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    return std::tie(x.first, x.second.m) < std::tie(y.first, y.second.m);
  });
  out.clear();
  for (auto& [v, f] : keyed) out.push_back(std::move(f));
  return out;
}

}  // namespace xnpr
