#include "xnpr/arith.hpp"
#include "xnpr/linalg.hpp"
#include "xnpr/verify.hpp"

#include <set>
#include <utility>

namespace xnpr::verify::oracle {

namespace {

std::pair<std::int64_t, std::int64_t> kernel_generator(const ComponentLabel& l, std::int64_t p, std::int64_t q) {
  if (l.kind == ComponentKind::A) return {mod(l.index, q), 1};
  return {1, mod(p * l.index, q)};
}

}  // namespace

Rational local_intersection(const ComponentLabel& l1, const ComponentLabel& l2, std::int64_t p, unsigned r) {
  validate_label(l1, p, r);
  validate_label(l2, p, r);
  if (l1 == l2) {
    Rational s(0);
    for (const auto& other : component_labels(p, r)) {
      if (other != l1) s += oracle::local_intersection(l1, other, p, r);
    }
    return -s;
  }
  const std::int64_t q = ipow64(p, r);
  const auto [x1, y1] = kernel_generator(l1, p, q);
  const auto [x2, y2] = kernel_generator(l2, p, q);
  std::set<std::pair<std::int64_t, std::int64_t>> span;
  for (std::int64_t i = 0; i < q; ++i)
    for (std::int64_t j = 0; j < q; ++j) span.emplace(mod(i * x1 + j * x2, q), mod(i * y1 + j * y2, q));
  const Rational index(q * q, static_cast<std::int64_t>(span.size()));
  return index * index;
}

Integer sum_p2vp(std::int64_t p, unsigned r) {
  Integer s(0);
  for (std::int64_t a = 1; a < ipow64(p, r); ++a) {
    std::int64_t v = 0, c = a;
    while (c % p == 0) {
      c /= p;
      ++v;
    }
    s += ipow(Integer(p), static_cast<unsigned>(2 * v));
  }
  return s;
}

std::int64_t sum_nup(std::int64_t p, unsigned r) {
  std::int64_t s = 0;
  for (std::int64_t m = 1; m < ipow64(p, r); ++m) s += nu_p(Rational(m), p);
  return s;
}

std::int64_t sum_nup_shifted(std::int64_t p, unsigned r, std::int64_t i) {
  const std::int64_t q = ipow64(p, r);
  std::int64_t s = 0;
  for (std::int64_t j = 1; j < q; ++j) {
    if (j != i) s += nu_p(Rational(mod(j - i, q)), p);
  }
  return s;
}

Cyclotomic root_of_unity_sum(std::int64_t p, unsigned N, std::int64_t J) {
  const std::int64_t q = ipow64(p, N);
  Cyclotomic s(q);
  for (std::int64_t u = 1; u < q; ++u) {
    if (u % p != 0) s += Cyclotomic::zeta(q, -u * J);
  }
  return s;
}

Rational norm(const Cyclotomic& x) {
  const std::int64_t n = x.modulus();
  const auto d = static_cast<Eigen::Index>(x.coeffs().size());
  Mat m(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const Cyclotomic column = x * Cyclotomic::zeta(n, j);
    for (Eigen::Index i = 0; i < d; ++i) m(i, j) = column.coeffs()[static_cast<std::size_t>(i)];
  }
  return gauss_determinant(m);
}

std::vector<Rational> series_divide(const RationalPoly& num, const RationalPoly& den, std::size_t terms) {
  if (den.empty() || den[0] == 0) throw MathError("series denominator has zero constant term");
  std::vector<Rational> s(terms, Rational(0));
  for (std::size_t i = 0; i < terms; ++i) {
    Rational acc = i < num.size() ? num[i] : Rational(0);
    for (std::size_t j = 1; j <= i && j < den.size(); ++j) acc -= den[j] * s[i - j];
    s[i] = acc / den[0];
  }
  return s;
}

namespace {

RationalPoly truncated_mul(const RationalPoly& f, const RationalPoly& g, std::size_t terms) {
  RationalPoly out = poly::mul(f, g);
  if (out.size() > terms) out.resize(terms);
  poly::trim(out);
  return out;
}

RationalPoly one_minus_q(std::int64_t j) {
  RationalPoly f(static_cast<std::size_t>(j) + 1, Rational(0));
  f[0] = 1;
  f[static_cast<std::size_t>(j)] = -1;
  return f;
}

}  // namespace

std::vector<Rational> klein_qexp(const KleinFamily& f, std::size_t terms) {
  if (!is_integer(leading_exponent_infinity(f))) throw std::invalid_argument("oracle expects an integral leading exponent");
  const auto limit = static_cast<std::int64_t>(terms);
  RationalPoly num{Rational(1)}, den{Rational(1)};
  for (const auto& [t, e] : f.m) {
    RationalPoly top = one_minus_q(t), bottom{Rational(1)};
    for (std::int64_t k = 1; f.n * k - t < limit; ++k) {
      top = truncated_mul(top, one_minus_q(f.n * k + t), terms);
      top = truncated_mul(top, one_minus_q(f.n * k - t), terms);
      bottom = truncated_mul(bottom, one_minus_q(f.n * k), terms);
      bottom = truncated_mul(bottom, one_minus_q(f.n * k), terms);
    }
    for (std::int64_t i = 0; i < std::abs(e); ++i) {
      num = truncated_mul(num, e > 0 ? top : bottom, terms);
      den = truncated_mul(den, e > 0 ? bottom : top, terms);
    }
  }
  return series_divide(num, den, terms);
}

}  // namespace xnpr::verify::oracle
