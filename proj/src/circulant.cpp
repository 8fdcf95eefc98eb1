#include "xnpr/linalg.hpp"

namespace xnpr {

namespace {

void check_index(const Circulant<Rational>& c, Eigen::Index k) {
  if (c.size() == 0) throw std::invalid_argument("empty circulant");
  if (k < 0 || k >= c.size()) throw std::invalid_argument("circulant index out of range");
}

Cyclotomic eigenvalue(const Circulant<Rational>& c, Eigen::Index k) {
  const std::int64_t n = c.size();
  RationalPoly terms(static_cast<std::size_t>(n), Rational(0));
  for (std::int64_t m = 0; m < n; ++m) terms[static_cast<std::size_t>(mod(k * (n - m), n))] += c.first_column[m];
  return Cyclotomic(n, std::move(terms));
}

std::vector<Cyclotomic> inverted_eigenvalues(const Circulant<Rational>& c) {
  std::vector<Cyclotomic> inv;
  inv.reserve(c.first_column.size());
  for (Eigen::Index k = 0; k < c.size(); ++k) {
    const Cyclotomic lambda = eigenvalue(c, k);
    if (lambda.is_zero()) throw MathError("non-invertible circulant");
    inv.push_back(lambda.inverse());
  }
  return inv;
}

Rational inverse_entry(const std::vector<Cyclotomic>& invLambda, std::int64_t diff) {
  const std::int64_t n = static_cast<std::int64_t>(invLambda.size());
  Cyclotomic sum(n);
  for (std::int64_t k = 0; k < n; ++k) sum += invLambda[k] * Cyclotomic::zeta(n, k * diff);
  try {
    return sum.to_rational() / Rational(n);
  } catch (const MathError&) {
    throw MathError("circulant inverse entry is not rational; input must be rational");
  }
}

}  // namespace

CirculantEigenpair circ_eigen(const Circulant<Rational>& c, Eigen::Index k) {
  check_index(c, k);
  const std::int64_t n = c.size();
  CirculantEigenpair pair{eigenvalue(c, k), {}};
  pair.vector.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) pair.vector.push_back(Cyclotomic::zeta(n, i * k));
  return pair;
}

std::vector<Cyclotomic> circ_eigenvalues(const Circulant<Rational>& c) {
  std::vector<Cyclotomic> out;
  for (Eigen::Index k = 0; k < c.size(); ++k) out.push_back(eigenvalue(c, k));
  return out;
}

Rational circ_inverse_entry(const Circulant<Rational>& c, Eigen::Index i, Eigen::Index j) {
  check_index(c, i);
  check_index(c, j);
  return inverse_entry(inverted_eigenvalues(c), i - j);
}

Circulant<Rational> circ_inverse(const Circulant<Rational>& c) {
  check_index(c, 0);
  const auto invLambda = inverted_eigenvalues(c);
  Circulant<Rational> out;
  out.first_column.reserve(c.first_column.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) out.first_column.push_back(inverse_entry(invLambda, i));
  return out;
}

std::vector<Cyclotomic> apply(const Mat& a, const std::vector<Cyclotomic>& v) {
  if (static_cast<std::size_t>(a.cols()) != v.size()) throw std::invalid_argument("dimension mismatch");
  if (v.empty()) return {};
  const std::int64_t n = v.front().modulus();
  std::vector<Cyclotomic> out(static_cast<std::size_t>(a.rows()), Cyclotomic(n));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) out[i] += v[j] * a(i, j);
  return out;
}

}  // namespace xnpr
