#include "xnpr/xcurve.hpp"

#include "xnpr/arith.hpp"
#include "xnpr/invariants.hpp"

#include <cctype>

namespace xnpr {

std::string to_string(const ComponentLabel& label) {
  return (label.kind == ComponentKind::A ? "A(" : "B(") + std::to_string(label.index) + ")";
}

ComponentLabel parse_label(const std::string& text) {
  std::string body = text;
  if (body.size() < 2 || (body[0] != 'A' && body[0] != 'B')) throw std::invalid_argument("malformed label: " + text);
  const ComponentKind kind = body[0] == 'A' ? ComponentKind::A : ComponentKind::B;
  body.erase(0, 1);
  if (body.front() == '(') {
    if (body.back() != ')') throw std::invalid_argument("malformed label: " + text);
    body = body.substr(1, body.size() - 2);
  }
  if (body.empty()) throw std::invalid_argument("malformed label: " + text);
  for (char c : body) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("malformed label: " + text);
  }
  return {kind, std::stoll(body)};
}

void validate_pr(std::int64_t p, unsigned r) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  if (r < 1) throw std::invalid_argument("r must be at least 1");
}

void validate_label(const ComponentLabel& label, std::int64_t p, unsigned r) {
  validate_pr(p, r);
  const std::int64_t bound = label.kind == ComponentKind::A ? ipow64(p, r) : ipow64(p, r - 1);
  if (label.index < 0 || label.index >= bound) throw std::invalid_argument("label out of range: " + to_string(label));
}

CurveData make_curve_data(std::int64_t p, unsigned r, std::int64_t N) {
  validate_pr(p, r);
  return {p, r, N, deg_ss(N, p)};
}

std::vector<ComponentLabel> component_labels(std::int64_t p, unsigned r) {
  validate_pr(p, r);
  std::vector<ComponentLabel> out;
  for (std::int64_t a = 0; a < ipow64(p, r); ++a) out.push_back(ComponentLabel::A(a));
  for (std::int64_t b = 0; b < ipow64(p, r - 1); ++b) out.push_back(ComponentLabel::B(b));
  return out;
}

std::vector<ComponentLabel> truncated_labels(std::int64_t p, unsigned r) {
  auto out = component_labels(p, r);
  out.erase(out.begin());
  return out;
}

std::int64_t truncated_index(const ComponentLabel& label, std::int64_t p, unsigned r) {
  validate_label(label, p, r);
  if (label == ComponentLabel::A(0)) throw std::invalid_argument("A(0) is not a row of T");
  return label.kind == ComponentKind::A ? label.index : ipow64(p, r) + label.index;
}

Rational local_intersection(const ComponentLabel& l1, const ComponentLabel& l2, std::int64_t p, unsigned r) {
  validate_label(l1, p, r);
  validate_label(l2, p, r);
  if (l1 == l2) return -rpow(p, 2 * static_cast<std::int64_t>(r) - 1);
  if (l1.kind != l2.kind) return Rational(1);
  if (l1.kind == ComponentKind::A) return rpow(p, 2 * nu_p_residue(l2.index - l1.index, p, r));
  return rpow(p, 2 * nu_p(Rational(l2.index - l1.index), p) + 2);
}

Circulant<Rational> m_circulant(std::int64_t p, unsigned s) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (s == 0) return {{Rational(-1) / p}};
  const std::int64_t n = ipow64(p, s);
  Circulant<Rational> c;
  c.first_column.reserve(static_cast<std::size_t>(n));
  c.first_column.push_back(-rpow(p, 2 * static_cast<std::int64_t>(s) - 1));
  for (std::int64_t k = 1; k < n; ++k) c.first_column.push_back(rpow(p, 2 * nu_p_residue(k, p, s)));
  return c;
}

Mat build_M(std::int64_t p, unsigned r) {
  validate_pr(p, r);
  const Eigen::Index nA = ipow64(p, r), nB = ipow64(p, r - 1);
  Mat m(nA + nB, nA + nB);
  m.topLeftCorner(nA, nA) = m_circulant(p, r).materialize();
  m.topRightCorner(nA, nB).setConstant(Rational(1));
  m.bottomLeftCorner(nB, nA).setConstant(Rational(1));
  m.bottomRightCorner(nB, nB) = Rational(p * p) * m_circulant(p, r - 1).materialize();
  return m;
}

Mat build_T(std::int64_t p, unsigned r) { return remove_row_col(build_M(p, r), 0, 0); }

namespace {

void check_range(std::int64_t i, std::int64_t lo, std::int64_t hi) {
  if (i < lo || i > hi) throw std::invalid_argument("index out of range");
}

// p^(1-2r)
Rational scale_P(std::int64_t p, unsigned r) { return rpow(p, 1 - 2 * static_cast<std::int64_t>(r)); }

std::int64_t s_of(std::int64_t p, unsigned r) { return p * r - r + 1; }

std::int64_t nu(std::int64_t i, std::int64_t p, unsigned r) { return nu_p_residue(i, p, r); }

}  // namespace

Rational m_inverse_closed(std::int64_t p, unsigned r, std::int64_t i, std::int64_t j) {
  validate_pr(p, r);
  const std::int64_t n = ipow64(p, r);
  check_range(i, 1, n);
  check_range(j, 1, n);
  const Rational P = scale_P(p, r);
  const Rational pr = Rational(p - 1, p + 1) * r * P;
  if (i == j) return -P - pr;
  const Rational pr1 = rpow(p, r - 1);
  return -P - rpow(p, 2 - 3 * static_cast<std::int64_t>(r)) / (p + 1) *
                  (-pr1 + Rational(nu(i - j, p, r)) * pr1 * (p - 1));
}

Rational m11_inverse_closed(std::int64_t p, unsigned r, std::int64_t i, std::int64_t j) {
  validate_pr(p, r);
  const std::int64_t n = ipow64(p, r);
  check_range(i, 1, n - 1);
  check_range(j, 1, n - 1);
  const Rational P = scale_P(p, r);
  const std::int64_t D = p * r + p - r + 1;
  auto g = [&](std::int64_t l) { return l * p + p - l; };
  const std::int64_t gi = g(nu(i, p, r)), gj = g(nu(j, p, r));
  const Rational correction = P * Rational(gi * gj) / Rational((p + 1) * D);
  if (i == j) return -P - Rational(p - 1, p + 1) * r * P + correction;
  return -P * Rational(g(nu(i - j, p, r)), p + 1) + correction;
}

Rational m_eigenvalue_closed(std::int64_t p, unsigned r, std::int64_t j) {
  validate_pr(p, r);
  check_range(j, 1, ipow64(p, r));
  if (j == 1) return -rpow(p, r - 1);
  return -rpow(p, 2 * static_cast<std::int64_t>(r) - 2 - nu(j - 1, p, r)) * (p + 1);
}

Rational tinv_closed(std::int64_t p, unsigned r, std::int64_t i, std::int64_t j) {
  validate_pr(p, r);
  const std::int64_t nA = ipow64(p, r) - 1;
  const std::int64_t size = nA + ipow64(p, r - 1);
  check_range(i, 1, size);
  check_range(j, 1, size);
  const Rational P = scale_P(p, r);
  const Rational base = P * s_of(p, r) / (p + 1);
  const Rational unit = P * (p - 1) / (p + 1);
  const bool aI = i <= nA, aJ = j <= nA;
  if (aI && aJ) {
    if (i == j) return -2 * base + 2 * unit * nu(i, p, r);
    return -base - unit * (nu(i - j, p, r) - nu(i, p, r) - nu(j, p, r));
  }
  if (aI) return -base + unit * nu(i, p, r);
  if (aJ) return -base + unit * nu(j, p, r);
  if (i == j) return -2 * base;
  return -P * (p * r + p - r) / (p + 1) - unit * nu_p(Rational(i - j), p);
}

Mat tinv_closed_matrix(std::int64_t p, unsigned r) {
  validate_pr(p, r);
  const Eigen::Index size = ipow64(p, r) - 1 + ipow64(p, r - 1);
  Mat out(size, size);
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = 0; j < size; ++j) out(i, j) = tinv_closed(p, r, i + 1, j + 1);
  return out;
}

Mat tinv_structured(std::int64_t p, unsigned r) {
  validate_pr(p, r);
  const Mat mInv = circ_inverse(m_circulant(p, r)).materialize();
  const Mat aInv = minor_removed_inverse(mInv, 0, 0);
  const Mat bInv = circ_inverse(m_circulant(p, r - 1)).materialize() / Rational(p * p);
  return block_ones_inverse(aInv, bInv);
}

Rational tinv_rowsum(std::int64_t p, unsigned r, const ComponentLabel& label) {
  validate_label(label, p, r);
  if (label == ComponentLabel::A(0)) throw std::invalid_argument("row sum undefined for A(0)");
  const Rational head = -rpow(p, -static_cast<std::int64_t>(r)) * s_of(p, r);
  if (label.kind == ComponentKind::B) return head;
  return head + rpow(p, -static_cast<std::int64_t>(r)) * (p - 1) * nu(label.index, p, r);
}

Vec valuation_differences(std::int64_t p, unsigned r, const Vec& a) {
  const Mat tInv = tinv_closed_matrix(p, r);
  if (a.size() != tInv.cols()) throw std::invalid_argument("dimension mismatch");
  return tInv * a;
}

}  // namespace xnpr
