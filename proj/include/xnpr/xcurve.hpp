#pragma once

// Intersection matrix of the special fiber of X(Np^r) and the inverse of its
// truncation T. Every matrix here is divided by deg S(N); CurveData carries
// that factor separately.

#include "xnpr/linalg.hpp"
#include "xnpr/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace xnpr {

enum class ComponentKind { A, B };

/// A(a): the component Lambda_(1,-a), 0 <= a < p^r.
/// B(b): the component Lambda_(-pb,1), 0 <= b < p^(r-1).
struct ComponentLabel {
  ComponentKind kind = ComponentKind::A;
  std::int64_t index = 0;

  static ComponentLabel A(std::int64_t a) { return {ComponentKind::A, a}; }
  static ComponentLabel B(std::int64_t b) { return {ComponentKind::B, b}; }

  friend auto operator<=>(const ComponentLabel&, const ComponentLabel&) = default;
};

std::string to_string(const ComponentLabel& label);
/// Parses "A3" / "A(3)" / "B0" / "B(0)".
ComponentLabel parse_label(const std::string& text);
void validate_label(const ComponentLabel& label, std::int64_t p, unsigned r);

struct CurveData {
  std::int64_t p;
  unsigned r;
  std::int64_t N;
  Rational degS;
};

/// Validates p prime, r >= 1, N >= 3, p does not divide N.
CurveData make_curve_data(std::int64_t p, unsigned r, std::int64_t N);
void validate_pr(std::int64_t p, unsigned r);

/// A(0..p^r-1) then B(0..p^(r-1)-1).
std::vector<ComponentLabel> component_labels(std::int64_t p, unsigned r);
/// component_labels without A(0); the row order of T.
std::vector<ComponentLabel> truncated_labels(std::int64_t p, unsigned r);
/// 1-based row of T holding the label (A(a) -> a, B(b) -> p^r + b).
std::int64_t truncated_index(const ComponentLabel& label, std::int64_t p, unsigned r);

/// Normalized intersection number of two components.
Rational local_intersection(const ComponentLabel& l1, const ComponentLabel& l2, std::int64_t p, unsigned r);

/// M(p^s) as a circulant; M(p^0) = (-1/p).
Circulant<Rational> m_circulant(std::int64_t p, unsigned s);

Mat build_M(std::int64_t p, unsigned r);
Mat build_T(std::int64_t p, unsigned r);

/// Entries of M(p^r)^{-1}, 1 <= i, j <= p^r.
Rational m_inverse_closed(std::int64_t p, unsigned r, std::int64_t i, std::int64_t j);
/// Entries of (M(p^r) without its first row and column)^{-1}, 1 <= i, j <= p^r - 1.
Rational m11_inverse_closed(std::int64_t p, unsigned r, std::int64_t i, std::int64_t j);
/// Eigenvalue lambda_j of M(p^r), 1 <= j <= p^r.
Rational m_eigenvalue_closed(std::int64_t p, unsigned r, std::int64_t j);

/// degS * (T^{-1})_{ij}, 1 <= i, j <= p^r + p^(r-1) - 1.
Rational tinv_closed(std::int64_t p, unsigned r, std::int64_t i, std::int64_t j);
Mat tinv_closed_matrix(std::int64_t p, unsigned r);

/// T^{-1} from the circulant spectrum of M(p^r), the minor-removal update and
/// the block formula; no dense elimination.
Mat tinv_structured(std::int64_t p, unsigned r);

/// degS * sum over components other than A(0) of c^{label, .}.
Rational tinv_rowsum(std::int64_t p, unsigned r, const ComponentLabel& label);

/// T^{-1} a for degS-normalized T, a indexed like truncated_labels.
Vec valuation_differences(std::int64_t p, unsigned r, const Vec& a);

}  // namespace xnpr
