#pragma once

// Exact structured linear algebra on Eigen matrices.
//
// The dense routines are templates over the scalar type and accept any Eigen
// expression; they are meant for exact fields (Rational), where every
// nonzero pivot is as good as any other. Indices are 0-based throughout,
// as in Eigen.

#include "xnpr/cyclotomic.hpp"
#include "xnpr/rational.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace xnpr {

/// Exact inverse by Gauss-Jordan elimination; the pivot is the first nonzero
/// entry in the column. Throws MathError("singular matrix") otherwise.
template <typename Derived>
MatrixX<typename Derived::Scalar> gauss_inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("gauss_inverse expects a square matrix");
  const Eigen::Index n = m.rows();
  MatrixX<Scalar> work = m;
  MatrixX<Scalar> inv = MatrixX<Scalar>::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && work(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) throw MathError("singular matrix");
    if (pivot != col) {
      work.row(pivot).swap(work.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const Scalar scale = Scalar(1) / work(col, col);
    work.row(col) *= scale;
    inv.row(col) *= scale;
    for (Eigen::Index row = 0; row < n; ++row) {
      if (row == col || work(row, col) == Scalar(0)) continue;
      const Scalar factor = work(row, col);
      work.row(row) -= factor * work.row(col);
      inv.row(row) -= factor * inv.row(col);
    }
  }
  return inv;
}

/// Exact determinant by fraction-carrying elimination.
template <typename Derived>
typename Derived::Scalar gauss_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  MatrixX<Scalar> work = m;
  Scalar det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && work(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      work.row(pivot).swap(work.row(col));
      det = -det;
    }
    det *= work(col, col);
    for (Eigen::Index row = col + 1; row < n; ++row) {
      if (work(row, col) == Scalar(0)) continue;
      const Scalar factor = work(row, col) / work(col, col);
      work.row(row) -= factor * work.row(col);
    }
  }
  return det;
}

/// Removes row s and column t.
template <typename Derived>
MatrixX<typename Derived::Scalar> remove_row_col(const Eigen::MatrixBase<Derived>& a, Eigen::Index s,
                                                 Eigen::Index t) {
  const Eigen::Index n = a.rows(), m = a.cols();
  MatrixX<typename Derived::Scalar> out(n - 1, m - 1);
  for (Eigen::Index i = 0, oi = 0; i < n; ++i) {
    if (i == s) continue;
    for (Eigen::Index j = 0, oj = 0; j < m; ++j) {
      if (j == t) continue;
      out(oi, oj++) = a(i, j);
    }
    ++oi;
  }
  return out;
}

/// Given aInv = A^{-1} = (m_ij), returns (A with row s and column t removed)^{-1}
/// from a_ij = m_ij - m_is m_tj / m_ts, i != t, j != s.
template <typename Derived>
MatrixX<typename Derived::Scalar> minor_removed_inverse(const Eigen::MatrixBase<Derived>& aInv, Eigen::Index s,
                                                        Eigen::Index t) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = aInv.rows();
  if (aInv.cols() != n) throw std::invalid_argument("minor_removed_inverse expects a square matrix");
  if (s < 0 || s >= n || t < 0 || t >= n) throw std::invalid_argument("row/column index out of range");
  const Scalar pivot = aInv(t, s);
  if (pivot == Scalar(0)) throw MathError("pivot vanishes");
  MatrixX<Scalar> out(n - 1, n - 1);
  for (Eigen::Index i = 0, oi = 0; i < n; ++i) {
    if (i == t) continue;
    for (Eigen::Index j = 0, oj = 0; j < n; ++j) {
      if (j == s) continue;
      out(oi, oj++) = aInv(i, j) - aInv(i, s) * aInv(t, j) / pivot;
    }
    ++oi;
  }
  return out;
}

/// (A + U C V)^{-1} = A^{-1} - A^{-1} U (C^{-1} + V A^{-1} U)^{-1} V A^{-1}.
template <typename DA, typename DU, typename DC, typename DV>
MatrixX<typename DA::Scalar> woodbury(const Eigen::MatrixBase<DA>& aInv, const Eigen::MatrixBase<DU>& u,
                                      const Eigen::MatrixBase<DC>& cInv, const Eigen::MatrixBase<DV>& v) {
  using Scalar = typename DA::Scalar;
  if (aInv.rows() != aInv.cols() || u.rows() != aInv.rows() || v.cols() != aInv.cols() ||
      cInv.rows() != cInv.cols() || u.cols() != cInv.rows() || v.rows() != cInv.rows()) {
    throw std::invalid_argument("woodbury: non-conformable dimensions");
  }
  const MatrixX<Scalar> aInvU = aInv * u;
  const MatrixX<Scalar> vAInv = v * aInv;
  const MatrixX<Scalar> inner = cInv + v * aInvU;
  MatrixX<Scalar> innerInv;
  try {
    innerInv = gauss_inverse(inner);
  } catch (const MathError&) {
    throw MathError("woodbury: inner matrix singular");
  }
  return aInv - aInvU * innerInv * vAInv;
}

/// Inverse of the block matrix [[A, 1], [1, B]] (off-diagonal blocks all ones)
/// from A^{-1} and B^{-1}, using only their row/column sums and the totals
/// alpha = sum(A^{-1}), beta = sum(B^{-1}).
template <typename DA, typename DB>
MatrixX<typename DA::Scalar> block_ones_inverse(const Eigen::MatrixBase<DA>& aInvBlock,
                                                const Eigen::MatrixBase<DB>& bInvBlock) {
  using Scalar = typename DA::Scalar;
  const Eigen::Index n = aInvBlock.rows(), m = bInvBlock.rows();
  if (aInvBlock.cols() != n || bInvBlock.cols() != m) throw std::invalid_argument("blocks must be square");
  if (m == 0) return aInvBlock;
  if (n == 0) return bInvBlock;
  const VectorX<Scalar> aRow = aInvBlock.rowwise().sum();
  const VectorX<Scalar> aCol = aInvBlock.colwise().sum().transpose();
  const VectorX<Scalar> bRow = bInvBlock.rowwise().sum();
  const VectorX<Scalar> bCol = bInvBlock.colwise().sum().transpose();
  const Scalar alpha = aRow.sum();
  const Scalar beta = bRow.sum();
  const Scalar denom = Scalar(1) - alpha * beta;
  if (denom == Scalar(0)) throw MathError("rank-2 update singular");

  MatrixX<Scalar> out(n + m, n + m);
  out.topLeftCorner(n, n) = aInvBlock + (beta / denom) * aRow * aCol.transpose();
  out.topRightCorner(n, m) = (Scalar(-1) / denom) * aRow * bCol.transpose();
  out.bottomLeftCorner(m, n) = (Scalar(-1) / denom) * bRow * aCol.transpose();
  out.bottomRightCorner(m, m) = bInvBlock + (alpha / denom) * bRow * bCol.transpose();
  return out;
}

/// n x n circulant matrix determined by its first column c_0..c_{n-1};
/// entry (i, j) = c_{(i - j) mod n}.
template <typename Scalar>
struct Circulant {
  std::vector<Scalar> first_column;

  Eigen::Index size() const { return static_cast<Eigen::Index>(first_column.size()); }

  const Scalar& entry(Eigen::Index i, Eigen::Index j) const {
    const Eigen::Index n = size();
    return first_column[static_cast<std::size_t>(((i - j) % n + n) % n)];
  }

  MatrixX<Scalar> materialize() const {
    const Eigen::Index n = size();
    MatrixX<Scalar> out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) out(i, j) = entry(i, j);
    return out;
  }
};

/// Tests whether a square matrix is circulant.
template <typename Derived>
bool is_circulant(const Eigen::MatrixBase<Derived>& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) return false;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (a(i, j) != a(((i - j) % n + n) % n, 0)) return false;
  return true;
}

struct CirculantEigenpair {
  Cyclotomic value;
  /// Unnormalized: (1, zeta^k, zeta^{2k}, ..., zeta^{(n-1)k}).
  std::vector<Cyclotomic> vector;
};

/// k-th eigenpair (k = 0..n-1): lambda_k = sum_m c_m zeta_n^{k(n-m)}.
CirculantEigenpair circ_eigen(const Circulant<Rational>& c, Eigen::Index k);

/// All eigenvalues lambda_0..lambda_{n-1}.
std::vector<Cyclotomic> circ_eigenvalues(const Circulant<Rational>& c);

/// (C^{-1})_{ij} = (1/n) sum_k lambda_k^{-1} zeta_n^{k(i-j)}, coerced to Q.
Rational circ_inverse_entry(const Circulant<Rational>& c, Eigen::Index i, Eigen::Index j);

/// The inverse of an invertible circulant is circulant; returns its first column.
Circulant<Rational> circ_inverse(const Circulant<Rational>& c);

/// Exact product of a matrix with a vector of cyclotomic numbers.
std::vector<Cyclotomic> apply(const Mat& a, const std::vector<Cyclotomic>& v);

}  // namespace xnpr
