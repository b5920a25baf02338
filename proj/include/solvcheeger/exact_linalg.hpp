#pragma once

#include "solvcheeger/errors.hpp"
#include "solvcheeger/rational.hpp"

#include <Eigen/Dense>

namespace solvcheeger {

using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Singular values below kRankTol (relative to max(1, sigma_max)) are treated
/// as zero in float mode; rational mode is exact and needs no tolerance.
inline constexpr double kRankTol = 1e-10;

/// Per-triple Jacobi residual allowance in float mode.
inline constexpr double kJacobiTol = 1e-10;

namespace detail {

/// In-place reduced row echelon form; returns the rank. Exact.
inline int rref(RationalMatrix& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  int rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    Rational inv = Rational(1) / m(rank, col);
    for (Eigen::Index c = col; c < cols; ++c) m(rank, c) = m(rank, c) * inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == rank || m(r, col).is_zero()) continue;
      Rational f = m(r, col);
      for (Eigen::Index c = col; c < cols; ++c) m(r, c) = m(r, c) - f * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

inline int rank_of(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double cut = kRankTol * std::max(1.0, sv(0));
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return r;
}

inline int rank_of(const RationalMatrix& m) {
  if (m.size() == 0) return 0;
  RationalMatrix work = m;
  return detail::rref(work);
}

/// Canonical basis of the column span. Float mode returns the leading left
/// singular vectors; rational mode the nonzero rows of the RREF of the
/// transpose (exact, deterministic).
inline Eigen::MatrixXd column_space_basis(const Eigen::MatrixXd& cols) {
  if (cols.size() == 0) return Eigen::MatrixXd(cols.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cols, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cut = sv.size() ? kRankTol * std::max(1.0, sv(0)) : 0.0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return svd.matrixU().leftCols(r);
}

inline RationalMatrix column_space_basis(const RationalMatrix& cols) {
  RationalMatrix work = cols.transpose();
  int r = detail::rref(work);
  RationalMatrix basis(cols.rows(), r);
  for (int i = 0; i < r; ++i) basis.col(i) = work.row(i).transpose();
  return basis;
}

/// Exact determinant by Gaussian elimination over the rationals.
inline Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of a non-square matrix");
  RationalMatrix work = m;
  const Eigen::Index n = work.rows();
  Rational det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (!work(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      work.row(pivot).swap(work.row(col));
      det = -det;
    }
    det = det * work(col, col);
    Rational inv = Rational(1) / work(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (work(r, col).is_zero()) continue;
      Rational f = work(r, col) * inv;
      for (Eigen::Index c = col; c < n; ++c) work(r, c) = work(r, c) - f * work(col, c);
    }
  }
  return det;
}

/// Exact solve of a nonsingular square system.
inline RationalVector solve_linear(const RationalMatrix& a, const RationalVector& b) {
  if (a.rows() != a.cols() || a.rows() != b.size())
    throw ValidationError("solve_linear: dimension mismatch");
  const Eigen::Index n = a.rows();
  RationalMatrix work(n, n + 1);
  work.leftCols(n) = a;
  work.col(n) = b;
  detail::rref(work);
  for (Eigen::Index i = 0; i < n; ++i)
    if (work(i, i) != Rational(1)) throw ValidationError("solve_linear: singular matrix");
  return work.col(n);
}

inline Eigen::VectorXd solve_linear(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  if (a.rows() != a.cols() || a.rows() != b.size())
    throw ValidationError("solve_linear: dimension mismatch");
  return a.partialPivLu().solve(b);
}

inline bool is_exactly_zero(const RationalVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

inline bool is_exactly_zero(const RationalMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

}  // namespace solvcheeger
