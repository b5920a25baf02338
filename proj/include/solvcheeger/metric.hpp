#pragma once

#include "solvcheeger/algebra.hpp"
#include "solvcheeger/errors.hpp"
#include "solvcheeger/exact_linalg.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <optional>

namespace solvcheeger {

/// Eigenvalue floor for positive definiteness in float mode, relative to
/// max(1, largest eigenvalue).
inline constexpr double kPdTol = 1e-12;

/// A left-invariant metric, i.e. an inner product on the algebra, stored as
/// its Gram matrix on the structure basis. Construction rejects asymmetric or
/// non-positive-definite input (Sylvester minors over Rational, eigenvalue
/// floor over double).
template <typename Scalar>
class InnerProduct {
public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  explicit InnerProduct(Matrix gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols() || gram_.rows() < 1)
      throw ValidationError("inner product needs a square Gram matrix");
    for (Eigen::Index i = 0; i < gram_.rows(); ++i)
      for (Eigen::Index j = i + 1; j < gram_.cols(); ++j)
        if (!(gram_(i, j) == gram_(j, i)))
          throw NotPositiveDefinite("Gram matrix is not symmetric");
    check_positive_definite();
  }

  static InnerProduct identity(int n) { return InnerProduct(Matrix::Identity(n, n)); }

  int dim() const { return static_cast<int>(gram_.rows()); }
  const Matrix& gram() const { return gram_; }

  template <typename DX, typename DY>
  Scalar inner(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y) const {
    Vector xv = x, yv = y;
    if (xv.size() != dim() || yv.size() != dim())
      throw ValidationError("inner: vector dimension does not match the Gram matrix");
    return xv.dot(gram_ * yv);
  }

  Vector solve(const Vector& rhs) const { return solve_linear(gram_, rhs); }

private:
  void check_positive_definite();

  Matrix gram_;
};

template <>
inline void InnerProduct<double>::check_positive_definite() {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram_, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  if (ev(0) <= kPdTol * std::max(1.0, ev(ev.size() - 1)))
    throw NotPositiveDefinite("Gram matrix is not positive definite");
}

template <>
inline void InnerProduct<Rational>::check_positive_definite() {
  for (Eigen::Index k = 1; k <= gram_.rows(); ++k) {
    RationalMatrix minor = gram_.topLeftCorner(k, k);
    if (!(determinant(minor) > Rational(0)))
      throw NotPositiveDefinite("Gram matrix is not positive definite");
  }
}

inline InnerProduct<double> to_double(const InnerProduct<Rational>& ip) {
  Eigen::MatrixXd g(ip.dim(), ip.dim());
  for (int i = 0; i < ip.dim(); ++i)
    for (int j = 0; j < ip.dim(); ++j) g(i, j) = ip.gram()(i, j).to_double();
  return InnerProduct<double>(std::move(g));
}

/// Squared dual norm of a covector: alpha^T G^{-1} alpha. Exact over
/// Rational.
template <typename Scalar>
Scalar dual_norm_squared(const typename InnerProduct<Scalar>::Vector& alpha,
                         const InnerProduct<Scalar>& ip) {
  if (alpha.size() != ip.dim())
    throw ValidationError("dual_norm: covector dimension does not match the Gram matrix");
  return alpha.dot(ip.solve(alpha));
}

inline double dual_norm(const Eigen::VectorXd& alpha, const InnerProduct<double>& ip) {
  return std::sqrt(dual_norm_squared<double>(alpha, ip));
}

/// Rational path: the square root is taken exactly when the squared value is
/// a perfect rational square (every bundled example is), otherwise in double.
inline double dual_norm(const RationalVector& alpha, const InnerProduct<Rational>& ip) {
  Rational sq = dual_norm_squared<Rational>(alpha, ip);
  Rational root;
  if (exact_sqrt(sq, root)) return root.to_double();
  return std::sqrt(sq.to_double());
}

/// Metric-orthogonal splitting G = G0 ⊕ R·h0 with G0 = ker(tr ad) and h0 the
/// unit normal on which the trace form is positive. For unimodular algebras
/// the trace form vanishes, there is no preferred normal, and g0_basis is the
/// whole space.
struct MetricSplitting {
  Eigen::MatrixXd g0_basis;            // metric-orthonormal columns
  std::optional<Eigen::VectorXd> h0;   // absent when unimodular
  double tau = 0.0;                    // tr ad(h0), the dual norm of the trace form
};

namespace detail {

/// Metric-orthonormal basis of the orthogonal complement of a unit vector:
/// drop the coordinate direction most parallel to it, Gram–Schmidt the rest.
inline Eigen::MatrixXd orthonormal_complement(const InnerProduct<double>& ip,
                                              const Eigen::VectorXd& unit) {
  const int n = ip.dim();
  int drop = 0;
  double best = -1.0;
  for (int i = 0; i < n; ++i) {
    double overlap = std::abs(ip.inner(unit, Eigen::VectorXd::Unit(n, i)));
    if (overlap > best) {
      best = overlap;
      drop = i;
    }
  }
  Eigen::MatrixXd basis(n, n - 1);
  int col = 0;
  for (int i = 0; i < n; ++i) {
    if (i == drop) continue;
    Eigen::VectorXd v = Eigen::VectorXd::Unit(n, i);
    v -= ip.inner(unit, v) * unit;
    for (int c = 0; c < col; ++c) v -= ip.inner(basis.col(c), v) * basis.col(c);
    double norm = std::sqrt(ip.inner(v, v));
    if (norm <= 1e-14) throw ValidationError("degenerate complement basis");
    basis.col(col++) = v / norm;
  }
  return basis;
}

}  // namespace detail

inline MetricSplitting split(const LieAlgebra<double>& alg, const InnerProduct<double>& ip) {
  if (alg.dim() != ip.dim())
    throw ValidationError("split: algebra and metric dimensions differ");
  if (!is_solvable(alg)) throw NotSolvable("split: algebra is not solvable");
  Eigen::VectorXd alpha = trace_form(alg);
  MetricSplitting out;
  if (alpha.lpNorm<Eigen::Infinity>() <= kRankTol) {
    out.g0_basis = Eigen::MatrixXd::Identity(alg.dim(), alg.dim());
    return out;
  }
  Eigen::VectorXd raised = ip.solve(alpha);
  out.tau = std::sqrt(alpha.dot(raised));
  out.h0 = raised / out.tau;  // unit: <raised,raised>_g = tau^2
  out.g0_basis = detail::orthonormal_complement(ip, *out.h0);
  return out;
}

}  // namespace solvcheeger
