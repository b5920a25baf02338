#pragma once

#include "solvcheeger/algebra.hpp"
#include "solvcheeger/metric.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <vector>

namespace solvcheeger {

/// Structure of the codimension-one ideal G0. Beyond 2-step nilpotent the
/// exponential coordinates used here stop being polynomial of low degree, so
/// such input is rejected.
enum class G0Kind { AlmostAbelian, Step2Nilpotent };

/// Global exponential-type coordinates on a simply connected solvable group,
/// realized as G0 ⋊ R. A point is (x, t) with x in R^m the G0 part on a
/// metric-orthonormal basis and t the coordinate along the unit normal h0.
/// The group law is
///   (x, s) · (y, t) = (x ∘ e^{sD} y, s + t),
/// where D = ad(h0)|G0 and x ∘ z = x + z + [x, z]/2 (exact for 2-step G0).
class SemidirectModel {
public:
  int dim() const { return m_ + 1; }
  int g0_dim() const { return m_; }
  G0Kind kind() const { return kind_; }
  double tau() const { return tau_; }            // tr D = tr ad(h0)
  const Eigen::MatrixXd& d_matrix() const { return d_; }
  /// Columns: the G0 basis then h0, as vectors of the original algebra.
  const Eigen::MatrixXd& frame() const { return frame_; }

  /// [x, y] inside G0, in model coordinates.
  Eigen::VectorXd g0_bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
  /// Matrix of ad(x)|G0 in model coordinates.
  Eigen::MatrixXd g0_ad(const Eigen::VectorXd& x) const;
  /// x ∘ y = x + y + [x, y]/2 (the G0 product in exponential coordinates).
  Eigen::VectorXd g0_multiply(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  /// Full group law on (x, t) points.
  Eigen::VectorXd multiply(const Eigen::VectorXd& p, const Eigen::VectorXd& q) const;
  /// Derivative of q -> multiply(a, q); independent of q for this law.
  Eigen::MatrixXd left_translation_jacobian(const Eigen::VectorXd& a) const;
  /// A_t = e^{-tD}, the horizontal part of the coordinate metric: the metric
  /// block at height t is A_t^T A_t (times a unipotent factor for 2-step G0).
  Eigen::MatrixXd horizontal_scaling(double t) const;

private:
  friend SemidirectModel build_model(const LieAlgebra<double>&, const InnerProduct<double>&,
                                     const Eigen::VectorXd&);
  SemidirectModel() = default;

  int m_ = 0;
  G0Kind kind_ = G0Kind::AlmostAbelian;
  double tau_ = 0.0;
  Eigen::MatrixXd d_;
  Eigen::MatrixXd frame_;
  std::vector<Eigen::MatrixXd> c_;  // c_[k](i, j): e_k component of [e_i, e_j] in G0
};

/// Model on the metric splitting G0 = ker(tr ad), h0 the splitting normal.
/// Requires a non-unimodular algebra (otherwise there is no preferred
/// transversal; use the explicit-transversal overload).
SemidirectModel build_model(const LieAlgebra<double>& alg, const InnerProduct<double>& ip);

/// Model on an explicit transversal direction; the metric-orthogonal
/// complement of the (normalized) transversal must be an ideal that is
/// abelian or 2-step nilpotent. The transversal is flipped if tr ad points
/// the other way, so tau >= 0 always.
SemidirectModel build_model(const LieAlgebra<double>& alg, const InnerProduct<double>& ip,
                            const Eigen::VectorXd& transversal);

/// First basis direction whose complement is a valid ideal; for unimodular
/// algebras this picks the transversal the CLI and tests use.
Eigen::VectorXd pick_unimodular_transversal(const LieAlgebra<double>& alg,
                                            const InnerProduct<double>& ip);

/// Density of a left Haar measure against dx dt in model coordinates,
/// normalized to 1 at the identity: delta(t) = e^{-t tau}. Construction
/// cross-checks det(e^{-tD}) = e^{-t tr D} at a few heights.
struct HaarDensity {
  double tau = 0.0;
  double operator()(double t) const { return std::exp(-t * tau); }
};

HaarDensity haar_density(const SemidirectModel& model);

/// Metric tensor of the left-invariant metric in model coordinates at p:
/// block diagonal, dt^2 plus a horizontal block depending on (x, t).
Eigen::MatrixXd metric_tensor(const SemidirectModel& model, const Eigen::VectorXd& point);

/// sqrt(det metric_tensor) — the Riemannian volume density against dx dt.
double volume_density(const SemidirectModel& model, const Eigen::VectorXd& point);

/// Independent check that left translation by `a` preserves the volume
/// density: max over sampled points of the relative defect of
/// |det DL_a| * rho(L_a p) / rho(p) against 1, with the Jacobian taken by
/// central finite differences.
double jacobian_oracle(const SemidirectModel& model, const Eigen::VectorXd& a, int samples,
                       std::uint64_t seed);

}  // namespace solvcheeger
