#include "solvcheeger/group_model.hpp"

#include "solvcheeger/errors.hpp"
#include "solvcheeger/random.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>
#include <string>

namespace solvcheeger {

namespace {

constexpr double kIdealTol = 1e-8;      // allowed leak of brackets out of G0
constexpr double kCentralTol = 1e-10;   // allowed residual of [G0,[G0,G0]]
constexpr double kFdStep = 1e-5;        // central-difference step of the oracle

Eigen::MatrixXd expm(const Eigen::MatrixXd& m) { return m.exp(); }

void check_point(const SemidirectModel& model, const Eigen::VectorXd& p, const char* what) {
  if (p.size() != model.dim())
    throw ValidationError(std::string(what) + ": point dimension does not match the model");
}

}  // namespace

Eigen::VectorXd SemidirectModel::g0_bracket(const Eigen::VectorXd& x,
                                            const Eigen::VectorXd& y) const {
  if (x.size() != m_ || y.size() != m_)
    throw ValidationError("g0_bracket: vector dimension does not match G0");
  Eigen::VectorXd z(m_);
  for (int k = 0; k < m_; ++k) z(k) = x.dot(c_[k] * y);
  return z;
}

Eigen::MatrixXd SemidirectModel::g0_ad(const Eigen::VectorXd& x) const {
  if (x.size() != m_) throw ValidationError("g0_ad: vector dimension does not match G0");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(m_, m_);
  for (int k = 0; k < m_; ++k) m.row(k) = x.transpose() * c_[k];
  return m;
}

Eigen::VectorXd SemidirectModel::g0_multiply(const Eigen::VectorXd& x,
                                             const Eigen::VectorXd& y) const {
  return x + y + 0.5 * g0_bracket(x, y);
}

Eigen::VectorXd SemidirectModel::multiply(const Eigen::VectorXd& p,
                                          const Eigen::VectorXd& q) const {
  check_point(*this, p, "multiply");
  check_point(*this, q, "multiply");
  const Eigen::VectorXd shifted = expm(p(m_) * d_) * q.head(m_);
  Eigen::VectorXd out(m_ + 1);
  out.head(m_) = g0_multiply(p.head(m_), shifted);
  out(m_) = p(m_) + q(m_);
  return out;
}

Eigen::MatrixXd SemidirectModel::left_translation_jacobian(const Eigen::VectorXd& a) const {
  check_point(*this, a, "left_translation_jacobian");
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(m_ + 1, m_ + 1);
  jac.topLeftCorner(m_, m_) =
      (Eigen::MatrixXd::Identity(m_, m_) + 0.5 * g0_ad(a.head(m_))) * expm(a(m_) * d_);
  jac(m_, m_) = 1.0;
  return jac;
}

Eigen::MatrixXd SemidirectModel::horizontal_scaling(double t) const { return expm(-t * d_); }

SemidirectModel build_model(const LieAlgebra<double>& alg, const InnerProduct<double>& ip) {
  if (alg.dim() != ip.dim())
    throw ValidationError("build_model: algebra and metric dimensions differ");
  if (is_unimodular(alg))
    throw ValidationError(
        "build_model: unimodular algebra has no preferred transversal; pass one explicitly");
  MetricSplitting s = split(alg, ip);
  return build_model(alg, ip, *s.h0);
}

SemidirectModel build_model(const LieAlgebra<double>& alg, const InnerProduct<double>& ip,
                            const Eigen::VectorXd& transversal) {
  if (alg.dim() != ip.dim())
    throw ValidationError("build_model: algebra and metric dimensions differ");
  if (alg.dim() < 2) throw ValidationError("build_model: need dimension at least 2");
  if (transversal.size() != alg.dim())
    throw ValidationError("build_model: transversal dimension does not match the algebra");
  if (!is_solvable(alg)) throw NotSolvable("build_model: algebra is not solvable");
  double norm = std::sqrt(ip.inner(transversal, transversal));
  if (!(norm > 0.0)) throw ValidationError("build_model: zero transversal");
  Eigen::VectorXd h0_unit = transversal / norm;
  if (trace_form(alg).dot(h0_unit) < 0.0) h0_unit = -h0_unit;

  const int n = alg.dim();
  const int m = n - 1;

  Eigen::MatrixXd q = detail::orthonormal_complement(ip, h0_unit);

  // Brackets may not leak onto h0: the complement must be an ideal.
  auto h0_component = [&](const Eigen::VectorXd& w) { return std::abs(ip.inner(h0_unit, w)); };
  for (int a = 0; a < m; ++a) {
    Eigen::VectorXd w = bracket(alg, h0_unit, q.col(a));
    if (h0_component(w) > kIdealTol * (1.0 + w.norm()))
      throw ValidationError("transversal complement is not an ideal: [h0, g0] leaves g0");
    for (int b = a + 1; b < m; ++b) {
      Eigen::VectorXd u = bracket(alg, q.col(a), q.col(b));
      if (h0_component(u) > kIdealTol * (1.0 + u.norm()))
        throw ValidationError("transversal complement is not an ideal: [g0, g0] leaves g0");
    }
  }

  SemidirectModel model;
  model.m_ = m;
  model.frame_.resize(n, n);
  model.frame_.leftCols(m) = q;
  model.frame_.col(m) = h0_unit;

  model.d_.resize(m, m);
  for (int j = 0; j < m; ++j) {
    Eigen::VectorXd w = bracket(alg, h0_unit, q.col(j));
    for (int i = 0; i < m; ++i) model.d_(i, j) = ip.inner(q.col(i), w);
  }
  model.tau_ = model.d_.trace();

  model.c_.assign(m, Eigen::MatrixXd::Zero(m, m));
  double bracket_scale = 0.0;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      Eigen::VectorXd u = bracket(alg, q.col(a), q.col(b));
      for (int k = 0; k < m; ++k) {
        double comp = ip.inner(q.col(k), u);
        model.c_[k](a, b) = comp;
        model.c_[k](b, a) = -comp;
        bracket_scale = std::max(bracket_scale, std::abs(comp));
      }
    }

  if (bracket_scale <= kCentralTol) {
    model.kind_ = G0Kind::AlmostAbelian;
    model.c_.assign(m, Eigen::MatrixXd::Zero(m, m));
  } else {
    // 2-step means every bracket is central in G0.
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        Eigen::VectorXd u(m);
        for (int k = 0; k < m; ++k) u(k) = model.c_[k](a, b);
        for (int l = 0; l < m; ++l) {
          Eigen::VectorXd v = model.g0_bracket(Eigen::VectorXd::Unit(m, l), u);
          if (v.lpNorm<Eigen::Infinity>() > kCentralTol * (1.0 + bracket_scale))
            throw UnsupportedG0(
                "the codimension-one ideal is nilpotent of step > 2 (or not nilpotent); "
                "no coordinate model available");
        }
      }
    model.kind_ = G0Kind::Step2Nilpotent;
  }

  const double alpha_h0 = trace_form(alg).dot(h0_unit);
  if (std::abs(model.tau_ - alpha_h0) > 1e-9 * (1.0 + std::abs(alpha_h0)))
    throw std::logic_error("model assembly: tr D disagrees with the trace form on h0");

  return model;
}

Eigen::VectorXd pick_unimodular_transversal(const LieAlgebra<double>& alg,
                                            const InnerProduct<double>& ip) {
  const int n = alg.dim();
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd h = Eigen::VectorXd::Unit(n, i);
    try {
      build_model(alg, ip, h);
      return h / std::sqrt(ip.inner(h, h));
    } catch (const ValidationError&) {
    } catch (const UnsupportedG0&) {
    }
  }
  throw ValidationError(
      "no basis direction has an ideal complement of step <= 2; pass a transversal explicitly");
}

HaarDensity haar_density(const SemidirectModel& model) {
  // det ∘ exp = exp ∘ tr, checked on the actual D rather than assumed.
  for (double t : {-1.5, -0.5, 0.5, 1.5}) {
    double lhs = model.horizontal_scaling(t).determinant();
    double rhs = std::exp(-t * model.tau());
    if (std::abs(lhs - rhs) > 1e-9 * std::abs(rhs))
      throw std::logic_error("haar_density: det(e^{-tD}) deviates from e^{-t tr D}");
  }
  return HaarDensity{model.tau()};
}

Eigen::MatrixXd metric_tensor(const SemidirectModel& model, const Eigen::VectorXd& point) {
  check_point(model, point, "metric_tensor");
  const int m = model.g0_dim();
  // Coordinate frame = (I + ad(x)/2) e^{tD} on the horizontal block; its
  // unipotent factor inverts exactly because ad(x)^2 = 0 at step 2.
  Eigen::MatrixXd binv = model.horizontal_scaling(point(m));
  if (model.kind() == G0Kind::Step2Nilpotent)
    binv = binv * (Eigen::MatrixXd::Identity(m, m) - 0.5 * model.g0_ad(point.head(m)));
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(m + 1, m + 1);
  g.topLeftCorner(m, m) = binv.transpose() * binv;
  g(m, m) = 1.0;
  return g;
}

double volume_density(const SemidirectModel& model, const Eigen::VectorXd& point) {
  return std::sqrt(metric_tensor(model, point).determinant());
}

double jacobian_oracle(const SemidirectModel& model, const Eigen::VectorXd& a, int samples,
                       std::uint64_t seed) {
  check_point(model, a, "jacobian_oracle");
  if (samples < 1) throw ValidationError("jacobian_oracle: need at least one sample");
  const int n = model.dim();
  Rng rng(seed);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXd p = rng.uniform_vector(n, -1.0, 1.0);
    Eigen::MatrixXd jac(n, n);
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXd hi = p, lo = p;
      hi(i) += kFdStep;
      lo(i) -= kFdStep;
      jac.col(i) = (model.multiply(a, hi) - model.multiply(a, lo)) / (2.0 * kFdStep);
    }
    const double pushed = volume_density(model, model.multiply(a, p));
    const double here = volume_density(model, p);
    worst = std::max(worst, std::abs(std::abs(jac.determinant()) * pushed / here - 1.0));
  }
  return worst;
}

}  // namespace solvcheeger
