#pragma once

#include <Eigen/Core>

#include <functional>

namespace solvcheeger {

/// Gauss–Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Cached rule of order n (exact for polynomials of degree 2n-1).
/// Thread-safe.
const GaussLegendreRule& gauss_legendre(int n);

/// Single-panel integral of f over [a, b].
double integrate(double a, double b, int n, const std::function<double(double)>& f);

/// Composite rule: [a, b] split into `panels` equal panels, n nodes each.
/// Used where the integrand grows exponentially and a single panel would
/// lose accuracy.
double integrate_composite(double a, double b, int n, int panels,
                           const std::function<double(double)>& f);

/// Panel count that keeps Gauss–Legendre accurate for integrands growing
/// like e^{rate * t}: panel width at most 8 / max(rate, 1).
int panels_for(double a, double b, double rate);

}  // namespace solvcheeger
