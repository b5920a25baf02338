#include "solvcheeger/quadrature.hpp"

#include "solvcheeger/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace solvcheeger {

namespace {

GaussLegendreRule compute_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton iteration on P_n from the Chebyshev-based initial guess; the
  // recurrence also yields P'_n for the weight 2 / ((1-x^2) P'_n(x)^2).
  for (int k = 0; k < n; ++k) {
    double x = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      if (n == 1) p1 = x;
      for (int m = 2; m <= n; ++m) {
        double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
        p0 = p1;
        p1 = p2;
      }
      double pn = (n == 1) ? x : p1;
      double pn1 = (n == 1) ? 1.0 : p0;
      dp = n * (x * pn - pn1) / (x * x - 1.0);
      double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes(k) = x;
    rule.weights(k) = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  if (n < 1) throw ValidationError("gauss_legendre: order must be at least 1");
  static std::mutex mutex;
  static std::map<int, GaussLegendreRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
  return it->second;
}

double integrate(double a, double b, int n, const std::function<double(double)>& f) {
  const GaussLegendreRule& rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double sum = 0.0;
  for (int k = 0; k < n; ++k) sum += rule.weights(k) * f(mid + half * rule.nodes(k));
  return half * sum;
}

double integrate_composite(double a, double b, int n, int panels,
                           const std::function<double(double)>& f) {
  if (panels < 1) throw ValidationError("integrate_composite: need at least one panel");
  double sum = 0.0;
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) sum += integrate(a + p * width, a + (p + 1) * width, n, f);
  return sum;
}

int panels_for(double a, double b, double rate) {
  const double span = std::abs(b - a);
  const double r = std::max(std::abs(rate), 1.0);
  return std::max(1, static_cast<int>(std::ceil(span * r / 8.0)));
}

}  // namespace solvcheeger
