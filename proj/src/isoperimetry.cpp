#include "solvcheeger/isoperimetry.hpp"

#include "solvcheeger/errors.hpp"
#include "solvcheeger/quadrature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace solvcheeger {

namespace {

constexpr double kCapBoundSlack = 1e-12;  // roundoff allowance on a strict inequality

void check_shape(const K0Shape& shape, int m) {
  if (m < 1) throw ValidationError("base set needs G0 dimension at least 1");
  if (const auto* box = std::get_if<K0Box>(&shape)) {
    if (box->sides.size() != m)
      throw ValidationError("base box dimension does not match G0");
    for (Eigen::Index i = 0; i < box->sides.size(); ++i)
      if (!(box->sides(i) > 0.0)) throw ValidationError("base box needs positive side lengths");
  } else {
    if (!(std::get<K0Ball>(shape).radius > 0.0))
      throw ValidationError("base ball needs a positive radius");
  }
}

void check_window(const BoxSet& box) {
  if (!(box.b > box.a)) throw ValidationError("height window needs a < b");
}

double spectral_norm(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues()(0);
}

/// Horizontal block of the metric at (u, t).
Eigen::MatrixXd horizontal_metric(const SemidirectModel& model, const Eigen::VectorXd& u,
                                  double t) {
  const int m = model.g0_dim();
  Eigen::MatrixXd binv = model.horizontal_scaling(t);
  if (model.kind() == G0Kind::Step2Nilpotent)
    binv = binv * (Eigen::MatrixXd::Identity(m, m) - 0.5 * model.g0_ad(u));
  return binv.transpose() * binv;
}

double frame_area_element(const Eigen::MatrixXd& ghor, const Eigen::MatrixXd& frame) {
  if (frame.cols() == 0) return 1.0;
  Eigen::MatrixXd gram = frame.transpose() * ghor * frame;
  return std::sqrt(gram.determinant());
}

/// Tensor Gauss–Legendre integral over the box [lo, hi]; a 0-dimensional box
/// is a point and the integral is f at that point.
double tensor_integral(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi, int n,
                       const std::function<double(const Eigen::VectorXd&)>& f) {
  const int k = static_cast<int>(lo.size());
  if (k == 0) return f(Eigen::VectorXd());
  const GaussLegendreRule& rule = gauss_legendre(n);
  long total = 1;
  for (int i = 0; i < k; ++i) total *= n;
  Eigen::VectorXd mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  Eigen::VectorXd u(k);
  double sum = 0.0;
  for (long idx = 0; idx < total; ++idx) {
    long rest = idx;
    double w = 1.0;
    for (int i = 0; i < k; ++i) {
      int digit = static_cast<int>(rest % n);
      rest /= n;
      u(i) = mid(i) + half(i) * rule.nodes(digit);
      w *= half(i) * rule.weights(digit);
    }
    sum += w * f(u);
  }
  return sum;
}

/// Integral over the facet {u_d = side} of [lo, hi], f taking the full
/// m-dimensional point.
double facet_integral(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi, int d, double side,
                      int n, const std::function<double(const Eigen::VectorXd&)>& f) {
  const int m = static_cast<int>(lo.size());
  Eigen::VectorXd flo(m - 1), fhi(m - 1);
  int c = 0;
  for (int i = 0; i < m; ++i) {
    if (i == d) continue;
    flo(c) = lo(i);
    fhi(c) = hi(i);
    ++c;
  }
  return tensor_integral(flo, fhi, n, [&](const Eigen::VectorXd& v) {
    Eigen::VectorXd u(m);
    int ci = 0;
    for (int i = 0; i < m; ++i) u(i) = (i == d) ? side : v(ci++);
    return f(u);
  });
}

Eigen::MatrixXd axis_frame(int m, int skip) {
  Eigen::MatrixXd frame(m, m - 1);
  int c = 0;
  for (int i = 0; i < m; ++i)
    if (i != skip) frame.col(c++) = Eigen::VectorXd::Unit(m, i);
  return frame;
}

double ball_wall_area(const SemidirectModel& model, double radius, double a, double b, int n) {
  const int m = model.g0_dim();
  const double rate = spectral_norm(model.d_matrix());
  const int panels = panels_for(a, b, rate);
  using std::numbers::pi;
  if (m == 1) {
    // Boundary is two points; each wall is a vertical segment of length b-a.
    return 2.0 * (b - a);
  }
  if (m == 2) {
    auto at_height = [&](double t) {
      Eigen::MatrixXd ghor_flat = horizontal_metric(model, Eigen::VectorXd::Zero(2), t);
      return integrate_composite(0.0, 2.0 * pi, n, 4, [&](double theta) {
        Eigen::VectorXd u(2), tangent(2);
        u << radius * std::cos(theta), radius * std::sin(theta);
        tangent << -radius * std::sin(theta), radius * std::cos(theta);
        const Eigen::MatrixXd ghor = model.kind() == G0Kind::AlmostAbelian
                                         ? ghor_flat
                                         : horizontal_metric(model, u, t);
        return std::sqrt(tangent.dot(ghor * tangent));
      });
    };
    return integrate_composite(a, b, n, panels, at_height);
  }
  if (m == 3) {
    auto at_height = [&](double t) {
      Eigen::MatrixXd ghor_flat = horizontal_metric(model, Eigen::VectorXd::Zero(3), t);
      return integrate_composite(0.0, pi, n, 2, [&](double phi) {
        return integrate_composite(0.0, 2.0 * pi, n, 4, [&](double theta) {
          Eigen::VectorXd u(3);
          u << radius * std::sin(phi) * std::cos(theta), radius * std::sin(phi) * std::sin(theta),
              radius * std::cos(phi);
          Eigen::MatrixXd frame(3, 2);
          frame.col(0) << radius * std::cos(phi) * std::cos(theta),
              radius * std::cos(phi) * std::sin(theta), -radius * std::sin(phi);
          frame.col(1) << -radius * std::sin(phi) * std::sin(theta),
              radius * std::sin(phi) * std::cos(theta), 0.0;
          const Eigen::MatrixXd ghor = model.kind() == G0Kind::AlmostAbelian
                                           ? ghor_flat
                                           : horizontal_metric(model, u, t);
          return frame_area_element(ghor, frame);
        });
      });
    };
    return integrate_composite(a, b, n, panels, at_height);
  }
  throw ValidationError("ball walls implemented for G0 dimension <= 3");
}

}  // namespace

double k0_volume(const K0Shape& shape, int m) {
  check_shape(shape, m);
  if (const auto* box = std::get_if<K0Box>(&shape)) return box->sides.prod();
  const double r = std::get<K0Ball>(shape).radius;
  using std::numbers::pi;
  return std::pow(r, m) * std::pow(pi, 0.5 * m) / std::tgamma(0.5 * m + 1.0);
}

double k0_boundary_volume(const K0Shape& shape, int m) {
  check_shape(shape, m);
  if (const auto* box = std::get_if<K0Box>(&shape)) {
    double total = 0.0;
    for (int d = 0; d < m; ++d) {
      double facet = 1.0;
      for (int i = 0; i < m; ++i)
        if (i != d) facet *= box->sides(i);
      total += 2.0 * facet;
    }
    return total;
  }
  const double r = std::get<K0Ball>(shape).radius;
  return m * k0_volume(shape, m) / r;
}

double window_factor(double a, double b, double tau) {
  if (!(b > a)) throw ValidationError("height window needs a < b");
  if (tau == 0.0) return b - a;
  return -std::exp(-a * tau) * std::expm1(-(b - a) * tau) / tau;
}

double box_volume(const SemidirectModel& model, const BoxSet& box) {
  check_shape(box.k0, model.g0_dim());
  check_window(box);
  return k0_volume(box.k0, model.g0_dim()) * window_factor(box.a, box.b, model.tau());
}

double box_cap_area(const SemidirectModel& model, const BoxSet& box) {
  check_shape(box.k0, model.g0_dim());
  check_window(box);
  const double tau = model.tau();
  return k0_volume(box.k0, model.g0_dim()) *
         (std::exp(-box.a * tau) + std::exp(-box.b * tau));
}

double box_wall_area(const SemidirectModel& model, const BoxSet& box, int quadrature_n) {
  check_shape(box.k0, model.g0_dim());
  check_window(box);
  if (quadrature_n < 1) throw ValidationError("box_wall_area: quadrature order must be >= 1");
  const int m = model.g0_dim();
  if (const auto* ball = std::get_if<K0Ball>(&box.k0))
    return ball_wall_area(model, ball->radius, box.a, box.b, quadrature_n);

  const Eigen::VectorXd& sides = std::get<K0Box>(box.k0).sides;
  const double rate = spectral_norm(model.d_matrix());
  const int panels = panels_for(box.a, box.b, rate);
  double total = 0.0;
  for (int d = 0; d < m; ++d) {
    Eigen::MatrixXd frame = axis_frame(m, d);
    if (model.kind() == G0Kind::AlmostAbelian) {
      double facet = 1.0;
      for (int i = 0; i < m; ++i)
        if (i != d) facet *= sides(i);
      double integral =
          integrate_composite(box.a, box.b, quadrature_n, panels, [&](double t) {
            return frame_area_element(horizontal_metric(model, Eigen::VectorXd::Zero(m), t),
                                      frame);
          });
      total += 2.0 * facet * integral;
    } else {
      for (double side : {0.0, sides(d)}) {
        total += integrate_composite(box.a, box.b, quadrature_n, panels, [&](double t) {
          return facet_integral(Eigen::VectorXd::Zero(m), sides, d, side, quadrature_n,
                                [&](const Eigen::VectorXd& u) {
                                  return frame_area_element(horizontal_metric(model, u, t),
                                                            frame);
                                });
        });
      }
    }
  }
  return total;
}

double wall_bound(const SemidirectModel& model, double a, double b) {
  if (!(b >= a)) throw ValidationError("wall_bound: needs a <= b");
  const int m = model.g0_dim();
  if (m == 1) return 1.0;  // empty singular-value product
  auto value = [&](double t) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(model.horizontal_scaling(t));
    const auto& sv = svd.singularValues();
    double prod = 1.0;
    for (int i = 0; i < m - 1; ++i) prod *= sv(i);
    return prod;
  };
  const int grid = 256;
  double best = value(a);
  int best_at = 0;
  for (int i = 1; i <= grid; ++i) {
    double v = value(a + (b - a) * i / grid);
    if (v > best) {
      best = v;
      best_at = i;
    }
  }
  // Ternary refinement around the best grid cell.
  double lo = a + (b - a) * std::max(0, best_at - 1) / grid;
  double hi = a + (b - a) * std::min(grid, best_at + 1) / grid;
  for (int iter = 0; iter < 80; ++iter) {
    double t1 = lo + (hi - lo) / 3.0, t2 = hi - (hi - lo) / 3.0;
    if (value(t1) < value(t2))
      lo = t1;
    else
      hi = t2;
  }
  return std::max(best, value(0.5 * (lo + hi)));
}

IsoperimetricReport box_report(const SemidirectModel& model, const BoxSet& box,
                               int quadrature_n) {
  IsoperimetricReport rep;
  rep.tau = model.tau();
  rep.volume = box_volume(model, box);
  rep.cap_area = box_cap_area(model, box);
  const double walls_coarse = box_wall_area(model, box, quadrature_n);
  rep.wall_area = box_wall_area(model, box, 2 * quadrature_n);
  rep.total_area = rep.cap_area + rep.wall_area;
  rep.ratio = rep.total_area / rep.volume;
  rep.wall_bound_m = wall_bound(model, box.a, box.b);
  rep.quad_error = std::abs(rep.wall_area - walls_coarse) / rep.volume;
  rep.cap_bound_margin = 0.0;  // flat caps sit exactly on the density bound
  return rep;
}

namespace {

struct GraphQuadrature {
  double volume = 0.0, caps = 0.0, walls = 0.0;
  int violations = 0;
  double margin = std::numeric_limits<double>::infinity();
  double t_min = std::numeric_limits<double>::infinity();
  double t_max = -std::numeric_limits<double>::infinity();
};

GraphQuadrature graph_pass(const SemidirectModel& model, const GraphSet& gset, int n) {
  const int m = model.g0_dim();
  const double tau = model.tau();
  const double rate = spectral_norm(model.d_matrix());
  GraphQuadrature out;

  out.volume = tensor_integral(gset.u_lo, gset.u_hi, n, [&](const Eigen::VectorXd& u) {
    const double floor_t = gset.floor_fn(u), roof_t = gset.roof_fn(u);
    if (!(roof_t > floor_t))
      throw QuadratureDomainError("graph set roof does not stay above its floor");
    out.t_min = std::min(out.t_min, floor_t);
    out.t_max = std::max(out.t_max, roof_t);
    return window_factor(floor_t, roof_t, tau);
  });

  auto cap = [&](const std::function<double(const Eigen::VectorXd&)>& height,
                 const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& grad) {
    return tensor_integral(gset.u_lo, gset.u_hi, n, [&](const Eigen::VectorXd& u) {
      const double t = height(u);
      const Eigen::VectorXd g = grad(u);
      if (g.size() != m) throw ValidationError("graph set gradient has wrong dimension");
      Eigen::MatrixXd gram = horizontal_metric(model, u, t) + g * g.transpose();
      const double val = std::sqrt(gram.determinant());
      const double bound = std::exp(-tau * t);
      if (val < bound * (1.0 - kCapBoundSlack)) ++out.violations;
      out.margin = std::min(out.margin, val / bound - 1.0);
      return val;
    });
  };
  out.caps = cap(gset.floor_fn, gset.floor_grad) + cap(gset.roof_fn, gset.roof_grad);

  for (int d = 0; d < m; ++d) {
    Eigen::MatrixXd frame = axis_frame(m, d);
    for (double side : {gset.u_lo(d), gset.u_hi(d)}) {
      out.walls += facet_integral(gset.u_lo, gset.u_hi, d, side, n, [&](const Eigen::VectorXd& u) {
        const double floor_t = gset.floor_fn(u), roof_t = gset.roof_fn(u);
        if (!(roof_t > floor_t))
          throw QuadratureDomainError("graph set roof does not stay above its floor");
        const int panels = panels_for(floor_t, roof_t, rate);
        return integrate_composite(floor_t, roof_t, n, panels, [&](double t) {
          return frame_area_element(horizontal_metric(model, u, t), frame);
        });
      });
    }
  }
  return out;
}

}  // namespace

IsoperimetricReport graph_set_report(const SemidirectModel& model, const GraphSet& gset,
                                     int quadrature_n) {
  const int m = model.g0_dim();
  if (gset.u_lo.size() != m || gset.u_hi.size() != m)
    throw ValidationError("graph set base box dimension does not match G0");
  for (int i = 0; i < m; ++i)
    if (!(gset.u_hi(i) > gset.u_lo(i)))
      throw ValidationError("graph set base box needs positive extents");
  if (!gset.floor_fn || !gset.roof_fn || !gset.floor_grad || !gset.roof_grad)
    throw ValidationError("graph set needs height functions and gradients");
  if (quadrature_n < 1) throw ValidationError("graph_set_report: quadrature order must be >= 1");

  GraphQuadrature coarse = graph_pass(model, gset, quadrature_n);
  GraphQuadrature fine = graph_pass(model, gset, 2 * quadrature_n);

  IsoperimetricReport rep;
  rep.tau = model.tau();
  rep.volume = fine.volume;
  rep.cap_area = fine.caps;
  rep.wall_area = fine.walls;
  rep.total_area = rep.cap_area + rep.wall_area;
  rep.ratio = rep.total_area / rep.volume;
  rep.wall_bound_m = wall_bound(model, fine.t_min, fine.t_max);
  const double coarse_ratio = (coarse.caps + coarse.walls) / coarse.volume;
  rep.quad_error = std::abs(rep.ratio - coarse_ratio);
  rep.cap_bound_violations = fine.violations;
  rep.cap_bound_margin = std::isfinite(fine.margin) ? fine.margin : 0.0;
  return rep;
}

SweepResult equality_sweep(const SemidirectModel& model, double epsilon,
                           const std::vector<double>& k0_scales, const std::vector<double>& b_grid,
                           int quadrature_n) {
  if (!(epsilon > 0.0)) throw ValidationError("equality_sweep: epsilon must be positive");
  if (k0_scales.empty() || b_grid.empty())
    throw ValidationError("equality_sweep: need at least one base scale and one height");
  for (double s : k0_scales)
    if (!(s > 0.0)) throw ValidationError("equality_sweep: base scales must be positive");
  for (double b : b_grid)
    if (!(b > 0.0)) throw ValidationError("equality_sweep: heights must be positive");

  const int m = model.g0_dim();
  const double tau = model.tau();
  SweepResult result;
  result.tau = tau;
  result.epsilon = epsilon;
  result.min_ratio = std::numeric_limits<double>::infinity();

  for (double b : b_grid) {
    const double wf = window_factor(-b, b, tau);
    const double capf = std::exp(b * tau) + std::exp(-b * tau);
    const double bound_m = wall_bound(model, -b, b);
    double unit_walls = 0.0;
    if (model.kind() == G0Kind::AlmostAbelian) {
      BoxSet unit{K0Box{Eigen::VectorXd::Ones(m)}, -b, b};
      unit_walls = box_wall_area(model, unit, quadrature_n);
    }
    for (double s : k0_scales) {
      SweepRow row;
      row.k0_scale = s;
      row.b = b;
      row.volume = std::pow(s, m) * wf;
      row.cap_area = std::pow(s, m) * capf;
      if (model.kind() == G0Kind::AlmostAbelian) {
        // Cube walls scale with the facet volume s^{m-1}.
        row.wall_area = std::pow(s, m - 1) * unit_walls;
      } else {
        BoxSet cube{K0Box{Eigen::VectorXd::Constant(m, s)}, -b, b};
        row.wall_area = box_wall_area(model, cube, quadrature_n);
      }
      row.ratio = (row.cap_area + row.wall_area) / row.volume;
      row.dk_bound = capf / wf;
      row.form2_bound = bound_m * (2.0 * b) / wf * (2.0 * m / s);
      if (row.ratio < result.min_ratio) {
        result.min_ratio = row.ratio;
        result.best_index = static_cast<int>(result.rows.size());
      }
      result.rows.push_back(row);
    }
  }

  result.converged = result.min_ratio <= tau + epsilon;
  if (!result.converged) throw SweepDidNotConverge(result);
  return result;
}

}  // namespace solvcheeger
