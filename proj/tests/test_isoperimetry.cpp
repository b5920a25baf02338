#include "solvcheeger/isoperimetry.hpp"

#include "solvcheeger/errors.hpp"
#include "support/builders.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <vector>

using solvcheeger::BoxSet;
using solvcheeger::box_cap_area;
using solvcheeger::box_report;
using solvcheeger::box_volume;
using solvcheeger::box_wall_area;
using solvcheeger::build_model;
using solvcheeger::GraphSet;
using solvcheeger::graph_set_report;
using solvcheeger::InnerProduct;
using solvcheeger::K0Ball;
using solvcheeger::K0Box;
using solvcheeger::k0_boundary_volume;
using solvcheeger::k0_volume;
using solvcheeger::QuadratureDomainError;
using solvcheeger::SemidirectModel;
using solvcheeger::ValidationError;
using solvcheeger::wall_bound;
using solvcheeger::window_factor;

namespace {

Eigen::VectorXd sides(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

/// Composite Simpson on [a, b], independent of the library quadrature.
double simpson(double a, double b, int intervals,
               const std::function<double(double)>& f) {
  if (intervals % 2 != 0) ++intervals;
  const double h = (b - a) / intervals;
  double sum = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

double simpson2d(double ax, double bx, double ay, double by, int intervals,
                 const std::function<double(double, double)>& f) {
  return simpson(ax, bx, intervals, [&](double x) {
    return simpson(ay, by, intervals, [&](double y) { return f(x, y); });
  });
}

SemidirectModel axb_model() {
  return build_model(builders::axb<double>(), builders::identity_ip<double>(2));
}

SemidirectModel sol_model() {
  return build_model(builders::sol<double>(), builders::identity_ip<double>(3),
                     Eigen::Vector3d(1, 0, 0));
}

SemidirectModel hyper3_model() {
  return build_model(builders::hyperbolic<double>(3), builders::identity_ip<double>(3));
}

SemidirectModel heis_model() {
  return build_model(builders::heisenberg<double>(), builders::identity_ip<double>(3),
                     Eigen::Vector3d(1, 0, 0));
}

SemidirectModel step2_model() {
  return build_model(builders::heisenberg_extension<double>(),
                     builders::identity_ip<double>(4));
}

GraphSet flat_graph(int m, double lo_side, double hi_side, double a, double b) {
  GraphSet g;
  g.u_lo = Eigen::VectorXd::Constant(m, lo_side);
  g.u_hi = Eigen::VectorXd::Constant(m, hi_side);
  g.floor_fn = [a](const Eigen::VectorXd&) { return a; };
  g.roof_fn = [b](const Eigen::VectorXd&) { return b; };
  g.floor_grad = [m](const Eigen::VectorXd&) { return Eigen::VectorXd::Zero(m); };
  g.roof_grad = [m](const Eigen::VectorXd&) { return Eigen::VectorXd::Zero(m); };
  return g;
}

}  // namespace

TEST_CASE("base volumes and perimeters for boxes and balls") {
  CHECK(k0_volume(K0Box{sides({2.0, 3.0})}, 2) == doctest::Approx(6.0));
  CHECK(k0_boundary_volume(K0Box{sides({2.0, 3.0})}, 2) == doctest::Approx(10.0));
  CHECK(k0_boundary_volume(K0Box{sides({1.0, 1.0, 1.0})}, 3) == doctest::Approx(6.0));

  CHECK(k0_volume(K0Ball{1.5}, 1) == doctest::Approx(3.0));
  CHECK(k0_boundary_volume(K0Ball{1.5}, 1) == doctest::Approx(2.0));
  CHECK(k0_volume(K0Ball{2.0}, 2) == doctest::Approx(4.0 * M_PI));
  CHECK(k0_boundary_volume(K0Ball{2.0}, 2) == doctest::Approx(4.0 * M_PI));
  CHECK(k0_volume(K0Ball{1.0}, 3) == doctest::Approx(4.0 * M_PI / 3.0));
  CHECK(k0_boundary_volume(K0Ball{1.0}, 3) == doctest::Approx(4.0 * M_PI));

  CHECK_THROWS_AS(k0_volume(K0Box{sides({1.0, -1.0})}, 2), ValidationError);
  CHECK_THROWS_AS(k0_volume(K0Box{sides({1.0})}, 2), ValidationError);
  CHECK_THROWS_AS(k0_volume(K0Ball{0.0}, 2), ValidationError);
}

TEST_CASE("window factor integrates the height density stably") {
  CHECK(window_factor(0.0, 2.0, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(window_factor(0.0, std::log(2.0), 1.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(window_factor(1.0, 3.0, 2.0) ==
        doctest::Approx((std::exp(-2.0) - std::exp(-6.0)) / 2.0).epsilon(1e-14));
  CHECK(window_factor(0.0, 1.0, -1.0) == doctest::Approx(std::expm1(1.0)).epsilon(1e-14));
  // Tiny windows stay accurate (naive e^{-a} - e^{-b} would cancel).
  CHECK(window_factor(5.0, 5.0 + 1e-12, 1.0) ==
        doctest::Approx(std::exp(-5.0) * 1e-12).epsilon(1e-9));
  CHECK_THROWS_AS(window_factor(1.0, 1.0, 0.5), ValidationError);
}

TEST_CASE("affine-line product sets have closed-form volume and area") {
  auto model = axb_model();
  BoxSet box{K0Box{sides({1.0})}, 0.0, std::log(2.0)};
  CHECK(box_volume(model, box) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(box_cap_area(model, box) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(box_wall_area(model, box) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-13));
  auto rep = box_report(model, box);
  CHECK(rep.total_area == doctest::Approx(1.5 + 2.0 * std::log(2.0)).epsilon(1e-13));
  CHECK(rep.ratio == doctest::Approx((1.5 + 2.0 * std::log(2.0)) / 0.5).epsilon(1e-13));
  CHECK(rep.tau == doctest::Approx(1.0));
  CHECK(rep.wall_bound_m == doctest::Approx(1.0));  // no horizontal directions to shear
  CHECK(rep.quad_error < 1e-12);
  CHECK(rep.cap_bound_violations == 0);
}

TEST_CASE("anisotropic stretching gives different wall rates per axis") {
  auto model = sol_model();
  const double a = -0.5, b = 1.25;
  BoxSet box{K0Box{sides({1.0, 1.0})}, a, b};
  const double expect = 2.0 * (std::exp(b) - std::exp(a)) +
                        2.0 * (std::exp(-a) - std::exp(-b));
  CHECK(box_wall_area(model, box) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(box_volume(model, box) == doctest::Approx(b - a).epsilon(1e-14));
  CHECK(box_cap_area(model, box) == doctest::Approx(2.0).epsilon(1e-14));

  // Stretching only in one horizontal direction rescales one pair of walls.
  BoxSet wide{K0Box{sides({3.0, 1.0})}, a, b};
  const double expect_wide = 2.0 * (std::exp(b) - std::exp(a)) +
                             3.0 * 2.0 * (std::exp(-a) - std::exp(-b));
  CHECK(box_wall_area(model, wide) == doctest::Approx(expect_wide).epsilon(1e-12));
}

TEST_CASE("isotropic models match the per-axis closed form") {
  auto model = hyper3_model();
  BoxSet box{K0Box{sides({1.0, 1.0})}, 0.0, 1.0};
  CHECK(box_wall_area(model, box) ==
        doctest::Approx(4.0 * (1.0 - std::exp(-1.0))).epsilon(1e-13));
  CHECK(box_volume(model, box) ==
        doctest::Approx(window_factor(0.0, 1.0, 2.0)).epsilon(1e-14));
  CHECK(box_cap_area(model, box) == doctest::Approx(1.0 + std::exp(-2.0)).epsilon(1e-14));

  // General diagonal rates: each axis pair integrates e^{-sigma_d t} where
  // sigma_d sums the rates of the in-facet directions.
  auto diag_model = build_model(builders::diagonal<double>({0.5, 1.0, 2.0}),
                                builders::identity_ip<double>(4));
  const double a = -0.25, b = 0.75;
  Eigen::Vector3d s3(1.5, 0.5, 2.0);
  BoxSet dbox{K0Box{Eigen::VectorXd(s3)}, a, b};
  double expect = 0.0;
  const Eigen::Vector3d rates(0.5, 1.0, 2.0);
  for (int d = 0; d < 3; ++d) {
    double facet = 1.0, sigma = 0.0;
    for (int i = 0; i < 3; ++i) {
      if (i == d) continue;
      facet *= s3(i);
      sigma += rates(i);
    }
    expect += 2.0 * facet * window_factor(a, b, sigma);
  }
  CHECK(box_wall_area(diag_model, dbox) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("shear models produce the arcsinh wall integral") {
  auto model = heis_model();
  const double a = 0.0, b = 1.0;
  BoxSet box{K0Box{sides({1.0, 1.0})}, a, b};
  auto antideriv = [](double t) {
    return 0.5 * (t * std::sqrt(1.0 + t * t) + std::asinh(t));
  };
  // One axis pair sees unit speed, the other sqrt(1 + t^2).
  const double expect = 2.0 * (b - a) + 2.0 * (antideriv(b) - antideriv(a));
  CHECK(box_wall_area(model, box) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(box_volume(model, box) == doctest::Approx(b - a).epsilon(1e-14));  // tau = 0
}

TEST_CASE("two-step walls match an independently derived closed form") {
  auto model = step2_model();
  const double s = 0.8, a = 0.2, b = 1.0;
  BoxSet box{K0Box{sides({s, s, s})}, a, b};

  // Two of the three axis pairs have constant area element e^{-3t}; the
  // third integrates e^{-2t} sqrt(1 + |u|^2 e^{-2t} / 4), which has an
  // elementary antiderivative in t. The base integral is done by Simpson.
  auto t_integral = [&](double c) {
    if (c < 1e-14) return 0.5 * (std::exp(-2.0 * a) - std::exp(-2.0 * b));
    auto primitive = [&](double t) {
      return std::pow(1.0 + c * std::exp(-2.0 * t), 1.5) / (3.0 * c);
    };
    return primitive(a) - primitive(b);
  };
  const double shear_facet = simpson2d(0.0, s, 0.0, s, 64, [&](double u0, double u1) {
    return t_integral(0.25 * (u0 * u0 + u1 * u1));
  });
  const double expect = 4.0 * s * s * window_factor(a, b, 3.0) + 2.0 * shear_facet;
  CHECK(box_wall_area(model, box, 16) == doctest::Approx(expect).epsilon(1e-6));

  CHECK(box_volume(model, box) ==
        doctest::Approx(s * s * s * window_factor(a, b, 4.0)).epsilon(1e-14));
  CHECK(box_cap_area(model, box) ==
        doctest::Approx(s * s * s * (std::exp(-4.0 * a) + std::exp(-4.0 * b))).epsilon(1e-14));
}

TEST_CASE("ball walls agree with the rotation-invariant closed form") {
  auto model2 = hyper3_model();  // isotropic shrink e^{-t} per direction
  BoxSet disc{K0Ball{1.0}, 0.0, 1.0};
  CHECK(box_wall_area(model2, disc) ==
        doctest::Approx(2.0 * M_PI * window_factor(0.0, 1.0, 1.0)).epsilon(1e-10));
  CHECK(box_volume(model2, disc) ==
        doctest::Approx(M_PI * window_factor(0.0, 1.0, 2.0)).epsilon(1e-13));

  auto model3 = build_model(builders::hyperbolic<double>(4), builders::identity_ip<double>(4));
  BoxSet orb{K0Ball{0.75}, -0.5, 0.5};
  CHECK(box_wall_area(model3, orb) ==
        doctest::Approx(4.0 * M_PI * 0.75 * 0.75 * window_factor(-0.5, 0.5, 2.0))
            .epsilon(1e-9));

  auto model1 = axb_model();
  BoxSet seg{K0Ball{2.0}, 0.0, 3.0};
  CHECK(box_wall_area(model1, seg) == doctest::Approx(6.0).epsilon(1e-13));

  auto model4 = build_model(builders::hyperbolic<double>(5), builders::identity_ip<double>(5));
  BoxSet big{K0Ball{1.0}, 0.0, 1.0};
  CHECK_THROWS_AS(box_wall_area(model4, big), ValidationError);
}

TEST_CASE("wall bound tracks the largest singular-value product") {
  CHECK(wall_bound(axb_model(), -2.0, 5.0) == doctest::Approx(1.0));
  // One direction stretches as e^{|t|}.
  CHECK(wall_bound(sol_model(), 0.0, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-10));
  CHECK(wall_bound(sol_model(), -2.0, 1.0) == doctest::Approx(std::exp(2.0)).epsilon(1e-10));
  // Isotropic shrink: the maximum sits at the left endpoint.
  CHECK(wall_bound(hyper3_model(), 0.5, 2.0) ==
        doctest::Approx(std::exp(-0.5)).epsilon(1e-10));
  CHECK(wall_bound(build_model(builders::hyperbolic<double>(4),
                               builders::identity_ip<double>(4)),
                   -1.0, 2.0) == doctest::Approx(std::exp(2.0)).epsilon(1e-9));
  // Unipotent shear: top singular value of [[1,0],[-t,1]] at t = 1 is the
  // golden ratio.
  CHECK(wall_bound(heis_model(), 0.0, 1.0) ==
        doctest::Approx(0.5 * (1.0 + std::sqrt(5.0))).epsilon(1e-9));
  CHECK_THROWS_AS(wall_bound(axb_model(), 1.0, 0.0), ValidationError);
}

TEST_CASE("wall area never exceeds the bound times window and perimeter") {
  auto check_bound = [](const SemidirectModel& model, const BoxSet& box) {
    const double walls = box_wall_area(model, box);
    const double cap = wall_bound(model, box.a, box.b) * (box.b - box.a) *
                       k0_boundary_volume(box.k0, model.g0_dim());
    CHECK(walls <= cap * (1.0 + 1e-10));
  };
  check_bound(sol_model(), BoxSet{K0Box{sides({1.0, 2.0})}, -1.0, 1.5});
  check_bound(hyper3_model(), BoxSet{K0Box{sides({0.5, 3.0})}, 0.0, 4.0});
  check_bound(heis_model(), BoxSet{K0Ball{1.5}, -1.0, 1.0});
  check_bound(step2_model(), BoxSet{K0Box{sides({1.0, 1.0, 1.0})}, 0.0, 1.0});
}

TEST_CASE("cap-to-volume quotient only depends on the window width") {
  auto model = hyper3_model();
  BoxSet w1{K0Box{sides({1.0, 1.0})}, 0.0, 2.0};
  BoxSet w2{K0Box{sides({1.0, 1.0})}, -3.0, -1.0};
  const double q1 = box_cap_area(model, w1) / box_volume(model, w1);
  const double q2 = box_cap_area(model, w2) / box_volume(model, w2);
  CHECK(q1 == doctest::Approx(q2).epsilon(1e-12));
}

TEST_CASE("flat graph sets reproduce the product-set report") {
  auto run = [](const SemidirectModel& model, double a, double b) {
    const int m = model.g0_dim();
    auto gset = flat_graph(m, 0.0, 1.0, a, b);
    auto g = graph_set_report(model, gset, 12);
    BoxSet box{K0Box{Eigen::VectorXd::Ones(m)}, a, b};
    auto r = box_report(model, box, 12);
    CHECK(g.volume == doctest::Approx(r.volume).epsilon(1e-11));
    CHECK(g.cap_area == doctest::Approx(r.cap_area).epsilon(1e-11));
    CHECK(g.wall_area == doctest::Approx(r.wall_area).epsilon(1e-9));
    CHECK(g.ratio == doctest::Approx(r.ratio).epsilon(1e-9));
    CHECK(g.cap_bound_violations == 0);
    CHECK(g.cap_bound_margin == doctest::Approx(0.0).epsilon(1e-11));
    CHECK(g.quad_error < 1e-8);
  };
  run(axb_model(), 0.0, 1.0);
  run(sol_model(), -0.5, 0.5);
  run(hyper3_model(), 0.0, 2.0);
  run(step2_model(), 0.0, 0.5);
}

TEST_CASE("tilted roofs integrate the exact graph area element") {
  auto model = axb_model();
  GraphSet g;
  g.u_lo = sides({0.0});
  g.u_hi = sides({1.0});
  g.floor_fn = [](const Eigen::VectorXd&) { return 0.0; };
  g.floor_grad = [](const Eigen::VectorXd&) { return Eigen::VectorXd::Zero(1); };
  g.roof_fn = [](const Eigen::VectorXd& u) { return 1.0 + 0.5 * u(0); };
  g.roof_grad = [](const Eigen::VectorXd&) {
    return Eigen::VectorXd::Constant(1, 0.5);
  };
  auto rep = graph_set_report(model, g, 24);

  const double vol = simpson(0.0, 1.0, 256, [](double u) {
    return window_factor(0.0, 1.0 + 0.5 * u, 1.0);
  });
  const double roof_cap = simpson(0.0, 1.0, 256, [](double u) {
    const double t = 1.0 + 0.5 * u;
    return std::sqrt(std::exp(-2.0 * t) + 0.25);
  });
  const double floor_cap = 1.0;
  const double walls = 1.0 + 1.5;  // vertical segments at u = 0 and u = 1
  CHECK(rep.volume == doctest::Approx(vol).epsilon(1e-9));
  CHECK(rep.cap_area == doctest::Approx(roof_cap + floor_cap).epsilon(1e-9));
  CHECK(rep.wall_area == doctest::Approx(walls).epsilon(1e-11));
  CHECK(rep.cap_bound_violations == 0);
  // The flat floor sits exactly on the density bound; the tilted roof above it.
  CHECK(rep.cap_bound_margin >= 0.0);
  CHECK(rep.cap_bound_margin <= 1e-12);
  CHECK(rep.ratio >= rep.tau);
}

TEST_CASE("curved floors and roofs keep the cap integrand above the density") {
  auto model = hyper3_model();
  GraphSet g;
  g.u_lo = sides({-1.0, -1.0});
  g.u_hi = sides({1.0, 1.0});
  g.floor_fn = [](const Eigen::VectorXd& u) {
    return -2.0 + 0.3 * (u(0) * u(0) + u(1) * u(1));
  };
  g.floor_grad = [](const Eigen::VectorXd& u) {
    return Eigen::VectorXd(0.6 * u);
  };
  g.roof_fn = [](const Eigen::VectorXd& u) { return 1.0 + 0.2 * u(0) * u(1); };
  g.roof_grad = [](const Eigen::VectorXd& u) {
    Eigen::VectorXd grad(2);
    grad << 0.2 * u(1), 0.2 * u(0);
    return grad;
  };
  auto rep = graph_set_report(model, g, 16);
  CHECK(rep.cap_bound_violations == 0);
  CHECK(rep.cap_bound_margin >= 0.0);
  CHECK(rep.ratio >= rep.tau - rep.quad_error);
  CHECK(rep.quad_error < 1e-6);
  CHECK(rep.volume > 0.0);
  CHECK(rep.wall_area > 0.0);
}

TEST_CASE("a roof dipping under the floor raises a domain error") {
  auto model = axb_model();
  GraphSet g = flat_graph(1, 0.0, 1.0, 0.0, 1.0);
  g.roof_fn = [](const Eigen::VectorXd& u) { return 0.5 - u(0); };
  CHECK_THROWS_AS(graph_set_report(model, g, 8), QuadratureDomainError);
}

TEST_CASE("graph sets validate their inputs") {
  auto model = sol_model();
  GraphSet g = flat_graph(2, 0.0, 1.0, 0.0, 1.0);
  g.u_hi(0) = -1.0;
  CHECK_THROWS_AS(graph_set_report(model, g, 8), ValidationError);

  GraphSet g2 = flat_graph(1, 0.0, 1.0, 0.0, 1.0);  // wrong base dimension
  CHECK_THROWS_AS(graph_set_report(model, g2, 8), ValidationError);

  GraphSet g3 = flat_graph(2, 0.0, 1.0, 0.0, 1.0);
  g3.roof_grad = nullptr;
  CHECK_THROWS_AS(graph_set_report(model, g3, 8), ValidationError);

  GraphSet g4 = flat_graph(2, 0.0, 1.0, 0.0, 1.0);
  g4.roof_grad = [](const Eigen::VectorXd&) { return Eigen::VectorXd::Zero(3); };
  CHECK_THROWS_AS(graph_set_report(model, g4, 8), ValidationError);
}

TEST_CASE("product sets validate their inputs") {
  auto model = sol_model();
  CHECK_THROWS_AS(box_volume(model, BoxSet{K0Box{sides({1.0, 1.0})}, 1.0, 1.0}),
                  ValidationError);
  CHECK_THROWS_AS(box_volume(model, BoxSet{K0Box{sides({1.0})}, 0.0, 1.0}), ValidationError);
  CHECK_THROWS_AS(box_wall_area(model, BoxSet{K0Box{sides({1.0, 1.0})}, 0.0, 1.0}, 0),
                  ValidationError);
}

TEST_CASE("the cube sweep approaches tau for the affine line") {
  auto model = axb_model();
  auto result = solvcheeger::equality_sweep(model, 0.01, {1.0, 10.0, 100.0},
                                            {1.0, 2.0, 3.0, 4.0, 5.0, 6.0});
  CHECK(result.converged);
  CHECK(result.tau == doctest::Approx(1.0));
  CHECK(result.rows.size() == 18);
  CHECK(result.min_ratio <= 1.01);
  CHECK(result.min_ratio >= 1.0);
  const auto& best = result.rows[result.best_index];
  CHECK(best.ratio == doctest::Approx(result.min_ratio));
  CHECK(best.k0_scale == doctest::Approx(100.0));
  CHECK(best.b == doctest::Approx(6.0));

  for (const auto& row : result.rows) {
    // Every row obeys both analytic bounds and sits above tau.
    CHECK(row.ratio >= result.tau - 1e-12);
    CHECK(row.dk_bound >= result.tau - 1e-12);
    CHECK(row.ratio <= row.dk_bound + row.form2_bound + 1e-9);
    CHECK(row.volume > 0.0);
  }
  // The height-window bound alone converges to tau as b grows.
  CHECK(result.rows.back().dk_bound == doctest::Approx(1.0 / std::tanh(6.0)).epsilon(1e-12));
}

TEST_CASE("a sweep over a too-small family reports its table in the failure") {
  auto model = axb_model();
  bool threw = false;
  try {
    solvcheeger::equality_sweep(model, 0.001, {1.0}, {1.0});
  } catch (const solvcheeger::SweepDidNotConverge& e) {
    threw = true;
    const auto& r = e.result();
    CHECK_FALSE(r.converged);
    CHECK(r.rows.size() == 1);
    const double wf = std::exp(1.0) - std::exp(-1.0);
    const double expect = (std::exp(1.0) + std::exp(-1.0) + 4.0) / wf;
    CHECK(r.min_ratio == doctest::Approx(expect).epsilon(1e-12));
  }
  CHECK(threw);
}

TEST_CASE("sweeps cover flat directions at tau = 0") {
  auto model = build_model(builders::abelian<double>(2), builders::identity_ip<double>(2),
                           solvcheeger::pick_unimodular_transversal(
                               builders::abelian<double>(2),
                               builders::identity_ip<double>(2)));
  auto result = solvcheeger::equality_sweep(model, 0.05, {100.0}, {50.0});
  CHECK(result.converged);
  CHECK(result.tau == 0.0);
  CHECK(result.min_ratio == doctest::Approx(0.04).epsilon(1e-12));
}

TEST_CASE("sweep validates its parameters") {
  auto model = axb_model();
  CHECK_THROWS_AS(solvcheeger::equality_sweep(model, 0.0, {1.0}, {1.0}), ValidationError);
  CHECK_THROWS_AS(solvcheeger::equality_sweep(model, 0.1, {}, {1.0}), ValidationError);
  CHECK_THROWS_AS(solvcheeger::equality_sweep(model, 0.1, {1.0}, {}), ValidationError);
  CHECK_THROWS_AS(solvcheeger::equality_sweep(model, 0.1, {-1.0}, {1.0}), ValidationError);
  CHECK_THROWS_AS(solvcheeger::equality_sweep(model, 0.1, {1.0}, {0.0}), ValidationError);
}
