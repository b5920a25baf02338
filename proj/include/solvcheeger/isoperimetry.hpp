#pragma once

#include "solvcheeger/group_model.hpp"

#include <Eigen/Core>

#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace solvcheeger {

/// Axis-aligned box [0, sides_1] × ... × [0, sides_m] inside G0.
struct K0Box {
  Eigen::VectorXd sides;
};

/// Euclidean ball of the given radius centered at 0 inside G0.
struct K0Ball {
  double radius = 1.0;
};

using K0Shape = std::variant<K0Box, K0Ball>;

double k0_volume(const K0Shape& shape, int m);
double k0_boundary_volume(const K0Shape& shape, int m);

/// Product set K0 × [a, b] in model coordinates: the base cross a height
/// window. Its boundary splits into two caps (t = a, t = b) and the walls
/// over the boundary of K0.
struct BoxSet {
  K0Shape k0;
  double a = 0.0;
  double b = 1.0;
};

/// ∫_a^b e^{-t tau} dt, stable for all tau including 0.
double window_factor(double a, double b, double tau);

double box_volume(const SemidirectModel& model, const BoxSet& box);
double box_cap_area(const SemidirectModel& model, const BoxSet& box);
double box_wall_area(const SemidirectModel& model, const BoxSet& box, int quadrature_n = 32);

/// M(a, b): max over t in [a, b] of the product of the top m-1 singular
/// values of e^{-tD} — the sharpest constant with
/// wall_area <= M * boundary(K0) * (b - a) for every K0.
double wall_bound(const SemidirectModel& model, double a, double b);

/// Region between two graphs over a box U in G0:
///   { (u, t) : u in U, floor(u) <= t <= roof(u) }.
/// Gradients are supplied analytically; the report integrates the exact
/// first-fundamental-form area elements.
struct GraphSet {
  Eigen::VectorXd u_lo, u_hi;
  std::function<double(const Eigen::VectorXd&)> floor_fn, roof_fn;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> floor_grad, roof_grad;
};

struct IsoperimetricReport {
  double volume = 0.0;
  double cap_area = 0.0;
  double wall_area = 0.0;
  double total_area = 0.0;  // cap_area + wall_area
  double ratio = 0.0;       // total_area / volume
  double tau = 0.0;
  double wall_bound_m = 0.0;
  double quad_error = 0.0;  // estimated absolute error of ratio (n- vs 2n-node rules)
  int cap_bound_violations = 0;   // quadrature nodes where a cap integrand
                                  // dips below the density bound e^{-tau t}
  double cap_bound_margin = 0.0;  // min over nodes of integrand/bound - 1
};

IsoperimetricReport box_report(const SemidirectModel& model, const BoxSet& box,
                               int quadrature_n = 32);
IsoperimetricReport graph_set_report(const SemidirectModel& model, const GraphSet& gset,
                                     int quadrature_n = 32);

struct SweepRow {
  double k0_scale = 0.0;
  double b = 0.0;
  double volume = 0.0;
  double cap_area = 0.0;
  double wall_area = 0.0;
  double ratio = 0.0;
  double dk_bound = 0.0;     // cap_area / volume, the height-window-only bound
  double form2_bound = 0.0;  // wall bound: M (b-a) boundary(K0) / (window vol(K0))
};

struct SweepResult {
  std::vector<SweepRow> rows;
  double tau = 0.0;
  double epsilon = 0.0;
  double min_ratio = 0.0;
  int best_index = -1;
  bool converged = false;
};

/// The family proved sharp: cubes [0, s]^m crossed with symmetric height
/// windows [-b, b]. Succeeds when some row has ratio <= tau + epsilon;
/// otherwise throws SweepDidNotConverge carrying the full table.
class SweepDidNotConverge : public std::runtime_error {
public:
  explicit SweepDidNotConverge(SweepResult result)
      : std::runtime_error("equality sweep did not reach tau + epsilon (min ratio " +
                           std::to_string(result.min_ratio) + ", target " +
                           std::to_string(result.tau + result.epsilon) + ")"),
        result_(std::move(result)) {}
  const SweepResult& result() const { return result_; }

private:
  SweepResult result_;
};

SweepResult equality_sweep(const SemidirectModel& model, double epsilon,
                           const std::vector<double>& k0_scales, const std::vector<double>& b_grid,
                           int quadrature_n = 32);

}  // namespace solvcheeger
