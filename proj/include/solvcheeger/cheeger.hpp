#pragma once

#include "solvcheeger/algebra.hpp"
#include "solvcheeger/errors.hpp"
#include "solvcheeger/metric.hpp"

#include <Eigen/Dense>

#include <optional>
#include <type_traits>

namespace solvcheeger {

/// The isoperimetric constant of a simply connected solvable group together
/// with the direction attaining max tr ad(H) over the unit sphere of the
/// metric. Unimodular groups have h = 0 and no distinguished maximizer.
struct CheegerResult {
  double h = 0.0;
  std::optional<Eigen::VectorXd> maximizer;
  bool unimodular = true;
};

/// h = dual norm of the trace form: the closed form for max_{|H|=1} tr ad H.
template <typename Scalar>
CheegerResult cheeger_constant(const LieAlgebra<Scalar>& alg, const InnerProduct<Scalar>& ip) {
  if (alg.dim() != ip.dim())
    throw ValidationError("cheeger_constant: algebra and metric dimensions differ");
  if (!is_solvable(alg)) throw NotSolvable("cheeger_constant: algebra is not solvable");
  CheegerResult out;
  out.unimodular = is_unimodular(alg);
  out.h = dual_norm(trace_form(alg), ip);
  if (out.unimodular) {
    out.h = 0.0;
    return out;
  }
  if constexpr (std::is_same_v<Scalar, double>) {
    out.maximizer = split(alg, ip).h0;
  } else {
    out.maximizer = split(to_double(alg), to_double(ip)).h0;
  }
  return out;
}

/// Scaling the metric by c (gram by c^2) keeps the maximizing direction and
/// divides h by c.
inline CheegerResult scaling_law(const CheegerResult& r, double c) {
  if (!(c > 0.0)) throw ValidationError("scaling_law: scale factor must be positive");
  CheegerResult out = r;
  out.h = r.h / c;
  if (r.maximizer) out.maximizer = *r.maximizer / c;
  return out;
}

}  // namespace solvcheeger
