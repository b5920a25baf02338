#pragma once

#include <stdexcept>
#include <string>

namespace solvcheeger {

/// Malformed input: bad dimensions, bad literals, structure constants that
/// fail antisymmetry/Jacobi, invalid parameters.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The algebra is not solvable, so the closed-form machinery does not apply.
struct NotSolvable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The metric tensor is not symmetric positive definite.
struct NotPositiveDefinite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The codimension-one ideal is neither abelian nor 2-step nilpotent, so no
/// coordinate model is available for it.
struct UnsupportedG0 : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A quadrature domain is empty or inverted (e.g. a graph-set roof dipping
/// below its floor).
struct QuadratureDomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace solvcheeger
