#pragma once

#include "solvcheeger/algebra.hpp"
#include "solvcheeger/metric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace solvcheeger {

/// A parsed algebra-with-metric input. Float data is always populated;
/// exact data only when the file asked for rational arithmetic (the
/// default), so classification can run exactly while numerics run on
/// doubles.
struct AlgebraInput {
  std::string name;
  bool rational = true;
  std::optional<LieAlgebra<Rational>> algebra_q;
  std::optional<InnerProduct<Rational>> metric_q;
  std::optional<LieAlgebra<double>> algebra_d;
  std::optional<InnerProduct<double>> metric_d;

  const LieAlgebra<double>& algebra() const { return *algebra_d; }
  const InnerProduct<double>& metric() const { return *metric_d; }
};

/// Parse the JSON input format:
///   { "basis": ["H","X"],
///     "brackets": { "[H,X]": { "X": 1 } },
///     "metric": "identity" | [[...], ...],
///     "arithmetic": "rational" | "float" }
/// Bracket keys are ordered pairs of declared labels; antisymmetric partners
/// are derived, not repeated. In rational mode non-integer coefficients are
/// written as strings ("1/2", "0.25").
AlgebraInput parse_algebra_text(const std::string& json_text, const std::string& name = "");

/// Inverse of parse_algebra_text up to formatting: parsing the result gives
/// back the same basis, structure constants, metric, and arithmetic mode.
std::string serialize(const AlgebraInput& input);

AlgebraInput load_algebra_file(const std::string& path);

/// Resolve a CLI input: an existing file path wins, otherwise a catalog name.
AlgebraInput load_algebra(const std::string& path_or_catalog);

/// Built-in examples, including the parametric families
/// abelian-<n>, hyperbolic-<n>, and diag(c1,...,cm).
std::vector<std::string> catalog_names();
bool is_catalog_name(const std::string& name);
std::string catalog_document(const std::string& name);

}  // namespace solvcheeger
