#include "solvcheeger/algebra_file.hpp"
#include "solvcheeger/cheeger.hpp"
#include "solvcheeger/group_model.hpp"
#include "solvcheeger/isoperimetry.hpp"
#include "solvcheeger/random.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace solvcheeger;

constexpr double kHaarThreshold = 1e-5;

std::string fmt(double v, const char* format = "%.12g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

std::string series_dims(const std::vector<Eigen::MatrixXd>& series) {
  std::string out;
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (i) out += " -> ";
    out += std::to_string(series[i].cols());
  }
  return out;
}

std::string series_dims(const std::vector<RationalMatrix>& series) {
  std::string out;
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (i) out += " -> ";
    out += std::to_string(series[i].cols());
  }
  return out;
}

std::string label_list(const std::vector<std::string>& labels) {
  std::string out = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ", ";
    out += labels[i];
  }
  return out + ")";
}

SemidirectModel model_for(const AlgebraInput& input) {
  if (is_unimodular(input.algebra()))
    return build_model(input.algebra(), input.metric(),
                       pick_unimodular_transversal(input.algebra(), input.metric()));
  return build_model(input.algebra(), input.metric());
}

int run_classify(const std::string& source) {
  AlgebraInput input = load_algebra(source);
  std::cout << "name: " << (input.name.empty() ? source : input.name) << "\n"
            << "dimension: " << input.algebra().dim() << "\n"
            << "arithmetic: " << (input.rational ? "rational" : "float") << "\n";
  bool solvable, nilpotent, unimodular;
  std::string derived, lower, alpha_str;
  if (input.rational) {
    const auto& alg = *input.algebra_q;
    solvable = is_solvable(alg);
    nilpotent = is_nilpotent(alg);
    unimodular = is_unimodular(alg);
    derived = series_dims(derived_series(alg));
    lower = series_dims(lower_central_series(alg));
    RationalVector alpha = trace_form(alg);
    alpha_str = "(";
    for (int i = 0; i < alg.dim(); ++i)
      alpha_str += (i ? ", " : "") + alpha(i).str();
    alpha_str += ")";
  } else {
    const auto& alg = input.algebra();
    solvable = is_solvable(alg);
    nilpotent = is_nilpotent(alg);
    unimodular = is_unimodular(alg);
    derived = series_dims(derived_series(alg));
    lower = series_dims(lower_central_series(alg));
    Eigen::VectorXd alpha = trace_form(alg);
    alpha_str = "(";
    for (int i = 0; i < alg.dim(); ++i)
      alpha_str += (i ? ", " : "") + fmt(alpha(i));
    alpha_str += ")";
  }
  std::cout << "solvable: " << (solvable ? "yes" : "no") << "\n"
            << "nilpotent: " << (nilpotent ? "yes" : "no") << "\n"
            << "unimodular: " << (unimodular ? "yes" : "no") << "\n"
            << "derived series dims: " << derived << "\n"
            << "lower central series dims: " << lower << "\n"
            << "trace form: " << alpha_str << " on the dual basis of "
            << label_list(input.algebra().basis_labels()) << "\n";
  return 0;
}

int run_cheeger(const std::string& source) {
  AlgebraInput input = load_algebra(source);
  CheegerResult result;
  std::string exact_note;
  if (input.rational) {
    result = cheeger_constant(*input.algebra_q, *input.metric_q);
    Rational h2 = dual_norm_squared<Rational>(trace_form(*input.algebra_q), *input.metric_q);
    Rational root;
    if (exact_sqrt(h2, root))
      exact_note = "  (exactly " + root.str() + ")";
    else
      exact_note = "  (h^2 = " + h2.str() + " exactly)";
  } else {
    result = cheeger_constant(input.algebra(), input.metric());
  }
  std::cout << "name: " << (input.name.empty() ? source : input.name) << "\n"
            << "h: " << fmt(result.h, "%.17g") << exact_note << "\n"
            << "unimodular: " << (result.unimodular ? "yes" : "no") << "\n";
  if (result.maximizer) {
    std::cout << "maximizer: (";
    for (int i = 0; i < result.maximizer->size(); ++i)
      std::cout << (i ? ", " : "") << fmt((*result.maximizer)(i));
    std::cout << ") on the basis " << label_list(input.algebra().basis_labels()) << "\n";
  } else {
    std::cout << "maximizer: none (amenable and unimodular, h = 0)\n";
  }
  return 0;
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
  if (const char* env = std::getenv("SOLVCHEEGER_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ValidationError("SOLVCHEEGER_SEED must be an unsigned integer");
    }
  }
  return flag_seed;
}

int run_haar_check(const std::string& source, int samples, std::uint64_t seed) {
  AlgebraInput input = load_algebra(source);
  SemidirectModel model = model_for(input);
  seed = effective_seed(seed);
  haar_density(model);  // internal det/trace cross-check
  Rng rng(seed);
  double worst = 0.0;
  const int translations = 8;
  for (int i = 0; i < translations; ++i) {
    Eigen::VectorXd a = rng.uniform_vector(model.dim(), -1.5, 1.5);
    worst = std::max(worst, jacobian_oracle(model, a, samples, seed + 1000 * (i + 1)));
  }
  std::cout << "name: " << (input.name.empty() ? source : input.name) << "\n"
            << "model: G0 dim " << model.g0_dim() << ", "
            << (model.kind() == G0Kind::AlmostAbelian ? "almost-abelian" : "2-step nilpotent")
            << ", tau = " << fmt(model.tau()) << "\n"
            << "translations: " << translations << ", samples each: " << samples
            << ", seed: " << seed << "\n"
            << "max invariance deviation: " << fmt(worst, "%.3e") << "\n"
            << "threshold: " << fmt(kHaarThreshold, "%.0e") << "\n";
  if (worst > kHaarThreshold) {
    std::cout << "haar-check: FAILED\n";
    return 3;
  }
  std::cout << "haar-check: ok\n";
  return 0;
}

void write_csv(const std::string& path, const SweepResult& result) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write \"" + path + "\"");
  out << "k0_scale,b,volume,cap_area,wall_area,ratio,dk_bound,form2_bound\n";
  for (const auto& row : result.rows)
    out << fmt(row.k0_scale, "%.17g") << ',' << fmt(row.b, "%.17g") << ','
        << fmt(row.volume, "%.17g") << ',' << fmt(row.cap_area, "%.17g") << ','
        << fmt(row.wall_area, "%.17g") << ',' << fmt(row.ratio, "%.17g") << ','
        << fmt(row.dk_bound, "%.17g") << ',' << fmt(row.form2_bound, "%.17g") << '\n';
}

void print_sweep(const std::string& name, const SweepResult& result) {
  std::cout << "name: " << name << "\n"
            << "tau: " << fmt(result.tau) << "\n"
            << "rows: " << result.rows.size() << "\n";
  if (result.best_index >= 0) {
    const SweepRow& best = result.rows[result.best_index];
    std::cout << "min ratio: " << fmt(result.min_ratio, "%.17g") << " at k0_scale = "
              << fmt(best.k0_scale) << ", window = [" << fmt(-best.b) << ", " << fmt(best.b)
              << "]\n";
  }
  std::cout << "target: tau + epsilon = " << fmt(result.tau + result.epsilon) << "\n"
            << "converged: " << (result.converged ? "yes" : "no") << "\n";
}

int run_sweep(const std::string& source, double epsilon, double b_max, double k0_max,
              const std::string& csv_path, int quadrature_n) {
  AlgebraInput input = load_algebra(source);
  SemidirectModel model = model_for(input);
  if (!(b_max > 0.0)) throw ValidationError("--b-max must be positive");
  if (!(k0_max >= 1.0)) throw ValidationError("--k0-max must be at least 1");

  std::vector<double> scales{1.0};
  while (scales.back() * 10.0 <= k0_max) scales.push_back(scales.back() * 10.0);
  if (scales.back() < k0_max) scales.push_back(k0_max);
  std::vector<double> b_grid;
  for (int b = 1; b <= static_cast<int>(b_max); ++b) b_grid.push_back(b);
  if (b_grid.empty() || b_grid.back() < b_max) b_grid.push_back(b_max);

  const std::string name = input.name.empty() ? source : input.name;
  try {
    SweepResult result = equality_sweep(model, epsilon, scales, b_grid, quadrature_n);
    if (!csv_path.empty()) write_csv(csv_path, result);
    print_sweep(name, result);
    return 0;
  } catch (const SweepDidNotConverge& e) {
    if (!csv_path.empty()) write_csv(csv_path, e.result());
    print_sweep(name, e.result());
    return 4;
  }
}

int run_catalog(bool list, const std::string& show_name) {
  if (list) {
    for (const auto& name : catalog_names()) std::cout << name << "\n";
    return 0;
  }
  std::cout << catalog_document(show_name) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cheeger isoperimetric constants of simply connected solvable Lie groups"};
  app.require_subcommand(1);

  std::string input_source;
  auto* classify = app.add_subcommand("classify", "Structure report: solvability, nilpotency, "
                                                  "unimodularity, series dimensions");
  classify->add_option("input", input_source, "algebra file or catalog name")->required();

  auto* cheeger = app.add_subcommand("cheeger", "Isoperimetric constant and maximizing direction");
  cheeger->add_option("input", input_source, "algebra file or catalog name")->required();

  int samples = 100;
  std::uint64_t seed = 718281828;
  auto* haar = app.add_subcommand("haar-check",
                                  "Verify left invariance of the model volume density");
  haar->add_option("input", input_source, "algebra file or catalog name")->required();
  haar->add_option("--samples", samples, "sample points per translation")->check(CLI::PositiveNumber);
  haar->add_option("--seed", seed, "RNG seed (SOLVCHEEGER_SEED overrides)");

  double epsilon = 0.05, b_max = 12.0, k0_max = 200.0;
  int quadrature_n = 32;
  std::string csv_path;
  auto* sweep = app.add_subcommand("sweep", "Drive box-family ratios down toward tau");
  sweep->add_option("input", input_source, "algebra file or catalog name")->required();
  sweep->add_option("--epsilon", epsilon, "convergence margin over tau")->check(CLI::PositiveNumber);
  sweep->add_option("--b-max", b_max, "largest half-height of the window");
  sweep->add_option("--k0-max", k0_max, "largest base-cube side");
  sweep->add_option("--csv", csv_path, "write the sweep table to this CSV file");
  sweep->add_option("--quadrature-n", quadrature_n, "Gauss-Legendre order for wall areas")
      ->check(CLI::PositiveNumber);

  auto* catalog = app.add_subcommand("catalog", "Built-in example algebras");
  auto* catalog_list = catalog->add_subcommand("list", "list catalog names");
  std::string show_name;
  auto* catalog_show = catalog->add_subcommand("show", "print a catalog document");
  catalog_show->add_option("name", show_name, "catalog name")->required();
  catalog->require_subcommand(1);

  try {
    app.parse(argc, argv);
    if (classify->parsed()) return run_classify(input_source);
    if (cheeger->parsed()) return run_cheeger(input_source);
    if (haar->parsed()) return run_haar_check(input_source, samples, seed);
    if (sweep->parsed())
      return run_sweep(input_source, epsilon, b_max, k0_max, csv_path, quadrature_n);
    if (catalog->parsed()) return run_catalog(catalog_list->parsed(), show_name);
    return 1;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotSolvable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotPositiveDefinite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedG0& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const QuadratureDomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
}
