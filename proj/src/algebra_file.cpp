#include "solvcheeger/algebra_file.hpp"

#include "solvcheeger/errors.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <type_traits>
#include <utility>

namespace solvcheeger {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::pair<std::string, std::string> parse_bracket_key(const std::string& key) {
  const std::string t = trim(key);
  if (t.size() < 5 || t.front() != '[' || t.back() != ']')
    throw ValidationError("bracket key \"" + key + "\": expected \"[A,B]\"");
  const std::string inner = t.substr(1, t.size() - 2);
  const std::size_t comma = inner.find(',');
  if (comma == std::string::npos || inner.find(',', comma + 1) != std::string::npos)
    throw ValidationError("bracket key \"" + key + "\": expected \"[A,B]\"");
  std::string a = trim(inner.substr(0, comma)), b = trim(inner.substr(comma + 1));
  if (a.empty() || b.empty())
    throw ValidationError("bracket key \"" + key + "\": expected \"[A,B]\"");
  return {a, b};
}

Rational coefficient_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      return Rational::from_string(v.get<std::string>());
    } catch (const std::exception& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
  if (v.is_number())
    throw ValidationError(where +
                          ": write non-integer rational coefficients as strings (\"1/2\")");
  throw ValidationError(where + ": expected a number or a string");
}

double coefficient_double(const json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    try {
      return Rational::from_string(v.get<std::string>()).to_double();
    } catch (const std::exception& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
  throw ValidationError(where + ": expected a number or a string");
}

template <typename Scalar, typename Coeff>
void build_input(AlgebraInput& input, const json& doc, const std::vector<std::string>& basis,
                 const Coeff& coefficient) {
  using Alg = LieAlgebra<Scalar>;
  const int n = static_cast<int>(basis.size());
  auto index_of = [&](const std::string& label, const std::string& where) {
    for (int i = 0; i < n; ++i)
      if (basis[i] == label) return i;
    throw ValidationError(where + ": label \"" + label + "\" is not in the basis");
  };

  std::vector<typename Alg::StructureEntry> entries;
  const json& brackets = doc.at("brackets");
  if (!brackets.is_object()) throw ValidationError("\"brackets\" must be an object");
  for (auto it = brackets.begin(); it != brackets.end(); ++it) {
    auto [la, lb] = parse_bracket_key(it.key());
    const std::string where = "bracket \"" + it.key() + "\"";
    if (la == lb) throw ValidationError(where + ": [A,A] vanishes and may not be specified");
    const int i = index_of(la, where), j = index_of(lb, where);
    if (!it.value().is_object())
      throw ValidationError(where + ": expected an object of components");
    for (auto ct = it.value().begin(); ct != it.value().end(); ++ct) {
      const int k = index_of(ct.key(), where);
      entries.push_back({i, j, k, coefficient(ct.value(), where + " -> " + ct.key())});
    }
  }
  Alg alg(basis, std::move(entries));

  typename InnerProduct<Scalar>::Matrix gram;
  const json& metric = doc.at("metric");
  if (metric.is_string()) {
    if (metric.get<std::string>() != "identity")
      throw ValidationError("\"metric\" must be \"identity\" or an n x n array");
    gram = InnerProduct<Scalar>::Matrix::Identity(n, n);
  } else if (metric.is_array()) {
    if (static_cast<int>(metric.size()) != n)
      throw ValidationError("\"metric\" must be an n x n array");
    gram.resize(n, n);
    for (int r = 0; r < n; ++r) {
      const json& row = metric.at(r);
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw ValidationError("\"metric\" must be an n x n array");
      for (int c = 0; c < n; ++c)
        gram(r, c) = coefficient(row.at(c), "metric entry (" + std::to_string(r) + "," +
                                                std::to_string(c) + ")");
    }
  } else {
    throw ValidationError("\"metric\" must be \"identity\" or an n x n array");
  }
  InnerProduct<Scalar> ip(std::move(gram));

  if constexpr (std::is_same_v<Scalar, Rational>) {
    input.algebra_q = std::move(alg);
    input.metric_q = std::move(ip);
    input.algebra_d = to_double(*input.algebra_q);
    input.metric_d = to_double(*input.metric_q);
  } else {
    input.algebra_d = std::move(alg);
    input.metric_d = std::move(ip);
  }
}

}  // namespace

AlgebraInput parse_algebra_text(const std::string& json_text, const std::string& name) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("input must be a JSON object");

  static const std::set<std::string> known{"basis", "brackets", "metric", "arithmetic", "name",
                                           "comment"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!known.count(it.key())) throw ValidationError("unknown field \"" + it.key() + "\"");
  for (const char* required : {"basis", "brackets", "metric"})
    if (!doc.contains(required))
      throw ValidationError("missing field \"" + std::string(required) + "\"");

  const json& basis_doc = doc.at("basis");
  if (!basis_doc.is_array() || basis_doc.empty())
    throw ValidationError("\"basis\" must be a nonempty array of labels");
  std::vector<std::string> basis;
  for (const json& l : basis_doc) {
    if (!l.is_string()) throw ValidationError("\"basis\" must be a nonempty array of labels");
    basis.push_back(l.get<std::string>());
  }

  AlgebraInput input;
  input.name = name.empty() && doc.contains("name") ? doc.at("name").get<std::string>() : name;
  input.rational = true;
  if (doc.contains("arithmetic")) {
    const std::string mode = doc.at("arithmetic").get<std::string>();
    if (mode == "float")
      input.rational = false;
    else if (mode != "rational")
      throw ValidationError("\"arithmetic\" must be \"rational\" or \"float\"");
  }

  if (input.rational)
    build_input<Rational>(input, doc, basis, &coefficient_rational);
  else
    build_input<double>(input, doc, basis, &coefficient_double);
  return input;
}

std::string serialize(const AlgebraInput& input) {
  json doc;
  const auto& labels = input.algebra().basis_labels();
  doc["basis"] = labels;
  json brackets = json::object();
  if (input.rational) {
    for (const auto& e : input.algebra_q->structure()) {
      const std::string key = "[" + labels[e.i] + "," + labels[e.j] + "]";
      brackets[key][labels[e.k]] = e.c.str();
    }
  } else {
    for (const auto& e : input.algebra().structure()) {
      const std::string key = "[" + labels[e.i] + "," + labels[e.j] + "]";
      brackets[key][labels[e.k]] = e.c;
    }
  }
  doc["brackets"] = brackets;

  const int n = input.algebra().dim();
  bool identity = true;
  if (input.rational) {
    const auto& g = input.metric_q->gram();
    for (int r = 0; identity && r < n; ++r)
      for (int c = 0; identity && c < n; ++c)
        if (!(g(r, c) == Rational(r == c ? 1 : 0))) identity = false;
  } else {
    identity = input.metric().gram().isIdentity(0.0);
  }
  if (identity) {
    doc["metric"] = "identity";
  } else {
    json rows = json::array();
    for (int r = 0; r < n; ++r) {
      json row = json::array();
      for (int c = 0; c < n; ++c) {
        if (input.rational)
          row.push_back(input.metric_q->gram()(r, c).str());
        else
          row.push_back(input.metric().gram()(r, c));
      }
      rows.push_back(row);
    }
    doc["metric"] = rows;
  }
  doc["arithmetic"] = input.rational ? "rational" : "float";
  if (!input.name.empty()) doc["name"] = input.name;
  return doc.dump(2);
}

AlgebraInput load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra_text(buffer.str(), std::filesystem::path(path).stem().string());
}

AlgebraInput load_algebra(const std::string& path_or_catalog) {
  if (std::filesystem::exists(path_or_catalog)) return load_algebra_file(path_or_catalog);
  if (is_catalog_name(path_or_catalog))
    return parse_algebra_text(catalog_document(path_or_catalog), path_or_catalog);
  throw ValidationError("\"" + path_or_catalog +
                        "\" is neither an existing file nor a catalog name (try `catalog list`)");
}

namespace {

constexpr int kMaxCatalogDim = 32;

int parse_suffix(const std::string& name, const std::string& prefix) {
  const std::string digits = name.substr(prefix.size());
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) return -1;
  const int n = std::stoi(digits);
  if (n < 1 || n > kMaxCatalogDim)
    throw ValidationError("catalog: dimension in \"" + name + "\" must be between 1 and " +
                          std::to_string(kMaxCatalogDim));
  return n;
}

std::vector<std::string> parse_diag_args(const std::string& name) {
  const std::string inner = name.substr(5, name.size() - 6);
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = inner.find(',', start);
    parts.push_back(trim(inner.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() > static_cast<std::size_t>(kMaxCatalogDim))
    throw ValidationError("catalog: too many diagonal rates");
  for (const auto& p : parts)
    if (p.empty()) throw ValidationError("catalog: empty rate in \"" + name + "\"");
  return parts;
}

json one_parameter_extension(const std::vector<std::string>& rates) {
  json doc;
  std::vector<std::string> basis{"H"};
  for (std::size_t i = 0; i < rates.size(); ++i) basis.push_back("X" + std::to_string(i + 1));
  doc["basis"] = basis;
  json brackets = json::object();
  for (std::size_t i = 0; i < rates.size(); ++i) {
    Rational r = Rational::from_string(rates[i]);  // validates the literal
    if (!r.is_zero()) brackets["[H," + basis[i + 1] + "]"][basis[i + 1]] = r.str();
  }
  doc["brackets"] = brackets;
  doc["metric"] = "identity";
  doc["arithmetic"] = "rational";
  return doc;
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"abelian-<n>", "axb", "heisenberg", "sol", "hyperbolic-<n>", "diag(c1,...,cm)"};
}

bool is_catalog_name(const std::string& name) {
  if (name == "axb" || name == "heisenberg" || name == "sol") return true;
  try {
    if (name.rfind("abelian-", 0) == 0) return parse_suffix(name, "abelian-") > 0;
    if (name.rfind("hyperbolic-", 0) == 0) return parse_suffix(name, "hyperbolic-") >= 2;
    if (name.rfind("diag(", 0) == 0 && name.back() == ')' && name.size() > 6) {
      for (const auto& p : parse_diag_args(name)) Rational::from_string(p);
      return true;
    }
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

std::string catalog_document(const std::string& name) {
  json doc;
  if (name == "axb") {
    doc = {{"basis", {"H", "X"}},
           {"brackets", {{"[H,X]", {{"X", "1"}}}}},
           {"metric", "identity"},
           {"arithmetic", "rational"}};
  } else if (name == "heisenberg") {
    doc = {{"basis", {"X", "Y", "Z"}},
           {"brackets", {{"[X,Y]", {{"Z", "1"}}}}},
           {"metric", "identity"},
           {"arithmetic", "rational"}};
  } else if (name == "sol") {
    doc = {{"basis", {"H", "X", "Y"}},
           {"brackets", {{"[H,X]", {{"X", "1"}}}, {"[H,Y]", {{"Y", "-1"}}}}},
           {"metric", "identity"},
           {"arithmetic", "rational"}};
  } else if (name.rfind("abelian-", 0) == 0 && parse_suffix(name, "abelian-") > 0) {
    const int n = parse_suffix(name, "abelian-");
    std::vector<std::string> basis;
    for (int i = 0; i < n; ++i) basis.push_back("X" + std::to_string(i + 1));
    doc = {{"basis", basis},
           {"brackets", json::object()},
           {"metric", "identity"},
           {"arithmetic", "rational"}};
  } else if (name.rfind("hyperbolic-", 0) == 0 && parse_suffix(name, "hyperbolic-") >= 2) {
    const int n = parse_suffix(name, "hyperbolic-");
    doc = one_parameter_extension(std::vector<std::string>(n - 1, "1"));
  } else if (name.rfind("diag(", 0) == 0 && name.size() > 6 && name.back() == ')') {
    doc = one_parameter_extension(parse_diag_args(name));
  } else {
    throw ValidationError("unknown catalog name \"" + name + "\" (try `catalog list`)");
  }
  doc["name"] = name;
  return doc.dump(2);
}

}  // namespace solvcheeger
