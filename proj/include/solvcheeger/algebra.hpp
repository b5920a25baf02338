#pragma once

#include "solvcheeger/errors.hpp"
#include "solvcheeger/exact_linalg.hpp"
#include "solvcheeger/rational.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace solvcheeger {

/// A finite-dimensional real Lie algebra given by structure constants on a
/// fixed basis: [e_i, e_j] = sum_k c_{ij}^k e_k. Only pairs i < j are stored;
/// antisymmetry is synthesized. Construction validates antisymmetry
/// bookkeeping and the Jacobi identity (exactly over Rational, to a residual
/// tolerance over double) and rejects bad input with a message naming the
/// offending basis triple.
template <typename Scalar>
class LieAlgebra {
public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  struct StructureEntry {
    int i = 0, j = 0, k = 0;  // [e_i, e_j] has component c along e_k, with i < j
    Scalar c{};
  };

  LieAlgebra(std::vector<std::string> basis_labels, std::vector<StructureEntry> entries)
      : labels_(std::move(basis_labels)), entries_(std::move(entries)) {
    n_ = static_cast<int>(labels_.size());
    if (n_ < 1) throw ValidationError("algebra needs at least one basis vector");
    std::set<std::string> seen;
    for (const auto& l : labels_) {
      if (l.empty()) throw ValidationError("empty basis label");
      if (!seen.insert(l).second) throw ValidationError("duplicate basis label \"" + l + "\"");
    }
    normalize_entries();
    validate_jacobi();
  }

  int dim() const { return n_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const std::vector<StructureEntry>& structure() const { return entries_; }

  /// c_{ij}^k for arbitrary i, j (antisymmetry applied on the fly).
  Scalar structure_constant(int i, int j, int k) const {
    check_index(i);
    check_index(j);
    check_index(k);
    if (i == j) return Scalar(0);
    if (i > j) return Scalar(0) - structure_constant(j, i, k);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::array<int, 3>{i, j, k},
                               [](const StructureEntry& e, const std::array<int, 3>& key) {
                                 return std::tie(e.i, e.j, e.k) <
                                        std::tie(key[0], key[1], key[2]);
                               });
    if (it != entries_.end() && it->i == i && it->j == j && it->k == k) return it->c;
    return Scalar(0);
  }

  Vector basis_vector(int i) const {
    check_index(i);
    Vector v = Vector::Zero(n_);
    v(i) = Scalar(1);
    return v;
  }

  int label_index(const std::string& label) const {
    for (int i = 0; i < n_; ++i)
      if (labels_[i] == label) return i;
    throw ValidationError("unknown basis label \"" + label + "\"");
  }

private:
  void check_index(int i) const {
    if (i < 0 || i >= n_) throw ValidationError("basis index out of range");
  }

  void normalize_entries() {
    std::vector<StructureEntry> cleaned;
    cleaned.reserve(entries_.size());
    for (auto e : entries_) {
      check_index(e.i);
      check_index(e.j);
      check_index(e.k);
      if (e.i == e.j) {
        if (!(e.c == Scalar(0)))
          throw ValidationError("[" + labels_[e.i] + "," + labels_[e.i] + "] must vanish");
        continue;
      }
      if (e.i > e.j) {
        std::swap(e.i, e.j);
        e.c = Scalar(0) - e.c;
      }
      if (e.c == Scalar(0)) continue;
      cleaned.push_back(e);
    }
    std::sort(cleaned.begin(), cleaned.end(), [](const StructureEntry& a, const StructureEntry& b) {
      return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    for (std::size_t t = 1; t < cleaned.size(); ++t)
      if (cleaned[t - 1].i == cleaned[t].i && cleaned[t - 1].j == cleaned[t].j &&
          cleaned[t - 1].k == cleaned[t].k)
        throw ValidationError("duplicate structure constant for [" + labels_[cleaned[t].i] + "," +
                              labels_[cleaned[t].j] + "] along " + labels_[cleaned[t].k]);
    entries_ = std::move(cleaned);
  }

  Vector bracket_basis(int i, int j) const {
    Vector v = Vector::Zero(n_);
    for (const auto& e : entries_) {
      if (e.i == i && e.j == j)
        v(e.k) += e.c;
      else if (e.i == j && e.j == i)
        v(e.k) -= e.c;
    }
    return v;
  }

  void validate_jacobi() const;

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<StructureEntry> entries_;
};

/// [x, y] from the structure constants; accepts Eigen expressions.
template <typename Scalar, typename DX, typename DY>
typename LieAlgebra<Scalar>::Vector bracket(const LieAlgebra<Scalar>& alg,
                                            const Eigen::MatrixBase<DX>& x,
                                            const Eigen::MatrixBase<DY>& y) {
  using Vector = typename LieAlgebra<Scalar>::Vector;
  Vector xv = x, yv = y;
  if (xv.size() != alg.dim() || yv.size() != alg.dim())
    throw ValidationError("bracket: vector dimension does not match the algebra");
  Vector out = Vector::Zero(alg.dim());
  for (const auto& e : alg.structure())
    out(e.k) += e.c * (xv(e.i) * yv(e.j) - xv(e.j) * yv(e.i));
  return out;
}

/// Matrix of ad(H) = [H, .] on the given basis.
template <typename Scalar, typename DH>
typename LieAlgebra<Scalar>::Matrix ad(const LieAlgebra<Scalar>& alg,
                                       const Eigen::MatrixBase<DH>& h) {
  using Matrix = typename LieAlgebra<Scalar>::Matrix;
  typename LieAlgebra<Scalar>::Vector hv = h;
  if (hv.size() != alg.dim())
    throw ValidationError("ad: vector dimension does not match the algebra");
  Matrix m = Matrix::Zero(alg.dim(), alg.dim());
  for (const auto& e : alg.structure()) {
    m(e.k, e.j) += e.c * hv(e.i);  // ad(h) e_j picks up h_i c_{ij}^k
    m(e.k, e.i) -= e.c * hv(e.j);
  }
  return m;
}

/// The trace form alpha(H) = tr ad(H) as a coefficient vector on the dual
/// basis: alpha_i = tr ad(e_i).
template <typename Scalar>
typename LieAlgebra<Scalar>::Vector trace_form(const LieAlgebra<Scalar>& alg) {
  using Vector = typename LieAlgebra<Scalar>::Vector;
  Vector a = Vector::Zero(alg.dim());
  for (const auto& e : alg.structure()) {
    if (e.j == e.k) a(e.i) += e.c;
    if (e.i == e.k) a(e.j) -= e.c;
  }
  return a;
}

template <>
inline void LieAlgebra<double>::validate_jacobi() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      for (int k = j + 1; k < n_; ++k) {
        Vector r = bracket(*this, bracket_basis(i, j), basis_vector(k)) +
                   bracket(*this, bracket_basis(j, k), basis_vector(i)) +
                   bracket(*this, bracket_basis(k, i), basis_vector(j));
        if (r.norm() > kJacobiTol)
          throw ValidationError("Jacobi identity fails on (" + labels_[i] + "," + labels_[j] +
                                "," + labels_[k] + ")");
      }
}

template <>
inline void LieAlgebra<Rational>::validate_jacobi() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      for (int k = j + 1; k < n_; ++k) {
        Vector r = bracket(*this, bracket_basis(i, j), basis_vector(k)) +
                   bracket(*this, bracket_basis(j, k), basis_vector(i)) +
                   bracket(*this, bracket_basis(k, i), basis_vector(j));
        if (!is_exactly_zero(r))
          throw ValidationError("Jacobi identity fails on (" + labels_[i] + "," + labels_[j] +
                                "," + labels_[k] + ")");
      }
}

namespace detail {

template <typename Scalar>
typename LieAlgebra<Scalar>::Matrix pairwise_bracket_span(
    const LieAlgebra<Scalar>& alg, const typename LieAlgebra<Scalar>::Matrix& left,
    const typename LieAlgebra<Scalar>::Matrix& right) {
  using Matrix = typename LieAlgebra<Scalar>::Matrix;
  Matrix prods(alg.dim(), left.cols() * right.cols());
  Eigen::Index col = 0;
  for (Eigen::Index a = 0; a < left.cols(); ++a)
    for (Eigen::Index b = 0; b < right.cols(); ++b)
      prods.col(col++) = bracket(alg, left.col(a), right.col(b));
  return column_space_basis(prods);
}

}  // namespace detail

/// Derived series G ⊇ [G,G] ⊇ [[G,G],[G,G]] ⊇ ..., as a list of column-space
/// bases, ending at the first stationary term.
template <typename Scalar>
std::vector<typename LieAlgebra<Scalar>::Matrix> derived_series(const LieAlgebra<Scalar>& alg) {
  using Matrix = typename LieAlgebra<Scalar>::Matrix;
  std::vector<Matrix> series;
  series.push_back(Matrix::Identity(alg.dim(), alg.dim()));
  while (series.back().cols() > 0) {
    Matrix next = detail::pairwise_bracket_span(alg, series.back(), series.back());
    if (next.cols() == series.back().cols()) break;
    series.push_back(std::move(next));
  }
  return series;
}

/// Lower central series G ⊇ [G,G] ⊇ [G,[G,G]] ⊇ ...
template <typename Scalar>
std::vector<typename LieAlgebra<Scalar>::Matrix> lower_central_series(
    const LieAlgebra<Scalar>& alg) {
  using Matrix = typename LieAlgebra<Scalar>::Matrix;
  std::vector<Matrix> series;
  series.push_back(Matrix::Identity(alg.dim(), alg.dim()));
  while (series.back().cols() > 0) {
    Matrix next = detail::pairwise_bracket_span(alg, series.front(), series.back());
    if (next.cols() == series.back().cols()) break;
    series.push_back(std::move(next));
  }
  return series;
}

template <typename Scalar>
bool is_solvable(const LieAlgebra<Scalar>& alg) {
  return derived_series(alg).back().cols() == 0;
}

template <typename Scalar>
bool is_nilpotent(const LieAlgebra<Scalar>& alg) {
  return lower_central_series(alg).back().cols() == 0;
}

inline bool is_unimodular(const LieAlgebra<double>& alg) {
  return trace_form(alg).lpNorm<Eigen::Infinity>() <= kRankTol;
}

inline bool is_unimodular(const LieAlgebra<Rational>& alg) {
  return is_exactly_zero(trace_form(alg));
}

/// Float copy of an exact algebra (skips re-validation; the exact check is
/// stronger than the float one).
inline LieAlgebra<double> to_double(const LieAlgebra<Rational>& alg) {
  std::vector<LieAlgebra<double>::StructureEntry> entries;
  entries.reserve(alg.structure().size());
  for (const auto& e : alg.structure())
    entries.push_back({e.i, e.j, e.k, e.c.to_double()});
  return LieAlgebra<double>(alg.basis_labels(), std::move(entries));
}

}  // namespace solvcheeger
