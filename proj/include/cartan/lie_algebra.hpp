#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cartan/linalg.hpp"

namespace cartan {

struct BracketTerm {
  size_t index;
  Rational coeff;
};

/// Finite-dimensional Lie algebra of n x n rational matrices, given by an
/// independent basis closed under the commutator. Structure constants are
/// computed once, at construction, and stored sparsely.
class MatrixLieAlgebra {
 public:
  /// Throws InputError for empty or ragged input, InvariantError with
  /// "dependent basis" or "not closed under bracket" otherwise.
  static MatrixLieAlgebra make(std::vector<Mat> basis, std::string name);

  const std::string& name() const { return name_; }
  size_t ambient_size() const { return n_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<Mat>& basis() const { return basis_; }
  const Mat& operator[](size_t i) const { return basis_[i]; }

  /// Coordinates of m in the basis, or nullopt if m is not in the span.
  std::optional<Vec> coordinates(const Mat& m) const;
  /// Same, throwing InvariantError when m lies outside.
  Vec coordinates_checked(const Mat& m) const;
  Mat element(std::span<const Rational> coords) const;

  /// [X_i, X_j] = sum_k c_ij^k X_k, as a sparse list of (k, c_ij^k).
  const std::vector<BracketTerm>& bracket_terms(size_t i, size_t j) const {
    return structure_[i * dim() + j];
  }
  Vec bracket(std::span<const Rational> x, std::span<const Rational> y) const;
  /// Dense structure constants c[i][j][k].
  std::vector<std::vector<Vec>> structure_constants() const;

  /// Matrix of ad(X_i) in the basis: column j holds the coordinates of [X_i, X_j].
  Mat ad(size_t i) const;
  Mat ad(std::span<const Rational> x) const;

  /// Gram matrix of trace(ad X_i ad X_j), from structure constants.
  Mat killing_form() const;
  /// Cartan's criterion: the Killing form is nondegenerate.
  bool is_semisimple() const;
  /// First basis triple violating Jacobi, if any.
  std::optional<std::array<size_t, 3>> jacobi_violation() const;

  /// Largest ideal contained in the span of the given coordinate columns.
  /// Returns its basis as coordinate columns (possibly zero columns).
  Mat largest_ideal_in(const Mat& subspace) const;
  /// Coordinates of [L, L].
  Mat derived_subspace() const;
  /// Builds the subalgebra spanned by coordinate columns.
  MatrixLieAlgebra subalgebra(const Mat& coords, std::string name) const;

 private:
  MatrixLieAlgebra() = default;

  std::string name_;
  size_t n_ = 0;
  std::vector<Mat> basis_;
  // Coordinate extraction: the entries at `probe_` positions determine an
  // element of the span, c = probe_inverse_ * (entries at probe_).
  std::vector<size_t> probe_;
  std::vector<SparseRow> probe_inverse_cols_;
  std::vector<SparseRow> flat_basis_;
  std::vector<std::vector<BracketTerm>> structure_;
};

using AlgebraPtr = std::shared_ptr<const MatrixLieAlgebra>;

}  // namespace cartan
