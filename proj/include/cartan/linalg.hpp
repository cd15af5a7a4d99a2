#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cartan/matrix.hpp"

namespace cartan {

/// Sorted (column, value) pairs with no explicit zeros.
using SparseRow = std::vector<std::pair<size_t, Rational>>;

/// Reduced echelon form kept in sparse rows; row i has its pivot at pivot_cols[i].
struct SparseEchelon {
  size_t cols = 0;
  std::vector<SparseRow> rows;
  std::vector<size_t> pivot_cols;
};

/// Sparse Gauss-Jordan elimination. Pivots are searched only in columns
/// [0, stop_col); later columns ride along as an augmented block.
SparseEchelon sparse_rref(std::vector<SparseRow> rows, size_t cols,
                          size_t stop_col = static_cast<size_t>(-1));
std::vector<SparseRow> to_sparse_rows(const Mat& a);
/// Kernel basis (columns) read off a reduced echelon form over its first n columns.
Mat kernel_from_echelon(const SparseEchelon& e, size_t n);

struct Echelon {
  Mat reduced;                    // reduced row echelon form
  std::vector<size_t> pivot_cols; // one per nonzero row
  size_t rank() const { return pivot_cols.size(); }
};

/// Gauss-Jordan elimination. `stop_col` limits pivot search to columns
/// [0, stop_col); columns past it are carried along (augmented systems).
Echelon rref(Mat a, size_t stop_col = static_cast<size_t>(-1));
size_t rank(const Mat& a);

/// Basis of {x : a x = 0}, one basis vector per column.
Mat kernel(const Mat& a);

/// Solution set of a X = b for a (possibly multi-column) right-hand side.
struct SolutionSet {
  bool consistent = false;
  Mat particular;  // valid only when consistent; free variables set to zero
  Mat kernel;      // basis of the homogeneous solutions, one per column
};

/// Throws InputError when a and b disagree on the number of rows.
SolutionSet solve_linear(const Mat& a, const Mat& b);

std::optional<Mat> inverse(const Mat& a);
Rational determinant(const Mat& a);

/// A basis for the column space, chosen among the original columns.
Mat column_space(const Mat& a);
/// Rows spanning the left null space: y with y * basis = 0.
Mat left_annihilator(const Mat& basis);
/// Coordinates of v with respect to the columns of basis (assumed independent).
std::optional<Vec> coordinates_in(const Mat& basis, std::span<const Rational> v);

struct Signature {
  size_t positive = 0;
  size_t negative = 0;
  size_t nullity = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

struct CongruenceDiagonalization {
  Mat transform;  // S with S^T G S = diag(diagonal)
  Vec diagonal;
};

/// Symmetric congruence diagonalization with pivoting on nonzero diagonal
/// entries; a zero diagonal with a nonzero off-diagonal entry (i, j) is
/// repaired by adding row/column j to i first.
CongruenceDiagonalization congruence_diagonalize(const Mat& g);
/// Throws InputError for non-symmetric input.
Signature symmetric_signature(const Mat& g);

using LinearMap = std::function<Mat(const Mat&)>;

/// Basis of the subspace {sum c_k basis[k] : f(sum c_k basis[k]) = 0}.
std::vector<Mat> kernel_of_map(std::span<const Mat> basis, const LinearMap& f);
/// Applies several constraints in sequence, shrinking the space each time.
std::vector<Mat> kernel_of_maps(std::vector<Mat> basis, std::span<const LinearMap> maps);

/// All n x n matrices / symmetric / antisymmetric matrices as elementary bases.
std::vector<Mat> all_matrices_basis(size_t n);
std::vector<Mat> symmetric_basis(size_t n);
std::vector<Mat> antisymmetric_basis(size_t n);

/// Coordinates of m in the span of the given matrices, if it lies there.
std::optional<Vec> coordinates_in_span(std::span<const Mat> basis, const Mat& m);

}  // namespace cartan
