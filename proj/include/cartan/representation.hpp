#pragma once

#include <string>
#include <vector>

#include "cartan/lie_algebra.hpp"
#include "cartan/polynomial.hpp"

namespace cartan {

/// Linear action of a matrix Lie algebra: one carrier matrix per basis element.
struct Representation {
  AlgebraPtr algebra;
  size_t carrier_dim = 0;
  std::vector<Mat> action;

  /// Validates shapes and the homomorphism property exactly; throws
  /// InvariantError naming the first failing bracket.
  static Representation make(AlgebraPtr algebra, std::vector<Mat> action);
};

Representation adjoint_representation(AlgebraPtr algebra);

enum class CommutantLabel { R, C, RxR, CxC, H, OTHER };
std::string to_string(CommutantLabel label);

struct CommutantClassification {
  std::vector<Mat> basis;
  CommutantLabel label = CommutantLabel::OTHER;
  bool commutative = true;
  /// Minimal polynomial data of the generic element used for the label.
  Mat generic;
  MinimalPolynomial generic_minpoly;
};

/// Basis of {T : T A = A T for all A in action}, for n x n matrices.
std::vector<Mat> commutant_basis(std::span<const Mat> action, size_t n);

/// Classifies an associative algebra of matrices (containing the identity)
/// via a generic element's minimal polynomial and commutativity.
CommutantClassification classify_commuting_algebra(std::vector<Mat> basis, Rng& rng);

CommutantClassification commutant(const Representation& rep, Rng& rng);

enum class FormSymmetry { Symmetric, Antisymmetric };

/// Basis of Gram matrices G = +-G^T with A^T G + G A = 0 for every action matrix.
std::vector<Mat> invariant_bilinear_forms(std::span<const Mat> action, size_t n,
                                          FormSymmetry symmetry);
std::vector<Mat> invariant_bilinear_forms(const Representation& rep, FormSymmetry symmetry);

enum class SearchStatus { Found, None, Undecided };
std::string to_string(SearchStatus s);

struct ComplexStructures {
  SearchStatus status = SearchStatus::None;
  std::vector<Mat> solutions;  // closed under negation
  std::string reason;
};

/// Complex structures J (J^2 = -I) inside a classified commutant. Rational
/// solutions only; when J exists over the reals but needs an irrational
/// normalization the status is Undecided.
ComplexStructures complex_structures_in(const CommutantClassification& c, Rng& rng);
ComplexStructures invariant_complex_structures(const Representation& rep, Rng& rng);

/// Primitive central idempotents of a commutative matrix algebra, computed by
/// splitting a generic element's minimal polynomial over Q.
std::vector<Mat> primitive_idempotents(const Mat& generic, const MinimalPolynomial& mp);

/// Decomposition of a semisimple algebra into minimal ideals over Q, each
/// returned as coordinate columns in the algebra's basis. Ideals come from
/// the centroid (commutant of the adjoint action).
std::vector<Mat> simple_ideals(const MatrixLieAlgebra& algebra, Rng& rng);

}  // namespace cartan
