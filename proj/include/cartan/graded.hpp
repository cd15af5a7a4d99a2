#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cartan/lie_algebra.hpp"
#include "cartan/realify.hpp"

namespace cartan {

enum class Family {
  projective,
  h_projective,
  conformal,
  complex_conformal,
  quaternionic,
  para_quaternionic,
  grassmannian,
  lagrangean,
  spinorial,
  su_pp,
};

std::string to_string(Family f);
std::optional<Family> parse_family(std::string_view s);
const std::vector<Family>& all_families();

/// Key/value parameters as given on the command line ("n=3", "field=C").
using Params = std::map<std::string, std::string>;
long param_int(const Params& p, const std::string& key);
long param_int(const Params& p, const std::string& key, long fallback);
std::string param_str(const Params& p, const std::string& key, const std::string& fallback);
std::string to_string(const Params& p);
Params parse_params(std::string_view text);

/// Realified ambient size limit for every catalog object.
inline constexpr size_t kMaxAmbient = 32;

/// One-graded algebra g = g_-1 + g_0 + g_1 with its basis ordered by degree.
struct GradedAlgebra {
  AlgebraPtr algebra;
  Family family = Family::projective;
  Params params;
  Vec grading_element;  // coordinates of E
  std::vector<size_t> minus_one, zero, plus_one;
  Mat flip_element;                    // ambient matrix, flip^2 = I
  std::optional<Mat> complex_structure;  // ambient J for complex families
  /// Ambient form preserved by g up to scale (conformal: Q; lagrangean: W).
  std::optional<Mat> ambient_form;

  const MatrixLieAlgebra& g() const { return *algebra; }
  Mat grading_matrix() const { return algebra->element(grading_element); }
  /// Coordinates restricted to an index set.
  static Vec restrict(std::span<const Rational> coords, std::span<const size_t> idx);
  std::vector<size_t> degree_of_index() const;  // values in {0,1,2} for -1,0,1
};

/// Builds a graded target. Throws InputError for unknown families,
/// missing parameters, or ranks beyond the desk-scale bound.
GradedAlgebra build_graded(Family family, const Params& params);

/// Conformal target so(Q') for an arbitrary nondegenerate symmetric middle
/// Gram matrix G, Q' = [[0,0,1],[0,G,0],[1,0,0]].
GradedAlgebra build_conformal(const Mat& gram, std::string name);
/// Complex conformal target: complexification of build_conformal(gram).
GradedAlgebra build_complex_conformal(const Mat& gram, std::string name);

/// Grades an algebra given by a basis and a grading matrix E with ad(E)
/// eigenvalues in {-1, 0, 1}. Bases made of eigenvectors are kept as given.
GradedAlgebra grade_by_element(std::vector<Mat> basis, const Mat& e, const Mat& flip,
                               Family family, Params params, std::string name);

struct GradedCheck {
  bool jacobi = false;
  bool grading_eigenvalues = false;
  bool bracket_degrees = false;
  bool no_ideal_in_g0 = false;
  bool flip_signs = false;
  bool dual_dimensions = false;
  bool complex_structure = true;
  std::string detail;
  bool ok() const {
    return jacobi && grading_eigenvalues && bracket_degrees && no_ideal_in_g0 && flip_signs &&
           dual_dimensions && complex_structure;
  }
};
GradedCheck check_graded(const GradedAlgebra& g);

}  // namespace cartan
