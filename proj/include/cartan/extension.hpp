#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cartan/graded.hpp"
#include "cartan/symmetric_pair.hpp"

namespace cartan {

/// Raised when m and g_-1 have different dimensions: no frame can exist.
struct StructuralError : InputError {
  using InputError::InputError;
};
/// Raised for requests outside what an operation supports (b2 for n = 1, ...).
struct UnsupportedError : InputError {
  using InputError::InputError;
};

/// Linear map alpha: k -> g in coordinates, (dim g) x (dim k). Columns follow
/// the pair's basis order [h, m]; rows follow the target's basis.
struct Extension {
  SymmetricPair pair;
  GradedAlgebra target;
  Mat alpha;
  /// g_-1 -> g_1 part, |g_1| x |g_-1| in the target's sub-bases. On m the
  /// g_1 rows of alpha equal b2 * frame.
  Mat b2;

  /// g_-1 rows of alpha on the m columns, |g_-1| x dim m.
  Mat frame() const;
  Vec image(size_t k_index) const { return alpha.col(k_index); }
};

/// Wraps an alpha matrix; b2 is read off when the frame is invertible and
/// left zero otherwise. Shapes are checked (InputError).
Extension make_extension(SymmetricPair pair, GradedAlgebra target, Mat alpha);

/// Extension with alpha|m = frame + b2 * frame and alpha|h the unique map
/// into g_0 whose action on g_-1 matches ad(h)|m transported by the frame.
/// Throws InvariantError when the transported action is not in ad(g_0).
Extension extension_from_frame(SymmetricPair pair, GradedAlgebra target, const Mat& frame,
                               std::optional<Mat> b2 = std::nullopt);
Extension with_b2(const Extension& ext, const Mat& b2);

/// alpha(X) = coordinates of embed(X) in g, for an ambient homomorphism.
Extension inclusion_extension(SymmetricPair pair, GradedAlgebra target,
                              const std::function<Mat(const Mat&)>& embed);

/// The natural inclusion extension of a catalog pair into a flat-family
/// target (Grassmannian, Lagrangean, spinorial, su(p,p), quaternionic,
/// para-quaternionic rows). Throws UnsupportedError for other combinations.
Extension inclusion_row_extension(Family family, const SymmetricPair& pair);
/// Target parameters used by inclusion_row_extension.
Params inclusion_row_target(Family family, const SymmetricPair& pair);

struct Axiom {
  std::string name;
  bool pass = true;
  std::vector<std::string> witnesses;
};

struct ValidationReport {
  std::vector<Axiom> axioms;
  bool ok() const;
  const Axiom& at(const std::string& name) const;
};

inline constexpr const char* kAxiomHtoG0 = "alpha(h) in g_0";
inline constexpr const char* kAxiomNoG0 = "alpha(m)_0 = 0";
inline constexpr const char* kAxiomFrame = "frame invertible";
inline constexpr const char* kAxiomEquivariance = "equivariance";

/// Checks the four extension axioms exactly. Throws StructuralError when
/// dim m != dim g_-1.
ValidationReport validate(const Extension& ext);

/// kappa(X_i, X_j) = [alpha X_i, alpha X_j] - alpha [X_i, X_j] on m, stored for i < j.
struct Curvature {
  size_t m_dim = 0;
  std::vector<Vec> values;
  std::vector<size_t> degree;  // per target index: 0, 1, 2 for g_-1, g_0, g_1

  Vec at(size_t i, size_t j) const;
  /// Graded part of kappa(X_i, X_j); grade in {-1, 0, 1}.
  Vec component(size_t i, size_t j, int grade) const;
  size_t nonzero_entries() const;
  size_t nonzero_entries(int grade) const;
  bool torsion_free() const { return nonzero_entries(-1) == 0; }
  bool flat() const { return nonzero_entries() == 0; }
};

Curvature curvature(const Extension& ext);
bool torsion_free(const Extension& ext);
bool is_flat(const Extension& ext);

/// Coordinate matrix of multiplication by the ambient complex structure on
/// the target; nullopt when the target has none.
std::optional<Mat> target_complex_structure(const GradedAlgebra& g);
/// Coordinate matrix of entrywise complex conjugation on a realified complex
/// target, when it preserves g.
std::optional<Mat> target_conjugation(const GradedAlgebra& g);

struct Holomorphy {
  bool holomorphic = false;
  /// conj_g o alpha: complex linear for (-J_k, J_g).
  std::optional<Extension> conjugate;
};
/// alpha o J_k == J_g o alpha, with J_k, J_g coordinate matrices on k and g.
/// Throws InputError unless both square to -I.
Holomorphy is_holomorphic(const Extension& ext, const Mat& j_k, const Mat& j_g);

/// Columns: (d* kappa)(X^j) = sum_i [Z_i, kappa(X^j, X^i)] in target
/// coordinates, X^i the g_-1 basis and Z_i its trace-dual basis in g_1.
Mat codifferential(const Extension& ext);

struct B2Solution {
  Mat b2;
  Extension normalized;
  size_t homogeneous_kernel_dim = 0;
  bool residual_zero = false;  // recomputed d* kappa vanishes
};
/// Unique b2 making d* kappa = 0, for projective (real b2) and h_projective
/// (complex-linear b2) targets with n >= 2. Throws UnsupportedError otherwise,
/// InvariantError if the system is inconsistent or not uniquely solvable.
B2Solution solve_projective_b2(const Extension& ext);

/// The b2 system as (matrix, rhs, unknown basis) for inspection in tests.
struct B2System {
  Mat matrix;
  Mat rhs;
  std::vector<Mat> unknowns;
};
B2System projective_b2_system(const Extension& ext);

enum class Equivalence { Equivalent, NotEquivalent, Undecided };
std::string to_string(Equivalence e);

struct EquivalenceResult {
  Equivalence status = Equivalence::Undecided;
  /// Index into {identity, autos...} of the twist that succeeded.
  std::optional<size_t> twist;
  std::string reason;
};

/// Transition T = frame2 o sigma_m^-1 o frame1^-1 tested for membership in
/// G_0 for each twist sigma (identity first, then `autos`, given as
/// coordinate matrices on k preserving h).
EquivalenceResult frames_equivalent(const Extension& a, const Extension& b,
                                    std::span<const Mat> autos = {});

/// Matrices of ad(g_0 basis) on g_-1.
std::vector<Mat> g0_action(const GradedAlgebra& g);
/// Symmetric form on g_-1 preserved up to scale by G_0 (conformal targets).
std::optional<Mat> conformal_gram(const GradedAlgebra& g);

}  // namespace cartan
