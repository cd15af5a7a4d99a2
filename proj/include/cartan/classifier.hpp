#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cartan/extension.hpp"

namespace cartan {

enum class Verdict { Exists, NotExists, Undecided };
std::string to_string(Verdict v);

struct Certificate {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Conformal data: the invariant form space and the achievable signatures.
struct ConformalMenu {
  size_t form_space_dim = 0;
  size_t real_factors = 0;
  size_t complex_factors = 0;  // factors with complex-linear Killing form
  std::vector<size_t> factor_form_dims;
  bool cross_blocks_zero = false;
  bool killing_in_space = false;
  std::vector<Signature> signatures;  // sorted, unique
  bool signatures_match_direct = false;
};

struct ExistenceVerdict {
  std::string pair_name;
  Family family = Family::projective;
  Verdict verdict = Verdict::Undecided;
  std::string reason;
  std::optional<Extension> witness;
  /// Further non-equivalent witnesses (the complex conjugate for h_projective).
  std::vector<Extension> alternatives;
  std::string equivalence;
  /// The classification statement this verdict instantiates.
  std::string claim;
  std::vector<Certificate> certificates;
  std::optional<ConformalMenu> conformal;
  /// Complex structures on k used by h_projective ({J, -J}).
  std::vector<Mat> complex_structures;

  bool certificates_pass() const;
};

ExistenceVerdict decide_projective(const SymmetricPair& pair);
ExistenceVerdict decide_conformal(const SymmetricPair& pair, Rng& rng);
ExistenceVerdict decide_h_projective(const SymmetricPair& pair, Rng& rng);
/// Inclusion-based witness for a flat-family row, plus the quaternionic
/// certificate on pseudo-(para-)quaternionic-Kaehler rows.
ExistenceVerdict verify_family_row(Family family, const SymmetricPair& pair, Rng& rng);
/// Dispatches on the family.
ExistenceVerdict classify(const SymmetricPair& pair, Family family, Rng& rng);

/// Complex structures J on k (J in the centroid, J sigma = sigma J).
ComplexStructures pair_complex_structures(const SymmetricPair& pair, Rng& rng);
/// True when the factor's Killing form is complex linear, decided by a
/// complex structure in the sigma-commuting centroid.
bool has_complex_killing(const SymmetricPair& factor, Rng& rng);

/// m basis adapted to the factor decomposition: columns are m coordinates,
/// grouped by factor; `sizes` gives the group sizes.
struct AdaptedBasis {
  Mat basis;
  std::vector<size_t> sizes;
};
AdaptedBasis factor_adapted_basis(const std::vector<PairFactor>& factors);
/// True when P^T G P (forms) or P^-1 T P (maps) is block diagonal.
bool block_diagonal(const Mat& m, const std::vector<size_t>& sizes);

struct FactorCommutant {
  std::string name;
  bool group_type = false;
  size_t m_dim = 0;
  CommutantClassification commutant;
};

struct CentralizerReport {
  CommutantClassification whole;
  std::vector<FactorCommutant> factors;
  bool product_dimension = false;  // sum of factor dims == whole dim
  bool block_diagonal = false;     // every whole element preserves the factors
  bool labels_allowed = false;     // every factor label in {R, C, RxR, CxC}
  std::string detail;
  bool ok() const { return product_dimension && block_diagonal && labels_allowed; }
};
CentralizerReport centralizer_report(const SymmetricPair& pair, Rng& rng);

/// Exact (split-)quaternion relations for the image of a 3-dimensional
/// ideal of h in End(m).
struct QuaternionCertificate {
  bool found = false;
  bool split = false;
  std::vector<Mat> units;  // i, j, k (normalized when square roots are rational)
  bool normalized = false;
  std::string detail;
};
QuaternionCertificate quaternion_certificate(const SymmetricPair& pair, bool split, Rng& rng);

}  // namespace cartan
