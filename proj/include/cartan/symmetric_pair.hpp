#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cartan/graded.hpp"
#include "cartan/representation.hpp"

namespace cartan {

/// Symmetric pair (k, h): the basis of k is ordered [h..., m...], so the
/// involution sigma is diag(I, -I) in coordinates.
struct SymmetricPair {
  AlgebraPtr k;
  std::string family;
  Params params;
  size_t h_dim = 0;
  /// Ambient matrix with sigma = Ad(conjugator), when one is known.
  std::optional<Mat> conjugator;

  size_t dim() const { return k->dim(); }
  size_t m_dim() const { return k->dim() - h_dim; }
  const std::string& name() const { return k->name(); }
  /// Coordinate matrix of sigma.
  Mat sigma() const;
  /// The subalgebra h with the same basis order.
  AlgebraPtr h_algebra() const;
};

/// Splits a basis of k into Ad(conjugator) eigenvectors (+1 first, then -1).
/// The conjugator must satisfy conj^2 = c * I for a nonzero rational c.
SymmetricPair make_pair(const std::vector<Mat>& basis, const Mat& conjugator, std::string name,
                        std::string family, Params params);
/// Pair from explicit h and m bases, with an optional conjugator.
SymmetricPair make_pair_split(std::vector<Mat> h_basis, std::vector<Mat> m_basis,
                              std::optional<Mat> conjugator, std::string name,
                              std::string family, Params params);

struct PairCheck {
  bool involution = false;         // sigma^2 = I and sigma an automorphism
  bool bracket_inclusions = false; // [h,h] in h, [h,m] in m, [m,m] in h
  bool effective = false;          // h contains no nonzero ideal of k
  bool conjugator_consistent = true;
  std::string detail;
  bool ok() const { return involution && bracket_inclusions && effective && conjugator_consistent; }
};
PairCheck check_pair(const SymmetricPair& p);

/// Catalog pairs; see `pair_families()` for the names and parameters.
SymmetricPair build_pair(const std::string& family, const Params& params);
const std::vector<std::string>& pair_families();

/// ad(h)|m in the m basis.
Representation isotropy_rep(const SymmetricPair& p);

struct RestrictedKilling {
  Mat gram;
  Signature signature;
};
/// Killing form of k restricted to m; throws InvariantError if degenerate.
RestrictedKilling restricted_killing(const SymmetricPair& p);

/// Direct sum of two pairs in block-diagonal ambient matrices.
SymmetricPair direct_sum(const SymmetricPair& a, const SymmetricPair& b);

/// A sigma-orbit of minimal ideals: either one sigma-stable ideal or two
/// ideals swapped by sigma (group type).
struct PairFactor {
  Mat ideal;    // coordinates in k, columns spanning the orbit
  Mat h_part;   // coordinates in h (first h_dim entries of k)
  Mat m_part;   // coordinates in m (last m_dim entries of k)
  bool group_type = false;
  SymmetricPair pair;  // the factor as a pair in its own right
};
std::vector<PairFactor> simple_factors(const SymmetricPair& p, Rng& rng);

}  // namespace cartan
