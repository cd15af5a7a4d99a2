#include "cartan/representation.hpp"

#include <algorithm>
#include <map>

namespace cartan {

Representation Representation::make(AlgebraPtr algebra, std::vector<Mat> action) {
  if (!algebra) throw InputError("representation without an algebra");
  if (action.size() != algebra->dim())
    throw InputError("representation of '" + algebra->name() + "': expected " +
                     std::to_string(algebra->dim()) + " action matrices, got " +
                     std::to_string(action.size()));
  const size_t n = action.empty() ? 0 : action[0].rows();
  for (const auto& a : action)
    if (a.rows() != n || a.cols() != n)
      throw InputError("representation of '" + algebra->name() + "': ragged action matrices");
  const size_t d = algebra->dim();
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i + 1; j < d; ++j) {
      Mat rhs(n, n);
      for (const auto& t : algebra->bracket_terms(i, j)) rhs += action[t.index] * t.coeff;
      if (!(commutator(action[i], action[j]) == rhs))
        throw InvariantError("representation of '" + algebra->name() +
                             "' is not a homomorphism at basis pair (" + std::to_string(i) + ", " +
                             std::to_string(j) + ")");
    }
  Representation r;
  r.algebra = std::move(algebra);
  r.carrier_dim = n;
  r.action = std::move(action);
  return r;
}

Representation adjoint_representation(AlgebraPtr algebra) {
  std::vector<Mat> act;
  for (size_t i = 0; i < algebra->dim(); ++i) act.push_back(algebra->ad(i));
  return Representation::make(std::move(algebra), std::move(act));
}

std::string to_string(CommutantLabel label) {
  switch (label) {
    case CommutantLabel::R: return "R";
    case CommutantLabel::C: return "C";
    case CommutantLabel::RxR: return "RxR";
    case CommutantLabel::CxC: return "CxC";
    case CommutantLabel::H: return "H";
    case CommutantLabel::OTHER: return "OTHER";
  }
  return "OTHER";
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::None: return "none";
    case SearchStatus::Undecided: return "undecided";
  }
  return "undecided";
}

namespace {

// Sparse equations in the n*n unknown entries X[r][c] (index r*n+c).
class EquationBuilder {
 public:
  explicit EquationBuilder(size_t n) : n_(n) {}
  void begin_row() { current_.clear(); }
  void add(size_t r, size_t c, const Rational& v) {
    if (sgn(v) != 0) current_[r * n_ + c] += v;
  }
  void end_row() {
    SparseRow row;
    for (auto& [k, v] : current_)
      if (sgn(v) != 0) row.emplace_back(k, v);
    if (!row.empty()) rows_.push_back(std::move(row));
  }
  std::vector<Mat> kernel_matrices() {
    const Mat k = kernel_from_echelon(sparse_rref(std::move(rows_), n_ * n_), n_ * n_);
    std::vector<Mat> out;
    for (size_t j = 0; j < k.cols(); ++j) out.push_back(unflatten(k.col(j), n_, n_));
    return out;
  }

 private:
  size_t n_;
  std::map<size_t, Rational> current_;
  std::vector<SparseRow> rows_;
};

Mat generic_combination(std::span<const Mat> mats, size_t n, Rng& rng) {
  Mat g(n, n);
  for (const auto& m : mats) g += m * rng.small_nonzero();
  return g;
}

// Nonzero entries of each row and column, to avoid dense scans.
struct Nonzeros {
  std::vector<std::vector<std::pair<size_t, Rational>>> by_row, by_col;
  explicit Nonzeros(const Mat& a) : by_row(a.rows()), by_col(a.cols()) {
    for (size_t r = 0; r < a.rows(); ++r)
      for (size_t c = 0; c < a.cols(); ++c)
        if (sgn(a(r, c)) != 0) {
          by_row[r].emplace_back(c, a(r, c));
          by_col[c].emplace_back(r, a(r, c));
        }
  }
};

}  // namespace

std::vector<Mat> commutant_basis(std::span<const Mat> action, size_t n) {
  if (n == 0) return {};
  // The action matrices are sparse with small entries; stacking all their
  // equations keeps elimination sparse and avoids coefficient growth.
  EquationBuilder eq(n);
  for (const Mat& a : action) {
    const Nonzeros nz(a);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) {
        // (XA - AX)[r][c] = sum_k X[r][k] A[k][c] - sum_k A[r][k] X[k][c]
        eq.begin_row();
        for (const auto& [k, v] : nz.by_col[c]) eq.add(r, k, v);
        for (const auto& [k, v] : nz.by_row[r]) eq.add(k, c, -v);
        eq.end_row();
      }
  }
  return eq.kernel_matrices();
}

std::vector<Mat> invariant_bilinear_forms(std::span<const Mat> action, size_t n,
                                          FormSymmetry symmetry) {
  if (n == 0) return {};
  const Rational sign = symmetry == FormSymmetry::Symmetric ? Rational(-1) : Rational(1);
  EquationBuilder eq(n);
  // G - (+-)G^T = 0
  for (size_t r = 0; r < n; ++r)
    for (size_t c = r; c < n; ++c) {
      eq.begin_row();
      eq.add(r, c, 1);
      eq.add(c, r, sign);
      eq.end_row();
    }
  for (const Mat& a : action) {
    const Nonzeros nz(a);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) {
        // (A^T G + G A)[r][c] = sum_k A[k][r] G[k][c] + sum_k G[r][k] A[k][c]
        eq.begin_row();
        for (const auto& [k, v] : nz.by_col[r]) eq.add(k, c, v);
        for (const auto& [k, v] : nz.by_col[c]) eq.add(r, k, v);
        eq.end_row();
      }
  }
  return eq.kernel_matrices();
}

std::vector<Mat> invariant_bilinear_forms(const Representation& rep, FormSymmetry symmetry) {
  return invariant_bilinear_forms(rep.action, rep.carrier_dim, symmetry);
}

CommutantClassification classify_commuting_algebra(std::vector<Mat> basis, Rng& rng) {
  CommutantClassification out;
  out.basis = std::move(basis);
  const size_t dim = out.basis.size();
  if (dim == 0) return out;
  const size_t n = out.basis[0].rows();
  for (size_t i = 0; i < dim && out.commutative; ++i)
    for (size_t j = i + 1; j < dim; ++j)
      if (!commutator(out.basis[i], out.basis[j]).is_zero()) {
        out.commutative = false;
        break;
      }
  // Generic element: keep the largest minimal-polynomial degree over 5 draws.
  long best = -1;
  for (int attempt = 0; attempt < 5; ++attempt) {
    const Mat g = generic_combination(out.basis, n, rng);
    MinimalPolynomial mp = analyze_minimal_polynomial(g);
    if (mp.poly.degree() > best) {
      best = mp.poly.degree();
      out.generic = g;
      out.generic_minpoly = std::move(mp);
    }
  }
  const auto& f = out.generic_minpoly.factors;
  const auto deg = out.generic_minpoly.poly.degree();
  const bool sqfree = out.generic_minpoly.squarefree();
  if (dim == 1) {
    out.label = CommutantLabel::R;
  } else if (dim == 2 && deg == 2 && sqfree) {
    if (f.size() == 1 && f[0].complex_type) out.label = CommutantLabel::C;
    else if (f.size() == 2) out.label = CommutantLabel::RxR;
  } else if (dim == 4 && out.commutative && deg == 4 && sqfree) {
    if (sturm_real_root_count(out.generic_minpoly.poly) == 0) out.label = CommutantLabel::CxC;
  } else if (dim == 4 && !out.commutative && deg == 2 && f.size() == 1 && f[0].complex_type) {
    out.label = CommutantLabel::H;
  }
  return out;
}

CommutantClassification commutant(const Representation& rep, Rng& rng) {
  return classify_commuting_algebra(commutant_basis(rep.action, rep.carrier_dim), rng);
}

std::vector<Mat> primitive_idempotents(const Mat& generic, const MinimalPolynomial& mp) {
  std::vector<Polynomial> parts;
  for (const auto& f : mp.factors) {
    Polynomial p(Vec{1});
    for (size_t k = 0; k < f.multiplicity; ++k) p = p * f.factor;
    parts.push_back(std::move(p));
  }
  std::vector<Mat> out;
  if (parts.size() == 1) {
    out.push_back(Mat::identity(generic.rows()));
    return out;
  }
  for (size_t k = 0; k < parts.size(); ++k) {
    Polynomial others(Vec{1});
    for (size_t j = 0; j < parts.size(); ++j)
      if (j != k) others = others * parts[j];
    // s * others + t * parts[k] = 1, so s * others is 1 mod parts[k] and 0 mod the rest.
    const Bezout b = extended_gcd(others, parts[k]);
    out.push_back((b.s * others)(generic));
  }
  return out;
}

namespace {

// J = (x + beta/2) / sqrt(delta) when x has minimal polynomial t^2 + beta t + gamma
// with delta = gamma - beta^2/4 > 0 a rational square.
enum class JAttempt { Ok, NotQuadratic, Irrational };

JAttempt complex_structure_from(const Mat& x, const Mat& unit, Mat& j) {
  const Polynomial p = minimal_polynomial(x);
  if (p.degree() != 2) return JAttempt::NotQuadratic;
  const Rational beta = p.coeff(1), gamma = p.coeff(0);
  const Rational delta = gamma - beta * beta / 4;
  if (sgn(delta) <= 0) return JAttempt::NotQuadratic;
  Rational root;
  if (!rational_sqrt(delta, root)) return JAttempt::Irrational;
  j = (x + unit * (beta / 2)) * (1 / root);
  return JAttempt::Ok;
}

ComplexStructures with_negatives(std::vector<Mat> js) {
  ComplexStructures cs;
  cs.status = SearchStatus::Found;
  for (auto& j : js) {
    Mat neg = -j;
    cs.solutions.push_back(std::move(j));
    cs.solutions.push_back(std::move(neg));
  }
  return cs;
}

}  // namespace

ComplexStructures complex_structures_in(const CommutantClassification& c, Rng& rng) {
  ComplexStructures none;
  if (c.basis.empty()) return none;
  const size_t n = c.basis[0].rows();
  const Mat id = Mat::identity(n);
  auto undecided = [](std::string why) {
    ComplexStructures cs;
    cs.status = SearchStatus::Undecided;
    cs.reason = std::move(why);
    return cs;
  };
  switch (c.label) {
    case CommutantLabel::R:
    case CommutantLabel::RxR:
      none.reason = "commutant " + to_string(c.label) + " has no square root of -1";
      return none;
    case CommutantLabel::C: {
      Mat j;
      const JAttempt r = complex_structure_from(c.generic, id, j);
      if (r == JAttempt::Ok) return with_negatives({j});
      return undecided("complex structure exists only after an irrational normalization");
    }
    case CommutantLabel::CxC: {
      const auto& f = c.generic_minpoly.factors;
      if (f.size() != 2) return undecided("commutant field does not split over Q");
      const std::vector<Mat> e = primitive_idempotents(c.generic, c.generic_minpoly);
      std::vector<Mat> blocks;
      for (size_t k = 0; k < 2; ++k) {
        const Mat x = c.generic * e[k];
        const Rational beta = f[k].factor.coeff(1), gamma = f[k].factor.coeff(0);
        Rational root;
        if (!rational_sqrt(gamma - beta * beta / 4, root))
          return undecided("complex structure exists only after an irrational normalization");
        blocks.push_back((x + e[k] * (beta / 2)) * (1 / root));
      }
      ComplexStructures cs;
      cs.status = SearchStatus::Found;
      cs.solutions = {blocks[0] + blocks[1], blocks[0] - blocks[1], blocks[1] - blocks[0],
                      -(blocks[0] + blocks[1])};
      return cs;
    }
    case CommutantLabel::H: {
      // Any non-scalar quaternion squares into the reals after centering.
      std::vector<Mat> candidates = c.basis;
      for (size_t a = 0; a < c.basis.size(); ++a)
        for (size_t b = a + 1; b < c.basis.size(); ++b) candidates.push_back(c.basis[a] + c.basis[b]);
      for (int k = 0; k < 20; ++k) candidates.push_back(generic_combination(c.basis, n, rng));
      for (const auto& x : candidates) {
        Mat j;
        if (complex_structure_from(x, id, j) == JAttempt::Ok) return with_negatives({j});
      }
      return undecided("no rational unit quaternion found among candidates");
    }
    case CommutantLabel::OTHER:
      return undecided("commutant outside the classified types");
  }
  return undecided("unknown label");
}

ComplexStructures invariant_complex_structures(const Representation& rep, Rng& rng) {
  if (rep.carrier_dim % 2 == 1) {
    ComplexStructures cs;
    cs.reason = "odd-dimensional carrier";
    return cs;
  }
  return complex_structures_in(commutant(rep, rng), rng);
}

std::vector<Mat> simple_ideals(const MatrixLieAlgebra& algebra, Rng& rng) {
  std::vector<Mat> ad;
  for (size_t i = 0; i < algebra.dim(); ++i) ad.push_back(algebra.ad(i));
  const CommutantClassification centroid =
      classify_commuting_algebra(commutant_basis(ad, algebra.dim()), rng);
  if (!centroid.commutative)
    throw InvariantError("centroid of '" + algebra.name() + "' is not commutative");
  std::vector<Mat> out;
  for (const Mat& e : primitive_idempotents(centroid.generic, centroid.generic_minpoly))
    out.push_back(column_space(e));
  return out;
}

}  // namespace cartan
