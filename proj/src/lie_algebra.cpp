#include "cartan/lie_algebra.hpp"

#include <algorithm>

namespace cartan {

namespace {

SparseRow sparse_flat(const Mat& m) {
  SparseRow r;
  const auto& d = m.data();
  for (size_t p = 0; p < d.size(); ++p)
    if (sgn(d[p]) != 0) r.emplace_back(p, d[p]);
  return r;
}

const Rational* lookup(const std::vector<BracketTerm>& terms, size_t k) {
  for (const auto& t : terms)
    if (t.index == k) return &t.coeff;
  return nullptr;
}

}  // namespace

MatrixLieAlgebra MatrixLieAlgebra::make(std::vector<Mat> basis, std::string name) {
  if (basis.empty()) throw InputError("algebra '" + name + "': empty basis");
  const size_t n = basis[0].rows();
  for (const auto& b : basis)
    if (b.rows() != n || b.cols() != n)
      throw InputError("algebra '" + name + "': basis matrices must be square and equally sized");

  MatrixLieAlgebra a;
  a.name_ = std::move(name);
  a.n_ = n;
  a.basis_ = std::move(basis);
  const size_t d = a.basis_.size();

  for (const auto& b : a.basis_) a.flat_basis_.push_back(sparse_flat(b));
  // Rows of B^T are the flattened basis; pivot columns give probe positions.
  std::vector<SparseRow> rows = a.flat_basis_;
  const SparseEchelon e = sparse_rref(std::move(rows), n * n);
  if (e.pivot_cols.size() != d) throw InvariantError("algebra '" + a.name_ + "': dependent basis");
  a.probe_ = e.pivot_cols;
  Mat bp(d, d);
  for (size_t j = 0; j < d; ++j)
    for (const auto& [pos, v] : a.flat_basis_[j]) {
      auto it = std::lower_bound(a.probe_.begin(), a.probe_.end(), pos);
      if (it != a.probe_.end() && *it == pos) bp(it - a.probe_.begin(), j) = v;
    }
  const Mat w = *inverse(bp);
  a.probe_inverse_cols_.resize(d);
  for (size_t r = 0; r < d; ++r)
    for (size_t k = 0; k < d; ++k)
      if (sgn(w(k, r)) != 0) a.probe_inverse_cols_[r].emplace_back(k, w(k, r));

  a.structure_.assign(d * d, {});
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = i + 1; j < d; ++j) {
      const Mat br = commutator(a.basis_[i], a.basis_[j]);
      const auto c = a.coordinates(br);
      if (!c)
        throw InvariantError("algebra '" + a.name_ + "': not closed under bracket: [X" +
                             std::to_string(i) + ", X" + std::to_string(j) + "] leaves the span");
      for (size_t k = 0; k < d; ++k) {
        if (sgn((*c)[k]) == 0) continue;
        a.structure_[i * d + j].push_back({k, (*c)[k]});
        a.structure_[j * d + i].push_back({k, -(*c)[k]});
      }
    }
  }
  return a;
}

std::optional<Vec> MatrixLieAlgebra::coordinates(const Mat& m) const {
  if (m.rows() != n_ || m.cols() != n_) return std::nullopt;
  const size_t d = dim();
  const auto& flat = m.data();
  Vec c(d);
  for (size_t r = 0; r < d; ++r) {
    const Rational& v = flat[probe_[r]];
    if (sgn(v) == 0) continue;
    for (const auto& [k, w] : probe_inverse_cols_[r]) c[k] += w * v;
  }
  // Verify membership exactly.
  Vec recon(n_ * n_);
  for (size_t j = 0; j < d; ++j) {
    if (sgn(c[j]) == 0) continue;
    for (const auto& [pos, v] : flat_basis_[j]) recon[pos] += c[j] * v;
  }
  if (recon != flat) return std::nullopt;
  return c;
}

Vec MatrixLieAlgebra::coordinates_checked(const Mat& m) const {
  auto c = coordinates(m);
  if (!c) throw InvariantError("matrix does not lie in algebra '" + name_ + "'");
  return *std::move(c);
}

Mat MatrixLieAlgebra::element(std::span<const Rational> coords) const {
  Mat m(n_, n_);
  auto& data = m.data();
  for (size_t j = 0; j < dim(); ++j) {
    if (sgn(coords[j]) == 0) continue;
    for (const auto& [pos, v] : flat_basis_[j]) data[pos] += coords[j] * v;
  }
  return m;
}

Vec MatrixLieAlgebra::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
  const size_t d = dim();
  Vec out(d);
  for (size_t i = 0; i < d; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (size_t j = 0; j < d; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational f = x[i] * y[j];
      for (const auto& t : bracket_terms(i, j)) out[t.index] += f * t.coeff;
    }
  }
  return out;
}

std::vector<std::vector<Vec>> MatrixLieAlgebra::structure_constants() const {
  const size_t d = dim();
  std::vector<std::vector<Vec>> c(d, std::vector<Vec>(d, Vec(d)));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      for (const auto& t : bracket_terms(i, j)) c[i][j][t.index] = t.coeff;
  return c;
}

Mat MatrixLieAlgebra::ad(size_t i) const {
  const size_t d = dim();
  Mat m(d, d);
  for (size_t j = 0; j < d; ++j)
    for (const auto& t : bracket_terms(i, j)) m(t.index, j) = t.coeff;
  return m;
}

Mat MatrixLieAlgebra::ad(std::span<const Rational> x) const {
  const size_t d = dim();
  Mat m(d, d);
  for (size_t i = 0; i < d; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (size_t j = 0; j < d; ++j)
      for (const auto& t : bracket_terms(i, j)) m(t.index, j) += x[i] * t.coeff;
  }
  return m;
}

Mat MatrixLieAlgebra::killing_form() const {
  // B_ij = sum_{k,l} (ad X_i)_{kl} (ad X_j)_{lk} = sum_{l,k} c_il^k c_jk^l.
  const size_t d = dim();
  Mat g(d, d);
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = i; j < d; ++j) {
      Rational acc = 0;
      for (size_t l = 0; l < d; ++l)
        for (const auto& t : bracket_terms(i, l))
          if (const Rational* v = lookup(bracket_terms(j, t.index), l)) acc += t.coeff * *v;
      g(i, j) = acc;
      g(j, i) = acc;
    }
  }
  return g;
}

bool MatrixLieAlgebra::is_semisimple() const { return rank(killing_form()) == dim(); }

std::optional<std::array<size_t, 3>> MatrixLieAlgebra::jacobi_violation() const {
  const size_t d = dim();
  // [X_i,[X_j,X_k]] + [X_j,[X_k,X_i]] + [X_k,[X_i,X_j]] = 0.
  auto nested = [&](size_t a, size_t b, size_t c, Vec& acc) {
    for (const auto& t : bracket_terms(b, c))
      for (const auto& u : bracket_terms(a, t.index)) acc[u.index] += t.coeff * u.coeff;
  };
  Vec acc(d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i + 1; j < d; ++j)
      for (size_t k = j + 1; k < d; ++k) {
        std::fill(acc.begin(), acc.end(), Rational(0));
        nested(i, j, k, acc);
        nested(j, k, i, acc);
        nested(k, i, j, acc);
        if (!cartan::is_zero(acc)) return std::array<size_t, 3>{i, j, k};
      }
  return std::nullopt;
}

Mat MatrixLieAlgebra::largest_ideal_in(const Mat& subspace) const {
  const size_t d = dim();
  Mat v = column_space(subspace);
  bool changed = true;
  while (changed && v.cols() > 0) {
    changed = false;
    for (size_t i = 0; i < d && v.cols() > 0; ++i) {
      const Mat ann = left_annihilator(v);
      if (ann.rows() == 0) return v;  // v is everything
      const Mat k = kernel(ann * ad(i) * v);
      if (k.cols() < v.cols()) {
        v = v * k;
        changed = true;
      }
    }
  }
  return v;
}

Mat MatrixLieAlgebra::derived_subspace() const {
  const size_t d = dim();
  std::vector<Vec> cols;
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i + 1; j < d; ++j) {
      Vec c(d);
      for (const auto& t : bracket_terms(i, j)) c[t.index] = t.coeff;
      if (!cartan::is_zero(c)) cols.push_back(std::move(c));
    }
  if (cols.empty()) return Mat(d, 0);
  return column_space(Mat::from_columns(d, cols));
}

MatrixLieAlgebra MatrixLieAlgebra::subalgebra(const Mat& coords, std::string name) const {
  std::vector<Mat> b;
  for (size_t j = 0; j < coords.cols(); ++j) b.push_back(element(coords.col(j)));
  return make(std::move(b), std::move(name));
}

}  // namespace cartan
