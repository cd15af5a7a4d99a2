#include "cartan/linalg.hpp"

#include <algorithm>

namespace cartan {

namespace {

// dst -= f * src, both sorted.
void axpy(SparseRow& dst, const Rational& f, const SparseRow& src) {
  SparseRow out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  Rational t;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(std::move(dst[i++]));
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, -f * src[j].second);
      ++j;
    } else {
      t = f * src[j].second;
      dst[i].second -= t;
      if (sgn(dst[i].second) != 0) out.push_back(std::move(dst[i]));
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

const Rational* find_entry(const SparseRow& r, size_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& e, size_t c) { return e.first < c; });
  if (it == r.end() || it->first != col) return nullptr;
  return &it->second;
}

}  // namespace

std::vector<SparseRow> to_sparse_rows(const Mat& a) {
  std::vector<SparseRow> rows(a.rows());
  for (size_t r = 0; r < a.rows(); ++r)
    for (size_t c = 0; c < a.cols(); ++c)
      if (sgn(a(r, c)) != 0) rows[r].emplace_back(c, a(r, c));
  return rows;
}

SparseEchelon sparse_rref(std::vector<SparseRow> rows, size_t cols, size_t stop_col) {
  const size_t limit = std::min(stop_col, cols);
  // Bucket rows by leading column; eliminate bucket by bucket (forward pass).
  std::vector<std::vector<size_t>> bucket(cols + 1);
  auto lead = [&](size_t r) { return rows[r].empty() ? cols : rows[r].front().first; };
  for (size_t r = 0; r < rows.size(); ++r) bucket[lead(r)].push_back(r);

  SparseEchelon e;
  e.cols = cols;
  std::vector<size_t> pivot_rows;
  for (size_t c = 0; c < limit; ++c) {
    auto& b = bucket[c];
    if (b.empty()) continue;
    size_t best = 0;
    for (size_t k = 1; k < b.size(); ++k)
      if (rows[b[k]].size() < rows[b[best]].size()) best = k;
    const size_t p = b[best];
    const Rational inv = 1 / rows[p].front().second;
    for (auto& [col, v] : rows[p]) v *= inv;
    for (size_t k = 0; k < b.size(); ++k) {
      if (k == best) continue;
      const size_t r = b[k];
      const Rational f = rows[r].front().second;
      axpy(rows[r], f, rows[p]);
      bucket[lead(r)].push_back(r);
    }
    b.clear();
    pivot_rows.push_back(p);
    e.pivot_cols.push_back(c);
  }
  // Back substitution to reach reduced form.
  for (size_t i = pivot_rows.size(); i-- > 0;) {
    const SparseRow& pr = rows[pivot_rows[i]];
    const size_t c = e.pivot_cols[i];
    for (size_t j = 0; j < i; ++j) {
      SparseRow& r = rows[pivot_rows[j]];
      if (const Rational* v = find_entry(r, c)) {
        const Rational f = *v;
        axpy(r, f, pr);
      }
    }
  }
  e.rows.reserve(pivot_rows.size());
  for (size_t p : pivot_rows) e.rows.push_back(std::move(rows[p]));
  // Rows left in buckets past `limit` are zero in the pivot range but may
  // carry augmented entries; keep them after the pivot rows.
  for (size_t c = limit; c <= cols; ++c)
    for (size_t r : bucket[c])
      if (!rows[r].empty()) e.rows.push_back(std::move(rows[r]));
  return e;
}

Mat kernel_from_echelon(const SparseEchelon& e, size_t n) {
  std::vector<bool> is_pivot(n, false);
  for (size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<size_t> free_index(n, 0);
  size_t nfree = 0;
  for (size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_index[c] = nfree++;
  Mat k(n, nfree);
  for (size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) k(c, free_index[c]) = 1;
  for (size_t i = 0; i < e.pivot_cols.size(); ++i)
    for (const auto& [c, v] : e.rows[i])
      if (c < n && !is_pivot[c]) k(e.pivot_cols[i], free_index[c]) = -v;
  return k;
}

Echelon rref(Mat a, size_t stop_col) {
  const size_t rows = a.rows(), cols = a.cols();
  SparseEchelon s = sparse_rref(to_sparse_rows(a), cols, stop_col);
  Echelon out;
  out.reduced = Mat(rows, cols);
  for (size_t i = 0; i < s.rows.size(); ++i)
    for (const auto& [c, v] : s.rows[i]) out.reduced(i, c) = v;
  out.pivot_cols = std::move(s.pivot_cols);
  return out;
}

size_t rank(const Mat& a) { return sparse_rref(to_sparse_rows(a), a.cols()).pivot_cols.size(); }

Mat kernel(const Mat& a) {
  return kernel_from_echelon(sparse_rref(to_sparse_rows(a), a.cols()), a.cols());
}

SolutionSet solve_linear(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw InputError("solve_linear: A and b have different row counts");
  const size_t n = a.cols();
  const SparseEchelon e = sparse_rref(to_sparse_rows(hstack(a, b)), n + b.cols(), n);
  SolutionSet s;
  s.kernel = kernel_from_echelon(e, n);
  // Inconsistent iff a row without a pivot in A still has a nonzero rhs.
  for (size_t r = e.pivot_cols.size(); r < e.rows.size(); ++r)
    if (!e.rows[r].empty()) return s;
  s.consistent = true;
  s.particular = Mat(n, b.cols());
  for (size_t i = 0; i < e.pivot_cols.size(); ++i)
    for (const auto& [c, v] : e.rows[i])
      if (c >= n) s.particular(e.pivot_cols[i], c - n) = v;
  return s;
}

std::optional<Mat> inverse(const Mat& a) {
  if (!a.is_square()) throw InputError("inverse of a non-square matrix");
  const size_t n = a.rows();
  const SparseEchelon e = sparse_rref(to_sparse_rows(hstack(a, Mat::identity(n))), 2 * n, n);
  if (e.pivot_cols.size() != n) return std::nullopt;
  Mat inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (const auto& [c, v] : e.rows[i])
      if (c >= n) inv(i, c - n) = v;
  return inv;
}

Rational determinant(const Mat& a) {
  if (!a.is_square()) throw InputError("determinant of a non-square matrix");
  Mat m = a;
  const size_t n = m.rows();
  Rational det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (size_t k = 0; k < n; ++k) swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (size_t k = c; k < n; ++k)
        if (sgn(m(c, k)) != 0) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

Mat column_space(const Mat& a) {
  const SparseEchelon e = sparse_rref(to_sparse_rows(a), a.cols());
  return a.select_cols(e.pivot_cols);
}

Mat left_annihilator(const Mat& basis) { return kernel(basis.transpose()).transpose(); }

std::optional<Vec> coordinates_in(const Mat& basis, std::span<const Rational> v) {
  const SolutionSet s = solve_linear(basis, Mat::column(v));
  if (!s.consistent) return std::nullopt;
  return s.particular.col(0);
}

CongruenceDiagonalization congruence_diagonalize(const Mat& g) {
  if (!g.is_symmetric()) throw InputError("congruence diagonalization needs a symmetric matrix");
  const size_t n = g.rows();
  Mat a = g;
  Mat s = Mat::identity(n);
  auto add_row_col = [&](size_t dst, size_t src, const Rational& f) {
    // a <- E^T a E with E = I + f e_src e_dst^T (column dst += f * column src).
    for (size_t k = 0; k < n; ++k) a(k, dst) += f * a(k, src);
    for (size_t k = 0; k < n; ++k) a(dst, k) += f * a(src, k);
    for (size_t k = 0; k < n; ++k) s(k, dst) += f * s(k, src);
  };
  auto swap_index = [&](size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < n; ++k) swap(a(k, i), a(k, j));
    for (size_t k = 0; k < n; ++k) swap(a(i, k), a(j, k));
    for (size_t k = 0; k < n; ++k) swap(s(k, i), s(k, j));
  };
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && sgn(a(p, p)) == 0) ++p;
    if (p == n) {
      size_t pi = n, pj = n;
      for (size_t i = k; i < n && pi == n; ++i)
        for (size_t j = i + 1; j < n; ++j)
          if (sgn(a(i, j)) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;  // the remaining block is zero
      add_row_col(pi, pj, Rational(1));
      p = pi;
    }
    swap_index(k, p);
    const Rational pivot = a(k, k);
    for (size_t r = k + 1; r < n; ++r) {
      if (sgn(a(r, k)) == 0) continue;
      add_row_col(r, k, -a(r, k) / pivot);
    }
  }
  CongruenceDiagonalization out;
  out.transform = std::move(s);
  out.diagonal.resize(n);
  for (size_t i = 0; i < n; ++i) out.diagonal[i] = a(i, i);
  return out;
}

Signature symmetric_signature(const Mat& g) {
  if (!g.is_square() || !g.is_symmetric()) throw InputError("signature of a non-symmetric matrix");
  Signature sig;
  for (const auto& d : congruence_diagonalize(g).diagonal) {
    const int s = sgn(d);
    if (s > 0) ++sig.positive;
    else if (s < 0) ++sig.negative;
    else ++sig.nullity;
  }
  return sig;
}

std::vector<Mat> kernel_of_map(std::span<const Mat> basis, const LinearMap& f) {
  if (basis.empty()) return {};
  // Equation p: sum_b c_b * f(basis[b])[p] = 0.
  std::vector<SparseRow> eqs;
  for (size_t b = 0; b < basis.size(); ++b) {
    const Mat img = f(basis[b]);
    if (eqs.empty()) eqs.resize(img.rows() * img.cols());
    const auto& d = img.data();
    for (size_t p = 0; p < d.size(); ++p)
      if (sgn(d[p]) != 0) eqs[p].emplace_back(b, d[p]);
  }
  std::erase_if(eqs, [](const SparseRow& r) { return r.empty(); });
  const Mat k = kernel_from_echelon(sparse_rref(std::move(eqs), basis.size()), basis.size());
  std::vector<Mat> out;
  out.reserve(k.cols());
  for (size_t j = 0; j < k.cols(); ++j) {
    Mat m(basis[0].rows(), basis[0].cols());
    for (size_t i = 0; i < basis.size(); ++i)
      if (sgn(k(i, j)) != 0) m += basis[i] * k(i, j);
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Mat> kernel_of_maps(std::vector<Mat> basis, std::span<const LinearMap> maps) {
  for (const auto& f : maps) {
    if (basis.empty()) break;
    basis = kernel_of_map(basis, f);
  }
  return basis;
}

std::vector<Mat> all_matrices_basis(size_t n) {
  std::vector<Mat> out;
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) out.push_back(Mat::unit(n, r, c));
  return out;
}

std::vector<Mat> symmetric_basis(size_t n) {
  std::vector<Mat> out;
  for (size_t r = 0; r < n; ++r)
    for (size_t c = r; c < n; ++c) {
      Mat m = Mat::unit(n, r, c);
      m(c, r) = 1;
      out.push_back(std::move(m));
    }
  return out;
}

std::vector<Mat> antisymmetric_basis(size_t n) {
  std::vector<Mat> out;
  for (size_t r = 0; r < n; ++r)
    for (size_t c = r + 1; c < n; ++c) {
      Mat m = Mat::unit(n, r, c);
      m(c, r) = -1;
      out.push_back(std::move(m));
    }
  return out;
}

std::optional<Vec> coordinates_in_span(std::span<const Mat> basis, const Mat& m) {
  std::vector<Vec> cols;
  cols.reserve(basis.size());
  for (const auto& b : basis) cols.push_back(flatten(b));
  return coordinates_in(Mat::from_columns(m.rows() * m.cols(), cols), flatten(m));
}

}  // namespace cartan
