#include "cartan/matrix.hpp"

#include <sstream>

namespace cartan {

Mat::Mat(size_t rows, size_t cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw InputError("matrix entry count does not match shape");
}

Mat::Mat(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::diagonal(std::span<const Rational> entries) {
  Mat m(entries.size(), entries.size());
  for (size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Mat Mat::column(std::span<const Rational> entries) {
  return Mat(entries.size(), 1, std::vector<Rational>(entries.begin(), entries.end()));
}

Mat Mat::from_columns(size_t rows, std::span<const Vec> columns) {
  Mat m(rows, columns.size());
  for (size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InputError("column length mismatch");
    for (size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Mat Mat::unit(size_t n, size_t r, size_t c) {
  Mat m(n, n);
  m(r, c) = 1;
  return m;
}

Vec Mat::col(size_t c) const {
  Vec v(rows_);
  for (size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vec Mat::row(size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Mat Mat::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
  Mat b(nr, nc);
  for (size_t r = 0; r < nr; ++r)
    for (size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Mat::set_block(size_t r0, size_t c0, const Mat& b) {
  for (size_t r = 0; r < b.rows(); ++r)
    for (size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Mat Mat::select_rows(std::span<const size_t> idx) const {
  Mat m(idx.size(), cols_);
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(idx[i], c);
  return m;
}

Mat Mat::select_cols(std::span<const size_t> idx) const {
  Mat m(rows_, idx.size());
  for (size_t r = 0; r < rows_; ++r)
    for (size_t i = 0; i < idx.size(); ++i) m(r, i) = (*this)(r, idx[i]);
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rational Mat::trace() const {
  if (!is_square()) throw InputError("trace of a non-square matrix");
  Rational t = 0;
  for (size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Mat::is_symmetric() const {
  if (!is_square()) return false;
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool Mat::is_antisymmetric() const {
  if (!is_square()) return false;
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = r; c < cols_; ++c)
      if ((*this)(r, c) != -(*this)(c, r)) return false;
  return true;
}

size_t Mat::nonzeros() const {
  size_t n = 0;
  for (const auto& x : data_)
    if (sgn(x) != 0) ++n;
  return n;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("shape mismatch in +");
  for (size_t i = 0; i < data_.size(); ++i)
    if (sgn(o.data_[i]) != 0) data_[i] += o.data_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("shape mismatch in -");
  for (size_t i = 0; i < data_.size(); ++i)
    if (sgn(o.data_[i]) != 0) data_[i] -= o.data_[i];
  return *this;
}

Mat& Mat::operator*=(const Rational& s) {
  for (auto& x : data_)
    if (sgn(x) != 0) x *= s;
  return *this;
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }
Mat operator-(Mat a) {
  for (auto& x : a.data()) x = -x;
  return a;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw InputError("shape mismatch in *");
  Mat c(a.rows(), b.cols());
  Rational t;
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        t = aik * bkj;
        c(i, j) += t;
      }
    }
  }
  return c;
}

Mat operator*(Mat a, const Rational& s) { return a *= s; }
Mat operator*(const Rational& s, Mat a) { return a *= s; }

Vec operator*(const Mat& a, std::span<const Rational> v) {
  if (a.cols() != v.size()) throw InputError("shape mismatch in matrix-vector product");
  Vec out(a.rows());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k)
      if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) out[i] += a(i, k) * v[k];
  return out;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Rational trace_of_product(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw InputError("shape mismatch in trace_of_product");
  Rational t = 0;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k)
      if (sgn(a(i, k)) != 0 && sgn(b(k, i)) != 0) t += a(i, k) * b(k, i);
  return t;
}

Mat direct_sum(const Mat& a, const Mat& b) {
  Mat m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

Mat kronecker(const Mat& a, const Mat& b) {
  Mat m(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw InputError("hstack row mismatch");
  Mat m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw InputError("vstack column mismatch");
  Mat m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Vec flatten(const Mat& m) { return m.data(); }

Mat unflatten(std::span<const Rational> v, size_t rows, size_t cols) {
  return Mat(rows, cols, std::vector<Rational>(v.begin(), v.end()));
}

Vec add(const Vec& a, const Vec& b) {
  Vec out(a);
  for (size_t i = 0; i < b.size(); ++i)
    if (sgn(b[i]) != 0) out[i] += b[i];
  return out;
}

Vec scaled(const Vec& a, const Rational& s) {
  Vec out(a);
  for (auto& x : out)
    if (sgn(x) != 0) x *= s;
  return out;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

std::string to_string(const Mat& m) {
  std::ostringstream os;
  os << "[";
  for (size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace cartan
