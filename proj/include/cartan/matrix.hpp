#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cartan/rational.hpp"

namespace cartan {

using Vec = std::vector<Rational>;

/// Dense row-major rational matrix.
class Mat {
 public:
  Mat() = default;
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(size_t rows, size_t cols, std::vector<Rational> data);
  /// Row-wise literal, e.g. Mat{{1, 2}, {3, 4}}.
  Mat(std::initializer_list<std::initializer_list<Rational>> rows);

  static Mat identity(size_t n);
  static Mat zero(size_t rows, size_t cols) { return Mat(rows, cols); }
  static Mat diagonal(std::span<const Rational> entries);
  static Mat column(std::span<const Rational> entries);
  static Mat from_columns(size_t rows, std::span<const Vec> columns);
  /// n x n matrix with a single 1 at (r, c).
  static Mat unit(size_t n, size_t r, size_t c);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  Rational& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Rational>& data() const { return data_; }
  std::vector<Rational>& data() { return data_; }

  Vec col(size_t c) const;
  Vec row(size_t r) const;
  Mat block(size_t r0, size_t c0, size_t nr, size_t nc) const;
  void set_block(size_t r0, size_t c0, const Mat& b);
  Mat select_rows(std::span<const size_t> idx) const;
  Mat select_cols(std::span<const size_t> idx) const;

  Mat transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;
  size_t nonzeros() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Rational& s);

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Rational> data_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator-(Mat a);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(Mat a, const Rational& s);
Mat operator*(const Rational& s, Mat a);
Vec operator*(const Mat& a, std::span<const Rational> v);

/// [a, b] = ab - ba.
Mat commutator(const Mat& a, const Mat& b);
/// trace(a * b) without forming the product.
Rational trace_of_product(const Mat& a, const Mat& b);
/// Block diagonal sum.
Mat direct_sum(const Mat& a, const Mat& b);
Mat kronecker(const Mat& a, const Mat& b);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

/// Row-major flattening and its inverse.
Vec flatten(const Mat& m);
Mat unflatten(std::span<const Rational> v, size_t rows, size_t cols);

Vec add(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, const Rational& s);
bool is_zero(const Vec& v);

std::string to_string(const Mat& m);

}  // namespace cartan
