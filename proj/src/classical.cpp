#include "cartan/classical.hpp"

namespace cartan {

std::vector<Mat> gl_basis(size_t n, Field k) {
  std::vector<Mat> out;
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c)
      for (size_t u = 0; u < field_dim(k); ++u) out.push_back(unit_matrix(k, n, r, c, u));
  return out;
}

std::vector<Mat> sl_basis(size_t n, Field k) {
  std::vector<Mat> out;
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c)
      if (r != c)
        for (size_t u = 0; u < field_dim(k); ++u) out.push_back(unit_matrix(k, n, r, c, u));
  for (size_t i = 0; i + 1 < n; ++i) {
    out.push_back(unit_matrix(k, n, i, i, 0) - unit_matrix(k, n, i + 1, i + 1, 0));
    if (k == Field::C) out.push_back(unit_matrix(k, n, i, i, 1) - unit_matrix(k, n, i + 1, i + 1, 1));
  }
  if (k == Field::H)
    for (size_t i = 0; i < n; ++i)
      for (size_t u = 1; u < 4; ++u) out.push_back(unit_matrix(k, n, i, i, u));
  return out;
}

std::vector<Mat> so_basis(const Mat& q) {
  const auto qi = inverse(q);
  if (!qi || !q.is_symmetric()) throw InputError("so(Q) needs a nondegenerate symmetric Q");
  const size_t n = q.rows();
  std::vector<Mat> out;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) out.push_back(*qi * (Mat::unit(n, a, b) - Mat::unit(n, b, a)));
  return out;
}

std::vector<Mat> sp_basis(const Mat& w) {
  const auto wi = inverse(w);
  if (!wi || !w.is_antisymmetric()) throw InputError("sp(W) needs a nondegenerate antisymmetric W");
  const size_t n = w.rows();
  std::vector<Mat> out;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a; b < n; ++b) {
      Mat s = Mat::unit(n, a, b);
      s(b, a) = 1;
      out.push_back(*wi * s);
    }
  return out;
}

std::vector<Mat> complexify(const std::vector<Mat>& real_basis) {
  std::vector<Mat> out;
  for (const auto& x : real_basis)
    for (size_t u = 0; u < 2; ++u) out.push_back(kronecker(x, unit_block(Field::C, u)));
  return out;
}

std::vector<Mat> form_preserving_basis(size_t n, Field k, const Mat& realified_form, bool traceless) {
  std::vector<LinearMap> maps;
  maps.push_back([f = realified_form](const Mat& x) { return x.transpose() * f + f * x; });
  if (traceless && k == Field::C) {
    maps.push_back([n](const Mat& x) {
      Mat t(2, 1);
      for (size_t i = 0; i < n; ++i) {
        t(0, 0) += x(2 * i, 2 * i);
        t(1, 0) += x(2 * i + 1, 2 * i);
      }
      return t;
    });
  }
  return kernel_of_maps(gl_basis(n, k), maps);
}

Mat indefinite_identity(size_t p, size_t q) {
  Mat m = Mat::identity(p + q);
  for (size_t i = p; i < p + q; ++i) m(i, i) = -1;
  return m;
}

Mat standard_symplectic(size_t n) {
  Mat m(2 * n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    m(i, n + i) = 1;
    m(n + i, i) = -1;
  }
  return m;
}

Mat split_form(size_t n) {
  Mat m(2 * n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    m(i, n + i) = 1;
    m(n + i, i) = 1;
  }
  return m;
}

std::vector<Mat> su_basis(size_t p, size_t q) {
  return form_preserving_basis(p + q, Field::C, realify(indefinite_identity(p, q), Field::C), true);
}

std::vector<Mat> sp_pq_basis(size_t p, size_t q) {
  return form_preserving_basis(p + q, Field::H, realify(indefinite_identity(p, q), Field::H), false);
}

std::vector<Mat> so_star_basis(size_t n) {
  return form_preserving_basis(n, Field::H, kronecker(Mat::identity(n), unit_block(Field::H, 2)), false);
}

}  // namespace cartan
