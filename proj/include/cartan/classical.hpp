#pragma once

#include <vector>

#include "cartan/linalg.hpp"
#include "cartan/realify.hpp"

namespace cartan {

/// Realified basis of gl(n, K): E_rc tensor unit.
std::vector<Mat> gl_basis(size_t n, Field k);
/// Realified sl(n, K): off-diagonal units, traceless real diagonal, and the
/// imaginary diagonal units (traceless for C, all of them for H).
std::vector<Mat> sl_basis(size_t n, Field k);
/// so(Q) = {X : X^T Q + Q X = 0} for a nondegenerate symmetric Q.
std::vector<Mat> so_basis(const Mat& q);
/// sp(W) = {X : X^T W + W X = 0} for a nondegenerate antisymmetric W.
std::vector<Mat> sp_basis(const Mat& w);
/// Complexification of a real matrix algebra, realified: X tensor {1, i}.
std::vector<Mat> complexify(const std::vector<Mat>& real_basis);

/// Subspace of realified gl(n, K) matrices X with X^T F + F X = 0, where F
/// is the realification of a K-hermitian (or skew) form. With `traceless`,
/// the complex trace is also required to vanish (only meaningful for C).
std::vector<Mat> form_preserving_basis(size_t n, Field k, const Mat& realified_form, bool traceless);

/// su(p, q) realified, form diag(I_p, -I_q).
std::vector<Mat> su_basis(size_t p, size_t q);
/// sp(p, q) realified as quaternionic matrices, form diag(I_p, -I_q).
std::vector<Mat> sp_pq_basis(size_t p, size_t q);
/// so*(2n) realified: quaternionic n x n matrices preserving the skew form j I.
std::vector<Mat> so_star_basis(size_t n);

/// diag(1,..,1,-1,..,-1) with p ones and q minus ones.
Mat indefinite_identity(size_t p, size_t q);
/// Standard symplectic form [[0, I], [-I, 0]] of size 2n.
Mat standard_symplectic(size_t n);
/// Split form [[0, I], [I, 0]] of size 2n.
Mat split_form(size_t n);

}  // namespace cartan
