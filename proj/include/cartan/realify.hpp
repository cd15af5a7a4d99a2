#pragma once

#include <optional>
#include <string>

#include "cartan/matrix.hpp"

namespace cartan {

/// Scalar fields handled by realification: complex numbers become 2x2 real
/// blocks, quaternions 4x4 real blocks (left multiplication).
enum class Field { R, C, H };

size_t field_dim(Field k);
std::string to_string(Field k);
std::optional<Field> parse_field(std::string_view s);

/// Left multiplication by the u-th unit (1, i, j, k) as a real block.
Mat unit_block(Field k, size_t u);
/// Right multiplication by the u-th unit; commutes with every unit_block.
Mat right_unit_block(Field k, size_t u);

/// n x n matrix over K with a single unit entry u at (r, c), realified.
Mat unit_matrix(Field k, size_t n, size_t r, size_t c, size_t u);
/// Realification of a real n x n matrix: m tensor identity.
Mat realify(const Mat& m, Field k);

/// Complex structure (multiplication by i) on realified C^n.
Mat complex_structure(size_t n);
/// Right multiplications by i, j, k on realified H^n; a matrix is
/// quaternion-linear iff it commutes with all three.
std::vector<Mat> quaternion_right_structure(size_t n);

/// Complex conjugation on realified C^n (identity on real parts, -1 on imaginary).
Mat complex_conjugation(size_t n);

}  // namespace cartan
