#include "cartan/realify.hpp"

namespace cartan {

size_t field_dim(Field k) {
  switch (k) {
    case Field::R: return 1;
    case Field::C: return 2;
    case Field::H: return 4;
  }
  return 1;
}

std::string to_string(Field k) {
  switch (k) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
  }
  return "R";
}

std::optional<Field> parse_field(std::string_view s) {
  if (s == "R") return Field::R;
  if (s == "C") return Field::C;
  if (s == "H") return Field::H;
  return std::nullopt;
}

Mat unit_block(Field k, size_t u) {
  if (u >= field_dim(k)) throw InputError("unit index out of range for field " + to_string(k));
  switch (k) {
    case Field::R: return Mat{{1}};
    case Field::C: return u == 0 ? Mat{{1, 0}, {0, 1}} : Mat{{0, -1}, {1, 0}};
    case Field::H:
      // Columns are the images of 1, i, j, k under q -> u q.
      switch (u) {
        case 0: return Mat::identity(4);
        case 1: return Mat{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
        case 2: return Mat{{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}};
        default: return Mat{{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
      }
  }
  return Mat{{1}};
}

Mat right_unit_block(Field k, size_t u) {
  if (k != Field::H) return unit_block(k, u);
  // q -> q u.
  switch (u) {
    case 0: return Mat::identity(4);
    case 1: return Mat{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
    case 2: return Mat{{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
    default: return Mat{{0, 0, 0, -1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}};
  }
}

Mat unit_matrix(Field k, size_t n, size_t r, size_t c, size_t u) {
  const size_t d = field_dim(k);
  Mat m(n * d, n * d);
  m.set_block(r * d, c * d, unit_block(k, u));
  return m;
}

Mat realify(const Mat& m, Field k) { return kronecker(m, Mat::identity(field_dim(k))); }

Mat complex_structure(size_t n) { return kronecker(Mat::identity(n), unit_block(Field::C, 1)); }

std::vector<Mat> quaternion_right_structure(size_t n) {
  std::vector<Mat> out;
  for (size_t u = 1; u < 4; ++u)
    out.push_back(kronecker(Mat::identity(n), right_unit_block(Field::H, u)));
  return out;
}

Mat complex_conjugation(size_t n) { return kronecker(Mat::identity(n), Mat{{1, 0}, {0, -1}}); }

}  // namespace cartan
