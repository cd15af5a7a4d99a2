#include <gtest/gtest.h>

#include "cartan/linalg.hpp"

using namespace cartan;

namespace {

Mat random_mat(Rng& rng, size_t r, size_t c, int bound = 4) {
  Mat m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m(i, j) = rng.uniform(-bound, bound);
  return m;
}

Mat random_invertible(Rng& rng, size_t n) {
  for (;;) {
    Mat s = random_mat(rng, n, n);
    if (inverse(s)) return s;
  }
}

}  // namespace

TEST(Rational, CanonicalAfterArithmetic) {
  Rational b(6, -4);
  b.canonicalize();
  EXPECT_EQ(to_string(b), "-3/2");
  EXPECT_GT(b.get_den(), 0);
  EXPECT_EQ(to_string(Rational(3, 2) + Rational(1, 2)), "2");
  EXPECT_EQ(to_string(Rational(1, 2) * Rational(2)), "1");
  EXPECT_EQ(to_string(Rational(1, 3) - Rational(5, 6)), "-1/2");
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
  EXPECT_THROW(parse_rational(""), InputError);
  EXPECT_THROW(parse_rational("1.5"), InputError);
}

TEST(Rational, ExactSquareRoot) {
  Rational r;
  EXPECT_TRUE(rational_sqrt(Rational(9, 4), r));
  EXPECT_EQ(r, Rational(3, 2));
  EXPECT_FALSE(rational_sqrt(Rational(2), r));
  EXPECT_FALSE(rational_sqrt(Rational(-1), r));
  EXPECT_TRUE(rational_sqrt(Rational(0), r));
}

TEST(SolveLinear, IdentitySystem) {
  const SolutionSet s = solve_linear(Mat::identity(3), Mat{{1}, {2}, {3}});
  ASSERT_TRUE(s.consistent);
  EXPECT_EQ(s.particular, (Mat{{1}, {2}, {3}}));
  EXPECT_EQ(s.kernel.cols(), 0u);
}

TEST(SolveLinear, ZeroSystemHasFullKernel) {
  const SolutionSet s = solve_linear(Mat(2, 2), Mat(2, 1));
  ASSERT_TRUE(s.consistent);
  EXPECT_TRUE(s.particular.is_zero());
  EXPECT_EQ(s.kernel.cols(), 2u);
}

TEST(SolveLinear, InconsistentByHandRref) {
  // [[1,1],[2,2]] x = (1,3): second row reduces to 0 = 1.
  const SolutionSet s = solve_linear(Mat{{1, 1}, {2, 2}}, Mat{{1}, {3}});
  EXPECT_FALSE(s.consistent);
}

TEST(SolveLinear, ShapeMismatchIsInputError) {
  EXPECT_THROW(solve_linear(Mat(2, 2), Mat(3, 1)), InputError);
}

TEST(SolveLinear, RandomResidualsVanish) {
  Rng rng(11);
  for (int t = 0; t < 25; ++t) {
    const size_t r = rng.uniform(1, 6), c = rng.uniform(1, 6);
    Mat a = random_mat(rng, r, c);
    if (t % 3 == 0 && r > 1)  // force dependent rows
      for (size_t j = 0; j < c; ++j) a(r - 1, j) = a(0, j) * 2;
    const Mat x0 = random_mat(rng, c, 1);
    const Mat b = a * x0;
    const SolutionSet s = solve_linear(a, b);
    ASSERT_TRUE(s.consistent);
    EXPECT_EQ(a * s.particular, b);
    EXPECT_TRUE((a * s.kernel).is_zero());
    EXPECT_EQ(s.kernel.cols(), c - rank(a));
  }
}

TEST(Linalg, InverseAndDeterminant) {
  const Mat a{{2, 1}, {7, 4}};
  EXPECT_EQ(determinant(a), Rational(1));
  EXPECT_EQ(*inverse(a), (Mat{{4, -1}, {-7, 2}}));
  EXPECT_FALSE(inverse(Mat{{1, 2}, {2, 4}}).has_value());
  EXPECT_EQ(determinant(Mat{{1, 2}, {2, 4}}), Rational(0));
}

TEST(Linalg, KernelOfMapOnMatrices) {
  // Matrices commuting with diag(1,2) are the diagonal ones.
  const Mat d{{1, 0}, {0, 2}};
  const auto basis = all_matrices_basis(2);
  const auto ker = kernel_of_map(basis, [&](const Mat& x) { return commutator(x, d); });
  EXPECT_EQ(ker.size(), 2u);
  for (const Mat& k : ker) EXPECT_TRUE(commutator(k, d).is_zero());
}

TEST(Linalg, CoordinatesInSpan) {
  const std::vector<Mat> b{Mat{{1, 0}, {0, 0}}, Mat{{0, 1}, {1, 0}}};
  const auto c = coordinates_in_span(b, Mat{{3, 5}, {5, 0}});
  ASSERT_TRUE(c);
  EXPECT_EQ((*c)[0], Rational(3));
  EXPECT_EQ((*c)[1], Rational(5));
  EXPECT_FALSE(coordinates_in_span(b, Mat{{0, 1}, {0, 0}}));
}

TEST(Signature, DiagonalExample) {
  EXPECT_EQ(symmetric_signature(Mat{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}), (Signature{1, 1, 1}));
}

TEST(Signature, HyperbolicPlaneNeedsOffDiagonalPivot) {
  EXPECT_EQ(symmetric_signature(Mat{{0, 1}, {1, 0}}), (Signature{1, 1, 0}));
}

TEST(Signature, NonSymmetricRejected) { EXPECT_THROW(symmetric_signature(Mat{{0, 1}, {0, 0}}), InputError); }

TEST(Signature, CongruenceTransformDiagonalizes) {
  const Mat g{{0, 1, 2}, {1, 0, 3}, {2, 3, 0}};
  const CongruenceDiagonalization cd = congruence_diagonalize(g);
  EXPECT_EQ(cd.transform.transpose() * g * cd.transform, Mat::diagonal(cd.diagonal));
  EXPECT_TRUE(inverse(cd.transform).has_value());
}

TEST(Signature, InvariantUnderRandomCongruence) {
  Rng rng(5);
  const std::vector<Mat> forms{Mat{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}, Mat{{0, 1}, {1, 0}},
                               Mat{{2, 1, 0, 0}, {1, 2, 0, 0}, {0, 0, 0, 3}, {0, 0, 3, 0}}};
  for (const Mat& g : forms) {
    const Signature ref = symmetric_signature(g);
    EXPECT_EQ(ref.positive + ref.negative + ref.nullity, g.rows());
    for (int t = 0; t < 20; ++t) {
      const Mat s = random_invertible(rng, g.rows());
      EXPECT_EQ(symmetric_signature(s.transpose() * g * s), ref);
    }
  }
}

TEST(Matrix, KroneckerAndBlocks) {
  const Mat a{{1, 2}, {3, 4}};
  const Mat k = kronecker(Mat::identity(2), a);
  EXPECT_EQ(k.block(2, 2, 2, 2), a);
  EXPECT_TRUE(k.block(0, 2, 2, 2).is_zero());
  EXPECT_EQ(unflatten(flatten(a), 2, 2), a);
  EXPECT_EQ(trace_of_product(a, a), (a * a).trace());
}
