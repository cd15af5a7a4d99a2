#include <gtest/gtest.h>

#include "cartan/classical.hpp"
#include "cartan/representation.hpp"

using namespace cartan;

namespace {

const Mat E{{0, 1}, {0, 0}}, H{{1, 0}, {0, -1}}, F{{0, 0}, {1, 0}};
const Mat J2{{0, -1}, {1, 0}};

AlgebraPtr sl2() { return std::make_shared<MatrixLieAlgebra>(MatrixLieAlgebra::make({E, H, F}, "sl(2,R)")); }

AlgebraPtr so3() {
  return std::make_shared<MatrixLieAlgebra>(MatrixLieAlgebra::make(
      {Mat::unit(3, 0, 1) - Mat::unit(3, 1, 0), Mat::unit(3, 0, 2) - Mat::unit(3, 2, 0),
       Mat::unit(3, 1, 2) - Mat::unit(3, 2, 1)},
      "so(3)"));
}

AlgebraPtr so2() { return std::make_shared<MatrixLieAlgebra>(MatrixLieAlgebra::make({J2}, "so(2)")); }

}  // namespace

TEST(MakeAlgebra, Sl2HasDimensionThree) {
  const AlgebraPtr a = sl2();
  EXPECT_EQ(a->dim(), 3u);
  EXPECT_EQ(a->ambient_size(), 2u);
  EXPECT_FALSE(a->jacobi_violation());
}

TEST(MakeAlgebra, SingleElementIsAbelian) {
  const auto a = MatrixLieAlgebra::make({E}, "line");
  EXPECT_EQ(a.dim(), 1u);
  EXPECT_TRUE(a.killing_form().is_zero());
  EXPECT_FALSE(a.is_semisimple());
}

TEST(MakeAlgebra, EAndFNotClosed) {
  try {
    MatrixLieAlgebra::make({E, F}, "bad");
    FAIL() << "expected an error";
  } catch (const InvariantError& e) {
    EXPECT_NE(std::string(e.what()).find("not closed under bracket"), std::string::npos);
  }
}

TEST(MakeAlgebra, DependentBasisRejected) {
  try {
    MatrixLieAlgebra::make({E, E * Rational(2)}, "dep");
    FAIL() << "expected an error";
  } catch (const InvariantError& e) {
    EXPECT_NE(std::string(e.what()).find("dependent basis"), std::string::npos);
  }
}

TEST(MakeAlgebra, RaggedInputRejected) {
  EXPECT_THROW(MatrixLieAlgebra::make({}, "empty"), InputError);
  EXPECT_THROW(MatrixLieAlgebra::make({E, Mat::identity(3)}, "ragged"), InputError);
}

TEST(StructureConstants, AntisymmetricForSl2) {
  const AlgebraPtr a = sl2();
  const auto c = a->structure_constants();
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      for (size_t k = 0; k < 3; ++k) EXPECT_EQ(c[i][j][k], -c[j][i][k]);
  // [E, F] = H
  EXPECT_EQ(c[0][2][1], Rational(1));
  // [H, E] = 2E
  EXPECT_EQ(c[1][0][0], Rational(2));
}

TEST(Killing, Sl2HandDerivedGram) {
  // ad E, ad H, ad F in the basis (E, H, F), traced by hand.
  const Mat b = sl2()->killing_form();
  EXPECT_EQ(b, (Mat{{0, 0, 4}, {0, 8, 0}, {4, 0, 0}}));
  EXPECT_EQ(determinant(b), Rational(-128));
  EXPECT_TRUE(sl2()->is_semisimple());
}

TEST(Killing, So3IsMinusTwoIdentity) {
  EXPECT_EQ(so3()->killing_form(), Mat::identity(3) * Rational(-2));
  EXPECT_EQ(symmetric_signature(so3()->killing_form()), (Signature{0, 3, 0}));
}

TEST(Killing, So22IsSemisimple) {
  const auto a = MatrixLieAlgebra::make(so_basis(indefinite_identity(2, 2)), "so(2,2)");
  EXPECT_EQ(a.dim(), 6u);
  EXPECT_EQ(rank(a.killing_form()), 6u);
  EXPECT_TRUE(a.is_semisimple());
}

TEST(Killing, InvarianceOnClassicalAlgebras) {
  for (const auto& basis : {sl_basis(3, Field::R), so_basis(indefinite_identity(2, 1)), sp_basis(standard_symplectic(2)),
                            su_basis(2, 1)}) {
    const auto a = MatrixLieAlgebra::make(basis, "x");
    EXPECT_FALSE(a.jacobi_violation());
    const Mat b = a.killing_form();
    EXPECT_TRUE(b.is_symmetric());
    for (size_t z = 0; z < a.dim(); ++z) {
      const Mat adz = a.ad(z);
      // B([Z,X],Y) + B(X,[Z,Y]) = 0  <=>  ad(Z)^T B + B ad(Z) = 0
      EXPECT_TRUE((adz.transpose() * b + b * adz).is_zero());
    }
  }
}

TEST(Representation, RejectsNonHomomorphism) {
  const AlgebraPtr a = sl2();
  EXPECT_THROW(Representation::make(a, {E, E, F}), InvariantError);
}

TEST(Commutant, AdjointSl2IsR) {
  Rng rng(1);
  const auto c = commutant(adjoint_representation(sl2()), rng);
  EXPECT_EQ(c.basis.size(), 1u);
  EXPECT_EQ(c.label, CommutantLabel::R);
}

TEST(Commutant, RotationOnPlaneIsC) {
  Rng rng(1);
  const auto c = commutant(Representation::make(so2(), {J2}), rng);
  EXPECT_EQ(c.basis.size(), 2u);
  EXPECT_EQ(c.label, CommutantLabel::C);
}

TEST(Commutant, TwoInequivalentIrreduciblesIsRxR) {
  Rng rng(2);
  const AlgebraPtr a = sl2();
  std::vector<Mat> act;
  for (size_t i = 0; i < 3; ++i) act.push_back(direct_sum((*a)[i], a->ad(i)));
  const auto c = commutant(Representation::make(a, act), rng);
  EXPECT_EQ(c.basis.size(), 2u);
  EXPECT_EQ(c.label, CommutantLabel::RxR);
}

TEST(Commutant, DifferentRotationSpeedsIsCxC) {
  Rng rng(2);
  const auto c = commutant(Representation::make(so2(), {direct_sum(J2, J2 * Rational(2))}), rng);
  EXPECT_EQ(c.basis.size(), 4u);
  EXPECT_EQ(c.label, CommutantLabel::CxC);
}

TEST(Commutant, QuaternionUnitsGiveH) {
  // sp(1) acting on H by left multiplication; the commutant is right multiplication.
  Rng rng(4);
  std::vector<Mat> units;
  for (size_t u = 1; u < 4; ++u) units.push_back(unit_block(Field::H, u));
  const auto a = std::make_shared<MatrixLieAlgebra>(MatrixLieAlgebra::make(units, "sp(1)"));
  const auto c = commutant(Representation::make(a, units), rng);
  EXPECT_EQ(c.basis.size(), 4u);
  EXPECT_FALSE(c.commutative);
  EXPECT_EQ(c.label, CommutantLabel::H);
}

TEST(Commutant, ZeroActionOnThreeSpaceIsOther) {
  Rng rng(4);
  const auto a = std::make_shared<MatrixLieAlgebra>(MatrixLieAlgebra::make({E}, "line"));
  const auto c = commutant(Representation::make(a, {Mat(3, 3)}), rng);
  EXPECT_EQ(c.basis.size(), 9u);
  EXPECT_EQ(c.label, CommutantLabel::OTHER);
}

TEST(Commutant, ElementsCommuteAndContainIdentity) {
  Rng rng(9);
  const AlgebraPtr a = sl2();
  std::vector<Mat> act;
  for (size_t i = 0; i < 3; ++i) act.push_back(direct_sum((*a)[i], (*a)[i]));
  const Representation rep = Representation::make(a, act);
  const auto c = commutant(rep, rng);
  EXPECT_EQ(c.basis.size(), 4u);  // M_2(R) tensor identity
  for (const Mat& t : c.basis)
    for (const Mat& x : rep.action) EXPECT_TRUE(commutator(t, x).is_zero());
  EXPECT_TRUE(coordinates_in_span(c.basis, Mat::identity(4)).has_value());
}

TEST(InvariantForms, AdjointSl2SpannedByKilling) {
  const AlgebraPtr a = sl2();
  const auto forms = invariant_bilinear_forms(adjoint_representation(a), FormSymmetry::Symmetric);
  ASSERT_EQ(forms.size(), 1u);
  EXPECT_TRUE(coordinates_in_span(forms, a->killing_form()).has_value());
}

TEST(InvariantForms, TrivialActionAllSymmetricForms) {
  const auto a = std::make_shared<MatrixLieAlgebra>(MatrixLieAlgebra::make({E}, "line"));
  EXPECT_EQ(invariant_bilinear_forms(Representation::make(a, {Mat(2, 2)}), FormSymmetry::Symmetric).size(), 3u);
  EXPECT_EQ(invariant_bilinear_forms(Representation::make(a, {Mat(2, 2)}), FormSymmetry::Antisymmetric).size(), 1u);
}

TEST(InvariantForms, StandardSl2RepIsSymplectic) {
  const AlgebraPtr a = sl2();
  const Representation std_rep = Representation::make(a, {E, H, F});
  const auto anti = invariant_bilinear_forms(std_rep, FormSymmetry::Antisymmetric);
  ASSERT_EQ(anti.size(), 1u);
  EXPECT_TRUE(anti[0].is_antisymmetric());
  EXPECT_TRUE(invariant_bilinear_forms(std_rep, FormSymmetry::Symmetric).empty());
}

TEST(ComplexStructures, RotationGivesPlusMinusJ) {
  Rng rng(1);
  const auto cs = invariant_complex_structures(Representation::make(so2(), {J2}), rng);
  ASSERT_EQ(cs.status, SearchStatus::Found);
  ASSERT_EQ(cs.solutions.size(), 2u);
  EXPECT_EQ(cs.solutions[0], -cs.solutions[1]);
  for (const Mat& j : cs.solutions) {
    EXPECT_TRUE((j * j + Mat::identity(2)).is_zero());
    EXPECT_TRUE(j == J2 || j == -J2);
  }
}

TEST(ComplexStructures, AdjointSl2HasNone) {
  Rng rng(1);
  const auto cs = invariant_complex_structures(adjoint_representation(sl2()), rng);
  EXPECT_EQ(cs.status, SearchStatus::None);
  EXPECT_TRUE(cs.solutions.empty());
}

TEST(ComplexStructures, OddDimensionHasNone) {
  Rng rng(1);
  const auto a = std::make_shared<MatrixLieAlgebra>(MatrixLieAlgebra::make({Mat{{1}}}, "gl(1)"));
  const auto cs = invariant_complex_structures(Representation::make(a, {Mat(1, 1)}), rng);
  EXPECT_EQ(cs.status, SearchStatus::None);
}

TEST(ComplexStructures, CxCSolutionsClosedUnderNegation) {
  Rng rng(6);
  const auto cs = invariant_complex_structures(Representation::make(so2(), {direct_sum(J2, J2 * Rational(3))}), rng);
  ASSERT_EQ(cs.status, SearchStatus::Found);
  EXPECT_EQ(cs.solutions.size(), 4u);
  for (const Mat& j : cs.solutions) {
    EXPECT_TRUE((j * j + Mat::identity(4)).is_zero());
    bool has_neg = false;
    for (const Mat& k : cs.solutions) has_neg = has_neg || k == -j;
    EXPECT_TRUE(has_neg);
  }
}

TEST(SimpleIdeals, So4SplitsIntoTwo) {
  Rng rng(8);
  const auto a = MatrixLieAlgebra::make(so_basis(Mat::identity(4)), "so(4)");
  const auto ideals = simple_ideals(a, rng);
  ASSERT_EQ(ideals.size(), 2u);
  EXPECT_EQ(ideals[0].cols(), 3u);
  EXPECT_EQ(ideals[1].cols(), 3u);
}
