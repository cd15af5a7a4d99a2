#include <gtest/gtest.h>

#include "cartan/classifier.hpp"

using namespace cartan;

namespace {

SymmetricPair group_sl2() { return build_pair("group_type", {{"h", "sl_R"}, {"n", "2"}}); }
SymmetricPair group_slc() { return build_pair("group_type", {{"h", "sl_C"}, {"n", "2"}}); }
SymmetricPair sphere(size_t n) {
  return build_pair("so_block", {{"a", "1"}, {"b", std::to_string(n)}, {"c", "0"}, {"d", "0"}});
}
GradedAlgebra projective(size_t n) { return build_graded(Family::projective, {{"n", std::to_string(n)}}); }

Extension plain_projective(const SymmetricPair& p, const Rational& s = 1) {
  return extension_from_frame(p, projective(p.m_dim()), Mat::identity(p.m_dim()) * s);
}

// Sphere S^n inside RP^n: k = so(n+1) sits in sl(n+1) with h in the lower block.
Extension sphere_inclusion(size_t n) {
  return inclusion_extension(sphere(n), projective(n), [](const Mat& x) { return x; });
}

// kappa evaluated on arbitrary m vectors by bilinearity.
Vec kappa_on(const Curvature& c, const Vec& u, const Vec& v) {
  Vec out(c.degree.size());
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (!is_zero(u[i]) && !is_zero(v[j])) out = add(out, scaled(c.at(i, j), u[i] * v[j]));
  return out;
}

// [Z, X_i] in m coordinates for Z = h basis element z.
Vec bracket_into_m(const SymmetricPair& p, size_t z, size_t i) {
  Vec x(p.dim());
  x[p.h_dim + i] = 1;
  Vec zz(p.dim());
  zz[z] = 1;
  const Vec b = p.k->bracket(zz, x);
  return Vec(b.begin() + p.h_dim, b.end());
}

}  // namespace

TEST(Validate, InclusionRowPasses) {
  const SymmetricPair p = build_pair("so11_block", {{"k", "1"}, {"l", "2"}});
  const Extension e = inclusion_row_extension(Family::para_quaternionic, p);
  EXPECT_EQ(e.target.g().dim(), 24u);  // sl(5)
  EXPECT_TRUE(validate(e).ok());
}

TEST(Validate, G0ComponentOnMFails) {
  Extension e = plain_projective(group_sl2());
  e.alpha(e.target.zero[0], e.pair.h_dim) += 1;
  const ValidationReport r = validate(e);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.at(kAxiomNoG0).pass);
  EXPECT_FALSE(r.at(kAxiomNoG0).witnesses.empty());
}

TEST(Validate, ZeroFrameColumnFails) {
  Extension e = plain_projective(group_sl2());
  for (size_t r : e.target.minus_one) e.alpha(r, e.pair.h_dim + 1) = 0;
  EXPECT_FALSE(validate(e).at(kAxiomFrame).pass);
}

TEST(Validate, DimensionMismatchIsStructural) {
  const SymmetricPair p = group_sl2();  // dim m = 3
  const GradedAlgebra g = projective(2);
  EXPECT_THROW(validate(make_extension(p, g, Mat(g.g().dim(), p.dim()))), StructuralError);
  EXPECT_THROW(extension_from_frame(p, g, Mat::identity(3)), StructuralError);
}

TEST(Validate, AlphaShapeChecked) {
  EXPECT_THROW(make_extension(group_sl2(), projective(3), Mat(2, 2)), InputError);
}

TEST(CurvatureTest, HomomorphismIsFlat) {
  for (size_t n = 2; n <= 4; ++n) {
    const Extension e = sphere_inclusion(n);
    EXPECT_TRUE(validate(e).ok());
    EXPECT_TRUE(is_flat(e));
    EXPECT_TRUE(torsion_free(e));
  }
}

TEST(CurvatureTest, GroupSl2WithoutB2) {
  const Curvature c = curvature(plain_projective(group_sl2()));
  EXPECT_GT(c.nonzero_entries(0), 0u);
  EXPECT_EQ(c.nonzero_entries(-1), 0u);
  EXPECT_TRUE(c.torsion_free());
  EXPECT_FALSE(c.flat());
}

TEST(CurvatureTest, Antisymmetric) {
  const Curvature c = curvature(plain_projective(group_sl2()));
  for (size_t i = 0; i < 3; ++i) {
    EXPECT_TRUE(is_zero(c.at(i, i)));
    for (size_t j = 0; j < 3; ++j) EXPECT_EQ(c.at(i, j), scaled(c.at(j, i), -1));
  }
}

TEST(CurvatureTest, HEquivariance) {
  // kappa([Z,X],Y) + kappa(X,[Z,Y]) = [alpha Z, kappa(X,Y)] for Z in h.
  Rng rng(21);
  for (const SymmetricPair& p : {group_sl2(), build_pair("sl2_so11", {})}) {
    const Extension e = solve_projective_b2(plain_projective(p)).normalized;
    const Curvature c = curvature(e);
    for (size_t z = 0; z < p.h_dim; ++z)
      for (size_t i = 0; i < p.m_dim(); ++i)
        for (size_t j = 0; j < p.m_dim(); ++j) {
          Vec ei(p.m_dim()), ej(p.m_dim());
          ei[i] = 1;
          ej[j] = 1;
          const Vec lhs = add(kappa_on(c, bracket_into_m(p, z, i), ej), kappa_on(c, ei, bracket_into_m(p, z, j)));
          const Vec rhs = e.target.g().bracket(e.image(z), c.at(i, j));
          EXPECT_EQ(lhs, rhs);
        }
  }
}

TEST(CurvatureTest, FrameRescalingActsByGrade) {
  // Scaling the frame by s and b2 by 1/s^2 is Ad of the grading torus, so
  // kappa picks up s on g_-1, 1 on g_0 and 1/s on g_1.
  const SymmetricPair p = group_sl2();
  const B2Solution base = solve_projective_b2(plain_projective(p));
  const Curvature c0 = curvature(base.normalized);
  for (const Rational& s : {Rational(2), Rational(-1, 3)}) {
    const Extension e = extension_from_frame(p, base.normalized.target, Mat::identity(3) * s, base.b2 * (1 / (s * s)));
    const Curvature c1 = curvature(e);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = i + 1; j < 3; ++j) {
        Vec expect = c0.at(i, j);
        for (size_t r = 0; r < expect.size(); ++r) {
          if (c0.degree[r] == 0) expect[r] *= s;
          if (c0.degree[r] == 2) expect[r] /= s;
        }
        EXPECT_EQ(c1.at(i, j), expect);
      }
    // the normalizing b2 scales by 1/s^2
    EXPECT_EQ(solve_projective_b2(plain_projective(p, s)).b2, base.b2 * (1 / (s * s)));
  }
}

TEST(Holomorphy, HProjectiveWitnessOrientation) {
  Rng rng(3);
  const ExistenceVerdict v = decide_h_projective(group_slc(), rng);
  ASSERT_EQ(v.verdict, Verdict::Exists);
  ASSERT_TRUE(v.witness);
  ASSERT_EQ(v.complex_structures.size(), 2u);
  const auto jg = target_complex_structure(v.witness->target);
  ASSERT_TRUE(jg);
  const Mat& j = v.complex_structures[0];
  EXPECT_TRUE(is_holomorphic(*v.witness, j, *jg).holomorphic);
  EXPECT_FALSE(is_holomorphic(*v.witness, -j, *jg).holomorphic);

  Extension broken = *v.witness;
  broken.alpha(broken.target.minus_one[0], broken.pair.h_dim) += 1;
  EXPECT_FALSE(is_holomorphic(broken, j, *jg).holomorphic);
}

TEST(Holomorphy, ConjugateIsAntiHolomorphicTwin) {
  Rng rng(3);
  const ExistenceVerdict v = decide_h_projective(group_slc(), rng);
  ASSERT_TRUE(v.witness);
  const Mat& j = v.complex_structures[0];
  const Mat jg = *target_complex_structure(v.witness->target);
  const Holomorphy h = is_holomorphic(*v.witness, j, jg);
  ASSERT_TRUE(h.conjugate);
  EXPECT_TRUE(validate(*h.conjugate).ok());
  EXPECT_TRUE(is_holomorphic(*h.conjugate, -j, jg).holomorphic);
  EXPECT_FALSE(is_holomorphic(*h.conjugate, j, jg).holomorphic);
}

TEST(Holomorphy, RequiresComplexStructures) {
  Rng rng(3);
  const ExistenceVerdict v = decide_h_projective(group_slc(), rng);
  ASSERT_TRUE(v.witness);
  const Mat jg = *target_complex_structure(v.witness->target);
  EXPECT_THROW(is_holomorphic(*v.witness, Mat::identity(v.witness->pair.dim()), jg), InputError);
  EXPECT_THROW(is_holomorphic(*v.witness, v.complex_structures[0], Mat::identity(jg.rows())), InputError);
}

TEST(SolveB2, FlatInclusionKeepsItsB2) {
  // kappa = 0 already, so the unique normal b2 is the one alpha carries.
  for (size_t n = 2; n <= 4; ++n) {
    const Extension e = sphere_inclusion(n);
    const B2Solution s = solve_projective_b2(e);
    EXPECT_EQ(s.b2, e.b2);
    EXPECT_TRUE(s.residual_zero);
    EXPECT_TRUE(is_flat(s.normalized));
  }
}

TEST(SolveB2, ZeroRhsGivesZero) {
  const B2System sys = projective_b2_system(plain_projective(group_sl2()));
  const SolutionSet s = solve_linear(sys.matrix, Mat(sys.matrix.rows(), 1));
  ASSERT_TRUE(s.consistent);
  EXPECT_TRUE(s.particular.is_zero());
  EXPECT_EQ(s.kernel.cols(), 0u);
}

TEST(SolveB2, GroupSl2UniqueNonzero) {
  const B2Solution s = solve_projective_b2(plain_projective(group_sl2()));
  EXPECT_FALSE(s.b2.is_zero());
  EXPECT_EQ(s.homogeneous_kernel_dim, 0u);
  EXPECT_TRUE(s.residual_zero);
  EXPECT_TRUE(codifferential(s.normalized).is_zero());
  EXPECT_TRUE(torsion_free(s.normalized));
  EXPECT_TRUE(validate(s.normalized).ok());
}

TEST(SolveB2, HomogeneousKernelTrivialForSmallRanks) {
  for (size_t n = 2; n <= 6; ++n) {
    const Extension e = sphere_inclusion(n);
    const B2System sys = projective_b2_system(e);
    EXPECT_EQ(sys.unknowns.size(), n * n);
    EXPECT_EQ(rank(sys.matrix), n * n) << "n = " << n;
  }
}

TEST(SolveB2, RankOneUnsupported) {
  // Two-dimensional k = span{H, E} with h = span{H}: dim m = 1.
  const Mat h{{1, 0}, {0, -1}}, x{{0, 1}, {0, 0}};
  const SymmetricPair p = make_pair_split({h}, {x}, std::nullopt, "aff(1)", "custom", {});
  const GradedAlgebra g = projective(1);
  const Extension e = extension_from_frame(p, g, Mat::identity(1));
  EXPECT_THROW(solve_projective_b2(e), UnsupportedError);
}

TEST(SolveB2, NonProjectiveTargetUnsupported) {
  Rng rng(1);
  const ExistenceVerdict v = decide_conformal(build_pair("so_block", {{"a", "1"}, {"b", "1"}, {"c", "1"}, {"d", "1"}}), rng);
  ASSERT_TRUE(v.witness);
  EXPECT_THROW(solve_projective_b2(*v.witness), UnsupportedError);
}

TEST(FramesEquivalent, ReflexiveAndScalar) {
  const Extension a = plain_projective(group_sl2());
  EXPECT_EQ(frames_equivalent(a, a).status, Equivalence::Equivalent);
  const Extension b = plain_projective(group_sl2(), Rational(5, 2));
  EXPECT_EQ(frames_equivalent(a, b).status, Equivalence::Equivalent);
  EXPECT_EQ(frames_equivalent(b, a).status, Equivalence::Equivalent);
}

TEST(FramesEquivalent, ConformalPerFactorScaling) {
  Rng rng(2);
  const SymmetricPair p = direct_sum(build_pair("group_type", {{"h", "so"}, {"p", "3"}, {"q", "0"}}), group_sl2());
  const ExistenceVerdict v = decide_conformal(p, rng);
  ASSERT_EQ(v.verdict, Verdict::Exists);
  ASSERT_TRUE(v.witness);
  const Extension& a = *v.witness;
  const Mat f = a.frame();

  const AdaptedBasis ab = factor_adapted_basis(simple_factors(p, rng));
  ASSERT_EQ(ab.sizes.size(), 2u);
  Vec d;
  for (size_t i = 0; i < ab.sizes[0]; ++i) d.push_back(1);
  for (size_t i = 0; i < ab.sizes[1]; ++i) d.push_back(2);
  const Mat scale = ab.basis * Mat::diagonal(d) * *inverse(ab.basis);

  const Extension twisted = extension_from_frame(p, a.target, f * scale);
  EXPECT_TRUE(validate(twisted).ok());
  EXPECT_EQ(frames_equivalent(a, twisted).status, Equivalence::NotEquivalent);
  EXPECT_EQ(frames_equivalent(twisted, a).status, Equivalence::NotEquivalent);

  const Extension doubled = extension_from_frame(p, a.target, f * Rational(2));
  EXPECT_EQ(frames_equivalent(a, doubled).status, Equivalence::Equivalent);
}

TEST(FramesEquivalent, MismatchedPairsRejected) {
  const Extension a = plain_projective(group_sl2());
  const Extension b = plain_projective(build_pair("group_type", {{"h", "so"}, {"p", "3"}, {"q", "0"}}));
  EXPECT_THROW(frames_equivalent(a, b), InputError);
}

TEST(FramesEquivalent, SingularFrameUndecided) {
  const Extension a = plain_projective(group_sl2());
  Extension b = a;
  for (size_t r : b.target.minus_one) b.alpha(r, b.pair.h_dim) = 0;
  EXPECT_EQ(frames_equivalent(a, b).status, Equivalence::Undecided);
}
