#include <gtest/gtest.h>

#include "cartan/classifier.hpp"

using namespace cartan;

namespace {

SymmetricPair group(const Params& p) { return build_pair("group_type", p); }
SymmetricPair g_sl2() { return group({{"h", "sl_R"}, {"n", "2"}}); }
SymmetricPair g_slc() { return group({{"h", "sl_C"}, {"n", "2"}}); }
SymmetricPair g_so3() { return group({{"h", "so"}, {"p", "3"}, {"q", "0"}}); }
SymmetricPair so22() { return build_pair("so_block", {{"a", "1"}, {"b", "1"}, {"c", "1"}, {"d", "1"}}); }

bool has_signature(const ConformalMenu& m, size_t p, size_t q) {
  for (const Signature& s : m.signatures)
    if (s.positive == p && s.negative == q) return true;
  return false;
}

const Certificate* find_cert(const ExistenceVerdict& v, const std::string& name) {
  for (const auto& c : v.certificates)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(Projective, GroupSl2Exists) {
  const ExistenceVerdict v = decide_projective(g_sl2());
  EXPECT_EQ(v.verdict, Verdict::Exists);
  ASSERT_TRUE(v.witness);
  EXPECT_TRUE(validate(*v.witness).ok());
  EXPECT_TRUE(torsion_free(*v.witness));
  EXPECT_TRUE(codifferential(*v.witness).is_zero());
  EXPECT_TRUE(v.certificates_pass());
  EXPECT_EQ(v.equivalence, "unique");
  ASSERT_NE(find_cert(v, "b2_unique"), nullptr);
}

TEST(Projective, EveryCatalogPairExists) {
  for (const Params& p : {Params{{"h", "so"}, {"p", "3"}, {"q", "0"}}, Params{{"h", "sl_R"}, {"n", "3"}}}) {
    const ExistenceVerdict v = decide_projective(group(p));
    EXPECT_EQ(v.verdict, Verdict::Exists);
    EXPECT_TRUE(v.certificates_pass());
  }
  EXPECT_EQ(decide_projective(so22()).verdict, Verdict::Exists);
}

TEST(Projective, NonSemisimpleUndecided) {
  const Mat h{{1, 0}, {0, -1}}, x{{0, 1}, {0, 0}};
  const SymmetricPair p = make_pair_split({h}, {x}, std::nullopt, "aff(1)", "custom", {});
  EXPECT_EQ(decide_projective(p).verdict, Verdict::Undecided);
}

TEST(Conformal, So3TimesSl2Menu) {
  Rng rng(1);
  const ExistenceVerdict v = decide_conformal(direct_sum(g_so3(), g_sl2()), rng);
  EXPECT_EQ(v.verdict, Verdict::Exists);
  ASSERT_TRUE(v.conformal);
  EXPECT_EQ(v.conformal->form_space_dim, 2u);
  EXPECT_EQ(v.conformal->real_factors, 2u);
  EXPECT_TRUE(v.conformal->cross_blocks_zero);
  EXPECT_TRUE(v.conformal->killing_in_space);
  // so(3) contributes (0,3) or (3,0); sl(2) contributes (2,1) or (1,2).
  EXPECT_TRUE(has_signature(*v.conformal, 2, 4));
  EXPECT_TRUE(has_signature(*v.conformal, 5, 1));
  EXPECT_TRUE(has_signature(*v.conformal, 1, 5));
  EXPECT_TRUE(has_signature(*v.conformal, 4, 2));
  EXPECT_EQ(v.conformal->signatures.size(), 4u);
  EXPECT_TRUE(v.conformal->signatures_match_direct);
  ASSERT_TRUE(v.witness);
  EXPECT_TRUE(torsion_free(*v.witness));
  EXPECT_TRUE(v.certificates_pass());
}

TEST(Conformal, ComplexFactorGivesCircleParameter) {
  Rng rng(1);
  const ExistenceVerdict v = decide_conformal(g_slc(), rng);
  EXPECT_EQ(v.verdict, Verdict::Exists);
  ASSERT_TRUE(v.conformal);
  EXPECT_EQ(v.conformal->form_space_dim, 2u);
  EXPECT_EQ(v.conformal->complex_factors, 1u);
  EXPECT_TRUE(has_signature(*v.conformal, 3, 3));
  EXPECT_NE(v.equivalence.find("1 circle parameter"), std::string::npos);
}

TEST(Conformal, WitnessFormIsRestrictedKilling) {
  Rng rng(2);
  const SymmetricPair p = so22();
  const ExistenceVerdict v = decide_conformal(p, rng);
  ASSERT_TRUE(v.witness);
  const auto gram = conformal_gram(v.witness->target);
  ASSERT_TRUE(gram);
  // Pulled back through the frame the target form is a multiple of B|m.
  const Mat f = v.witness->frame();
  const Mat pulled = f.transpose() * *gram * f;
  const Mat b = restricted_killing(p).gram;
  const std::vector<Vec> cols{flatten(pulled), flatten(b)};
  EXPECT_EQ(rank(Mat::from_columns(b.rows() * b.cols(), cols)), 1u);
}

TEST(HProjective, OddDimensionNotExists) {
  Rng rng(1);
  const ExistenceVerdict v = decide_h_projective(g_sl2(), rng);
  EXPECT_EQ(v.verdict, Verdict::NotExists);
  EXPECT_FALSE(v.witness);
}

TEST(HProjective, RealFormNotExists) {
  Rng rng(1);
  EXPECT_EQ(decide_h_projective(group({{"h", "sl_R"}, {"n", "3"}}), rng).verdict, Verdict::NotExists);
  EXPECT_EQ(decide_h_projective(so22(), rng).verdict, Verdict::NotExists);
  EXPECT_EQ(decide_h_projective(build_pair("sl2_so11", {}), rng).verdict, Verdict::NotExists);
}

TEST(HProjective, ComplexGroupTypeHasConjugatePair) {
  Rng rng(1);
  const ExistenceVerdict v = decide_h_projective(g_slc(), rng);
  ASSERT_EQ(v.verdict, Verdict::Exists);
  ASSERT_TRUE(v.witness);
  ASSERT_EQ(v.alternatives.size(), 1u);
  ASSERT_EQ(v.complex_structures.size(), 2u);
  EXPECT_EQ(v.complex_structures[0], -v.complex_structures[1]);
  EXPECT_TRUE(v.certificates_pass());
  ASSERT_NE(find_cert(v, "conjugate_not_equivalent"), nullptr);
  EXPECT_NE(frames_equivalent(*v.witness, v.alternatives[0]).status, Equivalence::Equivalent);
}

TEST(FamilyRows, QuaternionicCertificates) {
  Rng rng(4);
  const ExistenceVerdict q = verify_family_row(Family::quaternionic, build_pair("sp1_sp", {{"p", "1"}, {"q", "1"}}), rng);
  EXPECT_EQ(q.verdict, Verdict::Exists);
  EXPECT_TRUE(q.certificates_pass());
  ASSERT_NE(find_cert(q, "quaternion_relations"), nullptr);

  const ExistenceVerdict s =
      verify_family_row(Family::para_quaternionic, build_pair("sp_block", {{"p", "1"}, {"q", "1"}}), rng);
  EXPECT_EQ(s.verdict, Verdict::Exists);
  ASSERT_NE(find_cert(s, "split_quaternion_relations"), nullptr);
  EXPECT_TRUE(s.certificates_pass());
}

TEST(FamilyRows, QuaternionUnitsSatisfyRelations) {
  Rng rng(4);
  const QuaternionCertificate c = quaternion_certificate(build_pair("sp1_sp", {{"p", "1"}, {"q", "0"}}), false, rng);
  ASSERT_TRUE(c.found);
  ASSERT_EQ(c.units.size(), 3u);
  const Mat id = Mat::identity(c.units[0].rows());
  if (c.normalized) {
    for (const Mat& u : c.units) EXPECT_EQ(u * u, -id);
    EXPECT_EQ(c.units[0] * c.units[1], c.units[2]);
  }
  EXPECT_EQ(c.units[0] * c.units[1], -(c.units[1] * c.units[0]));
}

TEST(FamilyRows, FlatWitnessesAcrossFamilies) {
  Rng rng(5);
  const std::vector<std::pair<Family, SymmetricPair>> rows{
      {Family::grassmannian, so22()},
      {Family::lagrangean, group({{"h", "sp"}, {"n", "1"}})},
      {Family::spinorial, group({{"h", "so"}, {"p", "2"}, {"q", "1"}})},
      {Family::para_quaternionic, build_pair("so11_block", {{"k", "1"}, {"l", "2"}})},
      {Family::su_pp, build_pair("so_complex", {{"n", "2"}})},
  };
  for (const auto& [f, p] : rows) {
    const ExistenceVerdict v = verify_family_row(f, p, rng);
    EXPECT_EQ(v.verdict, Verdict::Exists) << to_string(f) << " " << p.name() << ": " << v.reason;
    ASSERT_TRUE(v.witness);
    EXPECT_TRUE(is_flat(*v.witness));
  }
}

TEST(FamilyRows, UnsupportedRowIsUndecided) {
  Rng rng(5);
  const ExistenceVerdict v = verify_family_row(Family::lagrangean, g_so3(), rng);
  EXPECT_EQ(v.verdict, Verdict::Undecided);
}

TEST(Classify, ComplexConformal) {
  Rng rng(1);
  EXPECT_EQ(classify(g_sl2(), Family::complex_conformal, rng).verdict, Verdict::NotExists);
  EXPECT_EQ(classify(g_slc(), Family::complex_conformal, rng).verdict, Verdict::Undecided);
}

TEST(Classify, DispatchesAndCarriesClaim) {
  Rng rng(1);
  const ExistenceVerdict v = classify(g_sl2(), Family::projective, rng);
  EXPECT_EQ(v.family, Family::projective);
  EXPECT_EQ(v.verdict, Verdict::Exists);
  EXPECT_FALSE(v.claim.empty());
  EXPECT_EQ(to_string(Verdict::Undecided), "UNDECIDED");
}

TEST(Centralizer, Labels) {
  Rng rng(3);
  const CentralizerReport a = centralizer_report(g_sl2(), rng);
  EXPECT_EQ(a.whole.label, CommutantLabel::R);
  EXPECT_TRUE(a.ok());
  const CentralizerReport b = centralizer_report(g_slc(), rng);
  EXPECT_EQ(b.whole.label, CommutantLabel::C);
  EXPECT_TRUE(b.ok());
  const CentralizerReport c = centralizer_report(build_pair("sl2_so11", {}), rng);
  EXPECT_EQ(c.whole.label, CommutantLabel::RxR);
  EXPECT_TRUE(c.ok());
}

TEST(Centralizer, So22HandledPerFactor) {
  // The whole commutant is 4-dimensional; each (sl(2,R), so(1,1)) factor gives RxR.
  Rng rng(3);
  const CentralizerReport r = centralizer_report(so22(), rng);
  EXPECT_EQ(r.whole.basis.size(), 4u);
  ASSERT_EQ(r.factors.size(), 2u);
  EXPECT_TRUE(r.product_dimension);
  EXPECT_TRUE(r.block_diagonal);
  EXPECT_TRUE(r.labels_allowed);
  for (const auto& f : r.factors) EXPECT_EQ(f.commutant.label, CommutantLabel::RxR);
}

TEST(Centralizer, FactorCommutantsMultiply) {
  Rng rng(3);
  const CentralizerReport r = centralizer_report(direct_sum(g_so3(), g_sl2()), rng);
  EXPECT_EQ(r.whole.label, CommutantLabel::RxR);
  ASSERT_EQ(r.factors.size(), 2u);
  for (const auto& f : r.factors) EXPECT_EQ(f.commutant.label, CommutantLabel::R);
  EXPECT_TRUE(r.ok());
}
