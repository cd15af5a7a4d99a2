// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any FAIL.
// All arithmetic is exact, so every numeric tolerance below is zero; the
// pinned constants are the minimum sample sizes.

#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cartan/catalog_run.hpp"

using namespace cartan;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr size_t kMinCommutantPairs = 8;
constexpr size_t kProjectiveMinRank = 2, kProjectiveMaxRank = 6;
constexpr size_t kMinConformalMultiFactor = 3;
constexpr size_t kMinFlatRows = 6, kMinFlatFamilies = 4;
constexpr size_t kEquivalenceSamples = 20;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  std::vector<std::string> failures;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      failures.push_back(what);
      pass = false;
    }
  }
  std::string text() const {
    std::string t = note.str();
    for (size_t i = 0; i < failures.size(); ++i) t += (i == 0 ? "; failed: " : ", ") + failures[i];
    return t;
  }
};

Params row_params(const Json& r) { return r.contains("params") ? params_from_json(r.at("params")) : Params{}; }

SymmetricPair pair_of_row(const Json& r) {
  if (r.contains("summands")) {
    std::optional<SymmetricPair> acc;
    for (const Json& s : r.at("summands")) {
      SymmetricPair q = build_pair(s.at("family").get<std::string>(), row_params(s));
      acc = acc ? direct_sum(*acc, q) : q;
    }
    return *acc;
  }
  return build_pair(r.at("family").get<std::string>(), row_params(r));
}

std::vector<Json> rows_of_kind(const std::string& kind) {
  std::vector<Json> out;
  const Json grid = default_grid();
  for (const Json& r : grid.at("rows"))
    if (r.at("kind").get<std::string>() == kind) out.push_back(r);
  return out;
}

std::vector<SymmetricPair> grid_pairs() {
  std::vector<SymmetricPair> out;
  for (const Json& r : rows_of_kind("pair")) out.push_back(pair_of_row(r));
  return out;
}

SymmetricPair group(const Params& p) { return build_pair("group_type", p); }

// ---------------------------------------------------------------------------

void structural_grid(Outcome& o) {
  size_t graded = 0, pairs = 0;
  for (const Json& r : rows_of_kind("graded")) {
    const GradedAlgebra g = build_graded(*parse_family(r.at("family").get<std::string>()), row_params(r));
    const GradedCheck c = check_graded(g);
    o.require(c.ok(), g.g().name() + ": " + c.detail);
    const Json& e = r.at("expected");
    o.require(e.at("dim_g").get<size_t>() == g.g().dim() && e.at("dim_gm1").get<size_t>() == g.minus_one.size(),
              g.g().name() + " dimensions");
    ++graded;
  }
  for (const SymmetricPair& p : grid_pairs()) {
    const PairCheck c = check_pair(p);
    o.require(c.ok(), p.name() + ": " + c.detail);
    ++pairs;
  }
  o.require(graded > 0 && pairs > 0, "empty grid");
  o.note << graded << " graded algebras, " << pairs << " pairs";
}

void cartan_criterion(Outcome& o) {
  // Killing form of sl(2,R) in the basis (E, H, F), traced by hand.
  const Mat e{{0, 1}, {0, 0}}, h{{1, 0}, {0, -1}}, f{{0, 0}, {1, 0}};
  const Mat b = MatrixLieAlgebra::make({e, h, f}, "sl(2,R)").killing_form();
  o.require(b == (Mat{{0, 0, 4}, {0, 8, 0}, {4, 0, 0}}) && determinant(b) == Rational(-128), "sl(2) Killing form");
  size_t checked = 0;
  for (const Json& r : rows_of_kind("graded")) {
    const GradedAlgebra g = build_graded(*parse_family(r.at("family").get<std::string>()), row_params(r));
    o.require(rank(g.g().killing_form()) == g.g().dim(), g.g().name() + " degenerate Killing form");
    ++checked;
  }
  for (const SymmetricPair& p : grid_pairs()) {
    o.require(p.k->is_semisimple(), p.name() + " not semisimple");
    ++checked;
  }
  // Negative control: the 2-dimensional non-abelian algebra is solvable.
  o.require(!MatrixLieAlgebra::make({h, e}, "aff(1)").is_semisimple(), "aff(1) reported semisimple");
  o.require(checked > 0, "nothing checked");
  o.note << checked << " algebras nondegenerate, solvable control rejected";
}

void commutants(Outcome& o) {
  Rng rng(kSeed);
  size_t simple = 0;
  for (const SymmetricPair& p : grid_pairs()) {
    const CentralizerReport r = centralizer_report(p, rng);
    o.require(r.ok(), p.name() + ": " + r.detail);
    if (r.factors.size() == 1) ++simple;
  }
  o.require(simple >= kMinCommutantPairs, "too few simple pairs");
  // so(2,2) = sl(2) + sl(2): the whole commutant is 4-dimensional and the
  // classification applies per factor.
  const SymmetricPair so22 = build_pair("so_block", {{"a", "1"}, {"b", "1"}, {"c", "1"}, {"d", "1"}});
  const CentralizerReport r = centralizer_report(so22, rng);
  o.require(r.whole.basis.size() == 4 && r.factors.size() == 2, "so(2,2) factor split");
  for (const auto& f : r.factors) o.require(f.commutant.label == CommutantLabel::RxR, "so(2,2) factor label");
  o.note << simple << " simple pairs in {R, C, RxR, CxC}; so(2,2) per factor RxR + RxR";
}

void projective_kernel(Outcome& o) {
  for (size_t n = kProjectiveMinRank; n <= kProjectiveMaxRank; ++n) {
    const SymmetricPair sphere =
        build_pair("so_block", {{"a", "1"}, {"b", std::to_string(n)}, {"c", "0"}, {"d", "0"}});
    const ExistenceVerdict v = decide_projective(sphere);
    o.require(v.verdict == Verdict::Exists && v.certificates_pass(), "n = " + std::to_string(n) + " verdict");
    if (!v.witness) continue;
    const B2System sys = projective_b2_system(*v.witness);
    o.require(rank(sys.matrix) == sys.unknowns.size() && sys.unknowns.size() == n * n,
              "n = " + std::to_string(n) + " kernel");
    o.require(codifferential(*v.witness).is_zero(), "n = " + std::to_string(n) + " not normal");
  }
  const B2Solution s = solve_projective_b2(decide_projective(group({{"h", "sl_R"}, {"n", "2"}})).witness.value());
  o.require(!s.b2.is_zero() && s.residual_zero, "group sl(2) b2");
  o.note << "homogeneous kernel {0} for n = " << kProjectiveMinRank << ".." << kProjectiveMaxRank;
}

void conformal_multi_factor(Outcome& o) {
  Rng rng(kSeed);
  const std::vector<SymmetricPair> pairs{
      direct_sum(group({{"h", "so"}, {"p", "3"}, {"q", "0"}}), group({{"h", "sl_R"}, {"n", "2"}})),
      build_pair("so_block", {{"a", "1"}, {"b", "1"}, {"c", "1"}, {"d", "1"}}),
      direct_sum(group({{"h", "sl_C"}, {"n", "2"}}), build_pair("sl2_so11", {})),
      build_pair("so_c_block", {{"p", "2"}, {"q", "2"}}),
  };
  size_t ok = 0;
  for (const SymmetricPair& p : pairs) {
    const ExistenceVerdict v = decide_conformal(p, rng);
    const bool good = v.verdict == Verdict::Exists && v.conformal && v.certificates_pass() && v.witness &&
                      v.conformal->real_factors + v.conformal->complex_factors >= 2 &&
                      v.conformal->form_space_dim == v.conformal->real_factors + 2 * v.conformal->complex_factors &&
                      v.conformal->cross_blocks_zero && v.conformal->signatures_match_direct &&
                      torsion_free(*v.witness);
    o.require(good, p.name());
    ok += good;
  }
  o.require(ok >= kMinConformalMultiFactor, "too few multi-factor pairs");
  o.note << ok << " multi-factor pairs with form space = real + 2 complex factors";
}

void flat_rows(Outcome& o) {
  Rng rng(kSeed);
  size_t flat = 0;
  std::set<Family> families;
  for (const Json& r : rows_of_kind("row")) {
    const Family f = *parse_family(r.at("target").get<std::string>());
    const SymmetricPair p = pair_of_row(r.at("pair"));
    const ExistenceVerdict v = verify_family_row(f, p, rng);
    const bool good = v.verdict == Verdict::Exists && v.witness && validate(*v.witness).ok() && is_flat(*v.witness) &&
                      v.certificates_pass();
    o.require(good, to_string(f) + " " + p.name());
    if (good) {
      ++flat;
      families.insert(f);
    }
  }
  o.require(flat >= kMinFlatRows && families.size() >= kMinFlatFamilies, "coverage");
  o.note << flat << " flat rows across " << families.size() << " families";
}

void torsion(Outcome& o) {
  Rng rng(kSeed);
  size_t witnesses = 0;
  for (const SymmetricPair& p : grid_pairs()) {
    for (Family f : {Family::projective, Family::conformal, Family::h_projective}) {
      const ExistenceVerdict v = classify(p, f, rng);
      if (!v.witness) continue;
      o.require(validate(*v.witness).ok() && torsion_free(*v.witness), to_string(f) + " " + p.name());
      ++witnesses;
    }
  }
  // Negative control: a g_-1 component on alpha(h) feeds alpha[X, Y] into
  // the torsion, and the validator flags the axiom.
  Extension bad = decide_projective(group({{"h", "sl_R"}, {"n", "2"}})).witness.value();
  for (size_t z = 0; z < bad.pair.h_dim; ++z) bad.alpha(bad.target.minus_one[z % bad.target.minus_one.size()], z) += 1;
  o.require(!torsion_free(bad), "corrupted alpha torsion free");
  o.require(!validate(bad).at(kAxiomHtoG0).pass, "corrupted alpha validated");
  o.require(witnesses > 0, "no witnesses");
  o.note << witnesses << " witnesses torsion free; corrupted control has torsion";
}

void equivalence(Outcome& o) {
  Rng rng(kSeed);
  std::vector<Extension> pool;
  for (const SymmetricPair& p : grid_pairs())
    for (Family f : {Family::projective, Family::conformal}) {
      ExistenceVerdict v = classify(p, f, rng);
      if (v.witness) pool.push_back(std::move(*v.witness));
    }
  o.require(pool.size() >= kEquivalenceSamples, "pool too small");
  std::vector<size_t> sample;
  std::set<size_t> seen;
  while (sample.size() < kEquivalenceSamples && seen.size() < pool.size()) {
    const size_t i = static_cast<size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1));
    if (seen.insert(i).second) sample.push_back(i);
  }
  for (size_t i : sample) {
    const Extension& a = pool[i];
    const std::string tag = a.pair.name() + " -> " + a.target.g().name();
    o.require(frames_equivalent(a, a).status == Equivalence::Equivalent, tag + " reflexive");
    const Rational s = rng.small_nonzero(5);
    const Extension b = extension_from_frame(a.pair, a.target, a.frame() * s, a.b2 * (1 / (s * s)));
    const Equivalence ab = frames_equivalent(a, b).status, ba = frames_equivalent(b, a).status;
    o.require(ab == Equivalence::Equivalent && ba == ab, tag + " scalar");
  }
  // Non-square per-factor scaling on a two-factor conformal structure.
  const SymmetricPair p = direct_sum(group({{"h", "so"}, {"p", "3"}, {"q", "0"}}), group({{"h", "sl_R"}, {"n", "2"}}));
  const Extension a = decide_conformal(p, rng).witness.value();
  const AdaptedBasis ab = factor_adapted_basis(simple_factors(p, rng));
  Vec d(ab.basis.cols(), Rational(1));
  for (size_t i = ab.sizes[0]; i < d.size(); ++i) d[i] = 2;
  const Extension b = extension_from_frame(p, a.target, a.frame() * ab.basis * Mat::diagonal(d) * *inverse(ab.basis));
  o.require(frames_equivalent(a, b).status == Equivalence::NotEquivalent &&
                frames_equivalent(b, a).status == Equivalence::NotEquivalent,
            "per-factor scaling");
  o.note << sample.size() << " sampled witnesses reflexive and scalar-symmetric; per-factor control NotEquivalent";
}

void holomorphy(Outcome& o) {
  Rng rng(kSeed);
  const ExistenceVerdict v = decide_h_projective(group({{"h", "sl_C"}, {"n", "2"}}), rng);
  o.require(v.verdict == Verdict::Exists && v.witness && v.complex_structures.size() == 2, "verdict");
  if (!v.witness || v.complex_structures.size() != 2) return;
  const Mat jg = target_complex_structure(v.witness->target).value();
  const Mat& j = v.complex_structures[0];
  const Holomorphy plus = is_holomorphic(*v.witness, j, jg);
  o.require(plus.holomorphic, "alpha not J-linear");
  o.require(!is_holomorphic(*v.witness, -j, jg).holomorphic, "alpha also (-J)-linear");
  o.require(plus.conjugate && is_holomorphic(*plus.conjugate, -j, jg).holomorphic, "conjugate not (-J)-linear");
  if (plus.conjugate)
    o.require(frames_equivalent(*v.witness, *plus.conjugate).status != Equivalence::Equivalent,
              "conjugate equivalent");
  o.note << "J holomorphic, -J not, conjugate witness holomorphic for -J";
}

void determinism(Outcome& o) {
  const Json grid = default_grid();
  const RunManifest a = verify_catalog(grid, RunOptions{kSeed, {"acceptance"}, ".", 1});
  const RunManifest b = verify_catalog(grid, RunOptions{kSeed, {"acceptance"}, ".", 0});
  o.require(dump(a.to_json(false)) == dump(b.to_json(false)), "manifests differ");
  o.require(a.overall_pass(), std::to_string(a.failed) + " grid items failed");
  size_t round_trips = 0;
  for (const auto& it : a.items)
    for (const auto& c : it.checks)
      if (c.name == "round_trip") {
        o.require(c.pass, it.label + " round trip");
        ++round_trips;
      }
  o.note << a.items.size() << " items identical across worker counts, " << round_trips << " round trips exact";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"structural grid", structural_grid},
      {"Cartan criterion", cartan_criterion},
      {"isotropy commutants", commutants},
      {"projective normalization", projective_kernel},
      {"conformal multi-factor", conformal_multi_factor},
      {"flat rows", flat_rows},
      {"torsion freeness", torsion},
      {"equivalence predicates", equivalence},
      {"holomorphy", holomorphy},
      {"determinism and round trip", determinism},
  };
  bool all = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.text().c_str());
  }
  return all ? 0 : 1;
}
