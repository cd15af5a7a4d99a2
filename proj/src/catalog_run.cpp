#include "cartan/catalog_run.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <map>
#include <sstream>
#include <thread>

namespace cartan {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Undecided: return "UNDECIDED";
  }
  return "?";
}

namespace {

Json row(const char* kind, const std::string& family, Params params) {
  Json r;
  r["kind"] = kind;
  r["family"] = family;
  r["params"] = to_json(params);
  return r;
}

Json graded_row(Family f, Params params, size_t dim_g, size_t dim_gm1) {
  Json r = row("graded", to_string(f), std::move(params));
  r["expected"] = {{"dim_g", dim_g}, {"dim_gm1", dim_gm1}};
  return r;
}

Json pair_row(const std::string& family, Params params, Json expect = Json::object()) {
  Json r = row("pair", family, std::move(params));
  r["expect"] = std::move(expect);
  return r;
}

Json sum_row(std::vector<std::pair<std::string, Params>> parts) {
  Json r;
  r["kind"] = "pair";
  Json s = Json::array();
  for (auto& [f, p] : parts) s.push_back({{"family", f}, {"params", to_json(p)}});
  r["summands"] = std::move(s);
  r["expect"] = Json::object();
  return r;
}

Json family_row(Family target, const std::string& family, Params params) {
  Json r;
  r["kind"] = "row";
  r["target"] = to_string(target);
  r["pair"] = {{"family", family}, {"params", to_json(std::move(params))}};
  return r;
}

std::string s(size_t v) { return std::to_string(v); }

size_t sl_dim(size_t n) { return n * n - 1; }

}  // namespace

Json default_grid() {
  Json rows = Json::array();
  for (size_t n = 1; n <= 5; ++n) rows.push_back(graded_row(Family::projective, {{"n", s(n)}}, sl_dim(n + 1), n));
  for (size_t n = 1; n <= 3; ++n)
    rows.push_back(graded_row(Family::h_projective, {{"n", s(n)}}, 2 * sl_dim(n + 1), 2 * n));
  for (size_t pq = 1; pq <= 6; ++pq)
    for (size_t q = 0; q <= pq; ++q) {
      const size_t m = pq + 2;
      rows.push_back(graded_row(Family::conformal, {{"p", s(pq - q)}, {"q", s(q)}}, m * (m - 1) / 2, pq));
    }
  for (size_t n = 1; n <= 4; ++n)
    rows.push_back(graded_row(Family::complex_conformal, {{"n", s(n)}}, (n + 2) * (n + 1), 2 * n));
  for (const char* k : {"R", "C", "H"}) {
    const size_t d = std::string(k) == "R" ? 1 : std::string(k) == "C" ? 2 : 4;
    for (size_t p = 1; p <= 3; ++p)
      for (size_t q = 1; q <= 3; ++q) {
        const size_t n = p + q;
        // sl(n,K) realified: dim_R = d n^2 - (1 for R, 2 for C, 1 for H)
        const size_t dim = d * n * n - (d == 2 ? 2 : 1);
        rows.push_back(graded_row(Family::grassmannian, {{"p", s(p)}, {"q", s(q)}, {"field", k}}, dim, d * p * q));
      }
  }
  for (const char* k : {"R", "C"}) {
    const size_t d = std::string(k) == "R" ? 1 : 2;
    for (size_t n = 1; n <= 3; ++n)
      rows.push_back(graded_row(Family::lagrangean, {{"n", s(n)}, {"field", k}}, d * n * (2 * n + 1),
                                d * n * (n + 1) / 2));
    for (size_t n = 3; n <= 4; ++n)
      rows.push_back(graded_row(Family::spinorial, {{"n", s(n)}, {"field", k}}, d * n * (2 * n - 1),
                                d * n * (n - 1) / 2));
  }
  for (size_t n = 1; n <= 4; ++n)
    rows.push_back(graded_row(Family::para_quaternionic, {{"n", s(n)}}, sl_dim(n + 2), 2 * n));
  for (size_t n = 1; n <= 2; ++n)
    rows.push_back(graded_row(Family::quaternionic, {{"n", s(n)}}, 4 * (n + 1) * (n + 1) - 1, 4 * n));
  for (size_t n = 1; n <= 2; ++n)
    rows.push_back(graded_row(Family::su_pp, {{"n", s(n)}}, 4 * n * n - 1, n * n));

  const Json odd_m = {{"h_projective", "NOT_EXISTS"}};
  rows.push_back(pair_row("group_type", {{"h", "sl_R"}, {"n", "2"}}, odd_m));
  rows.push_back(pair_row("group_type", {{"h", "sl_R"}, {"n", "3"}}, {{"h_projective", "NOT_EXISTS"}}));
  rows.push_back(pair_row("group_type", {{"h", "sl_C"}, {"n", "2"}}, {{"h_projective", "EXISTS"}}));
  rows.push_back(pair_row("group_type", {{"h", "so"}, {"p", "3"}, {"q", "0"}}, odd_m));
  rows.push_back(pair_row("group_type", {{"h", "so"}, {"p", "2"}, {"q", "1"}}, odd_m));
  rows.push_back(pair_row("group_type", {{"h", "sp"}, {"n", "1"}}, odd_m));
  rows.push_back(pair_row("group_type", {{"h", "su"}, {"p", "2"}, {"q", "0"}}, odd_m));
  rows.push_back(pair_row("group_type", {{"h", "su"}, {"p", "1"}, {"q", "1"}}, odd_m));
  rows.push_back(pair_row("sl2_so11", {}, {{"h_projective", "NOT_EXISTS"}}));
  rows.push_back(pair_row("so_block", {{"a", "1"}, {"b", "1"}, {"c", "1"}, {"d", "1"}},
                          {{"h_projective", "NOT_EXISTS"}}));
  rows.push_back(pair_row("so_block", {{"a", "2"}, {"b", "1"}, {"c", "0"}, {"d", "0"}}));
  rows.push_back(pair_row("so_block", {{"a", "2"}, {"b", "2"}, {"c", "0"}, {"d", "0"}}));
  rows.push_back(pair_row("so11_block", {{"k", "1"}, {"l", "2"}}));
  rows.push_back(pair_row("so2_block", {{"k", "2"}, {"l", "1"}}));
  rows.push_back(pair_row("sp_block", {{"p", "1"}, {"q", "1"}}, {{"h_projective", "NOT_EXISTS"}}));
  rows.push_back(pair_row("su_block", {{"a", "1"}, {"b", "1"}, {"c", "0"}, {"d", "0"}}));
  rows.push_back(pair_row("su_block", {{"a", "1"}, {"b", "1"}, {"c", "0"}, {"d", "1"}}));
  rows.push_back(pair_row("so_complex", {{"n", "3"}}));
  rows.push_back(pair_row("so_c_block", {{"p", "2"}, {"q", "2"}}, {{"h_projective", "EXISTS"}}));
  rows.push_back(pair_row("sp1_sp", {{"p", "1"}, {"q", "0"}}));
  rows.push_back(pair_row("sp1_sp", {{"p", "1"}, {"q", "1"}}));
  rows.push_back(pair_row("so_star_block", {{"n", "2"}}));
  rows.push_back(sum_row({{"group_type", {{"h", "so"}, {"p", "3"}, {"q", "0"}}},
                          {"group_type", {{"h", "so"}, {"p", "3"}, {"q", "0"}}}}));
  rows.push_back(sum_row({{"group_type", {{"h", "so"}, {"p", "3"}, {"q", "0"}}},
                          {"group_type", {{"h", "sl_R"}, {"n", "2"}}}}));
  rows.push_back(sum_row({{"group_type", {{"h", "sl_C"}, {"n", "2"}}}, {"sl2_so11", {}}}));

  rows.push_back(family_row(Family::grassmannian, "so_block", {{"a", "1"}, {"b", "1"}, {"c", "1"}, {"d", "1"}}));
  rows.push_back(family_row(Family::grassmannian, "so_block", {{"a", "2"}, {"b", "1"}, {"c", "0"}, {"d", "0"}}));
  rows.push_back(family_row(Family::grassmannian, "sp_block", {{"p", "1"}, {"q", "1"}}));
  rows.push_back(family_row(Family::grassmannian, "su_block", {{"a", "1"}, {"b", "1"}, {"c", "0"}, {"d", "1"}}));
  rows.push_back(family_row(Family::grassmannian, "so_c_block", {{"p", "2"}, {"q", "2"}}));
  rows.push_back(family_row(Family::lagrangean, "group_type", {{"h", "sp"}, {"n", "1"}}));
  rows.push_back(family_row(Family::spinorial, "group_type", {{"h", "so"}, {"p", "2"}, {"q", "1"}}));
  rows.push_back(family_row(Family::spinorial, "group_type", {{"h", "so"}, {"p", "3"}, {"q", "0"}}));
  rows.push_back(family_row(Family::para_quaternionic, "so11_block", {{"k", "1"}, {"l", "1"}}));
  rows.push_back(family_row(Family::para_quaternionic, "so11_block", {{"k", "1"}, {"l", "2"}}));
  rows.push_back(family_row(Family::para_quaternionic, "so2_block", {{"k", "2"}, {"l", "1"}}));
  rows.push_back(family_row(Family::para_quaternionic, "sp_block", {{"p", "1"}, {"q", "1"}}));
  rows.push_back(family_row(Family::quaternionic, "sp1_sp", {{"p", "1"}, {"q", "0"}}));
  rows.push_back(family_row(Family::quaternionic, "sp1_sp", {{"p", "1"}, {"q", "1"}}));
  rows.push_back(family_row(Family::quaternionic, "so_star_block", {{"n", "2"}}));
  rows.push_back(family_row(Family::su_pp, "so_complex", {{"n", "2"}}));

  Json grid;
  grid["rows"] = std::move(rows);
  return grid;
}

// ---------------------------------------------------------------------------

namespace {

struct RowContext {
  ItemResult& item;
  void check(const std::string& name, bool pass, const std::string& detail = "") {
    item.checks.push_back({name, pass, detail});
  }
};

std::string str(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_string())
    throw InputError(std::string("row field '") + key + "' must be a string");
  return j.at(key).get<std::string>();
}

Params row_params(const Json& j) { return j.contains("params") ? params_from_json(j.at("params")) : Params{}; }

void check_graded_object(RowContext& ctx, const GradedAlgebra& g) {
  const GradedCheck c = check_graded(g);
  ctx.check("jacobi", c.jacobi);
  ctx.check("grading_eigenvalues", c.grading_eigenvalues);
  ctx.check("bracket_degrees", c.bracket_degrees);
  ctx.check("no_ideal_in_g0", c.no_ideal_in_g0);
  ctx.check("flip_signs", c.flip_signs);
  ctx.check("dual_dimensions", c.dual_dimensions, s(g.minus_one.size()) + " / " + s(g.plus_one.size()));
  ctx.check("complex_structure", c.complex_structure);
  ctx.check("semisimple", g.g().is_semisimple(), "Cartan criterion on the Killing form");
  if (!c.ok()) ctx.item.detail = c.detail;
}

void check_pair_object(RowContext& ctx, const SymmetricPair& p) {
  const PairCheck c = check_pair(p);
  ctx.check("involution", c.involution);
  ctx.check("bracket_inclusions", c.bracket_inclusions);
  ctx.check("effective", c.effective);
  ctx.check("conjugator", c.conjugator_consistent);
  if (!c.ok()) ctx.item.detail = c.detail;
}

void run_graded(RowContext& ctx, const Json& r) {
  const std::string fam = str(r, "family");
  const auto f = parse_family(fam);
  if (!f) throw InputError("unknown family '" + fam + "'");
  const Params params = row_params(r);
  ctx.item.section = fam;
  ctx.item.label = fam + " " + to_string(params);
  const GradedAlgebra g = build_graded(*f, params);
  ctx.item.label += " " + g.g().name();
  check_graded_object(ctx, g);
  if (r.contains("expected")) {
    const Json& e = r.at("expected");
    if (e.contains("dim_g"))
      ctx.check("dim_g", e.at("dim_g").get<size_t>() == g.g().dim(), s(g.g().dim()));
    if (e.contains("dim_gm1"))
      ctx.check("dim_gm1", e.at("dim_gm1").get<size_t>() == g.minus_one.size(), s(g.minus_one.size()));
  }
  const std::string text = dump(to_json(g));
  ctx.check("round_trip", dump(to_json(graded_from_json(parse_json(text)))) == text);
}

void record_verdict(RowContext& ctx, ExistenceVerdict v, const Json& expect) {
  const std::string fam = to_string(v.family);
  ctx.check(fam + "_certificates", v.certificates_pass(), to_string(v.verdict) + ": " + v.reason);
  if (expect.contains(fam))
    ctx.check(fam + "_expected", expect.at(fam).get<std::string>() == to_string(v.verdict),
              "expected " + expect.at(fam).get<std::string>() + ", got " + to_string(v.verdict));
  ctx.item.verdicts.push_back(std::move(v));
}

void run_pair(RowContext& ctx, const Json& r, Rng& rng) {
  SymmetricPair p;
  if (r.contains("summands")) {
    const Json& parts = r.at("summands");
    if (!parts.is_array() || parts.empty()) throw InputError("summands must be a nonempty array");
    bool first = true;
    for (const auto& part : parts) {
      SymmetricPair q = build_pair(str(part, "family"), row_params(part));
      p = first ? std::move(q) : direct_sum(p, q);
      first = false;
    }
  } else {
    p = build_pair(str(r, "family"), row_params(r));
  }
  ctx.item.section = "symmetric pairs";
  ctx.item.label = p.name();
  check_pair_object(ctx, p);
  const bool semisimple = p.k->is_semisimple();
  ctx.check("semisimple", semisimple, "Cartan criterion on k");
  if (!semisimple) return;

  const RestrictedKilling rk = restricted_killing(p);
  const std::vector<Mat> forms = invariant_bilinear_forms(isotropy_rep(p), FormSymmetry::Symmetric);
  ctx.check("killing_invariant", coordinates_in_span(forms, rk.gram).has_value(),
            "restricted Killing signature (" + s(rk.signature.positive) + "," + s(rk.signature.negative) + ")");

  const CentralizerReport cr = centralizer_report(p, rng);
  std::string labels;
  for (const auto& f : cr.factors) labels += (labels.empty() ? "" : ", ") + to_string(f.commutant.label);
  ctx.check("commutant_labels", cr.labels_allowed, "factor commutants: " + labels + "; " + cr.detail);
  ctx.check("commutant_product", cr.product_dimension && cr.block_diagonal, cr.detail);

  const Json expect = r.contains("expect") ? r.at("expect") : Json::object();
  ExistenceVerdict pv = decide_projective(p);
  ctx.check("projective_exists", pv.verdict == Verdict::Exists, pv.reason);
  record_verdict(ctx, std::move(pv), expect);
  ExistenceVerdict cv = decide_conformal(p, rng);
  ctx.check("conformal_exists", cv.verdict == Verdict::Exists, cv.reason);
  record_verdict(ctx, std::move(cv), expect);
  record_verdict(ctx, decide_h_projective(p, rng), expect);

  const std::string text = dump(to_json(p));
  ctx.check("round_trip", dump(to_json(pair_from_json(parse_json(text)))) == text);
}

void run_family_row(RowContext& ctx, const Json& r, Rng& rng) {
  const std::string fam = str(r, "target");
  const auto f = parse_family(fam);
  if (!f) throw InputError("unknown family '" + fam + "'");
  if (!r.contains("pair")) throw InputError("row needs a 'pair' object");
  const Json& pj = r.at("pair");
  const SymmetricPair p = build_pair(str(pj, "family"), row_params(pj));
  ctx.item.section = fam;
  ctx.item.label = fam + " row " + p.name();
  check_pair_object(ctx, p);
  ExistenceVerdict v = verify_family_row(*f, p, rng);
  if (v.verdict == Verdict::Undecided) {
    ctx.item.status = Status::Undecided;
    ctx.item.detail = v.reason;
  } else {
    ctx.check("exists", v.verdict == Verdict::Exists, v.reason);
  }
  ctx.check("certificates", v.certificates_pass());
  ctx.item.verdicts.push_back(std::move(v));
}

void run_file(RowContext& ctx, const Json& r, const std::string& base_dir) {
  std::filesystem::path path = str(r, "path");
  if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
  ctx.item.section = "files";
  ctx.item.label = "file " + str(r, "path");
  const Json doc = read_json_file(path.string());
  const std::string kind = doc.is_object() && doc.contains("kind") && doc.at("kind").is_string()
                               ? doc.at("kind").get<std::string>()
                               : "";
  if (kind == "graded_algebra") {
    check_graded_object(ctx, graded_from_json(doc));
  } else if (kind == "symmetric_pair") {
    check_pair_object(ctx, pair_from_json(doc));
  } else if (kind == "extension") {
    const Extension e = extension_from_json(doc);
    const ValidationReport v = validate(e);
    for (const auto& a : v.axioms) ctx.check(a.name, a.pass, a.witnesses.empty() ? "" : a.witnesses.front());
    if (v.ok()) ctx.check("torsion_free", torsion_free(e));
  } else {
    throw InputError("file '" + path.string() + "' has no known kind");
  }
}

}  // namespace

ItemResult run_row(const Json& r, std::uint64_t seed, size_t index, const std::string& base_dir) {
  ItemResult item;
  item.index = index;
  const auto t0 = std::chrono::steady_clock::now();
  RowContext ctx{item};
  // Each row gets its own stream so results do not depend on scheduling.
  Rng rng(seed * 1000003u + index);
  try {
    item.kind = str(r, "kind");
    if (item.kind == "graded")
      run_graded(ctx, r);
    else if (item.kind == "pair")
      run_pair(ctx, r, rng);
    else if (item.kind == "row")
      run_family_row(ctx, r, rng);
    else if (item.kind == "file")
      run_file(ctx, r, base_dir);
    else
      throw InputError("unknown row kind '" + item.kind + "'");
  } catch (const InputError& e) {
    ctx.check("input", false, e.what());
    item.detail = e.what();
  } catch (const InvariantError& e) {
    ctx.check("invariant", false, e.what());
    item.detail = e.what();
  }
  if (item.section.empty()) item.section = "other";
  if (item.label.empty()) item.label = "row " + std::to_string(index);
  for (const auto& c : item.checks)
    if (!c.pass) item.status = Status::Fail;
  item.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return item;
}

RunManifest verify_catalog(const Json& grid, const RunOptions& opt) {
  const Json& rows = grid.is_array() ? grid : (grid.is_object() && grid.contains("rows") ? grid.at("rows") : grid);
  if (!rows.is_array()) throw InputError("grid must be an array of rows or an object with 'rows'");
  RunManifest m;
  m.seed = opt.seed;
  m.commands = opt.commands;
  m.grid = grid;
  m.items.resize(rows.size());
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min<size_t>(opt.workers ? opt.workers : hw, std::max<size_t>(rows.size(), 1));
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < rows.size(); i = next++) m.items[i] = run_row(rows[i], opt.seed, i, opt.base_dir);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& it : m.items) {
    if (it.status == Status::Pass) ++m.passed;
    if (it.status == Status::Fail) ++m.failed;
    if (it.status == Status::Undecided) ++m.undecided;
  }
  return m;
}

Json RunManifest::to_json(bool with_timings) const {
  Json j;
  j["seed"] = seed;
  Json cmds = Json::array();
  for (const auto& c : commands) cmds.push_back(c);
  j["commands"] = std::move(cmds);
  j["grid"] = grid;
  Json items_json = Json::array();
  for (const auto& it : items) {
    Json i;
    i["index"] = it.index;
    i["kind"] = it.kind;
    i["section"] = it.section;
    i["label"] = it.label;
    i["status"] = cartan::to_string(it.status);
    Json checks = Json::array();
    for (const auto& c : it.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    i["checks"] = std::move(checks);
    Json verdicts = Json::array();
    for (const auto& v : it.verdicts) verdicts.push_back(cartan::to_json(v, false));
    i["verdicts"] = std::move(verdicts);
    i["detail"] = it.detail;
    items_json.push_back(std::move(i));
  }
  j["items"] = std::move(items_json);
  j["summary"] = {{"items", items.size()},
                  {"pass", passed},
                  {"fail", failed},
                  {"undecided", undecided},
                  {"overall", overall_pass() ? "PASS" : "FAIL"}};
  if (with_timings) {
    Json t = Json::array();
    double total = 0;
    for (const auto& it : items) {
      t.push_back(it.seconds);
      total += it.seconds;
    }
    j["timings"] = {{"item_seconds", std::move(t)}, {"total_seconds", total}};
  }
  return j;
}

// ---------------------------------------------------------------------------

std::string verdict_markdown(const ExistenceVerdict& v) {
  std::ostringstream out;
  out << "**" << to_string(v.family) << "** on `" << v.pair_name << "`: **" << to_string(v.verdict) << "**";
  if (!v.reason.empty()) out << " (" << v.reason << ")";
  out << ".";
  if (!v.equivalence.empty()) out << " Equivalence classes: " << v.equivalence << ".";
  if (!v.claim.empty()) out << " Instantiates: " << v.claim << ".";
  out << "\n";
  for (const auto& c : v.certificates)
    out << "- [" << (c.pass ? "x" : " ") << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  return out.str();
}

std::string manifest_markdown(const RunManifest& m) {
  std::ostringstream out;
  out << "# Catalog verification\n\n";
  out << "Seed " << m.seed << ". " << m.items.size() << " items: " << m.passed << " pass, " << m.failed
      << " fail, " << m.undecided << " undecided. Overall **" << (m.overall_pass() ? "PASS" : "FAIL") << "**.\n";
  std::map<std::string, std::vector<const ItemResult*>> sections;
  std::vector<std::string> order;
  for (const auto& it : m.items) {
    if (!sections.count(it.section)) order.push_back(it.section);
    sections[it.section].push_back(&it);
  }
  for (const auto& sec : order) {
    out << "\n## " << sec << "\n\n";
    for (const ItemResult* it : sections[sec]) {
      out << "- [" << (it->status == Status::Pass ? "x" : " ") << "] " << to_string(it->status) << " " << it->label;
      if (!it->detail.empty()) out << ": " << it->detail;
      out << "\n";
      for (const auto& c : it->checks)
        if (!c.pass) out << "  - failed " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
      for (const auto& v : it->verdicts)
        out << "  - " << to_string(v.family) << ": " << to_string(v.verdict)
            << (v.equivalence.empty() ? "" : " (" + v.equivalence + ")") << "\n";
    }
  }
  return out.str();
}

}  // namespace cartan
