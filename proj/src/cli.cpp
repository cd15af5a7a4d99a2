#include "cartan/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cartan/catalog_run.hpp"

namespace cartan {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240611;

struct Options {
  std::string family;
  std::string params;
  std::string pair;
  std::string in;
  std::string out;
  std::string format = "json";
  std::string grid;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 0;
  bool witness = false;
};

std::uint64_t effective_seed(const Options& o) {
  if (const char* env = std::getenv("CARTAN_EXT_SEED")) {
    try {
      size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw InputError(std::string("CARTAN_EXT_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  return o.seed;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty())
    out << text;
  else
    write_text_file(o.out, text);
}

bool is_pair_family(const std::string& f) {
  const auto& all = pair_families();
  return std::find(all.begin(), all.end(), f) != all.end();
}

SymmetricPair load_pair(const Options& o, const std::string& family) {
  if (!o.in.empty()) return pair_from_json(read_json_file(o.in));
  if (family.empty()) throw InputError("a pair is required: give --pair/--family with --params, or --in");
  if (!is_pair_family(family)) throw InputError("unsupported pair family '" + family + "'");
  return build_pair(family, parse_params(o.params));
}

Family target_family(const std::string& name) {
  const auto f = parse_family(name);
  if (!f) throw InputError("unsupported family '" + name + "'");
  return *f;
}

std::string check_lines(const std::vector<Certificate>& checks) {
  std::string out;
  for (const auto& c : checks)
    out += "- [" + std::string(c.pass ? "x" : " ") + "] " + c.name + (c.detail.empty() ? "" : ": " + c.detail) + "\n";
  return out;
}

// --- build ------------------------------------------------------------------

int cmd_build(const Options& o, std::ostream& out) {
  if (o.family.empty()) throw InputError("build needs --family");
  Json doc;
  std::vector<Certificate> checks;
  std::string title;
  if (const auto f = parse_family(o.family)) {
    const GradedAlgebra g = build_graded(*f, parse_params(o.params));
    const GradedCheck c = check_graded(g);
    checks.push_back({"graded invariants", c.ok(), c.detail});
    doc = to_json(g);
    title = g.g().name() + ": dim g = " + std::to_string(g.g().dim()) + ", dim g_-1 = " +
            std::to_string(g.minus_one.size());
    const std::string text = dump(doc);
    checks.push_back({"round trip", dump(to_json(graded_from_json(parse_json(text)))) == text, ""});
  } else if (is_pair_family(o.family)) {
    const SymmetricPair p = build_pair(o.family, parse_params(o.params));
    const PairCheck c = check_pair(p);
    checks.push_back({"pair invariants", c.ok(), c.detail});
    doc = to_json(p);
    title = p.name() + ": dim k = " + std::to_string(p.dim()) + ", dim h = " + std::to_string(p.h_dim) +
            ", dim m = " + std::to_string(p.m_dim());
    const std::string text = dump(doc);
    checks.push_back({"round trip", dump(to_json(pair_from_json(parse_json(text)))) == text, ""});
  } else {
    throw InputError("unsupported family '" + o.family + "'");
  }
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const Certificate& c) { return c.pass; });
  emit(o, o.format == "md" ? "# " + title + "\n\n" + check_lines(checks) : dump(doc), out);
  return ok ? kExitOk : kExitFail;
}

// --- analyze-pair -----------------------------------------------------------

int cmd_analyze(const Options& o, std::ostream& out) {
  const SymmetricPair p = load_pair(o, o.pair.empty() ? o.family : o.pair);
  Rng rng(effective_seed(o));
  std::vector<Certificate> checks;
  const PairCheck pc = check_pair(p);
  checks.push_back({"pair invariants", pc.ok(), pc.detail});
  const bool semisimple = p.k->is_semisimple();
  checks.push_back({"semisimple", semisimple, ""});
  Json j;
  j["pair"] = p.name();
  j["dim_k"] = p.dim();
  j["dim_h"] = p.h_dim;
  j["dim_m"] = p.m_dim();
  j["semisimple"] = semisimple;
  if (semisimple && pc.ok()) {
    const RestrictedKilling rk = restricted_killing(p);
    const std::vector<Mat> forms = invariant_bilinear_forms(isotropy_rep(p), FormSymmetry::Symmetric);
    j["restricted_killing"] = {{"gram", to_json(rk.gram)},
                               {"signature", Json::array({rk.signature.positive, rk.signature.negative})}};
    j["invariant_symmetric_forms"] = forms.size();
    const bool in_span = coordinates_in_span(forms, rk.gram).has_value();
    checks.push_back({"Killing form invariant", in_span, ""});
    const CentralizerReport cr = centralizer_report(p, rng);
    j["commutant"] = to_string(cr.whole.label);
    j["commutant_dim"] = cr.whole.basis.size();
    Json factors = Json::array();
    for (const auto& f : cr.factors)
      factors.push_back({{"pair", f.name},
                         {"group_type", f.group_type},
                         {"dim_m", f.m_dim},
                         {"commutant", to_string(f.commutant.label)}});
    j["factors"] = std::move(factors);
    checks.push_back({"centralizer product", cr.ok(), cr.detail});
    const ComplexStructures cs = pair_complex_structures(p, rng);
    j["complex_structure"] = to_string(cs.status);
  }
  Json cj = Json::array();
  for (const auto& c : checks) cj.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = std::move(cj);
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const Certificate& c) { return c.pass; });
  if (o.format == "md") {
    std::ostringstream md;
    md << "# " << p.name() << "\n\ndim k = " << p.dim() << ", dim h = " << p.h_dim << ", dim m = " << p.m_dim();
    if (j.contains("commutant")) md << ", isotropy commutant " << j["commutant"].get<std::string>();
    md << "\n\n" << check_lines(checks);
    emit(o, md.str(), out);
  } else {
    emit(o, dump(j), out);
  }
  return ok ? kExitOk : kExitFail;
}

// --- check-extension --------------------------------------------------------

int cmd_check_extension(const Options& o, std::ostream& out) {
  Extension e;
  if (!o.in.empty()) {
    e = extension_from_json(read_json_file(o.in));
  } else {
    if (o.family.empty() || o.pair.empty())
      throw InputError("check-extension needs --in, or --family with --pair and --params");
    const SymmetricPair p = load_pair(o, o.pair);
    Rng rng(effective_seed(o));
    ExistenceVerdict v = classify(p, target_family(o.family), rng);
    if (!v.witness) throw InputError("no witness for this family: " + to_string(v.verdict) + ", " + v.reason);
    e = std::move(*v.witness);
  }
  const Json report = extension_report(e);
  const bool ok = report.at("valid").get<bool>() && report.value("torsion_free", false);
  if (o.format == "md") {
    std::ostringstream md;
    md << "# Extension " << e.pair.name() << " -> " << e.target.g().name() << "\n\n";
    for (const auto& [name, a] : report.at("axioms").items())
      md << "- [" << (a.at("pass").get<bool>() ? "x" : " ") << "] " << name << "\n";
    if (report.contains("flat"))
      md << "\ntorsion free: " << report.at("torsion_free") << ", flat: " << report.at("flat")
         << ", nonzero curvature entries: " << report.at("kappa_nonzero_entries") << "\n";
    emit(o, md.str(), out);
  } else {
    emit(o, dump(report), out);
  }
  return ok ? kExitOk : kExitFail;
}

// --- classify ---------------------------------------------------------------

int cmd_classify(const Options& o, std::ostream& out) {
  if (o.family.empty()) throw InputError("classify needs --family (the target family)");
  const Family f = target_family(o.family);
  const SymmetricPair p = load_pair(o, o.pair);
  Rng rng(effective_seed(o));
  const ExistenceVerdict v = classify(p, f, rng);
  if (o.format == "md")
    emit(o, verdict_markdown(v), out);
  else {
    Json j = to_json(v, o.witness);
    j["markdown"] = verdict_markdown(v);
    emit(o, dump(j), out);
  }
  return v.certificates_pass() ? kExitOk : kExitFail;
}

// --- verify-catalog ---------------------------------------------------------

int cmd_verify(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  RunOptions ro;
  ro.seed = effective_seed(o);
  ro.workers = o.workers;
  std::string cmd = "cartan-ext";
  for (const auto& a : args) cmd += " " + a;
  ro.commands = {cmd};
  Json grid;
  if (o.grid.empty()) {
    grid = default_grid();
  } else {
    grid = read_json_file(o.grid);
    ro.base_dir = std::filesystem::path(o.grid).parent_path().string();
    if (ro.base_dir.empty()) ro.base_dir = ".";
  }
  const RunManifest m = verify_catalog(grid, ro);
  emit(o, o.format == "md" ? manifest_markdown(m) : dump(m.to_json()), out);
  return m.overall_pass() ? kExitOk : kExitFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariant AHS-structure engine for semisimple symmetric pairs", "cartan-ext"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "Target family or pair family");
    sub->add_option("--params", o.params, "Parameters k=v,...");
    sub->add_option("--seed", o.seed, "Seed for generic-element draws (CARTAN_EXT_SEED overrides)");
    sub->add_option("--out", o.out, "Output file (default stdout)");
    sub->add_option("--format", o.format, "json or md")->check(CLI::IsMember({"json", "md"}));
  };
  auto* build = app.add_subcommand("build", "Build a graded algebra or a symmetric pair and write its JSON");
  common(build);
  auto* analyze = app.add_subcommand("analyze-pair", "Invariants, Killing form and commutants of a pair");
  common(analyze);
  analyze->add_option("--pair", o.pair, "Pair family (alias of --family)");
  analyze->add_option("--in", o.in, "Pair JSON file");
  auto* check = app.add_subcommand("check-extension", "Validate an extension and report its curvature");
  common(check);
  check->add_option("--pair", o.pair, "Pair family for a constructed witness");
  check->add_option("--in", o.in, "Extension JSON file");
  auto* cls = app.add_subcommand("classify", "Decide existence of an invariant structure of a family");
  common(cls);
  cls->add_option("--pair", o.pair, "Pair family");
  cls->add_option("--in", o.in, "Pair JSON file");
  cls->add_flag("--witness", o.witness, "Embed witness extensions in the JSON");
  auto* verify = app.add_subcommand("verify-catalog", "Run the invariant suite over a grid of catalog rows");
  common(verify);
  verify->add_option("--grid", o.grid, "Grid manifest JSON (default: built-in grid)");
  verify->add_option("--workers", o.workers, "Worker threads (0: hardware concurrency)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (build->parsed()) return cmd_build(o, out);
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (check->parsed()) return cmd_check_extension(o, out);
    if (cls->parsed()) return cmd_classify(o, out);
    if (verify->parsed()) return cmd_verify(o, args, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvariantError& e) {
    err << "verification failure: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitInput;
}

}  // namespace cartan
