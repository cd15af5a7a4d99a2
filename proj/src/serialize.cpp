#include "cartan/serialize.hpp"

#include <fstream>
#include <sstream>

namespace cartan {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

size_t count_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw InputError(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<size_t>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw InputError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<size_t> index_list(const Json& j) {
  if (!j.is_array()) throw InputError("index list must be an array");
  std::vector<size_t> out;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) throw InputError("index list entries must be nonnegative integers");
    out.push_back(x.get<size_t>());
  }
  return out;
}

Json index_json(const std::vector<size_t>& idx) {
  Json a = Json::array();
  for (size_t i : idx) a.push_back(i);
  return a;
}

Json basis_json(const std::vector<Mat>& basis) {
  Json a = Json::array();
  for (const Mat& m : basis) a.push_back(to_json(m));
  return a;
}

std::vector<Mat> basis_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("basis must be an array of matrices");
  std::vector<Mat> out;
  for (const auto& m : j) out.push_back(mat_from_json(m));
  return out;
}

}  // namespace

Json to_json(const Mat& m) {
  Json rows = Json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const Params& p) {
  Json j = Json::object();
  for (const auto& [k, v] : p) j[k] = v;
  return j;
}

Json to_json(const MatrixLieAlgebra& a) {
  Json j;
  j["name"] = a.name();
  j["ambient_size"] = a.ambient_size();
  j["dim"] = a.dim();
  j["basis"] = basis_json(a.basis());
  return j;
}

Json to_json(const GradedAlgebra& g) {
  Json j;
  j["kind"] = "graded_algebra";
  j["family"] = to_string(g.family);
  j["params"] = to_json(g.params);
  j["dim_g"] = g.g().dim();
  j["dim_gm1"] = g.minus_one.size();
  j["algebra"] = to_json(g.g());
  j["grading_element"] = to_json(g.grading_element);
  j["minus_one"] = index_json(g.minus_one);
  j["zero"] = index_json(g.zero);
  j["plus_one"] = index_json(g.plus_one);
  j["flip_element"] = to_json(g.flip_element);
  if (g.complex_structure) j["complex_structure"] = to_json(*g.complex_structure);
  if (g.ambient_form) j["ambient_form"] = to_json(*g.ambient_form);
  return j;
}

Json to_json(const SymmetricPair& p) {
  Json j;
  j["kind"] = "symmetric_pair";
  j["family"] = p.family;
  j["params"] = to_json(p.params);
  j["dim_k"] = p.dim();
  j["dim_h"] = p.h_dim;
  j["dim_m"] = p.m_dim();
  j["algebra"] = to_json(*p.k);
  if (p.conjugator) j["conjugator"] = to_json(*p.conjugator);
  return j;
}

Json to_json(const Extension& e) {
  Json j;
  j["kind"] = "extension";
  j["pair"] = to_json(e.pair);
  j["target"] = to_json(e.target);
  j["alpha"] = to_json(e.alpha);
  j["b2"] = to_json(e.b2);
  return j;
}

Json to_json(const ValidationReport& r) {
  Json j = Json::object();
  for (const auto& a : r.axioms) {
    Json w = Json::array();
    for (const auto& s : a.witnesses) w.push_back(s);
    j[a.name] = {{"pass", a.pass}, {"witnesses", std::move(w)}};
  }
  return j;
}

Json to_json(const ExistenceVerdict& v, bool include_witness) {
  Json j;
  j["pair"] = v.pair_name;
  j["family"] = to_string(v.family);
  j["verdict"] = to_string(v.verdict);
  j["reason"] = v.reason;
  if (v.witness)
    j["witness_ref"] = v.witness->target.g().name() + " <- " + v.pair_name;
  else
    j["witness_ref"] = nullptr;
  Json eq;
  eq["description"] = v.equivalence;
  eq["alternatives"] = v.alternatives.size();
  if (v.conformal) {
    const ConformalMenu& m = *v.conformal;
    eq["form_space_dim"] = m.form_space_dim;
    eq["real_factors"] = m.real_factors;
    eq["complex_factors"] = m.complex_factors;
    eq["circle_parameters"] = m.complex_factors;
    Json sigs = Json::array();
    for (const auto& s : m.signatures) sigs.push_back(Json::array({s.positive, s.negative}));
    eq["signatures"] = std::move(sigs);
  }
  j["equivalence"] = std::move(eq);
  Json certs = Json::array();
  for (const auto& c : v.certificates) certs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["certificates"] = std::move(certs);
  j["claim"] = v.claim;
  if (include_witness && v.witness) {
    j["witness"] = to_json(*v.witness);
    Json alts = Json::array();
    for (const auto& a : v.alternatives) alts.push_back(to_json(a));
    j["alternative_witnesses"] = std::move(alts);
  }
  return j;
}

// ---------------------------------------------------------------------------

Mat mat_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  const size_t rows = j.size();
  const size_t cols = rows ? (j[0].is_array() ? j[0].size() : 0) : 0;
  Mat m(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw InputError("matrix rows must be arrays of equal length");
    for (size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_string()) throw InputError("matrix entries must be rational strings");
      m(r, c) = parse_rational(j[r][c].get<std::string>());
    }
  }
  return m;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("vector must be an array of rational strings");
  Vec v;
  for (const auto& x : j) {
    if (!x.is_string()) throw InputError("vector entries must be rational strings");
    v.push_back(parse_rational(x.get<std::string>()));
  }
  return v;
}

Params params_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("params must be an object");
  Params p;
  for (const auto& [k, v] : j.items()) {
    if (v.is_string())
      p[k] = v.get<std::string>();
    else if (v.is_number_integer())
      p[k] = std::to_string(v.get<long long>());
    else
      throw InputError("parameter '" + k + "' must be a string or integer");
  }
  return p;
}

MatrixLieAlgebra algebra_from_json(const Json& j) {
  std::vector<Mat> basis = basis_from_json(field(j, "basis"));
  if (j.contains("dim") && count_field(j, "dim") != basis.size())
    throw InputError("declared dim does not match the basis length");
  for (const Mat& m : basis)
    if (j.contains("ambient_size") && (m.rows() != count_field(j, "ambient_size") || m.cols() != m.rows()))
      throw InputError("basis matrix does not match the declared ambient size");
  return MatrixLieAlgebra::make(std::move(basis), string_field(j, "name"));
}

GradedAlgebra graded_from_json(const Json& j) {
  if (string_field(j, "kind") != "graded_algebra") throw InputError("not a graded_algebra document");
  GradedAlgebra g;
  const std::string fam = string_field(j, "family");
  const auto f = parse_family(fam);
  if (!f) throw InputError("unknown family '" + fam + "'");
  g.family = *f;
  g.params = params_from_json(field(j, "params"));
  g.algebra = std::make_shared<MatrixLieAlgebra>(algebra_from_json(field(j, "algebra")));
  g.grading_element = vec_from_json(field(j, "grading_element"));
  g.minus_one = index_list(field(j, "minus_one"));
  g.zero = index_list(field(j, "zero"));
  g.plus_one = index_list(field(j, "plus_one"));
  g.flip_element = mat_from_json(field(j, "flip_element"));
  if (j.contains("complex_structure")) g.complex_structure = mat_from_json(j.at("complex_structure"));
  if (j.contains("ambient_form")) g.ambient_form = mat_from_json(j.at("ambient_form"));

  const size_t d = g.g().dim();
  if (g.grading_element.size() != d) throw InputError("grading element has the wrong length");
  std::vector<int> seen(d, 0);
  for (const auto* s : {&g.minus_one, &g.zero, &g.plus_one})
    for (size_t i : *s) {
      if (i >= d) throw InputError("graded index out of range");
      seen[i]++;
    }
  for (int s : seen)
    if (s != 1) throw InputError("graded index sets must partition the basis");
  const size_t n = g.g().ambient_size();
  if (g.flip_element.rows() != n || g.flip_element.cols() != n)
    throw InputError("flip element does not match the ambient size");
  if (j.contains("dim_g") && count_field(j, "dim_g") != d) throw InputError("dim_g does not match the algebra");
  if (j.contains("dim_gm1") && count_field(j, "dim_gm1") != g.minus_one.size())
    throw InputError("dim_gm1 does not match minus_one");
  return g;
}

SymmetricPair pair_from_json(const Json& j) {
  if (string_field(j, "kind") != "symmetric_pair") throw InputError("not a symmetric_pair document");
  const Json& a = field(j, "algebra");
  std::vector<Mat> basis = basis_from_json(field(a, "basis"));
  const size_t h = count_field(j, "dim_h");
  if (h > basis.size()) throw InputError("dim_h exceeds the basis length");
  std::vector<Mat> hb(basis.begin(), basis.begin() + static_cast<std::ptrdiff_t>(h));
  std::vector<Mat> mb(basis.begin() + static_cast<std::ptrdiff_t>(h), basis.end());
  std::optional<Mat> conj;
  if (j.contains("conjugator")) conj = mat_from_json(j.at("conjugator"));
  SymmetricPair p = make_pair_split(std::move(hb), std::move(mb), std::move(conj), string_field(a, "name"),
                                    string_field(j, "family"), params_from_json(field(j, "params")));
  if (j.contains("dim_k") && count_field(j, "dim_k") != p.dim()) throw InputError("dim_k does not match the basis");
  return p;
}

Extension extension_from_json(const Json& j) {
  if (string_field(j, "kind") != "extension") throw InputError("not an extension document");
  SymmetricPair p = pair_from_json(field(j, "pair"));
  GradedAlgebra g = graded_from_json(field(j, "target"));
  Extension e = make_extension(std::move(p), std::move(g), mat_from_json(field(j, "alpha")));
  const Mat b2 = mat_from_json(field(j, "b2"));
  if (b2.rows() != e.b2.rows() || b2.cols() != e.b2.cols()) throw InputError("b2 has the wrong shape");
  e.b2 = b2;
  return e;
}

// ---------------------------------------------------------------------------

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

Json extension_report(const Extension& e) {
  Json j;
  j["pair"] = e.pair.name();
  j["target"] = e.target.g().name();
  const ValidationReport r = validate(e);
  j["valid"] = r.ok();
  j["axioms"] = to_json(r);
  if (!r.ok()) return j;
  const Curvature c = curvature(e);
  j["torsion_free"] = c.torsion_free();
  j["flat"] = c.flat();
  j["kappa_nonzero_entries"] = c.nonzero_entries();
  j["kappa_by_grade"] = {{"-1", c.nonzero_entries(-1)}, {"0", c.nonzero_entries(0)}, {"1", c.nonzero_entries(1)}};
  if ((e.target.family == Family::projective || e.target.family == Family::h_projective) &&
      e.pair.m_dim() >= (e.target.family == Family::projective ? 2u : 4u)) {
    try {
      const B2Solution s = solve_projective_b2(e);
      j["b2_unique"] = s.homogeneous_kernel_dim == 0;
      j["b2_matches"] = s.b2 == e.b2;
      j["normal_after_solve"] = s.residual_zero;
    } catch (const InvariantError& ex) {
      j["b2_unique"] = false;
      j["b2_error"] = ex.what();
    }
  } else {
    j["b2_unique"] = nullptr;
  }
  return j;
}

}  // namespace cartan
