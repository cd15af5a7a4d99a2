#include "cartan/graded.hpp"

#include <algorithm>
#include <sstream>

#include "cartan/classical.hpp"

namespace cartan {

std::string to_string(Family f) {
  switch (f) {
    case Family::projective: return "projective";
    case Family::h_projective: return "h_projective";
    case Family::conformal: return "conformal";
    case Family::complex_conformal: return "complex_conformal";
    case Family::quaternionic: return "quaternionic";
    case Family::para_quaternionic: return "para_quaternionic";
    case Family::grassmannian: return "grassmannian";
    case Family::lagrangean: return "lagrangean";
    case Family::spinorial: return "spinorial";
    case Family::su_pp: return "su_pp";
  }
  return "?";
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> f{Family::projective,   Family::h_projective,
                                     Family::conformal,    Family::complex_conformal,
                                     Family::quaternionic, Family::para_quaternionic,
                                     Family::grassmannian, Family::lagrangean,
                                     Family::spinorial,    Family::su_pp};
  return f;
}

std::optional<Family> parse_family(std::string_view s) {
  for (Family f : all_families())
    if (to_string(f) == s) return f;
  return std::nullopt;
}

long param_int(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw InputError("missing parameter '" + key + "'");
  try {
    size_t used = 0;
    const long v = std::stol(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("junk");
    return v;
  } catch (const std::exception&) {
    throw InputError("parameter '" + key + "' is not an integer: '" + it->second + "'");
  }
}

long param_int(const Params& p, const std::string& key, long fallback) {
  return p.count(key) ? param_int(p, key) : fallback;
}

std::string param_str(const Params& p, const std::string& key, const std::string& fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

std::string to_string(const Params& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ',';
    out += k + '=' + v;
  }
  return out;
}

Params parse_params(std::string_view text) {
  Params p;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(pos, comma - pos);
    const size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size())
      throw InputError("malformed parameter '" + std::string(item) + "', expected key=value");
    p[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    pos = comma + 1;
  }
  return p;
}

Vec GradedAlgebra::restrict(std::span<const Rational> coords, std::span<const size_t> idx) {
  Vec out;
  out.reserve(idx.size());
  for (size_t i : idx) out.push_back(coords[i]);
  return out;
}

std::vector<size_t> GradedAlgebra::degree_of_index() const {
  std::vector<size_t> deg(algebra->dim(), 1);
  for (size_t i : minus_one) deg[i] = 0;
  for (size_t i : plus_one) deg[i] = 2;
  return deg;
}

namespace {

size_t positive(const Params& p, const std::string& key, long min = 1) {
  const long v = param_int(p, key);
  if (v < min)
    throw InputError("parameter '" + key + "' must be at least " + std::to_string(min));
  return static_cast<size_t>(v);
}

void check_ambient(size_t n) {
  if (n > kMaxAmbient)
    throw InputError("realified ambient size " + std::to_string(n) + " exceeds the bound " +
                     std::to_string(kMaxAmbient));
}

// Independent subset of the given matrices, in order.
std::vector<Mat> independent(std::vector<Mat> mats) {
  if (mats.empty()) return mats;
  std::vector<Vec> cols;
  for (const auto& m : mats) cols.push_back(flatten(m));
  const Mat cs = Mat::from_columns(cols[0].size(), cols);
  const SparseEchelon e = sparse_rref(to_sparse_rows(cs), cs.cols());
  std::vector<Mat> out;
  for (size_t c : e.pivot_cols) out.push_back(std::move(mats[c]));
  return out;
}

Mat block_diag_scalars(const std::vector<std::pair<size_t, Rational>>& blocks) {
  size_t n = 0;
  for (const auto& b : blocks) n += b.first;
  Mat m(n, n);
  size_t at = 0;
  for (const auto& [size, v] : blocks) {
    for (size_t i = 0; i < size; ++i) m(at + i, at + i) = v;
    at += size;
  }
  return m;
}

GradedAlgebra sl_type(size_t p, size_t q, Field k, Family family, const Params& params,
                      const std::string& name) {
  const size_t n = p + q;
  check_ambient(n * field_dim(k));
  const Rational np(static_cast<long>(n));
  const Mat e = realify(block_diag_scalars({{p, Rational(static_cast<long>(q)) / np},
                                            {q, -Rational(static_cast<long>(p)) / np}}),
                        k);
  const Mat flip = realify(block_diag_scalars({{p, Rational(-1)}, {q, Rational(1)}}), k);
  GradedAlgebra g = grade_by_element(sl_basis(n, k), e, flip, family, params, name);
  if (k == Field::C) g.complex_structure = complex_structure(n);
  return g;
}

Mat conformal_form(const Mat& gram) {
  const size_t m = gram.rows();
  Mat q(m + 2, m + 2);
  q(0, m + 1) = 1;
  q(m + 1, 0) = 1;
  q.set_block(1, 1, gram);
  return q;
}

Mat conformal_grading(size_t m) {
  Mat e(m + 2, m + 2);
  e(0, 0) = 1;
  e(m + 1, m + 1) = -1;
  return e;
}

Mat conformal_flip(size_t m) {
  Mat f = Mat::identity(m + 2);
  f(0, 0) = -1;
  f(m + 1, m + 1) = -1;
  return f;
}

Mat half_split_grading(size_t n) {
  return block_diag_scalars({{n, Rational(1, 2)}, {n, Rational(-1, 2)}});
}

Mat half_split_flip(size_t n) { return block_diag_scalars({{n, Rational(-1)}, {n, Rational(1)}}); }

Field field_param(const Params& p, std::initializer_list<Field> allowed) {
  const std::string s = param_str(p, "field", "R");
  const auto f = parse_field(s);
  if (!f || std::find(allowed.begin(), allowed.end(), *f) == allowed.end())
    throw InputError("unsupported field '" + s + "' for this family");
  return *f;
}

}  // namespace

GradedAlgebra grade_by_element(std::vector<Mat> basis, const Mat& e, const Mat& flip,
                               Family family, Params params, std::string name) {
  std::vector<Mat> parts[3];
  for (const auto& x : basis) {
    const Mat a = commutator(e, x);
    const Mat a2 = commutator(e, a);
    Mat plus = (a2 + a) * Rational(1, 2);
    Mat minus = (a2 - a) * Rational(1, 2);
    Mat zero = x - a2;
    if (!minus.is_zero()) parts[0].push_back(std::move(minus));
    if (!zero.is_zero()) parts[1].push_back(std::move(zero));
    if (!plus.is_zero()) parts[2].push_back(std::move(plus));
  }
  std::vector<Mat> ordered;
  GradedAlgebra g;
  std::vector<size_t>* lists[3] = {&g.minus_one, &g.zero, &g.plus_one};
  for (int k = 0; k < 3; ++k)
    for (Mat& m : independent(std::move(parts[k]))) {
      lists[k]->push_back(ordered.size());
      ordered.push_back(std::move(m));
    }
  auto alg = std::make_shared<MatrixLieAlgebra>(MatrixLieAlgebra::make(std::move(ordered), std::move(name)));
  const auto ec = alg->coordinates(e);
  if (!ec) throw InvariantError("grading element lies outside '" + alg->name() + "'");
  g.algebra = std::move(alg);
  g.family = family;
  g.params = std::move(params);
  g.grading_element = *ec;
  g.flip_element = flip;
  return g;
}

GradedAlgebra build_conformal(const Mat& gram, std::string name) {
  const size_t m = gram.rows();
  check_ambient(m + 2);
  const Mat q = conformal_form(gram);
  Params params;
  params["m"] = std::to_string(m);
  GradedAlgebra g = grade_by_element(so_basis(q), conformal_grading(m), conformal_flip(m),
                                     Family::conformal, params, std::move(name));
  g.ambient_form = q;
  return g;
}

GradedAlgebra build_complex_conformal(const Mat& gram, std::string name) {
  const size_t m = gram.rows();
  check_ambient(2 * (m + 2));
  const Mat q = conformal_form(gram);
  Params params;
  params["m"] = std::to_string(m);
  GradedAlgebra g = grade_by_element(complexify(so_basis(q)), realify(conformal_grading(m), Field::C),
                                     realify(conformal_flip(m), Field::C),
                                     Family::complex_conformal, params, std::move(name));
  g.complex_structure = complex_structure(m + 2);
  g.ambient_form = realify(q, Field::C);
  return g;
}

GradedAlgebra build_graded(Family family, const Params& params) {
  const std::string tag = to_string(family) + "(" + to_string(params) + ")";
  switch (family) {
    case Family::projective: {
      const size_t n = positive(params, "n");
      return sl_type(1, n, Field::R, family, params, "sl(" + std::to_string(n + 1) + ",R)");
    }
    case Family::h_projective: {
      const size_t n = positive(params, "n");
      return sl_type(1, n, Field::C, family, params, "sl(" + std::to_string(n + 1) + ",C)");
    }
    case Family::quaternionic: {
      const size_t n = positive(params, "n");
      return sl_type(1, n, Field::H, family, params, "sl(" + std::to_string(n + 1) + ",H)");
    }
    case Family::para_quaternionic: {
      const size_t n = positive(params, "n");
      return sl_type(2, n, Field::R, family, params, "sl(" + std::to_string(n + 2) + ",R)");
    }
    case Family::grassmannian: {
      const size_t p = positive(params, "p"), q = positive(params, "q");
      const Field k = field_param(params, {Field::R, Field::C, Field::H});
      return sl_type(p, q, k, family, params,
                     "sl(" + std::to_string(p + q) + "," + to_string(k) + ")");
    }
    case Family::conformal: {
      const size_t p = static_cast<size_t>(param_int(params, "p"));
      const size_t q = static_cast<size_t>(param_int(params, "q", 0));
      if (param_int(params, "p") < 0 || param_int(params, "q", 0) < 0 || p + q == 0)
        throw InputError("conformal needs p, q >= 0 with p + q >= 1");
      GradedAlgebra g = build_conformal(indefinite_identity(p, q),
                                        "so(" + std::to_string(p + 1) + "," + std::to_string(q + 1) + ")");
      g.params = params;
      return g;
    }
    case Family::complex_conformal: {
      const size_t n = positive(params, "n");
      GradedAlgebra g = build_complex_conformal(Mat::identity(n), "so(" + std::to_string(n + 2) + ",C)");
      g.params = params;
      return g;
    }
    case Family::lagrangean: {
      const size_t n = positive(params, "n");
      const Field k = field_param(params, {Field::R, Field::C});
      check_ambient(2 * n * field_dim(k));
      const Mat w = standard_symplectic(n);
      std::vector<Mat> basis = sp_basis(w);
      if (k == Field::C) basis = complexify(basis);
      GradedAlgebra g = grade_by_element(std::move(basis), realify(half_split_grading(n), k),
                                         realify(half_split_flip(n), k), family, params,
                                         "sp(" + std::to_string(2 * n) + "," + to_string(k) + ")");
      if (k == Field::C) g.complex_structure = complex_structure(2 * n);
      g.ambient_form = realify(w, k);
      return g;
    }
    case Family::spinorial: {
      const size_t n = positive(params, "n", 3);
      const Field k = field_param(params, {Field::R, Field::C});
      check_ambient(2 * n * field_dim(k));
      const Mat q = split_form(n);
      std::vector<Mat> basis = so_basis(q);
      if (k == Field::C) basis = complexify(basis);
      const std::string name = k == Field::R
                                   ? "so(" + std::to_string(n) + "," + std::to_string(n) + ")"
                                   : "so(" + std::to_string(2 * n) + ",C)";
      GradedAlgebra g = grade_by_element(std::move(basis), realify(half_split_grading(n), k),
                                         realify(half_split_flip(n), k), family, params, name);
      if (k == Field::C) g.complex_structure = complex_structure(2 * n);
      g.ambient_form = realify(q, k);
      return g;
    }
    case Family::su_pp: {
      const size_t n = positive(params, "n");
      check_ambient(4 * n);
      const Mat h = realify(split_form(n), Field::C);
      GradedAlgebra g = grade_by_element(form_preserving_basis(2 * n, Field::C, h, true),
                                         realify(half_split_grading(n), Field::C),
                                         realify(half_split_flip(n), Field::C), family, params,
                                         "su(" + std::to_string(n) + "," + std::to_string(n) + ")");
      g.ambient_form = h;
      return g;
    }
  }
  throw InputError("unsupported family " + tag);
}

GradedCheck check_graded(const GradedAlgebra& g) {
  GradedCheck c;
  std::ostringstream why;
  const MatrixLieAlgebra& a = *g.algebra;
  const size_t d = a.dim();
  const auto deg = g.degree_of_index();

  c.jacobi = !a.jacobi_violation().has_value();
  if (!c.jacobi) why << "Jacobi identity fails; ";

  const Mat ade = a.ad(g.grading_element);
  c.grading_eigenvalues = true;
  for (size_t j = 0; j < d && c.grading_eigenvalues; ++j)
    for (size_t i = 0; i < d; ++i) {
      const Rational expect = i == j ? Rational(static_cast<long>(deg[j]) - 1) : Rational(0);
      if (ade(i, j) != expect) {
        c.grading_eigenvalues = false;
        why << "ad(E) is not scalar on basis element " << j << "; ";
        break;
      }
    }

  c.bracket_degrees = true;
  for (size_t i = 0; i < d && c.bracket_degrees; ++i)
    for (size_t j = 0; j < d; ++j) {
      const long target = static_cast<long>(deg[i] + deg[j]) - 2;
      for (const auto& t : a.bracket_terms(i, j))
        if (static_cast<long>(deg[t.index]) - 1 != target) {
          c.bracket_degrees = false;
          why << "[X" << i << ", X" << j << "] has the wrong degree; ";
          break;
        }
      if (!c.bracket_degrees) break;
    }

  Mat g0(d, g.zero.size());
  for (size_t k = 0; k < g.zero.size(); ++k) g0(g.zero[k], k) = 1;
  c.no_ideal_in_g0 = a.largest_ideal_in(g0).cols() == 0;
  if (!c.no_ideal_in_g0) why << "g_0 contains a nonzero ideal; ";

  const Mat& f = g.flip_element;
  c.flip_signs = f.rows() == a.ambient_size() && f * f == Mat::identity(a.ambient_size());
  if (c.flip_signs) {
    const auto finv = inverse(f);
    for (size_t i = 0; i < d; ++i) {
      const Mat conj = f * a[i] * *finv;
      const Mat expect = deg[i] == 1 ? a[i] : -a[i];
      if (!(conj == expect)) {
        c.flip_signs = false;
        why << "flip element acts with the wrong sign on basis element " << i << "; ";
        break;
      }
    }
  } else {
    why << "flip element does not square to the identity; ";
  }

  c.dual_dimensions = g.minus_one.size() == g.plus_one.size() && !g.minus_one.empty();
  if (!c.dual_dimensions) why << "dim g_-1 != dim g_1; ";

  if (g.complex_structure) {
    const Mat& j = *g.complex_structure;
    const size_t n = a.ambient_size();
    c.complex_structure = j * j == -Mat::identity(n);
    for (size_t i = 0; i < d && c.complex_structure; ++i)
      c.complex_structure = commutator(j, a[i]).is_zero() && a.coordinates(j * a[i]).has_value();
    if (!c.complex_structure) why << "complex structure is not compatible; ";
  }
  c.detail = why.str();
  return c;
}

}  // namespace cartan
