#include "cartan/extension.hpp"

#include <sstream>

#include "cartan/classical.hpp"

namespace cartan {

namespace {

// Position of each target index inside minus_one / plus_one (or npos).
std::vector<size_t> positions(const std::vector<size_t>& idx, size_t dim) {
  std::vector<size_t> pos(dim, static_cast<size_t>(-1));
  for (size_t a = 0; a < idx.size(); ++a) pos[idx[a]] = a;
  return pos;
}

Vec unit_vec(size_t n, size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

// Restriction of a coordinate map on g (d x d) to the sub-basis idx, which
// it must preserve.
Mat restrict_map(const Mat& m, const std::vector<size_t>& idx) {
  Mat r(idx.size(), idx.size());
  const auto pos = positions(idx, m.rows());
  for (size_t b = 0; b < idx.size(); ++b)
    for (size_t i = 0; i < m.rows(); ++i) {
      if (is_zero(m(i, idx[b]))) continue;
      if (pos[i] == static_cast<size_t>(-1))
        throw InvariantError("coordinate map does not preserve the graded piece");
      r(pos[i], b) = m(i, idx[b]);
    }
  return r;
}

Mat isotropy_matrix(const SymmetricPair& p, size_t i) {
  const size_t h = p.h_dim, m = p.m_dim();
  Mat a(m, m);
  for (size_t c = 0; c < m; ++c)
    for (const auto& t : p.k->bracket_terms(i, h + c)) {
      if (t.index < h) throw InvariantError("[h, m] is not contained in m");
      a(t.index - h, c) = t.coeff;
    }
  return a;
}

// alpha applied to a coordinate vector on k.
Vec apply(const Mat& alpha, const Vec& x) { return alpha * std::span<const Rational>(x); }

std::string join_witness(const std::string& kind, size_t i) { return kind + "[" + std::to_string(i) + "]"; }

}  // namespace

Mat Extension::frame() const {
  const size_t h = pair.h_dim, m = pair.m_dim();
  Mat f(target.minus_one.size(), m);
  for (size_t a = 0; a < target.minus_one.size(); ++a)
    for (size_t j = 0; j < m; ++j) f(a, j) = alpha(target.minus_one[a], h + j);
  return f;
}

Extension make_extension(SymmetricPair pair, GradedAlgebra target, Mat alpha) {
  if (alpha.rows() != target.algebra->dim() || alpha.cols() != pair.dim())
    throw InputError("alpha must be " + std::to_string(target.algebra->dim()) + " x " +
                     std::to_string(pair.dim()) + ", got " + std::to_string(alpha.rows()) + " x " +
                     std::to_string(alpha.cols()));
  Extension e{std::move(pair), std::move(target), std::move(alpha), {}};
  const size_t nm = e.target.minus_one.size(), np = e.target.plus_one.size();
  e.b2 = Mat(np, nm);
  if (e.pair.m_dim() == nm) {
    if (auto inv = inverse(e.frame())) {
      Mat upper(np, e.pair.m_dim());
      for (size_t b = 0; b < np; ++b)
        for (size_t j = 0; j < e.pair.m_dim(); ++j)
          upper(b, j) = e.alpha(e.target.plus_one[b], e.pair.h_dim + j);
      e.b2 = upper * *inv;
    }
  }
  return e;
}

std::vector<Mat> g0_action(const GradedAlgebra& g) {
  const auto pos = positions(g.minus_one, g.algebra->dim());
  std::vector<Mat> out;
  for (size_t z : g.zero) {
    Mat a(g.minus_one.size(), g.minus_one.size());
    for (size_t b = 0; b < g.minus_one.size(); ++b)
      for (const auto& t : g.algebra->bracket_terms(z, g.minus_one[b])) {
        if (pos[t.index] == static_cast<size_t>(-1))
          throw InvariantError("[g_0, g_-1] leaves g_-1");
        a(pos[t.index], b) = t.coeff;
      }
    out.push_back(std::move(a));
  }
  return out;
}

Extension extension_from_frame(SymmetricPair pair, GradedAlgebra target, const Mat& frame,
                               std::optional<Mat> b2) {
  const size_t h = pair.h_dim, m = pair.m_dim(), d = target.algebra->dim();
  const size_t nm = target.minus_one.size(), np = target.plus_one.size();
  if (m != nm)
    throw StructuralError("no G_0-structure possible at these ranks: dim m = " + std::to_string(m) +
                          ", dim g_-1 = " + std::to_string(nm));
  if (frame.rows() != nm || frame.cols() != m) throw InputError("frame has the wrong shape");
  const auto finv = inverse(frame);
  if (!finv) throw InputError("frame is not invertible");
  const Mat b = b2 ? *b2 : Mat(np, nm);
  if (b.rows() != np || b.cols() != nm) throw InputError("b2 has the wrong shape");

  const std::vector<Mat> action = g0_action(target);
  Mat alpha(d, pair.dim());
  for (size_t i = 0; i < h; ++i) {
    const Mat t = frame * isotropy_matrix(pair, i) * *finv;
    const auto c = coordinates_in_span(action, t);
    if (!c)
      throw InvariantError("frame does not carry h into g_0: basis element " + std::to_string(i) +
                           " of h acts outside ad(g_0) on g_-1");
    for (size_t k = 0; k < target.zero.size(); ++k) alpha(target.zero[k], i) = (*c)[k];
  }
  const Mat upper = b * frame;
  for (size_t j = 0; j < m; ++j) {
    for (size_t a = 0; a < nm; ++a) alpha(target.minus_one[a], h + j) = frame(a, j);
    for (size_t a = 0; a < np; ++a) alpha(target.plus_one[a], h + j) = upper(a, j);
  }
  Extension e{std::move(pair), std::move(target), std::move(alpha), b};
  return e;
}

Extension with_b2(const Extension& ext, const Mat& b2) {
  const size_t np = ext.target.plus_one.size(), nm = ext.target.minus_one.size();
  if (b2.rows() != np || b2.cols() != nm) throw InputError("b2 has the wrong shape");
  Extension e = ext;
  const Mat upper = b2 * ext.frame();
  for (size_t j = 0; j < ext.pair.m_dim(); ++j)
    for (size_t a = 0; a < np; ++a) e.alpha(ext.target.plus_one[a], ext.pair.h_dim + j) = upper(a, j);
  e.b2 = b2;
  return e;
}

Extension inclusion_extension(SymmetricPair pair, GradedAlgebra target,
                              const std::function<Mat(const Mat&)>& embed) {
  const size_t d = target.algebra->dim();
  Mat alpha(d, pair.dim());
  for (size_t j = 0; j < pair.dim(); ++j) {
    const auto c = target.algebra->coordinates(embed((*pair.k)[j]));
    if (!c)
      throw InvariantError("embedding of '" + pair.name() + "' leaves '" + target.algebra->name() +
                           "' at basis element " + std::to_string(j));
    for (size_t i = 0; i < d; ++i) alpha(i, j) = (*c)[i];
  }
  return make_extension(std::move(pair), std::move(target), std::move(alpha));
}

// ---------------------------------------------------------------------------
// Inclusion rows

namespace {

std::string pstr(size_t v) { return std::to_string(v); }

size_t pint(const Params& p, const std::string& key, long fallback = -1) {
  const long v = fallback < 0 ? param_int(p, key) : param_int(p, key, fallback);
  return static_cast<size_t>(v);
}

// Change of basis sending the factor swap of a group-type pair to
// diag(-I, I) and the form F + (-F) to the split (F symmetric) or standard
// symplectic (F antisymmetric) form.
Mat group_type_basis(const Mat& f) {
  const size_t n = f.rows();
  const Mat id = Mat::identity(n);
  Mat b(2 * n, 2 * n);
  b.set_block(0, 0, id);
  b.set_block(0, n, id);
  b.set_block(n, 0, -id);
  b.set_block(n, n, id);
  return b * direct_sum(id, *inverse(f) * Rational(1, 2));
}

// Realified complex matrix with columns (e_2k - i e_2k+1) then (e_2k + i e_2k+1):
// eigenvectors of I (x) [[0,-1],[1,0]] for i and -i.
Mat so_complex_basis(size_t n) {
  Mat re(2 * n, 2 * n), im(2 * n, 2 * n);
  for (size_t k = 0; k < n; ++k) {
    re(2 * k, k) = 1;
    im(2 * k + 1, k) = -1;
    re(2 * k, n + k) = 1;
    im(2 * k + 1, n + k) = 1;
  }
  return realify(re, Field::C) + realify(im, Field::C) * complex_structure(2 * n);
}

}  // namespace

Params inclusion_row_target(Family family, const SymmetricPair& pair) {
  const Params& pp = pair.params;
  const std::string& pf = pair.family;
  Params t;
  auto fail = [&]() -> Params {
    throw UnsupportedError("no inclusion row for family " + to_string(family) + " and pair '" + pf + "'");
  };
  switch (family) {
    case Family::grassmannian:
      if (pf == "so_block" || pf == "su_block") {
        t["p"] = pstr(pint(pp, "a") + pint(pp, "c"));
        t["q"] = pstr(pint(pp, "b") + pint(pp, "d"));
        t["field"] = pf == "so_block" ? "R" : "C";
      } else if (pf == "sp_block") {
        t["p"] = pstr(2 * pint(pp, "p"));
        t["q"] = pstr(2 * pint(pp, "q"));
        t["field"] = "R";
      } else if (pf == "so_c_block") {
        t["p"] = pstr(pint(pp, "p"));
        t["q"] = pstr(pint(pp, "q"));
        t["field"] = "C";
      } else {
        return fail();
      }
      return t;
    case Family::para_quaternionic:
      if (pf == "so11_block" || pf == "so2_block")
        t["n"] = pstr(pint(pp, "k") + pint(pp, "l"));
      else if (pf == "sp_block" && pint(pp, "p") == 1)
        t["n"] = pstr(2 * pint(pp, "q"));
      else
        return fail();
      return t;
    case Family::quaternionic:
      if (pf == "sp1_sp")
        t["n"] = pstr(pint(pp, "p") + pint(pp, "q", 0));
      else if (pf == "so_star_block")
        t["n"] = pstr(pint(pp, "n"));
      else
        return fail();
      return t;
    case Family::lagrangean:
      if (pf == "group_type" && param_str(pp, "h", "") == "sp") {
        t["n"] = pstr(2 * pint(pp, "n"));
        t["field"] = "R";
        return t;
      }
      return fail();
    case Family::spinorial:
      if (pf == "group_type" && param_str(pp, "h", "") == "so") {
        t["n"] = pstr(pint(pp, "p") + pint(pp, "q", 0));
        t["field"] = "R";
        return t;
      }
      return fail();
    case Family::su_pp:
      if (pf == "so_complex") {
        t["n"] = pstr(pint(pp, "n"));
        return t;
      }
      return fail();
    default:
      return fail();
  }
}

Extension inclusion_row_extension(Family family, const SymmetricPair& pair) {
  GradedAlgebra target = build_graded(family, inclusion_row_target(family, pair));
  const Params& pp = pair.params;
  if (family == Family::lagrangean || family == Family::spinorial) {
    const Mat f = family == Family::lagrangean
                      ? standard_symplectic(pint(pp, "n"))
                      : indefinite_identity(pint(pp, "p"), pint(pp, "q", 0));
    const Mat m = group_type_basis(f);
    const Mat mi = *inverse(m);
    return inclusion_extension(pair, std::move(target), [&](const Mat& x) { return mi * x * m; });
  }
  if (family == Family::su_pp) {
    const Mat m = so_complex_basis(pint(pp, "n"));
    const Mat mi = *inverse(m);
    return inclusion_extension(pair, std::move(target),
                               [&](const Mat& x) { return mi * realify(x, Field::C) * m; });
  }
  return inclusion_extension(pair, std::move(target), [](const Mat& x) { return x; });
}

// ---------------------------------------------------------------------------
// Validation

bool ValidationReport::ok() const {
  for (const auto& a : axioms)
    if (!a.pass) return false;
  return true;
}

const Axiom& ValidationReport::at(const std::string& name) const {
  for (const auto& a : axioms)
    if (a.name == name) return a;
  throw InputError("no axiom named '" + name + "'");
}

ValidationReport validate(const Extension& ext) {
  const SymmetricPair& p = ext.pair;
  const GradedAlgebra& g = ext.target;
  const size_t h = p.h_dim, m = p.m_dim(), d = g.algebra->dim();
  if (m != g.minus_one.size())
    throw StructuralError("no G_0-structure possible at these ranks: dim m = " + std::to_string(m) +
                          ", dim g_-1 = " + std::to_string(g.minus_one.size()));
  if (ext.alpha.rows() != d || ext.alpha.cols() != p.dim())
    throw StructuralError("alpha has the wrong shape");
  const auto deg = g.degree_of_index();

  ValidationReport r;
  Axiom h_in_g0{kAxiomHtoG0, true, {}};
  for (size_t i = 0; i < h; ++i)
    for (size_t row = 0; row < d; ++row)
      if (deg[row] != 1 && !is_zero(ext.alpha(row, i))) {
        h_in_g0.pass = false;
        h_in_g0.witnesses.push_back(join_witness("h", i));
        break;
      }

  Axiom no_g0{kAxiomNoG0, true, {}};
  for (size_t j = 0; j < m; ++j)
    for (size_t z : g.zero)
      if (!is_zero(ext.alpha(z, h + j))) {
        no_g0.pass = false;
        no_g0.witnesses.push_back(join_witness("m", j));
        break;
      }

  Axiom frame{kAxiomFrame, true, {}};
  const Mat f = ext.frame();
  const Mat ker = kernel(f);
  if (ker.cols() > 0) {
    frame.pass = false;
    for (size_t c = 0; c < ker.cols(); ++c) {
      std::ostringstream w;
      w << "kernel vector (";
      for (size_t i = 0; i < ker.rows(); ++i) w << (i ? "," : "") << to_string(ker(i, c));
      w << ")";
      frame.witnesses.push_back(w.str());
    }
  }

  Axiom eq{kAxiomEquivariance, true, {}};
  const MatrixLieAlgebra& k = *p.k;
  for (size_t i = 0; i < h; ++i) {
    const Vec ai = ext.image(i);
    for (size_t j = 0; j < p.dim(); ++j) {
      Vec lhs(d);
      for (const auto& t : k.bracket_terms(i, j))
        for (size_t r = 0; r < d; ++r)
          if (!is_zero(ext.alpha(r, t.index))) lhs[r] += t.coeff * ext.alpha(r, t.index);
      const Vec rhs = g.algebra->bracket(ai, ext.image(j));
      if (lhs != rhs) {
        eq.pass = false;
        eq.witnesses.push_back("[h[" + std::to_string(i) + "], k[" + std::to_string(j) + "]]");
      }
    }
  }
  r.axioms = {std::move(h_in_g0), std::move(no_g0), std::move(frame), std::move(eq)};
  return r;
}

// ---------------------------------------------------------------------------
// Curvature

namespace {

size_t packed(size_t i, size_t j, size_t m) { return i * m - i * (i + 1) / 2 + (j - i - 1); }

Vec kappa(const Extension& ext, const Vec& x, const Vec& y) {
  Vec out = ext.target.algebra->bracket(apply(ext.alpha, x), apply(ext.alpha, y));
  const Vec xy = ext.pair.k->bracket(x, y);
  const Vec axy = apply(ext.alpha, xy);
  for (size_t r = 0; r < out.size(); ++r) out[r] -= axy[r];
  return out;
}

}  // namespace

Vec Curvature::at(size_t i, size_t j) const {
  if (i == j) return Vec(degree.size());
  if (i < j) return values[packed(i, j, m_dim)];
  return scaled(values[packed(j, i, m_dim)], Rational(-1));
}

Vec Curvature::component(size_t i, size_t j, int grade) const {
  Vec v = at(i, j);
  for (size_t r = 0; r < v.size(); ++r)
    if (static_cast<int>(degree[r]) - 1 != grade) v[r] = 0;
  return v;
}

size_t Curvature::nonzero_entries() const {
  size_t n = 0;
  for (const auto& v : values)
    for (const auto& x : v) n += !is_zero(x);
  return n;
}

size_t Curvature::nonzero_entries(int grade) const {
  size_t n = 0;
  for (const auto& v : values)
    for (size_t r = 0; r < v.size(); ++r) n += !is_zero(v[r]) && static_cast<int>(degree[r]) - 1 == grade;
  return n;
}

Curvature curvature(const Extension& ext) {
  const size_t h = ext.pair.h_dim, m = ext.pair.m_dim(), dk = ext.pair.dim();
  Curvature c;
  c.m_dim = m;
  c.degree = ext.target.degree_of_index();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) c.values.push_back(kappa(ext, unit_vec(dk, h + i), unit_vec(dk, h + j)));
  return c;
}

bool torsion_free(const Extension& ext) { return curvature(ext).torsion_free(); }
bool is_flat(const Extension& ext) { return curvature(ext).flat(); }

// ---------------------------------------------------------------------------
// Complex structures and holomorphy

std::optional<Mat> target_complex_structure(const GradedAlgebra& g) {
  if (!g.complex_structure) return std::nullopt;
  const MatrixLieAlgebra& a = *g.algebra;
  Mat j(a.dim(), a.dim());
  for (size_t c = 0; c < a.dim(); ++c) {
    const Vec v = a.coordinates_checked(*g.complex_structure * a[c]);
    for (size_t r = 0; r < a.dim(); ++r) j(r, c) = v[r];
  }
  return j;
}

std::optional<Mat> target_conjugation(const GradedAlgebra& g) {
  if (!g.complex_structure) return std::nullopt;
  const MatrixLieAlgebra& a = *g.algebra;
  const Mat cc = complex_conjugation(a.ambient_size() / 2);
  Mat out(a.dim(), a.dim());
  for (size_t c = 0; c < a.dim(); ++c) {
    const auto v = a.coordinates(cc * a[c] * cc);
    if (!v) return std::nullopt;
    for (size_t r = 0; r < a.dim(); ++r) out(r, c) = (*v)[r];
  }
  return out;
}

Holomorphy is_holomorphic(const Extension& ext, const Mat& j_k, const Mat& j_g) {
  const size_t dk = ext.pair.dim(), dg = ext.target.algebra->dim();
  if (j_k.rows() != dk || j_k.cols() != dk || j_g.rows() != dg || j_g.cols() != dg)
    throw InputError("complex structures have the wrong shape");
  if (!(j_k * j_k == -Mat::identity(dk))) throw InputError("J_k does not square to -I");
  if (!(j_g * j_g == -Mat::identity(dg))) throw InputError("J_g does not square to -I");
  Holomorphy h;
  h.holomorphic = ext.alpha * j_k == j_g * ext.alpha;
  if (h.holomorphic)
    if (auto c = target_conjugation(ext.target)) h.conjugate = make_extension(ext.pair, ext.target, *c * ext.alpha);
  return h;
}

// ---------------------------------------------------------------------------
// Normality and b2

namespace {

// Trace-dual basis of g_1 to the g_-1 basis, as target coordinate vectors.
std::vector<Vec> dual_basis(const GradedAlgebra& g) {
  const MatrixLieAlgebra& a = *g.algebra;
  const size_t n = g.minus_one.size();
  Mat pairing(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t b = 0; b < n; ++b) pairing(i, b) = trace_of_product(a[g.minus_one[i]], a[g.plus_one[b]]);
  const auto inv = inverse(pairing);
  if (!inv) throw InvariantError("trace pairing of g_-1 and g_1 is degenerate");
  std::vector<Vec> z;
  for (size_t i = 0; i < n; ++i) {
    Vec v(a.dim());
    for (size_t b = 0; b < n; ++b) v[g.plus_one[b]] = (*inv)(b, i);
    z.push_back(std::move(v));
  }
  return z;
}

size_t complex_rank(const Extension& ext) {
  const Family f = ext.target.family;
  if (f != Family::projective && f != Family::h_projective)
    throw UnsupportedError("b2 normalization is only defined for projective and h_projective targets, got " +
                           to_string(f));
  const size_t n = ext.target.minus_one.size() / (f == Family::h_projective ? 2 : 1);
  if (n < 2) throw UnsupportedError("b2 normalization needs n >= 2 (the homogeneous system degenerates at n = 1)");
  if (ext.pair.m_dim() != ext.target.minus_one.size())
    throw StructuralError("no G_0-structure possible at these ranks");
  return n;
}

}  // namespace

Mat codifferential(const Extension& ext) {
  const GradedAlgebra& g = ext.target;
  const size_t n = g.minus_one.size(), h = ext.pair.h_dim, dk = ext.pair.dim();
  if (ext.pair.m_dim() != n) throw StructuralError("no G_0-structure possible at these ranks");
  const auto finv = inverse(ext.frame());
  if (!finv) throw InputError("frame is not invertible");
  // u_j = frame^-1 X^j in k coordinates.
  std::vector<Vec> u(n, Vec(dk));
  for (size_t j = 0; j < n; ++j)
    for (size_t p = 0; p < n; ++p) u[j][h + p] = (*finv)(p, j);
  const std::vector<Vec> z = dual_basis(g);
  Mat out(g.algebra->dim(), n);
  for (size_t j = 0; j < n; ++j) {
    Vec acc(g.algebra->dim());
    for (size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      const Vec kij = kappa(ext, u[j], u[i]);
      acc = add(acc, g.algebra->bracket(z[i], kij));
    }
    for (size_t r = 0; r < acc.size(); ++r) out(r, j) = acc[r];
  }
  return out;
}

B2System projective_b2_system(const Extension& ext) {
  complex_rank(ext);
  const GradedAlgebra& g = ext.target;
  const size_t n = g.minus_one.size();
  B2System s;
  s.unknowns = all_matrices_basis(n);
  if (g.family == Family::h_projective) {
    const Mat j = *target_complex_structure(g);
    const Mat jm = restrict_map(j, g.minus_one), jp = restrict_map(j, g.plus_one);
    s.unknowns = kernel_of_map(s.unknowns, [&](const Mat& b) { return b * jm - jp * b; });
  }
  const Mat c = codifferential(with_b2(ext, Mat(n, n)));
  const Vec cf = flatten(c);
  std::vector<Vec> cols;
  for (const Mat& b : s.unknowns) {
    Vec v = flatten(codifferential(with_b2(ext, b)));
    for (size_t r = 0; r < v.size(); ++r) v[r] -= cf[r];
    cols.push_back(std::move(v));
  }
  s.matrix = Mat::from_columns(cf.size(), cols);
  s.rhs = Mat::column(scaled(cf, Rational(-1)));
  return s;
}

B2Solution solve_projective_b2(const Extension& ext) {
  const B2System s = projective_b2_system(ext);
  const SolutionSet sol = solve_linear(s.matrix, s.rhs);
  if (!sol.consistent) throw InvariantError("the b2 system is inconsistent");
  const size_t n = ext.target.minus_one.size();
  Mat b2(n, n);
  for (size_t k = 0; k < s.unknowns.size(); ++k) b2 += s.unknowns[k] * sol.particular(k, 0);
  B2Solution out{b2, with_b2(ext, b2), sol.kernel.cols(), false};
  if (out.homogeneous_kernel_dim != 0)
    throw InvariantError("the homogeneous b2 system has a nonzero kernel of dimension " +
                         std::to_string(out.homogeneous_kernel_dim));
  out.residual_zero = codifferential(out.normalized).is_zero();
  if (!out.residual_zero) throw InvariantError("d* kappa does not vanish after substituting b2");
  return out;
}

// ---------------------------------------------------------------------------
// Equivalence

std::string to_string(Equivalence e) {
  switch (e) {
    case Equivalence::Equivalent: return "equivalent";
    case Equivalence::NotEquivalent: return "not_equivalent";
    case Equivalence::Undecided: return "undecided";
  }
  return "?";
}

std::optional<Mat> conformal_gram(const GradedAlgebra& g) {
  if (g.family != Family::conformal || !g.ambient_form) return std::nullopt;
  const MatrixLieAlgebra& a = *g.algebra;
  std::vector<Vec> v;
  for (size_t i : g.minus_one) v.push_back(a[i].col(0));
  const size_t n = v.size();
  Mat gram(n, n);
  for (size_t i = 0; i < n; ++i) {
    const Vec qv = *g.ambient_form * std::span<const Rational>(v[i]);
    for (size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (size_t r = 0; r < qv.size(); ++r) s += qv[r] * v[j][r];
      gram(j, i) = s;
    }
  }
  return gram;
}

namespace {

bool normalizes(const Mat& t, const Mat& tinv, const std::vector<Mat>& span) {
  for (const Mat& a : span)
    if (!coordinates_in_span(span, t * a * tinv)) return false;
  return true;
}

bool conformal_member(const Mat& t, const Mat& gram) {
  const Mat lhs = t.transpose() * gram * t;
  for (size_t i = 0; i < gram.rows(); ++i)
    for (size_t j = 0; j < gram.cols(); ++j)
      if (!is_zero(gram(i, j))) {
        const Rational lambda = lhs(i, j) / gram(i, j);
        return !is_zero(lambda) && lhs == gram * lambda;
      }
  return false;
}

}  // namespace

EquivalenceResult frames_equivalent(const Extension& a, const Extension& b, std::span<const Mat> autos) {
  if (a.pair.name() != b.pair.name() || a.pair.dim() != b.pair.dim() || a.pair.h_dim != b.pair.h_dim || a.target.family != b.target.family ||
      a.target.algebra->dim() != b.target.algebra->dim() || a.target.minus_one != b.target.minus_one)
    throw InputError("frames_equivalent needs the same pair and the same target");
  EquivalenceResult r;
  const auto f1i = inverse(a.frame());
  const Mat f2 = b.frame();
  if (!f1i || !inverse(f2)) {
    r.reason = "a frame is not invertible";
    return r;
  }
  const GradedAlgebra& g = a.target;
  const size_t h = a.pair.h_dim, m = a.pair.m_dim();

  std::function<bool(const Mat&, const Mat&)> member;
  std::vector<Mat> g0;
  std::optional<Mat> gram, jm;
  switch (g.family) {
    case Family::projective:
      member = [](const Mat&, const Mat&) { return true; };
      break;
    case Family::h_projective:
      jm = restrict_map(*target_complex_structure(g), g.minus_one);
      member = [&](const Mat& t, const Mat&) { return t * *jm == *jm * t; };
      break;
    case Family::conformal:
      gram = conformal_gram(g);
      if (!gram) {
        r.reason = "conformal target without an ambient form";
        return r;
      }
      member = [&](const Mat& t, const Mat&) { return conformal_member(t, *gram); };
      break;
    default:
      g0 = g0_action(g);
      if (g.complex_structure) jm = restrict_map(*target_complex_structure(g), g.minus_one);
      member = [&](const Mat& t, const Mat& ti) {
        if (jm && !(t * *jm == *jm * t)) return false;
        return normalizes(t, ti, g0);
      };
      break;
  }

  std::vector<Mat> twists{Mat::identity(a.pair.dim())};
  for (const Mat& s : autos) twists.push_back(s);
  for (size_t k = 0; k < twists.size(); ++k) {
    const Mat& s = twists[k];
    if (s.rows() != a.pair.dim() || s.cols() != a.pair.dim()) throw InputError("automorphism has the wrong shape");
    if (!s.block(h, 0, m, h).is_zero()) throw InputError("automorphism does not preserve h");
    const auto smi = inverse(s.block(h, h, m, m));
    if (!smi) continue;
    const Mat t = f2 * *smi * *f1i;
    const Mat ti = *inverse(t);
    if (member(t, ti)) {
      r.status = Equivalence::Equivalent;
      r.twist = k;
      r.reason = k == 0 ? "transition lies in G_0" : "transition lies in G_0 after twist " + std::to_string(k);
      return r;
    }
  }
  r.status = Equivalence::NotEquivalent;
  r.reason = "no supplied twist puts the transition in G_0";
  return r;
}

}  // namespace cartan
