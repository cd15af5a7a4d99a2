#include "cartan/symmetric_pair.hpp"

#include <sstream>

#include "cartan/classical.hpp"

namespace cartan {

Mat SymmetricPair::sigma() const {
  Mat s = Mat::identity(dim());
  for (size_t i = h_dim; i < dim(); ++i) s(i, i) = -1;
  return s;
}

AlgebraPtr SymmetricPair::h_algebra() const {
  std::vector<Mat> b(k->basis().begin(), k->basis().begin() + static_cast<long>(h_dim));
  return std::make_shared<MatrixLieAlgebra>(MatrixLieAlgebra::make(std::move(b), name() + " isotropy"));
}

namespace {

std::vector<Mat> independent_in_order(std::vector<Mat> mats) {
  if (mats.empty()) return mats;
  std::vector<Vec> cols;
  for (const auto& m : mats) cols.push_back(flatten(m));
  const SparseEchelon e =
      sparse_rref(to_sparse_rows(Mat::from_columns(cols[0].size(), cols)), cols.size());
  std::vector<Mat> out;
  for (size_t c : e.pivot_cols) out.push_back(std::move(mats[c]));
  return out;
}

bool is_scalar_identity(const Mat& m) {
  if (!m.is_square() || m.rows() == 0 || sgn(m(0, 0)) == 0) return false;
  return m == Mat::identity(m.rows()) * m(0, 0);
}

}  // namespace

SymmetricPair make_pair_split(std::vector<Mat> h_basis, std::vector<Mat> m_basis,
                              std::optional<Mat> conjugator, std::string name,
                              std::string family, Params params) {
  SymmetricPair p;
  p.h_dim = h_basis.size();
  std::vector<Mat> all = std::move(h_basis);
  for (auto& m : m_basis) all.push_back(std::move(m));
  p.k = std::make_shared<MatrixLieAlgebra>(MatrixLieAlgebra::make(std::move(all), std::move(name)));
  p.family = std::move(family);
  p.params = std::move(params);
  p.conjugator = std::move(conjugator);
  return p;
}

SymmetricPair make_pair(const std::vector<Mat>& basis, const Mat& conjugator, std::string name,
                        std::string family, Params params) {
  if (!is_scalar_identity(conjugator * conjugator))
    throw InputError("pair '" + name + "': conjugator must square to a nonzero scalar");
  const Mat inv = *inverse(conjugator);
  std::vector<Mat> plus, minus;
  for (const auto& x : basis) {
    const Mat ad = conjugator * x * inv;
    Mat p = (x + ad) * Rational(1, 2);
    Mat m = (x - ad) * Rational(1, 2);
    if (!p.is_zero()) plus.push_back(std::move(p));
    if (!m.is_zero()) minus.push_back(std::move(m));
  }
  plus = independent_in_order(std::move(plus));
  minus = independent_in_order(std::move(minus));
  if (plus.size() + minus.size() != basis.size())
    throw InvariantError("pair '" + name + "': conjugation does not preserve the algebra");
  return make_pair_split(std::move(plus), std::move(minus), conjugator, std::move(name),
                         std::move(family), std::move(params));
}

PairCheck check_pair(const SymmetricPair& p) {
  PairCheck c;
  std::ostringstream why;
  const MatrixLieAlgebra& k = *p.k;
  const size_t d = k.dim(), h = p.h_dim;
  c.involution = h > 0 && h < d;
  if (!c.involution) why << "both eigenspaces must be nonzero; ";

  // With sigma = diag(I, -I), sigma is an automorphism iff the three
  // bracket inclusions hold.
  c.bracket_inclusions = true;
  for (size_t i = 0; i < d && c.bracket_inclusions; ++i)
    for (size_t j = 0; j < d; ++j) {
      const bool out_in_h = (i < h) == (j < h);
      for (const auto& t : k.bracket_terms(i, j))
        if ((t.index < h) != out_in_h) {
          c.bracket_inclusions = false;
          why << "[X" << i << ", X" << j << "] violates the eigenspace grading; ";
          break;
        }
      if (!c.bracket_inclusions) break;
    }
  c.involution = c.involution && c.bracket_inclusions;

  Mat hc(d, h);
  for (size_t i = 0; i < h; ++i) hc(i, i) = 1;
  c.effective = k.largest_ideal_in(hc).cols() == 0;
  if (!c.effective) why << "h contains a nonzero ideal of k; ";

  if (p.conjugator) {
    const Mat& g = *p.conjugator;
    c.conjugator_consistent = g.rows() == k.ambient_size() && is_scalar_identity(g * g);
    if (c.conjugator_consistent) {
      const Mat gi = *inverse(g);
      for (size_t i = 0; i < d && c.conjugator_consistent; ++i)
        c.conjugator_consistent = g * k[i] * gi == (i < h ? k[i] : -k[i]);
    }
    if (!c.conjugator_consistent) why << "conjugator does not realize sigma; ";
  }
  c.detail = why.str();
  return c;
}

Representation isotropy_rep(const SymmetricPair& p) {
  const size_t h = p.h_dim, m = p.m_dim();
  std::vector<Mat> act;
  for (size_t i = 0; i < h; ++i) {
    Mat a(m, m);
    for (size_t c = 0; c < m; ++c)
      for (const auto& t : p.k->bracket_terms(i, h + c)) {
        if (t.index < h) throw InvariantError("[h, m] is not contained in m for '" + p.name() + "'");
        a(t.index - h, c) = t.coeff;
      }
    act.push_back(std::move(a));
  }
  return Representation::make(p.h_algebra(), std::move(act));
}

RestrictedKilling restricted_killing(const SymmetricPair& p) {
  const Mat b = p.k->killing_form();
  RestrictedKilling r;
  r.gram = b.block(p.h_dim, p.h_dim, p.m_dim(), p.m_dim());
  r.signature = symmetric_signature(r.gram);
  if (r.signature.nullity != 0)
    throw InvariantError("Killing form of '" + p.name() + "' is degenerate on m");
  return r;
}

SymmetricPair direct_sum(const SymmetricPair& a, const SymmetricPair& b) {
  const size_t na = a.k->ambient_size(), nb = b.k->ambient_size();
  auto left = [&](const Mat& x) { return direct_sum(x, Mat(nb, nb)); };
  auto right = [&](const Mat& x) { return direct_sum(Mat(na, na), x); };
  std::vector<Mat> hb, mb;
  for (size_t i = 0; i < a.dim(); ++i) (i < a.h_dim ? hb : mb).push_back(left((*a.k)[i]));
  std::vector<Mat> mb2;
  for (size_t i = 0; i < b.dim(); ++i) (i < b.h_dim ? hb : mb2).push_back(right((*b.k)[i]));
  for (auto& m : mb2) mb.push_back(std::move(m));
  std::optional<Mat> conj;
  if (a.conjugator && b.conjugator) {
    // Scale so both blocks square to the same scalar.
    const Rational ca = ((*a.conjugator) * (*a.conjugator))(0, 0);
    const Rational cb = ((*b.conjugator) * (*b.conjugator))(0, 0);
    if (ca == cb) conj = cartan::direct_sum(*a.conjugator, *b.conjugator);
  }
  Params params;
  params["left"] = a.family + "(" + to_string(a.params) + ")";
  params["right"] = b.family + "(" + to_string(b.params) + ")";
  return make_pair_split(std::move(hb), std::move(mb), std::move(conj),
                         a.name() + " + " + b.name(), "direct_sum", std::move(params));
}

std::vector<PairFactor> simple_factors(const SymmetricPair& p, Rng& rng) {
  const std::vector<Mat> ideals = simple_ideals(*p.k, rng);
  const Mat s = p.sigma();
  const size_t d = p.dim(), h = p.h_dim;
  std::vector<bool> used(ideals.size(), false);
  std::vector<PairFactor> out;
  for (size_t a = 0; a < ideals.size(); ++a) {
    if (used[a]) continue;
    used[a] = true;
    const Mat image = s * ideals[a];
    Mat orbit = ideals[a];
    bool group = false;
    if (rank(hstack(ideals[a], image)) != ideals[a].cols()) {
      for (size_t b = a + 1; b < ideals.size(); ++b)
        if (!used[b] && rank(hstack(ideals[b], image)) == ideals[b].cols()) {
          used[b] = true;
          orbit = hstack(ideals[a], ideals[b]);
          group = true;
          break;
        }
      if (!group) throw InvariantError("sigma does not permute the simple ideals of '" + p.name() + "'");
    }
    PairFactor f;
    f.ideal = orbit;
    f.group_type = group;
    const Mat plus = (orbit + s * orbit) * Rational(1, 2);
    const Mat minus = (orbit - s * orbit) * Rational(1, 2);
    f.h_part = column_space(plus.block(0, 0, h, plus.cols()));
    f.m_part = column_space(minus.block(h, 0, d - h, minus.cols()));
    std::vector<Mat> hb, mb;
    for (size_t j = 0; j < f.h_part.cols(); ++j) {
      Vec c(d);
      for (size_t i = 0; i < h; ++i) c[i] = f.h_part(i, j);
      hb.push_back(p.k->element(c));
    }
    for (size_t j = 0; j < f.m_part.cols(); ++j) {
      Vec c(d);
      for (size_t i = 0; i < d - h; ++i) c[h + i] = f.m_part(i, j);
      mb.push_back(p.k->element(c));
    }
    Params fp = p.params;
    fp["factor"] = std::to_string(out.size());
    f.pair = make_pair_split(std::move(hb), std::move(mb), p.conjugator,
                             p.name() + " [factor " + std::to_string(out.size()) + "]",
                             group ? "group_type" : p.family, std::move(fp));
    out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

size_t nonneg(const Params& p, const std::string& key, long fallback = -1) {
  const long v = fallback < 0 ? param_int(p, key) : param_int(p, key, fallback);
  if (v < 0) throw InputError("parameter '" + key + "' must be nonnegative");
  return static_cast<size_t>(v);
}

void bound(size_t ambient) {
  if (ambient > kMaxAmbient)
    throw InputError("realified ambient size " + std::to_string(ambient) + " exceeds the bound " +
                     std::to_string(kMaxAmbient));
}

Mat diag_signs(std::initializer_list<std::pair<size_t, int>> blocks) {
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

std::string so_name(size_t p, size_t q) {
  return "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

SymmetricPair group_type(const Params& params) {
  const std::string h = param_str(params, "h", "");
  std::vector<Mat> b;
  std::string name;
  if (h == "sl_R" || h == "sl_C") {
    const size_t n = nonneg(params, "n");
    if (n < 2) throw InputError("group_type sl needs n >= 2");
    const Field k = h == "sl_R" ? Field::R : Field::C;
    bound(2 * n * field_dim(k));
    b = sl_basis(n, k);
    name = "sl(" + std::to_string(n) + "," + to_string(k) + ")";
  } else if (h == "so") {
    const size_t p = nonneg(params, "p"), q = nonneg(params, "q", 0);
    if (p + q < 3) throw InputError("group_type so needs p + q >= 3");
    bound(2 * (p + q));
    b = so_basis(indefinite_identity(p, q));
    name = so_name(p, q);
  } else if (h == "sp") {
    const size_t n = nonneg(params, "n");
    if (n < 1) throw InputError("group_type sp needs n >= 1");
    bound(4 * n);
    b = sp_basis(standard_symplectic(n));
    name = "sp(" + std::to_string(2 * n) + ",R)";
  } else if (h == "su") {
    const size_t p = nonneg(params, "p"), q = nonneg(params, "q", 0);
    if (p + q < 2) throw InputError("group_type su needs p + q >= 2");
    bound(4 * (p + q));
    b = su_basis(p, q);
    name = "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
  } else {
    throw InputError("group_type needs h in {sl_R, sl_C, so, sp, su}, got '" + h + "'");
  }
  const size_t n = b[0].rows();
  std::vector<Mat> hb, mb;
  for (const auto& x : b) {
    hb.push_back(cartan::direct_sum(x, x));
    mb.push_back(cartan::direct_sum(x, -x));
  }
  Mat swap(2 * n, 2 * n);
  swap.set_block(0, n, Mat::identity(n));
  swap.set_block(n, 0, Mat::identity(n));
  return make_pair_split(std::move(hb), std::move(mb), swap, "(" + name + "+" + name + ", " + name + ")",
                         "group_type", params);
}

SymmetricPair so_block(size_t a, size_t b, size_t c, size_t d, const std::string& family,
                       const Params& params) {
  const size_t n = a + b + c + d;
  if (a + c == 0 || b + d == 0 || n < 3) throw InputError("so_block needs both blocks nonempty");
  bound(n);
  const Mat q = diag_signs({{a, 1}, {c, -1}, {b, 1}, {d, -1}});
  const Mat h = diag_signs({{a + c, 1}, {b + d, -1}});
  return make_pair(so_basis(q), h,
                   "(" + so_name(a + b, c + d) + ", " + so_name(a, c) + "+" + so_name(b, d) + ")", family,
                   params);
}

}  // namespace

const std::vector<std::string>& pair_families() {
  static const std::vector<std::string> f{"group_type", "so_block",  "so11_block", "so2_block",
                                          "sp_block",   "su_block",  "sl2_so11",   "so_complex",
                                          "so_c_block", "sp1_sp",    "so_star_block"};
  return f;
}

SymmetricPair build_pair(const std::string& family, const Params& params) {
  if (family == "group_type") return group_type(params);
  if (family == "so_block")
    return so_block(nonneg(params, "a"), nonneg(params, "b"), nonneg(params, "c"), nonneg(params, "d"),
                    family, params);
  if (family == "so11_block")  // so(1,1) + so(k,l) inside so(k+1,l+1)
    return so_block(1, nonneg(params, "k"), 1, nonneg(params, "l"), family, params);
  if (family == "so2_block")  // so(2) + so(k,l) inside so(k+2,l)
    return so_block(2, nonneg(params, "k"), 0, nonneg(params, "l"), family, params);
  if (family == "sp_block") {
    const size_t p = nonneg(params, "p"), q = nonneg(params, "q");
    if (p == 0 || q == 0) throw InputError("sp_block needs p, q >= 1");
    bound(2 * (p + q));
    const Mat w = cartan::direct_sum(standard_symplectic(p), standard_symplectic(q));
    const Mat h = diag_signs({{2 * p, 1}, {2 * q, -1}});
    const std::string pn = std::to_string(2 * p), qn = std::to_string(2 * q);
    return make_pair(sp_basis(w), h,
                     "(sp(" + std::to_string(2 * (p + q)) + ",R), sp(" + pn + ",R)+sp(" + qn + ",R))",
                     family, params);
  }
  if (family == "su_block") {
    const size_t a = nonneg(params, "a"), b = nonneg(params, "b"), c = nonneg(params, "c"),
                 d = nonneg(params, "d");
    const size_t n = a + b + c + d;
    if (a + c == 0 || b + d == 0 || n < 2) throw InputError("su_block needs both blocks nonempty");
    bound(2 * n);
    const Mat f = realify(diag_signs({{a, 1}, {c, -1}, {b, 1}, {d, -1}}), Field::C);
    const Mat h = realify(diag_signs({{a + c, 1}, {b + d, -1}}), Field::C);
    return make_pair(form_preserving_basis(n, Field::C, f, true), h,
                     "(su(" + std::to_string(a + b) + "," + std::to_string(c + d) + "), s(u(" +
                         std::to_string(a) + "," + std::to_string(c) + ")+u(" + std::to_string(b) + "," +
                         std::to_string(d) + ")))",
                     family, params);
  }
  if (family == "sl2_so11") {
    const Mat hh{{1, 0}, {0, -1}}, e{{0, 1}, {0, 0}}, f{{0, 0}, {1, 0}};
    return make_pair_split({hh}, {e, f}, hh, "(sl(2,R), so(1,1))", family, params);
  }
  if (family == "so_complex") {  // so(n,C) inside so(n,n)
    const size_t n = nonneg(params, "n");
    if (n < 2) throw InputError("so_complex needs n >= 2");
    bound(2 * n);
    const Mat q = kronecker(Mat::identity(n), Mat{{1, 0}, {0, -1}});
    const Mat j = kronecker(Mat::identity(n), Mat{{0, -1}, {1, 0}});
    return make_pair(so_basis(q), j,
                     "(" + so_name(n, n) + ", so(" + std::to_string(n) + ",C))", family, params);
  }
  if (family == "so_c_block") {  // so(p,C) + so(q,C) inside so(p+q,C)
    const size_t p = nonneg(params, "p"), q = nonneg(params, "q");
    if (p == 0 || q == 0 || p + q < 3) throw InputError("so_c_block needs p, q >= 1 and p + q >= 3");
    bound(2 * (p + q));
    const Mat h = realify(diag_signs({{p, 1}, {q, -1}}), Field::C);
    return make_pair(complexify(so_basis(Mat::identity(p + q))), h,
                     "(so(" + std::to_string(p + q) + ",C), so(" + std::to_string(p) + ",C)+so(" +
                         std::to_string(q) + ",C))",
                     family, params);
  }
  if (family == "sp1_sp") {  // sp(1) + sp(p,q) inside sp(p+1,q)
    const size_t p = nonneg(params, "p"), q = nonneg(params, "q", 0);
    if (p + q == 0) throw InputError("sp1_sp needs p + q >= 1");
    bound(4 * (p + q + 1));
    const Mat f = realify(diag_signs({{1 + p, 1}, {q, -1}}), Field::H);
    const Mat h = realify(diag_signs({{1, -1}, {p + q, 1}}), Field::H);
    return make_pair(form_preserving_basis(p + q + 1, Field::H, f, false), h,
                     "(sp(" + std::to_string(p + 1) + "," + std::to_string(q) + "), sp(1)+sp(" +
                         std::to_string(p) + "," + std::to_string(q) + "))",
                     family, params);
  }
  if (family == "so_star_block") {  // so*(2) + so*(2n) inside so*(2n+2)
    const size_t n = nonneg(params, "n");
    if (n < 1) throw InputError("so_star_block needs n >= 1");
    bound(4 * (n + 1));
    const Mat h = realify(diag_signs({{1, -1}, {n, 1}}), Field::H);
    return make_pair(so_star_basis(n + 1), h,
                     "(so*(" + std::to_string(2 * n + 2) + "), so*(2)+so*(" + std::to_string(2 * n) + "))",
                     family, params);
  }
  throw InputError("unsupported pair family '" + family + "'");
}

}  // namespace cartan
