#include "cartan/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "cartan/linalg.hpp"

namespace cartan {

Polynomial::Polynomial(Vec coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, size_t degree) {
  Vec v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& root) { return Polynomial(Vec{-root, 1}); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial p = *this;
  const Rational lc = p.c_.back();
  for (auto& x : p.c_) x /= lc;
  return p;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  Vec d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

Mat Polynomial::operator()(const Mat& m) const {
  if (!m.is_square()) throw InputError("polynomial evaluated at a non-square matrix");
  const size_t n = m.rows();
  Mat acc(n, n);
  for (size_t k = c_.size(); k-- > 0;) {
    acc = acc * m;
    for (size_t i = 0; i < n; ++i) acc(i, i) += c_[k];
  }
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Vec v(std::max(a.c_.size(), b.c_.size()));
  for (size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Vec v(std::max(a.c_.size(), b.c_.size()));
  for (size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) - b.coeff(k);
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Vec v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
  Vec v = a.c_;
  for (auto& x : v) x *= s;
  return Polynomial(std::move(v));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = c_.size(); k-- > 0;) {
    if (sgn(c_[k]) == 0) continue;
    Rational a = abs(c_[k]);
    os << (sgn(c_[k]) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (k == 0 || a != 1) os << cartan::to_string(a);
    if (k > 0) os << var;
    if (k > 1) os << '^' << k;
    first = false;
  }
  return os.str();
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  Vec r = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  Vec q(a.degree() - db + 1);
  for (long k = a.degree(); k >= db; --k) {
    const Rational f = r[k] / b.leading();
    q[k - db] = f;
    if (sgn(f) == 0) continue;
    for (long j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeff(j);
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Bezout extended_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0(Vec{1}), s1, t0, t1(Vec{1});
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    r0 = std::exchange(r1, qr.remainder);
    s0 = std::exchange(s1, s0 - qr.quotient * s1);
    t0 = std::exchange(t1, t0 - qr.quotient * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Rational inv = 1 / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

namespace {

using Complex = std::complex<long double>;

std::vector<Complex> numeric_roots(const std::vector<long double>& c) {
  // Aberth iteration on a monic polynomial given low-to-high.
  const size_t n = c.size() - 1;
  long double bound = 0;
  for (size_t k = 0; k < n; ++k) bound = std::max(bound, std::fabs(c[k]));
  bound = 1 + bound;
  std::vector<Complex> z(n);
  for (size_t k = 0; k < n; ++k)
    z[k] = std::polar(bound * 0.5L + 0.1L, 2 * M_PIl * (k + 0.25L) / n);
  auto eval = [&](Complex x, Complex& d) {
    Complex p = 0;
    d = 0;
    for (size_t k = n + 1; k-- > 0;) {
      d = d * x + p;
      p = p * x + c[k];
    }
    return p;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0;
    for (size_t i = 0; i < n; ++i) {
      Complex d;
      const Complex p = eval(z[i], d);
      if (p == Complex(0)) continue;
      const Complex ratio = p / d;
      Complex sum = 0;
      for (size_t j = 0; j < n; ++j)
        if (j != i) sum += 1.0L / (z[i] - z[j]);
      const Complex step = ratio / (1.0L - ratio * sum);
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / (1 + std::abs(z[i])));
    }
    if (worst < 1e-17L) break;
  }
  return z;
}

// Factors a squarefree monic polynomial with integer coefficients into monic
// integer irreducibles by matching subsets of numeric roots.
std::vector<Polynomial> factor_monic_integer(Polynomial q) {
  std::vector<Polynomial> out;
  while (q.degree() > 1) {
    const size_t n = q.degree();
    std::vector<long double> c(n + 1);
    for (size_t k = 0; k <= n; ++k) c[k] = q.coeff(k).get_d();
    const std::vector<Complex> roots = numeric_roots(c);
    bool split = false;
    for (size_t size = 1; size <= n / 2 && !split; ++size) {
      std::vector<bool> pick(n, false);
      std::fill(pick.begin(), pick.begin() + size, true);
      do {
        std::vector<Complex> prod{Complex(1)};
        for (size_t i = 0; i < n; ++i) {
          if (!pick[i]) continue;
          std::vector<Complex> next(prod.size() + 1, Complex(0));
          for (size_t k = 0; k < prod.size(); ++k) {
            next[k + 1] += prod[k];
            next[k] -= prod[k] * roots[i];
          }
          prod = std::move(next);
        }
        Vec cand(prod.size());
        bool ok = true;
        for (size_t k = 0; k < prod.size() && ok; ++k) {
          const long double re = std::round(prod[k].real());
          const long double tol = 1e-6L * (1 + std::fabs(prod[k].real()));
          if (std::fabs(prod[k].imag()) > tol || std::fabs(prod[k].real() - re) > tol) ok = false;
          else cand[k] = Rational(Integer(std::to_string(static_cast<long long>(re))));
        }
        if (!ok) continue;
        Polynomial g(std::move(cand));
        DivMod dm = divmod(q, g);
        if (!dm.remainder.is_zero()) continue;
        out.push_back(g);
        q = dm.quotient;
        split = true;
        break;
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    if (!split) break;
  }
  if (q.degree() >= 1) out.push_back(q);
  return out;
}

std::vector<Polynomial> factor_squarefree(const Polynomial& p) {
  const Polynomial m = p.monic();
  const long n = m.degree();
  if (n <= 1) return {m};
  // Scale t = s / D so that D^n m(s / D) is monic with integer coefficients.
  Integer d = 1;
  for (long k = 0; k < n; ++k) {
    const Integer den = m.coeff(k).get_den();
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
  }
  Vec scaled(n + 1);
  Rational pw = 1;
  for (long k = n; k >= 0; --k) {
    scaled[k] = m.coeff(k) * pw;
    pw *= Rational(d);
  }
  std::vector<Polynomial> out;
  for (const Polynomial& g : factor_monic_integer(Polynomial(std::move(scaled)))) {
    // Undo the scaling: g(D t) / D^deg.
    const long dg = g.degree();
    Vec back(dg + 1);
    Rational pk = 1;
    for (long k = 0; k <= dg; ++k) {
      back[k] = g.coeff(k) * pk;
      pk *= Rational(d);
    }
    out.push_back(Polynomial(std::move(back)).monic());
  }
  return out;
}

}  // namespace

std::vector<PolyFactor> factor_rational(const Polynomial& p) {
  if (p.is_zero()) throw InputError("cannot factor the zero polynomial");
  std::vector<PolyFactor> out;
  // Yun's squarefree decomposition.
  Polynomial f = p.monic();
  Polynomial a = gcd(f, f.derivative());
  Polynomial b = divmod(f, a).quotient;
  Polynomial c = divmod(f.derivative(), a).quotient;
  Polynomial dd = c - b.derivative();
  for (size_t mult = 1; b.degree() > 0; ++mult) {
    Polynomial ai = gcd(b, dd);
    b = divmod(b, ai).quotient;
    c = divmod(dd, ai).quotient;
    dd = c - b.derivative();
    if (ai.degree() > 0)
      for (Polynomial& g : factor_squarefree(ai)) {
        PolyFactor pf;
        pf.multiplicity = mult;
        if (g.degree() == 2) {
          const Rational disc = g.coeff(1) * g.coeff(1) - 4 * g.coeff(0);
          pf.complex_type = sgn(disc) < 0;
        }
        pf.factor = std::move(g);
        out.push_back(std::move(pf));
      }
  }
  std::stable_sort(out.begin(), out.end(), [](const PolyFactor& x, const PolyFactor& y) {
    return x.factor.degree() < y.factor.degree();
  });
  return out;
}

size_t sturm_real_root_count(const Polynomial& p) {
  if (p.degree() <= 0) return 0;
  std::vector<Polynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Polynomial r = divmod(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back(Rational(-1) * r);
  }
  auto changes = [&](bool at_plus_infinity) {
    size_t count = 0;
    int prev = 0;
    for (const auto& q : seq) {
      int s = sgn(q.leading());
      if (!at_plus_infinity && q.degree() % 2 == 1) s = -s;
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  };
  return changes(false) - changes(true);
}

Polynomial minimal_polynomial(const Mat& m) {
  if (!m.is_square()) throw InputError("minimal polynomial of a non-square matrix");
  const size_t n = m.rows();
  if (n == 0) return Polynomial(Vec{1});
  std::vector<Vec> powers{flatten(Mat::identity(n))};
  Mat power = Mat::identity(n);
  for (size_t k = 1; k <= n; ++k) {
    power = power * m;
    const Vec v = flatten(power);
    const SolutionSet s = solve_linear(Mat::from_columns(n * n, powers), Mat::column(v));
    if (s.consistent) {
      Vec c(k + 1);
      for (size_t i = 0; i < k; ++i) c[i] = -s.particular(i, 0);
      c[k] = 1;
      return Polynomial(std::move(c));
    }
    powers.push_back(v);
  }
  throw InvariantError("minimal polynomial degree exceeds matrix size");
}

bool MinimalPolynomial::squarefree() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const PolyFactor& f) { return f.multiplicity == 1; });
}

MinimalPolynomial analyze_minimal_polynomial(const Mat& m) {
  MinimalPolynomial r;
  r.poly = minimal_polynomial(m);
  r.factors = factor_rational(r.poly);
  return r;
}

}  // namespace cartan
