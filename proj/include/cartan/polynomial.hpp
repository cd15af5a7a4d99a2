#pragma once

#include <string>
#include <vector>

#include "cartan/matrix.hpp"

namespace cartan {

/// Univariate rational polynomial, coefficients stored from low to high degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Vec coeffs);
  static Polynomial monomial(const Rational& c, size_t degree);
  static Polynomial linear(const Rational& root);  // t - root

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Vec& coeffs() const { return c_; }
  Rational coeff(size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational operator()(const Rational& x) const;
  /// Evaluates at a square matrix by Horner's scheme.
  Mat operator()(const Mat& m) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  Vec c_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};
DivMod divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// s, t with s a + t b = gcd(a, b).
struct Bezout {
  Polynomial g, s, t;
};
Bezout extended_gcd(const Polynomial& a, const Polynomial& b);

struct PolyFactor {
  Polynomial factor;  // monic, irreducible over Q
  size_t multiplicity = 1;
  /// Quadratic factor with negative discriminant.
  bool complex_type = false;
};

/// Irreducible factorization over Q of a nonzero polynomial, monic factors in
/// ascending degree order.
std::vector<PolyFactor> factor_rational(const Polynomial& p);

/// Number of distinct real roots, via a Sturm sequence.
size_t sturm_real_root_count(const Polynomial& p);

/// Monic minimal polynomial of a square matrix, from the first linear
/// dependence among I, M, M^2, ...
Polynomial minimal_polynomial(const Mat& m);

struct MinimalPolynomial {
  Polynomial poly;
  std::vector<PolyFactor> factors;
  bool squarefree() const;
};
MinimalPolynomial analyze_minimal_polynomial(const Mat& m);

}  // namespace cartan
