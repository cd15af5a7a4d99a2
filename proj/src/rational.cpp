#include "cartan/rational.hpp"

#include <cctype>

namespace cartan {

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw InputError("malformed rational: '" + std::string(text) + "'");
  }
  Integer n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in rational: '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

bool rational_sqrt(const Rational& r, Rational& root) {
  if (sgn(r) < 0) return false;
  const Integer& n = r.get_num();
  const Integer& d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  root = Rational(sn, sd);
  root.canonicalize();
  return true;
}

Rational Rng::small_nonzero(int bound) {
  std::uniform_int_distribution<int> dist(1, bound);
  std::uniform_int_distribution<int> sign(0, 1);
  const int v = dist(engine_);
  return Rational(sign(engine_) ? v : -v);
}

long Rng::uniform(long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return dist(engine_);
}

}  // namespace cartan
