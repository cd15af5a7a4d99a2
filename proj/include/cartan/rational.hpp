#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cartan {

/// Exact rational scalar. GMP keeps every value canonical (gcd 1, positive
/// denominator) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Raised for malformed user input: bad shapes, unparsable numbers,
/// unsupported families or ranks.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an object violates a structural invariant that should hold
/// by construction (a catalog bug or a corrupted file).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q". Rejects zero denominators and junk.
Rational parse_rational(std::string_view text);

/// Exact square root if r is the square of a rational.
bool rational_sqrt(const Rational& r, Rational& root);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Deterministic source of small nonzero integers used for generic elements.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [-bound, bound] \ {0}.
  Rational small_nonzero(int bound = 9);
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cartan
