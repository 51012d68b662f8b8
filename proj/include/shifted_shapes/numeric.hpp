#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace shs {

using BigInt = mpz_class;
using Rational = mpq_class;

struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

BigInt factorial(int n);
BigInt falling_factorial(int n, int k);
Rational pow(const Rational& base, int exponent);

}  // namespace shs
