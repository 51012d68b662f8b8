#include "shifted_shapes/numeric.hpp"

namespace shs {

BigInt factorial(int n) {
  if (n < 0) throw InvalidArgument("factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt falling_factorial(int n, int k) {
  if (k < 0) throw InvalidArgument("negative falling-factorial length");
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= n - i;
  return r;
}

Rational pow(const Rational& base, int exponent) {
  Rational r = 1;
  Rational b = base;
  if (exponent < 0) {
    if (b == 0) throw InvalidArgument("zero to a negative power");
    b = 1 / b;
    exponent = -exponent;
  }
  while (exponent > 0) {
    if (exponent & 1) r *= b;
    b *= b;
    exponent >>= 1;
  }
  return r;
}

}  // namespace shs
