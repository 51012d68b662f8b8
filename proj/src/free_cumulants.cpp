#include "shifted_shapes/free_cumulants.hpp"

#include <cmath>
#include <set>

namespace shs {

std::vector<Rational> sigma_moments(const ZigzagProfile& omega, int order) {
  if (order < 2) throw InvalidArgument("moment order must be at least 2");
  std::vector<Rational> S(order + 1, Rational(0));
  std::set<Rational> points{Rational(0)};
  for (const auto& v : omega.vertices()) points.insert(v.first);
  std::vector<Rational> z(points.begin(), points.end());
  for (std::size_t s = 0; s + 1 < z.size(); ++s) {
    const Rational& a = z[s];
    const Rational& b = z[s + 1];
    const Rational sign = (a >= 0) ? Rational(1) : Rational(-1);
    // sigma(z) = alpha z + beta on [a, b]
    const Rational slope = (omega(b) - omega(a)) / (b - a);
    const Rational alpha = (slope - sign) / 2;
    const Rational beta = (omega(a) - slope * a) / 2;
    Rational apow = a, bpow = b;  // a^(k+1), b^(k+1) for k = 0
    for (int n = 2; n <= order; ++n) {
      const int k = n - 2;
      const Rational a2 = apow * a, b2 = bpow * b;
      const Rational integral = alpha * (b2 - a2) / (k + 2) + beta * (bpow - apow) / (k + 1);
      S[n] += (n - 1) * integral;
      apow = a2;
      bpow = b2;
    }
  }
  return S;
}

std::vector<double> sigma_moments(const SampledProfile& omega, int order) {
  if (order < 2) throw InvalidArgument("moment order must be at least 2");
  std::vector<double> S(order + 1, 0.0);
  const int m = omega.size();
  const double h = omega.grid().step();
  auto sigma = [&](int i) { return 0.5 * (omega.values()[i] - std::fabs(omega.z(i))); };
  const int simpson_end = (m - 1) % 2 == 0 ? m - 1 : m - 2;
  for (int n = 2; n <= order; ++n) {
    auto f = [&](int i) { return std::pow(omega.z(i), n - 2) * sigma(i); };
    double total = 0;
    for (int i = 0; i + 2 <= simpson_end; i += 2) total += h / 3.0 * (f(i) + 4.0 * f(i + 1) + f(i + 2));
    if (simpson_end != m - 1) total += 0.5 * h * (f(m - 2) + f(m - 1));
    S[n] = (n - 1) * total;
  }
  return S;
}

}  // namespace shs
