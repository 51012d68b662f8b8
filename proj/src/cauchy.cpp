#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>

#include "shifted_shapes/free_cumulants.hpp"
#include "shifted_shapes/limit_shapes.hpp"

namespace shs {

namespace {

using cplx = std::complex<double>;

std::vector<std::vector<double>> trim(std::vector<std::vector<double>> c) {
  for (auto& poly : c)
    while (!poly.empty() && poly.back() == 0.0) poly.pop_back();
  while (!c.empty() && c.back().empty()) c.pop_back();
  return c;
}

cplx horner(const std::vector<double>& poly, cplx z) {
  cplx v = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = v * z + *it;
  return v;
}

}  // namespace

CauchyTransform CauchyTransform::from_zigzag(const ZigzagProfile& omega) {
  CauchyTransform g;
  g.kind_ = Kind::Rational;
  g.minima_ = omega.minima();
  g.maxima_ = omega.maxima();
  g.minima_d_.clear();
  for (const auto& x : g.minima_) g.minima_d_.push_back(x.get_d());
  for (const auto& y : g.maxima_) g.maxima_d_.push_back(y.get_d());
  return g;
}

CauchyTransform CauchyTransform::algebraic(std::vector<std::vector<double>> coefficients) {
  CauchyTransform g;
  g.kind_ = Kind::Algebraic;
  g.coefficients_ = trim(std::move(coefficients));
  if (g.coefficients_.size() < 2) throw InvalidArgument("algebraic Cauchy transform needs degree >= 1 in G");
  return g;
}

CauchyTransform CauchyTransform::from_free_cumulants(const std::vector<double>& R) {
  std::vector<std::vector<double>> c(std::max<std::size_t>(R.size(), 2));
  c[0] = {1.0};
  c[1] = {R.size() > 1 ? R[1] : 0.0, -1.0};
  for (std::size_t k = 2; k < R.size(); ++k) c[k] = {R[k]};
  return algebraic(std::move(c));
}

std::vector<cplx> CauchyTransform::roots(cplx z) const {
  if (kind_ != Kind::Algebraic) throw std::logic_error("roots() needs an algebraic transform");
  std::vector<cplx> a;
  for (const auto& poly : coefficients_) a.push_back(horner(poly, z));
  while (a.size() > 1 && std::abs(a.back()) == 0.0) a.pop_back();
  std::vector<cplx> out;
  if (a.size() < 2) return out;
  if (a.size() == 2) {
    out.push_back(-a[0] / a[1]);
  } else {
    Eigen::Matrix<cplx, Eigen::Dynamic, 1> poly(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) poly[static_cast<Eigen::Index>(i)] = a[i];
    Eigen::PolynomialSolver<cplx, Eigen::Dynamic> solver;
    solver.compute(poly);
    const auto& r = solver.roots();
    for (Eigen::Index i = 0; i < r.size(); ++i) out.push_back(r[i]);
  }
  for (auto& g : out) {
    for (int it = 0; it < 2; ++it) {
      cplx p = 0, dp = 0;
      for (auto c = a.rbegin(); c != a.rend(); ++c) {
        dp = dp * g + p;
        p = p * g + *c;
      }
      if (std::abs(dp) > 0) g -= p / dp;
    }
  }
  return out;
}

cplx CauchyTransform::residual(cplx z, cplx g) const {
  cplx v = 0, gp = 1;
  for (const auto& poly : coefficients_) {
    v += horner(poly, z) * gp;
    gp *= g;
  }
  return v;
}

cplx CauchyTransform::operator()(cplx z) const {
  if (kind_ == Kind::Rational) {
    cplx v = 1;
    for (double y : maxima_d_) v *= z - y;
    for (double x : minima_d_) v /= z - x;
    return v;
  }
  if (z.imag() < 0) return std::conj((*this)(std::conj(z)));
  if (z.imag() == 0) z += cplx(0, 1e-14 * std::max(1.0, std::abs(z.real())));
  const auto r = roots(z);
  int found = -1;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i].imag() < 0) {
      if (found >= 0) throw NonConvergence("two roots in the lower half-plane; branch is ambiguous");
      found = static_cast<int>(i);
    }
  if (found < 0) throw NonConvergence("no root in the lower half-plane");
  return r[found];
}

double CauchyTransform::arg(double x, double eps) const {
  if (kind_ == Kind::Rational) {
    double a = 0;
    for (double y : maxima_d_) a += std::atan2(eps, x - y);
    for (double m : minima_d_) a -= std::atan2(eps, x - m);
    return a;
  }
  return std::arg((*this)(cplx(x, eps)));
}

std::vector<Rational> CauchyTransform::exact_moments(int order) const {
  if (kind_ != Kind::Rational) throw std::logic_error("exact moments need a zigzag transform");
  std::vector<Rational> M(order + 1, Rational(0));
  for (const auto& atom : transition_measure(ZigzagProfile(minima_, maxima_)).transition) {
    Rational p = atom.weight;
    for (int k = 0; k <= order; ++k) {
      M[k] += p;
      p *= atom.location;
    }
  }
  return M;
}

std::vector<double> CauchyTransform::moments(int order) const {
  if (kind_ == Kind::Rational) {
    std::vector<double> out;
    for (const auto& m : exact_moments(order)) out.push_back(m.get_d());
    return out;
  }
  // G = w F(w), w = 1/z; multiply the equation by w^D to get Q(w, F) = sum q[j][p] w^p F^j.
  int D = 0;
  for (std::size_t j = 0; j < coefficients_.size(); ++j)
    for (std::size_t m = 0; m < coefficients_[j].size(); ++m)
      if (coefficients_[j][m] != 0.0) D = std::max(D, static_cast<int>(m) - static_cast<int>(j));
  const int N = order;
  std::vector<std::vector<double>> q(coefficients_.size(), std::vector<double>(N + 1, 0.0));
  for (std::size_t j = 0; j < coefficients_.size(); ++j)
    for (std::size_t m = 0; m < coefficients_[j].size(); ++m) {
      const int p = D - static_cast<int>(m) + static_cast<int>(j);
      if (p <= N) q[j][p] += coefficients_[j][m];
    }
  auto evaluate = [&](const std::vector<double>& F) {
    std::vector<double> total(N + 1, 0.0), power(N + 1, 0.0);
    power[0] = 1.0;
    for (std::size_t j = 0; j < q.size(); ++j) {
      for (int a = 0; a <= N; ++a)
        for (int b = 0; a + b <= N; ++b) total[a + b] += q[j][a] * power[b];
      std::vector<double> next(N + 1, 0.0);
      for (int a = 0; a <= N; ++a)
        for (int b = 0; a + b <= N; ++b) next[a + b] += power[a] * F[b];
      power = std::move(next);
    }
    return total;
  };
  std::vector<double> F(N + 1, 0.0);
  F[0] = 1.0;
  if (std::abs(evaluate(F)[0]) > 1e-12) throw NonConvergence("equation is not solved by G ~ 1/z at infinity");
  double c = 0;
  for (std::size_t j = 1; j < q.size(); ++j) c += static_cast<double>(j) * q[j][0];
  if (c == 0.0) throw NonConvergence("branch at infinity is not simple");
  for (int n = 1; n <= N; ++n) F[n] = -evaluate(F)[n] / c;
  return F;
}

std::vector<double> CauchyTransform::singular_points() const {
  std::vector<double> s = minima_d_;
  s.insert(s.end(), maxima_d_.begin(), maxima_d_.end());
  if (kind_ == Kind::Algebraic) s.clear();
  std::sort(s.begin(), s.end());
  return s;
}

TransitionData transition_measure(const ZigzagProfile& omega) {
  TransitionData data{{}, {}, CauchyTransform::from_zigzag(omega)};
  const auto& x = omega.minima();
  const auto& y = omega.maxima();
  Rational total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rational w = 1;
    for (const auto& yj : y) w *= x[i] - yj;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (k != i) w /= x[i] - x[k];
    if (w <= 0) throw InvalidArgument("transition measure has a non-positive atom");
    total += w;
    data.transition.push_back({x[i], w});
  }
  if (total != 1) throw std::logic_error("transition measure does not sum to one");
  for (std::size_t i = 0; i < x.size(); ++i) {
    data.rayleigh.emplace_back(x[i], 1);
    if (i < y.size()) data.rayleigh.emplace_back(y[i], -1);
  }
  return data;
}

CauchyTransform cauchy_sw(double c) {
  if (!(c > 0)) throw InvalidArgument("c must be positive");
  const double c2 = c * c;
  return CauchyTransform::algebraic({{2.0}, {0.0, -2.0}, {2.0 - c2}, {0.0, c2}});
}

std::vector<double> free_cumulants_from_cauchy(const CauchyTransform& G, int order) {
  return free_cumulants_from_moments(G.moments(order));
}

std::vector<Rational> free_cumulants_from_cauchy_exact(const CauchyTransform& G, int order) {
  return free_cumulants_from_moments(G.exact_moments(order));
}

}  // namespace shs
