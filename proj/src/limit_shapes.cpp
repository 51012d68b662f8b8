#include "shifted_shapes/limit_shapes.hpp"

#include <omp.h>

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>

#include "shifted_shapes/parallel.hpp"

namespace shs {

namespace {

using cplx = std::complex<double>;

double integrate(const std::function<double(double)>& f, double a, double b) {
  if (b <= a) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 12, 1e-11);
}

double tail_limit(const CauchyTransform& G, double start, double tolerance) {
  double Z = std::max(2.0 * std::abs(start), 4.0);
  for (;;) {
    const cplx g = G(cplx(Z, 0.0));
    if (std::abs(Z * g - 1.0) < tolerance) return Z;
    Z *= 2.0;
    if (Z > 1e12) throw NonConvergence("G(z) does not approach 1/z on the positive axis");
  }
}

// Neville extrapolation of values(eps) to eps = 0.
std::pair<double, double> extrapolate(const std::vector<double>& eps, std::vector<double> v) {
  const std::size_t m = v.size();
  double previous = v.back();
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = 0; i + level < m; ++i)
      v[i] = (eps[i] * v[i + 1] - eps[i + level] * v[i]) / (eps[i] - eps[i + level]);
    if (level + 1 == m) previous = v[1];
  }
  return {v[0], std::abs(v[0] - previous)};
}

std::vector<double> breakpoints_in(const std::vector<double>& singular, double a, double b) {
  std::vector<double> pts{a};
  for (double s : singular)
    if (s > a && s < b) pts.push_back(s);
  pts.push_back(b);
  return pts;
}

SampledProfile assemble(const Grid& grid, const InversionOptions& options,
                        const std::vector<std::vector<double>>& suffix) {
  std::vector<double> values(grid.points);
  for (int i = 0; i < grid.points; ++i) {
    const double x = grid.at(i);
    std::vector<double> omega;
    for (std::size_t e = 0; e < options.eps.size(); ++e)
      omega.push_back(x - 2.0 / std::numbers::pi * suffix[e][i]);
    const auto [value, change] = extrapolate(options.eps, omega);
    if (change > options.richardson_tolerance) {
      std::ostringstream msg;
      msg << "Richardson extrapolation did not settle at z=" << x << " (values";
      for (double w : omega) msg << ' ' << w;
      msg << ", last correction " << change << ")";
      throw NonConvergence(msg.str());
    }
    values[i] = std::max(value, std::abs(x));
  }
  return SampledProfile(grid, std::move(values));
}

void check(const Grid& grid, const InversionOptions& options) {
  if (grid.points < 2 || !(grid.hi > grid.lo)) throw InvalidArgument("grid needs at least two points");
  if (options.eps.empty()) throw InvalidArgument("empty epsilon schedule");
  for (double e : options.eps)
    if (!(e > 0)) throw InvalidArgument("epsilon must be positive");
}

}  // namespace

SampledProfile shape_from_cauchy(const CauchyTransform& G, const Grid& grid, const InversionOptions& options) {
  check(grid, options);
  const double Z = std::max(tail_limit(G, std::max(std::abs(grid.lo), std::abs(grid.hi)), options.tail_tolerance),
                            grid.hi);
  const auto singular = G.singular_points();
  const int cells = grid.points - 1;
  const int per_eps = cells + 1;
  const int n_eps = static_cast<int>(options.eps.size());
  const int tasks = per_eps * n_eps;
  std::vector<double> piece(tasks, 0.0);
  std::vector<std::exception_ptr> errors(tasks);

#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(options.threads))
  for (int task = 0; task < tasks; ++task) {
    try {
      const double eps = options.eps[task / per_eps];
      const int cell = task % per_eps;
      auto f = [&](double z) { return G.arg(z, eps); };
      double a, b;
      if (cell < cells) {
        a = grid.at(cell);
        b = grid.at(cell + 1);
      } else {
        a = grid.hi;
        b = Z;
      }
      double total = 0.0;
      if (cell < cells) {
        const auto pts = breakpoints_in(singular, a, b);
        for (std::size_t k = 0; k + 1 < pts.size(); ++k) total += integrate(f, pts[k], pts[k + 1]);
      } else {
        double length = std::max(1.0, grid.hi - grid.lo);
        while (a < b) {
          const double next = std::min(b, a + length);
          const auto pts = breakpoints_in(singular, a, next);
          for (std::size_t k = 0; k + 1 < pts.size(); ++k) total += integrate(f, pts[k], pts[k + 1]);
          a = next;
          length *= 2.0;
        }
      }
      piece[task] = total;
    } catch (...) {
      errors[task] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<std::vector<double>> suffix(n_eps, std::vector<double>(grid.points, 0.0));
  for (int e = 0; e < n_eps; ++e) {
    double acc = piece[e * per_eps + cells];
    suffix[e][cells] = acc;
    for (int i = cells - 1; i >= 0; --i) {
      acc += piece[e * per_eps + i];
      suffix[e][i] = acc;
    }
  }
  return assemble(grid, options, suffix);
}

SampledProfile shape_from_cauchy_serial(const CauchyTransform& G, const Grid& grid, const InversionOptions& options) {
  check(grid, options);
  const double Z = std::max(tail_limit(G, std::max(std::abs(grid.lo), std::abs(grid.hi)), options.tail_tolerance),
                            grid.hi);
  std::vector<std::vector<double>> suffix(options.eps.size(), std::vector<double>(grid.points, 0.0));
  for (std::size_t e = 0; e < options.eps.size(); ++e) {
    const double eps = options.eps[e];
    const double h0 = eps / 16.0;
    // Descending panel ends: geometric panels from Z down to hi + 1, uniform panels below.
    const double fine_top = grid.hi + 1.0;
    std::vector<double> up{fine_top};
    for (double h = h0; up.back() < Z; h *= 1.02) up.push_back(std::min(Z, up.back() + h));
    std::vector<double> knots(up.rbegin(), up.rend());
    std::vector<int> node_of(grid.points, -1);
    double a = fine_top;
    for (int target = grid.points - 1; target >= 0; --target) {
      const double x = grid.at(target);
      const int panels = std::max(1, static_cast<int>(std::ceil((a - x) / h0)));
      const double h = (a - x) / panels;
      for (int k = 1; k <= panels; ++k) knots.push_back(k == panels ? x : a - h * k);
      node_of[target] = static_cast<int>(knots.size()) - 1;
      a = x;
    }
    // Evaluate arg G at knots and panel midpoints, following the branch from the 1/z end.
    auto evaluate = [&](double z, cplx& branch) {
      if (G.kind() == CauchyTransform::Kind::Rational) return G.arg(z, eps);
      const auto r = G.roots(cplx(z, eps));
      if (r.empty()) throw NonConvergence("no roots");
      const auto best = std::min_element(r.begin(), r.end(), [&](cplx p, cplx q) {
        return std::abs(p - branch) < std::abs(q - branch);
      });
      branch = *best;
      if (branch.imag() > 0) throw NonConvergence("tracked branch left the lower half-plane");
      return std::arg(branch);
    };
    cplx branch = 1.0 / cplx(Z, eps);
    std::vector<double> cumulative(knots.size(), 0.0);
    double prev = evaluate(knots[0], branch);
    for (std::size_t k = 1; k < knots.size(); ++k) {
      const double a = knots[k - 1], b = knots[k];
      const double mid = evaluate(0.5 * (a + b), branch);
      const double end = evaluate(b, branch);
      cumulative[k] = cumulative[k - 1] + (a - b) / 6.0 * (prev + 4.0 * mid + end);
      prev = end;
    }
    for (int i = 0; i < grid.points; ++i) suffix[e][i] = cumulative[node_of[i]];
  }
  return assemble(grid, options, suffix);
}

std::vector<std::pair<double, double>> support_intervals(const CauchyTransform& G, const Grid& grid, double eps,
                                                         double threshold) {
  std::vector<std::pair<double, double>> out;
  auto close = [&](double a, double b) {
    if (b - a > kAtomWidth * eps) out.emplace_back(a, b);
  };
  bool open = false;
  double start = 0;
  for (int i = 0; i < grid.points; ++i) {
    const double x = grid.at(i);
    const double p = -G.arg(x, eps) / std::numbers::pi;
    const bool inside = p > threshold && p < 1.0 - threshold;
    if (inside && !open) {
      open = true;
      start = x;
    } else if (!inside && open) {
      open = false;
      close(start, grid.at(i - 1));
    }
  }
  if (open) close(start, grid.hi);
  return out;
}

double lsvk_value(double z) {
  if (std::abs(z) >= 2.0) return std::abs(z);
  return 2.0 / std::numbers::pi * (z * std::asin(z / 2.0) + std::sqrt(4.0 - z * z));
}

SampledProfile lsvk(const Grid& grid) { return sample(lsvk_value, grid); }

SampledProfile sw_shape(double c, const Grid& grid, const InversionOptions& options) {
  return shape_from_cauchy(cauchy_sw(c), grid, options);
}

namespace {

SampledProfile dilated_sw(double alpha, double c, const Grid& grid, const InversionOptions& options) {
  if (!(alpha > 0)) throw InvalidArgument("alpha must be positive");
  const double s = std::sqrt(2.0 * alpha);
  const Grid inner{grid.lo / s, grid.hi / s, grid.points};
  return sw_shape(c, inner, options).dilate(s);
}

}  // namespace

SampledProfile insertion_level_curve(double alpha, const Grid& grid, const InversionOptions& options) {
  return dilated_sw(alpha, 1.0 / std::sqrt(alpha), grid, options);
}

SampledProfile recording_level_curve(double alpha, const Grid& grid, const InversionOptions& options) {
  return dilated_sw(alpha, std::sqrt(alpha), grid, options);
}

LevelCurveFamily scaled_level_curves(const std::vector<double>& R, const std::vector<double>& alphas,
                                     const Grid& grid, const InversionOptions& options) {
  LevelCurveFamily family;
  std::vector<double> sorted = alphas;
  std::sort(sorted.begin(), sorted.end());
  for (double alpha : sorted) {
    if (!(alpha > 0 && alpha <= 1)) throw InvalidArgument("alpha must lie in (0, 1]");
    std::vector<double> scaled(R.size(), 0.0);
    for (std::size_t k = 1; k < R.size(); ++k) scaled[k] = std::pow(alpha, static_cast<double>(k) - 1.0) * R[k];
    family.alphas.push_back(alpha);
    family.curves.push_back(shape_from_cauchy(CauchyTransform::from_free_cumulants(scaled), grid, options));
  }
  return family;
}

double surface_value(const LevelCurveFamily& family, double x, double y) {
  if (family.curves.empty()) throw InvalidArgument("empty family");
  const double z = x - y, t = x + y;
  std::vector<double> v;
  for (const auto& curve : family.curves) v.push_back(curve(z) - t);
  if (v.front() > 0) return family.alphas.front();
  if (v.back() < 0) throw InvalidArgument("point lies outside the family support");
  for (std::size_t k = 0; k + 1 < v.size(); ++k)
    if (v[k + 1] > 0) {
      if (v[k] == 0) return family.alphas[k];
      return family.alphas[k] + (family.alphas[k + 1] - family.alphas[k]) * (-v[k]) / (v[k + 1] - v[k]);
    }
  return family.alphas.back();
}

}  // namespace shs
