#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "shifted_shapes/numeric.hpp"
#include "shifted_shapes/profile.hpp"

namespace shs {

struct Atom {
  Rational location;
  Rational weight;
};

// G(z) either as prod(z - y_j) / prod(z - x_i) for a zigzag, or as the root of
// sum_j a_j(z) G^j = 0 lying in the lower half-plane when Im z > 0.
class CauchyTransform {
 public:
  enum class Kind { Rational, Algebraic };

  static CauchyTransform from_zigzag(const ZigzagProfile& omega);
  // coefficients[j][m] multiplies z^m G^j.
  static CauchyTransform algebraic(std::vector<std::vector<double>> coefficients);
  // 1 + sum_k R_k G^k = z G, with R indexed by k (entry 0 ignored).
  static CauchyTransform from_free_cumulants(const std::vector<double>& R);

  Kind kind() const { return kind_; }
  const std::vector<Rational>& minima() const { return minima_; }
  const std::vector<Rational>& maxima() const { return maxima_; }
  const std::vector<std::vector<double>>& coefficients() const { return coefficients_; }

  std::complex<double> operator()(std::complex<double> z) const;
  // arg G(x + i eps), in [-pi, 0].
  double arg(double x, double eps) const;
  // All roots of the defining equation at z (algebraic kind), Newton-polished.
  std::vector<std::complex<double>> roots(std::complex<double> z) const;
  std::complex<double> residual(std::complex<double> z, std::complex<double> g) const;

  // M_0..M_order of the transition measure; exact for the rational kind.
  std::vector<double> moments(int order) const;
  std::vector<Rational> exact_moments(int order) const;
  // Points where arg G jumps as eps -> 0 (zigzag extrema); empty for the algebraic kind.
  std::vector<double> singular_points() const;

 private:
  Kind kind_ = Kind::Rational;
  std::vector<Rational> minima_{Rational(0)};
  std::vector<Rational> maxima_;
  std::vector<double> minima_d_{0.0};
  std::vector<double> maxima_d_;
  std::vector<std::vector<double>> coefficients_;
};

struct TransitionData {
  std::vector<Atom> transition;                   // atoms at the minima
  std::vector<std::pair<Rational, int>> rayleigh;  // +1 at minima, -1 at maxima
  CauchyTransform cauchy;
};

TransitionData transition_measure(const ZigzagProfile& omega);

// c^2 z G^3 + (2 - c^2) G^2 - 2 z G + 2 = 0, i.e. R(z) = 2z / (2 - c^2 z^2).
CauchyTransform cauchy_sw(double c);

// R_1..R_order (entry 0 unused) from the series of G at infinity.
std::vector<double> free_cumulants_from_cauchy(const CauchyTransform& G, int order);
std::vector<Rational> free_cumulants_from_cauchy_exact(const CauchyTransform& G, int order);

struct InversionOptions {
  std::vector<double> eps{1e-2, 5e-3, 2.5e-3};
  double tail_tolerance = 1e-8;
  double richardson_tolerance = 5e-2;
  int threads = 0;
};

// omega(x) = x - (2/pi) * integral_x^inf arg G(z + i eps) dz, eps -> 0 by Richardson extrapolation.
SampledProfile shape_from_cauchy(const CauchyTransform& G, const Grid& grid, const InversionOptions& options = {});
// Reference: branch tracking from large z and fine composite Simpson, single thread.
SampledProfile shape_from_cauchy_serial(const CauchyTransform& G, const Grid& grid,
                                        const InversionOptions& options = {});

// Intervals where 0 < -arg G(x + i eps) / pi < 1 on the grid, i.e. the absolutely continuous support.
// Runs no wider than kAtomWidth * eps are the smeared image of an atom and are left out.
inline constexpr double kAtomWidth = 100.0;
std::vector<std::pair<double, double>> support_intervals(const CauchyTransform& G, const Grid& grid, double eps,
                                                         double threshold = 1e-2);

double lsvk_value(double z);
SampledProfile lsvk(const Grid& grid);

SampledProfile sw_shape(double c, const Grid& grid, const InversionOptions& options = {});
SampledProfile insertion_level_curve(double alpha, const Grid& grid, const InversionOptions& options = {});
SampledProfile recording_level_curve(double alpha, const Grid& grid, const InversionOptions& options = {});

struct LevelCurveFamily {
  std::vector<double> alphas;
  std::vector<SampledProfile> curves;
};

// Omega_alpha from the free cumulants alpha^(k-1) R_k.
LevelCurveFamily scaled_level_curves(const std::vector<double>& R, const std::vector<double>& alphas,
                                     const Grid& grid, const InversionOptions& options = {});
// sup { alpha : Omega_alpha(x - y) <= x + y }, interpolated between family members.
double surface_value(const LevelCurveFamily& family, double x, double y);

}  // namespace shs
