#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "shifted_shapes/numeric.hpp"
#include "shifted_shapes/partitions.hpp"

namespace shs {

// Piecewise-linear profile with slopes +-1, equal to |z| outside [x_0, x_m].
// Local minima x_0 < y_1 < x_1 < ... < y_m < x_m with sum x = sum y.
class ZigzagProfile {
 public:
  ZigzagProfile();
  ZigzagProfile(std::vector<Rational> minima, std::vector<Rational> maxima, bool symmetric = false);

  // Build from a polyline of (z, t) vertices sorted by z whose segments have slope +-1;
  // the curve is extended by |z| beyond the first and last vertex.
  static ZigzagProfile from_polyline(const std::vector<std::pair<Rational, Rational>>& vertices,
                                     bool symmetric = false);

  const std::vector<Rational>& minima() const { return minima_; }
  const std::vector<Rational>& maxima() const { return maxima_; }
  bool symmetric() const { return symmetric_; }

  Rational operator()(const Rational& z) const;
  double operator()(double z) const;

  // Breakpoints (minima and maxima interleaved) together with the profile value.
  std::vector<std::pair<Rational, Rational>> vertices() const;

  ZigzagProfile dilate(const Rational& r) const;

 private:
  std::vector<Rational> minima_;
  std::vector<Rational> maxima_;
  bool symmetric_ = false;
};

// Shifted Russian profile of a strict partition: z = x - y - 1/2, t = x + y - 1/2, extended evenly.
ZigzagProfile profile(const StrictPartition& xi);
// Russian profile of an ordinary partition: z = x - y, t = x + y.
ZigzagProfile profile(const Partition& lambda);

// Floating-point vertices of r * omega_xi(z / r) for z >= 0 (shifted convention); used by
// the Monte Carlo kernels where exact rationals are too slow.
std::vector<std::pair<double, double>> shifted_vertices(const StrictPartition& xi, double r);
double evaluate_even_polyline(const std::vector<std::pair<double, double>>& right_half, double z);

struct Grid {
  double lo = -3.0;
  double hi = 3.0;
  int points = 401;

  double step() const { return points > 1 ? (hi - lo) / (points - 1) : 0.0; }
  double at(int i) const { return i == points - 1 ? hi : lo + step() * i; }
};

class SampledProfile {
 public:
  SampledProfile() = default;
  SampledProfile(Grid grid, std::vector<double> values);

  const Grid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  double z(int i) const { return grid_.at(i); }
  int size() const { return grid_.points; }

  // Linear interpolation inside the grid, |z| outside.
  double operator()(double z) const;

  SampledProfile dilate(double r) const;

 private:
  Grid grid_;
  std::vector<double> values_;
};

SampledProfile sample(const std::function<double(double)>& f, const Grid& grid);
SampledProfile sample(const ZigzagProfile& omega, const Grid& grid);

Rational sup_distance(const ZigzagProfile& a, const ZigzagProfile& b);
// Maximum over the union of both grids.
double sup_distance(const SampledProfile& a, const SampledProfile& b);
double sup_distance(const SampledProfile& a, const std::function<double(double)>& b);

}  // namespace shs
