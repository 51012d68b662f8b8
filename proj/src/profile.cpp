#include "shifted_shapes/profile.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace shs {

namespace {

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

ZigzagProfile::ZigzagProfile() : minima_{Rational(0)} {}

ZigzagProfile::ZigzagProfile(std::vector<Rational> minima, std::vector<Rational> maxima, bool symmetric)
    : minima_(std::move(minima)), maxima_(std::move(maxima)), symmetric_(symmetric) {
  if (minima_.size() != maxima_.size() + 1) throw InvalidArgument("zigzag needs one more minimum than maxima");
  Rational balance = 0;
  for (std::size_t i = 0; i < minima_.size(); ++i) {
    balance += minima_[i];
    if (i < maxima_.size()) {
      balance -= maxima_[i];
      if (!(minima_[i] < maxima_[i] && maxima_[i] < minima_[i + 1]))
        throw InvalidArgument("zigzag minima and maxima must interlace strictly");
    }
  }
  if (balance != 0) throw InvalidArgument("zigzag minima and maxima must have equal sums");
}

ZigzagProfile ZigzagProfile::from_polyline(const std::vector<std::pair<Rational, Rational>>& vertices,
                                           bool symmetric) {
  std::vector<std::pair<Rational, Rational>> v;
  for (const auto& p : vertices)
    if (v.empty() || p.first != v.back().first) v.push_back(p);
  if (v.empty()) return ZigzagProfile();
  if (v.front().second != abs_q(v.front().first) || v.back().second != abs_q(v.back().first))
    throw InvalidArgument("polyline must start and end on |z|");
  std::vector<int> slopes{-1};
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    Rational s = (v[i + 1].second - v[i].second) / (v[i + 1].first - v[i].first);
    if (s != 1 && s != -1) throw InvalidArgument("polyline slopes must be +-1");
    slopes.push_back(s > 0 ? 1 : -1);
  }
  slopes.push_back(1);
  std::vector<Rational> mins, maxs;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (slopes[i] == -1 && slopes[i + 1] == 1) mins.push_back(v[i].first);
    if (slopes[i] == 1 && slopes[i + 1] == -1) maxs.push_back(v[i].first);
  }
  return ZigzagProfile(std::move(mins), std::move(maxs), symmetric);
}

Rational ZigzagProfile::operator()(const Rational& z) const {
  if (z <= minima_.front() || z >= minima_.back()) return abs_q(z);
  Rational value = -minima_.front();
  Rational at = minima_.front();
  for (std::size_t i = 0; i < maxima_.size(); ++i) {
    if (z <= maxima_[i]) return value + (z - at);
    value += maxima_[i] - at;
    at = maxima_[i];
    if (z <= minima_[i + 1]) return value - (z - at);
    value -= minima_[i + 1] - at;
    at = minima_[i + 1];
  }
  return abs_q(z);
}

double ZigzagProfile::operator()(double z) const {
  if (z <= minima_.front().get_d() || z >= minima_.back().get_d()) return std::fabs(z);
  double value = -minima_.front().get_d();
  double at = minima_.front().get_d();
  for (std::size_t i = 0; i < maxima_.size(); ++i) {
    const double y = maxima_[i].get_d();
    if (z <= y) return value + (z - at);
    value += y - at;
    at = y;
    const double x = minima_[i + 1].get_d();
    if (z <= x) return value - (z - at);
    value -= x - at;
    at = x;
  }
  return std::fabs(z);
}

std::vector<std::pair<Rational, Rational>> ZigzagProfile::vertices() const {
  std::vector<std::pair<Rational, Rational>> out;
  Rational value = -minima_.front();
  out.emplace_back(minima_.front(), value);
  for (std::size_t i = 0; i < maxima_.size(); ++i) {
    value += maxima_[i] - out.back().first;
    out.emplace_back(maxima_[i], value);
    value -= minima_[i + 1] - out.back().first;
    out.emplace_back(minima_[i + 1], value);
  }
  return out;
}

ZigzagProfile ZigzagProfile::dilate(const Rational& r) const {
  if (r <= 0) throw InvalidArgument("dilation factor must be positive");
  std::vector<Rational> mins = minima_, maxs = maxima_;
  for (auto& x : mins) x *= r;
  for (auto& y : maxs) y *= r;
  return ZigzagProfile(std::move(mins), std::move(maxs), symmetric_);
}

ZigzagProfile profile(const StrictPartition& xi) {
  const int l = xi.length();
  if (l == 0) return ZigzagProfile({Rational(0)}, {}, true);
  const Rational half(1, 2);
  std::vector<std::pair<Rational, Rational>> right;
  right.emplace_back(Rational(0), Rational(2 * l));
  auto push = [&](int x, int y) { right.emplace_back(Rational(x - y) - half, Rational(x + y) - half); };
  push(l + 1, l);
  for (int i = l; i >= 1; --i) {
    push(i + xi.row(i), i);
    push(i + xi.row(i), i - 1);
  }
  std::vector<std::pair<Rational, Rational>> all;
  for (auto it = right.rbegin(); it != right.rend(); ++it)
    if (it->first != 0) all.emplace_back(-it->first, it->second);
  all.insert(all.end(), right.begin(), right.end());
  return ZigzagProfile::from_polyline(all, true);
}

ZigzagProfile profile(const Partition& lambda) {
  const int l = lambda.length();
  if (l == 0) return ZigzagProfile({Rational(0)}, {}, false);
  std::vector<std::pair<Rational, Rational>> v;
  auto push = [&](int x, int y) { v.emplace_back(Rational(x - y), Rational(x + y)); };
  push(0, l);
  for (int i = l; i >= 1; --i) {
    push(lambda.row(i), i);
    push(lambda.row(i), i - 1);
  }
  return ZigzagProfile::from_polyline(v, lambda == lambda.conjugate());
}

std::vector<std::pair<double, double>> shifted_vertices(const StrictPartition& xi, double r) {
  const int l = xi.length();
  std::vector<std::pair<double, double>> v;
  if (l == 0) return v;
  v.emplace_back(0.0, 2.0 * l * r);
  auto push = [&](int x, int y) {
    const double z = (x - y - 0.5) * r;
    if (v.back().first != z) v.emplace_back(z, (x + y - 0.5) * r);
  };
  push(l + 1, l);
  for (int i = l; i >= 1; --i) {
    push(i + xi.row(i), i);
    push(i + xi.row(i), i - 1);
  }
  return v;
}

double evaluate_even_polyline(const std::vector<std::pair<double, double>>& v, double z) {
  const double a = std::fabs(z);
  if (v.empty() || a >= v.back().first) return a;
  auto it = std::upper_bound(v.begin(), v.end(), a,
                             [](double x, const std::pair<double, double>& p) { return x < p.first; });
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  return lo.second + (hi.second - lo.second) * (a - lo.first) / (hi.first - lo.first);
}

SampledProfile::SampledProfile(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (grid_.points < 2 || !(grid_.hi > grid_.lo)) throw InvalidArgument("grid needs at least two points");
  if (static_cast<int>(values_.size()) != grid_.points) throw InvalidArgument("grid and values differ in size");
}

double SampledProfile::operator()(double z) const {
  if (z < grid_.lo || z > grid_.hi) return std::fabs(z);
  const double u = (z - grid_.lo) / grid_.step();
  int i = std::min(static_cast<int>(u), grid_.points - 2);
  const double f = u - i;
  return values_[i] * (1.0 - f) + values_[i + 1] * f;
}

SampledProfile SampledProfile::dilate(double r) const {
  if (!(r > 0)) throw InvalidArgument("dilation factor must be positive");
  Grid g{grid_.lo * r, grid_.hi * r, grid_.points};
  std::vector<double> v = values_;
  for (auto& t : v) t *= r;
  return SampledProfile(g, std::move(v));
}

SampledProfile sample(const std::function<double(double)>& f, const Grid& grid) {
  std::vector<double> v(grid.points);
  for (int i = 0; i < grid.points; ++i) v[i] = f(grid.at(i));
  return SampledProfile(grid, std::move(v));
}

SampledProfile sample(const ZigzagProfile& omega, const Grid& grid) {
  return sample([&](double z) { return omega(z); }, grid);
}

Rational sup_distance(const ZigzagProfile& a, const ZigzagProfile& b) {
  std::set<Rational> points;
  for (const auto& p : a.vertices()) points.insert(p.first);
  for (const auto& p : b.vertices()) points.insert(p.first);
  Rational best = 0;
  for (const auto& z : points) best = std::max(best, abs_q(a(z) - b(z)));
  return best;
}

double sup_distance(const SampledProfile& a, const SampledProfile& b) {
  double best = 0;
  for (int i = 0; i < a.size(); ++i) best = std::max(best, std::fabs(a.values()[i] - b(a.z(i))));
  for (int i = 0; i < b.size(); ++i) best = std::max(best, std::fabs(a(b.z(i)) - b.values()[i]));
  return best;
}

double sup_distance(const SampledProfile& a, const std::function<double(double)>& b) {
  double best = 0;
  for (int i = 0; i < a.size(); ++i) best = std::max(best, std::fabs(a.values()[i] - b(a.z(i))));
  return best;
}

}  // namespace shs
