#include <doctest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <map>

#include "shifted_shapes/rsk.hpp"
#include "shifted_shapes/samplers.hpp"

using namespace shs;

namespace {

BigInt pow_int(long base, int e) {
  BigInt p = 1;
  for (int i = 0; i < e; ++i) p *= base;
  return p;
}

// Exact shape distributions from tableau counts.
std::map<StrictPartition, double> plancherel_exact(int n) {
  std::map<StrictPartition, double> m;
  for (const auto& xi : strict_partitions(n)) {
    const BigInt g = count_syt(xi);
    const Rational p(pow_int(2, n - xi.length()) * g * g, factorial(n));
    m[xi] = p.get_d();
  }
  return m;
}

std::map<StrictPartition, double> schur_weyl_exact(int n, int d) {
  std::map<StrictPartition, double> m;
  for (const auto& xi : strict_partitions(n)) {
    const Rational p(count_generalized(xi, d) * pow_int(2, n - xi.length()) * count_syt(xi), pow_int(2 * d, n));
    m[xi] = p.get_d();
  }
  return m;
}

double lsvk_reference(double z) {
  if (std::abs(z) >= 2) return std::abs(z);
  return 2.0 / M_PI * (z * std::asin(z / 2) + std::sqrt(4 - z * z));
}

template <class Key>
bool chi_square_passes(const std::map<Key, long>& observed, const std::map<Key, double>& expected, long draws) {
  double stat = 0;
  int cells = 0;
  for (const auto& [k, p] : expected) {
    if (p == 0) continue;
    ++cells;
    const auto it = observed.find(k);
    const double o = it == observed.end() ? 0.0 : static_cast<double>(it->second);
    const double e = p * static_cast<double>(draws);
    stat += (o - e) * (o - e) / e;
  }
  for (const auto& [k, o] : observed)
    if (!expected.count(k) || expected.at(k) == 0) return false;
  if (cells < 2) return true;
  const boost::math::chi_squared dist(cells - 1);
  return stat <= boost::math::quantile(dist, 0.999);
}

}  // namespace

TEST_CASE("hook walk on shapes with one tableau") {
  Rng rng(1);
  const auto only = enumerate_syt(StrictPartition({2, 1}))[0];
  for (int i = 0; i < 50; ++i) CHECK(hook_walk_syt(StrictPartition({2, 1}), rng) == only);
  for (int n = 1; n <= 6; ++n) {
    const auto t = hook_walk_syt(StrictPartition({n}), rng);
    for (int k = 0; k < n; ++k) CHECK(t.rows()[0][k] == k + 1);
  }
}

TEST_CASE("hook walk is uniform on (3,2,1)") {
  Rng rng(2024);
  const auto all = enumerate_syt(StrictPartition({3, 2, 1}));
  REQUIRE(all.size() == 2);
  const int draws = 100000;
  int first = 0;
  for (int i = 0; i < draws; ++i) first += hook_walk_syt(StrictPartition({3, 2, 1}), rng) == all[0];
  const double sigma = std::sqrt(0.25 / draws);
  CHECK(std::abs(first / static_cast<double>(draws) - 0.5) < 3 * sigma);
}

TEST_CASE("hook walk outputs are valid and pass chi-square on small shapes") {
  Rng rng(77);
  for (int n = 3; n <= 6; ++n)
    for (const auto& xi : strict_partitions(n)) {
      const auto all = enumerate_syt(xi);
      std::map<ShiftedStandardTableau, double> expected;
      for (const auto& t : all) expected[t] = 1.0 / static_cast<double>(all.size());
      std::map<ShiftedStandardTableau, long> observed;
      const long draws = 20000;
      for (long i = 0; i < draws; ++i) {
        const auto t = hook_walk_syt(xi, rng);
        ++observed[t];
      }
      CHECK(chi_square_passes(observed, expected, draws));
    }
}

TEST_CASE("hook walk is reproducible per seed") {
  const StrictPartition xi({5, 3, 2});
  CHECK(hook_walk_syt(xi, std::uint64_t{9}) == hook_walk_syt(xi, std::uint64_t{9}));
  CHECK(hook_walk_syt(xi, std::uint64_t{9}).valid());
}

TEST_CASE("Plancherel sampler") {
  Rng rng(5);
  for (int i = 0; i < 20; ++i) CHECK(sample_plancherel(2, rng) == StrictPartition({2}));
  CHECK(sample_plancherel(0, rng) == StrictPartition());
  const int draws = 100000;
  int count3 = 0;
  for (int i = 0; i < draws; ++i) count3 += sample_plancherel(3, rng) == StrictPartition({3});
  const double p = 2.0 / 3.0, sigma = std::sqrt(p * (1 - p) / draws);
  CHECK(std::abs(count3 / static_cast<double>(draws) - p) < 3 * sigma);
  for (int n = 4; n <= 5; ++n) {
    std::map<StrictPartition, long> observed;
    for (int i = 0; i < 40000; ++i) ++observed[sample_plancherel(n, rng)];
    CHECK(chi_square_passes(observed, plancherel_exact(n), 40000));
  }
  Rng a(11), b(11);
  for (int i = 0; i < 10; ++i) CHECK(sample_plancherel(30, a) == sample_plancherel(30, b));
}

TEST_CASE("Schur-Weyl sampler") {
  Rng rng(6);
  for (int i = 0; i < 20; ++i) CHECK(sample_schur_weyl(2, 1, rng) == StrictPartition({2}));
  CHECK(sample_schur_weyl(0, 3, rng) == StrictPartition());
  CHECK_THROWS_AS(sample_schur_weyl(3, 0, rng), InvalidArgument);
  for (int n = 3; n <= 5; ++n)
    for (int d = 1; d <= 3; ++d) {
      std::map<StrictPartition, long> observed;
      for (int i = 0; i < 40000; ++i) ++observed[sample_schur_weyl(n, d, rng)];
      CHECK(chi_square_passes(observed, schur_weyl_exact(n, d), 40000));
    }
}

TEST_CASE("Schur-Weyl insertion over all words reproduces the exact measure") {
  for (int n = 1; n <= 6; ++n)
    for (int d = 1; d <= 3; ++d) {
      long total = 1;
      for (int i = 0; i < n; ++i) total *= d;
      std::map<StrictPartition, long> counts;
      for (long w = 0; w < total; ++w) {
        MixedInserter ins;
        long x = w;
        for (int i = 0; i < n; ++i, x /= d) ins.insert(static_cast<int>(1 + x % d));
        ++counts[ins.shape()];
      }
      const auto exact = schur_weyl_exact(n, d);
      for (const auto& [xi, p] : exact)
        CHECK(static_cast<double>(counts[xi]) == doctest::Approx(p * static_cast<double>(total)).epsilon(1e-12));
    }
}

TEST_CASE("Monte Carlo with a degenerate sampler") {
  const StrictPartition xi({4, 2});
  const ShapeSampler fixed = [xi](Rng&) { return xi; };
  const Grid grid{-8, 8, 161};
  const auto w = profile(xi);
  const auto res = monte_carlo_profile(fixed, 1, 1.0, 3, grid, [](double z) { return std::abs(z); });
  for (int i = 0; i < grid.points; ++i) CHECK(res.mean.values()[i] == doctest::Approx(w(grid.at(i))).epsilon(1e-12));
  CHECK(res.deviations.size() == 1);
  CHECK(res.deviations[0] == doctest::Approx(sup_distance(w, ZigzagProfile()).get_d()));
  CHECK(res.shapes[0] == xi);
  // Scaling by r gives r * omega(z / r).
  const auto half = monte_carlo_profile(fixed, 2, 0.5, 3, grid, [](double z) { return std::abs(z); });
  for (int i = 0; i < grid.points; ++i)
    CHECK(half.mean.values()[i] == doctest::Approx(0.5 * w(2 * grid.at(i))).epsilon(1e-12));
}

TEST_CASE("Monte Carlo results do not depend on the worker count") {
  const ShapeSampler sampler = [](Rng& rng) { return sample_plancherel(200, rng); };
  const Grid grid{-3, 3, 121};
  const double scale = 1.0 / std::sqrt(400.0);
  const auto serial = monte_carlo_profile_serial(sampler, 12, scale, 42, grid, lsvk_reference);
  for (int threads : {1, 2, 4}) {
    const auto par = monte_carlo_profile(sampler, 12, scale, 42, grid, lsvk_reference, threads);
    CHECK(par.mean.values() == serial.mean.values());
    CHECK(par.deviations == serial.deviations);
    CHECK(par.shapes == serial.shapes);
  }
  const auto stats = monte_carlo_statistic(sampler, 12, 42, [](const StrictPartition& s) { return s.row(1); }, 3);
  for (int t = 0; t < 12; ++t) CHECK(stats[t] == serial.shapes[t].row(1));
  CHECK_THROWS_AS(monte_carlo_profile(sampler, 0, scale, 1, grid, lsvk_reference), InvalidArgument);
  CHECK_THROWS_AS(monte_carlo_profile(sampler, 1, 0.0, 1, grid, lsvk_reference), InvalidArgument);
}

TEST_CASE("independent streams differ") {
  Rng a = stream_rng(42, 0), b = stream_rng(42, 1), c = stream_rng(43, 0);
  const auto x = a(), y = b(), z = c();
  CHECK(x != y);
  CHECK(x != z);
  CHECK(stream_rng(42, 0)() == x);
}
