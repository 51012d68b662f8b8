#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

#include "shifted_shapes/limit_shapes.hpp"
#include "shifted_shapes/parallel.hpp"
#include "shifted_shapes/samplers.hpp"

using namespace shs;

namespace {

double seconds(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2f\n", name, serial, parallel,
              serial / parallel);
}

}  // namespace

int main() {
  std::printf("workers: %d\n", resolve_threads());
  const Grid grid{-3.0, 3.0, 401};
  const int n = 2000, trials = 16;
  const ShapeSampler sampler = [n](Rng& rng) { return sample_plancherel(n, rng); };
  const double scale = 1.0 / std::sqrt(2.0 * n);
  double dev_s = 0, dev_p = 0;
  const double ts = seconds([&] { dev_s = monte_carlo_profile_serial(sampler, trials, scale, 1, grid, lsvk_value).mean_deviation(); });
  const double tp = seconds([&] { dev_p = monte_carlo_profile(sampler, trials, scale, 1, grid, lsvk_value).mean_deviation(); });
  report("monte carlo profile", ts, tp);
  if (dev_s != dev_p) std::printf("  mismatch: %.17g vs %.17g\n", dev_s, dev_p);

  const auto G = cauchy_sw(1.0);
  const Grid wide{-4.0, 4.0, 401};
  double diff = 0;
  SampledProfile a, b;
  const double us = seconds([&] { a = shape_from_cauchy_serial(G, wide); });
  const double up = seconds([&] { b = shape_from_cauchy(G, wide); });
  diff = sup_distance(a, b);
  report("stieltjes inversion", us, up);
  std::printf("  sup difference between the two inversions: %.3g\n", diff);
  return 0;
}
