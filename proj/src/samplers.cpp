#include "shifted_shapes/samplers.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "shifted_shapes/parallel.hpp"
#include "shifted_shapes/rsk.hpp"

namespace shs {

ShiftedStandardTableau hook_walk_syt(const StrictPartition& xi, Rng& rng) {
  const int l = xi.length();
  // English coordinates: row i (1-based) occupies columns i .. i + len[i] - 1.
  std::vector<int> len(l + 2, 0);
  for (int i = 1; i <= l; ++i) len[i] = xi.row(i);
  std::vector<std::vector<int>> rows(l);
  for (int i = 1; i <= l; ++i) rows[i - 1].assign(len[i], 0);
  auto exists = [&](int i, int j) { return i >= 1 && i <= l && j >= i && j < i + len[i]; };

  std::vector<std::pair<int, int>> hook;
  for (int m = xi.size(); m >= 1; --m) {
    std::uniform_int_distribution<int> pick_cell(0, m - 1);
    int u = pick_cell(rng);
    int i = 1;
    while (u >= len[i]) u -= len[i++];
    int j = i + u;
    for (;;) {
      hook.clear();
      for (int jj = j + 1; jj < i + len[i]; ++jj) hook.emplace_back(i, jj);
      for (int ii = i + 1; exists(ii, j); ++ii) hook.emplace_back(ii, j);
      if (exists(j, j))
        for (int jj = j + 1; jj < j + 1 + len[j + 1]; ++jj) hook.emplace_back(j + 1, jj);
      if (hook.empty()) break;
      std::uniform_int_distribution<int> pick(0, static_cast<int>(hook.size()) - 1);
      std::tie(i, j) = hook[pick(rng)];
    }
    rows[i - 1][j - i] = m;
    --len[i];
  }
  return ShiftedStandardTableau(xi, std::move(rows));
}

ShiftedStandardTableau hook_walk_syt(const StrictPartition& xi, std::uint64_t seed) {
  Rng rng = stream_rng(seed, 0);
  return hook_walk_syt(xi, rng);
}

StrictPartition sample_plancherel(int n, Rng& rng) {
  if (n < 0) throw InvalidArgument("n must be non-negative");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  MixedInserter ins;
  for (int v : perm) ins.insert(v);
  return ins.shape();
}

StrictPartition sample_schur_weyl(int n, int d, Rng& rng) {
  if (n < 0) throw InvalidArgument("n must be non-negative");
  if (d < 1) throw InvalidArgument("d must be positive");
  std::uniform_int_distribution<int> letter(1, d);
  MixedInserter ins;
  for (int i = 0; i < n; ++i) ins.insert(letter(rng));
  return ins.shape();
}

double MonteCarloResult::mean_deviation() const {
  if (deviations.empty()) return 0.0;
  double s = 0;
  for (double d : deviations) s += d;
  return s / static_cast<double>(deviations.size());
}

namespace {

struct TrialOutput {
  StrictPartition shape;
  std::vector<double> values;
  double deviation = 0;
};

TrialOutput run_trial(const ShapeSampler& sampler, int t, double scale, std::uint64_t seed, const Grid& grid,
                      const Curve& reference) {
  TrialOutput out;
  Rng rng = stream_rng(seed, static_cast<std::uint64_t>(t));
  out.shape = sampler(rng);
  const auto half = shifted_vertices(out.shape, scale);
  out.values.resize(grid.points);
  double dev = 0;
  for (int i = 0; i < grid.points; ++i) {
    const double z = grid.at(i);
    out.values[i] = evaluate_even_polyline(half, z);
    dev = std::max(dev, std::fabs(out.values[i] - reference(z)));
  }
  for (const auto& [z, t_value] : half) {
    dev = std::max(dev, std::fabs(t_value - reference(z)));
    dev = std::max(dev, std::fabs(t_value - reference(-z)));
  }
  out.deviation = dev;
  return out;
}

MonteCarloResult assemble(std::vector<TrialOutput>& trials, const Grid& grid) {
  MonteCarloResult r;
  std::vector<double> mean(grid.points, 0.0);
  for (const auto& t : trials)
    for (int i = 0; i < grid.points; ++i) mean[i] += t.values[i];
  for (auto& v : mean) v /= static_cast<double>(trials.size());
  r.mean = SampledProfile(grid, std::move(mean));
  for (auto& t : trials) {
    r.deviations.push_back(t.deviation);
    r.shapes.push_back(std::move(t.shape));
  }
  return r;
}

}  // namespace

MonteCarloResult monte_carlo_profile(const ShapeSampler& sampler, int trials, double scale, std::uint64_t seed,
                                     const Grid& grid, const Curve& reference, int threads) {
  if (trials < 1) throw InvalidArgument("trials must be at least 1");
  if (!(scale > 0)) throw InvalidArgument("scale must be positive");
  std::vector<TrialOutput> out(trials);
#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(threads))
  for (int t = 0; t < trials; ++t) out[t] = run_trial(sampler, t, scale, seed, grid, reference);
  return assemble(out, grid);
}

MonteCarloResult monte_carlo_profile_serial(const ShapeSampler& sampler, int trials, double scale,
                                            std::uint64_t seed, const Grid& grid, const Curve& reference) {
  if (trials < 1) throw InvalidArgument("trials must be at least 1");
  if (!(scale > 0)) throw InvalidArgument("scale must be positive");
  std::vector<TrialOutput> out;
  for (int t = 0; t < trials; ++t) out.push_back(run_trial(sampler, t, scale, seed, grid, reference));
  return assemble(out, grid);
}

std::vector<double> monte_carlo_statistic(const ShapeSampler& sampler, int trials, std::uint64_t seed,
                                          const std::function<double(const StrictPartition&)>& f, int threads) {
  if (trials < 1) throw InvalidArgument("trials must be at least 1");
  std::vector<double> out(trials);
#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(threads))
  for (int t = 0; t < trials; ++t) {
    Rng rng = stream_rng(seed, static_cast<std::uint64_t>(t));
    out[t] = f(sampler(rng));
  }
  return out;
}

}  // namespace shs
