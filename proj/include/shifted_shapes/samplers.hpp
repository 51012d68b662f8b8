#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "shifted_shapes/partitions.hpp"
#include "shifted_shapes/profile.hpp"
#include "shifted_shapes/random.hpp"
#include "shifted_shapes/tableaux.hpp"

namespace shs {

ShiftedStandardTableau hook_walk_syt(const StrictPartition& xi, Rng& rng);
ShiftedStandardTableau hook_walk_syt(const StrictPartition& xi, std::uint64_t seed);

// Shape of the shifted RS correspondence on a uniform circled permutation. Circle flags do
// not move boxes, so only the permutation is drawn.
StrictPartition sample_plancherel(int n, Rng& rng);
// Shape of shifted RSK on a uniform word over the circled alphabet with d values.
StrictPartition sample_schur_weyl(int n, int d, Rng& rng);

using ShapeSampler = std::function<StrictPartition(Rng&)>;
using Curve = std::function<double(double)>;

struct MonteCarloResult {
  SampledProfile mean;
  std::vector<double> deviations;
  std::vector<StrictPartition> shapes;

  double mean_deviation() const;
};

// Trial t draws from stream_rng(seed, t); profiles are dilated by `scale`, averaged on
// `grid`, and compared with `reference` at grid nodes and profile breakpoints.
MonteCarloResult monte_carlo_profile(const ShapeSampler& sampler, int trials, double scale, std::uint64_t seed,
                                     const Grid& grid, const Curve& reference, int threads = 0);
MonteCarloResult monte_carlo_profile_serial(const ShapeSampler& sampler, int trials, double scale,
                                            std::uint64_t seed, const Grid& grid, const Curve& reference);

// Per-trial values of f(shape), trial t on stream t.
std::vector<double> monte_carlo_statistic(const ShapeSampler& sampler, int trials, std::uint64_t seed,
                                          const std::function<double(const StrictPartition&)>& f,
                                          int threads = 0);

}  // namespace shs
