#pragma once

#include <cstdint>
#include <random>

namespace shs {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

// Generator for trial `stream` of a run seeded with `seed`.
Rng stream_rng(std::uint64_t seed, std::uint64_t stream);

}  // namespace shs
