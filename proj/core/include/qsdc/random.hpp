#pragma once

#include <cstdint>
#include <random>

namespace qsdc {

// Stream lanes. Each independent source of randomness in a trial draws from
// its own derived stream so adding draws to one source never shifts another.
inline constexpr std::uint64_t kLaneCarrier = 0;
inline constexpr std::uint64_t kLaneNoise = 1;
inline constexpr std::uint64_t kLaneEve = 2;
inline constexpr std::uint64_t kLaneDecode = 3;

// Deterministic pseudo-random stream. The draw helpers avoid
// std::uniform_*_distribution on purpose: the engine is specified
// bit-for-bit by the standard but the distributions are not, and results
// here must reproduce across standard libraries.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Stream for (master seed, trial, lane), decorrelated via splitmix64.
  static RandomStream derive(std::uint64_t master_seed, std::uint64_t trial,
                             std::uint64_t lane);

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01();

  // True with probability p; p outside [0, 1] is a caller bug and throws.
  bool bernoulli(double p);

  // Unbiased uniform integer in [0, n); n must be positive.
  std::uint32_t uniform_below(std::uint32_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace qsdc
