#include "qsdc/random.hpp"

#include <stdexcept>

namespace qsdc {

namespace {

// splitmix64; mixes the (seed, trial, lane) triple into one engine seed.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RandomStream RandomStream::derive(std::uint64_t master_seed,
                                  std::uint64_t trial, std::uint64_t lane) {
  std::uint64_t h = mix(master_seed);
  h = mix(h ^ trial);
  h = mix(h ^ lane);
  return RandomStream(h);
}

double RandomStream::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

bool RandomStream::bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("bernoulli: p outside [0, 1]");
  // p == 1 must be certain even though uniform01 never returns 1.
  if (p == 1.0) {
    engine_();
    return true;
  }
  return uniform01() < p;
}

std::uint32_t RandomStream::uniform_below(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: n must be positive");
  const std::uint64_t span = 0x100000000ULL;  // draws are 32-bit here
  const std::uint64_t limit = span - span % n;
  for (;;) {
    const std::uint64_t draw = engine_() >> 32;
    if (draw < limit) return static_cast<std::uint32_t>(draw % n);
  }
}

}  // namespace qsdc
