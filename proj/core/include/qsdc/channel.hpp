#pragma once

#include <optional>
#include <vector>

#include "qsdc/measure.hpp"
#include "qsdc/random.hpp"
#include "qsdc/states.hpp"

namespace qsdc {

// Independent bit-flip and phase-flip probabilities for each channel.
struct NoiseConfig {
  double px1 = 0.0;
  double pz1 = 0.0;
  double px2 = 0.0;
  double pz2 = 0.0;
};

NoiseConfig uniform_noise(double p);

// Throws std::invalid_argument if any probability is outside [0, 1].
void validate(const NoiseConfig& cfg);

struct FlipRecord {
  bool x1 = false;
  bool z1 = false;
  bool x2 = false;
  bool z2 = false;

  friend bool operator==(const FlipRecord&, const FlipRecord&) = default;
};

// Applies the recorded flips deterministically. The per-qubit operator is
// X^x * Z^z, i.e. the phase flip acts first, matching GateLabel::XZ.
TwoQubitState apply_flips(const TwoQubitState& s, const FlipRecord& rec);

struct NoisyState {
  TwoQubitState state;
  FlipRecord flips;
};

// Samples the four flips independently and applies them.
NoisyState apply_pauli_noise(const TwoQubitState& s, const NoiseConfig& cfg,
                             RandomStream& rng);

struct NoiseOutcome {
  FlipRecord flips;
  TwoQubitState state;
  double probability;
};

// Every flip combination with nonzero probability, with its exact
// probability and resulting state. Probabilities sum to 1 within
// kConstructionTol. This is the enumeration the Monte Carlo results are
// audited against, so it shares apply_flips but none of the sampling path.
std::vector<NoiseOutcome> enumerate_noise_outcomes(const TwoQubitState& s,
                                                   const NoiseConfig& cfg);

// A tap measures its channel's qubit in the computational basis as the
// qubit passes, drawing from the interceptor's own stream.
struct Tap {
  RandomStream* rng = nullptr;
};

enum class NoisePlacement { BeforeTaps, AfterTaps };

struct ChannelTopology {
  std::optional<Tap> tap1;
  std::optional<Tap> tap2;
  NoisePlacement placement = NoisePlacement::BeforeTaps;
};

struct InterceptEvents {
  std::optional<int> bit1;
  std::optional<int> bit2;
};

struct TransmitResult {
  TwoQubitState delivered;
  FlipRecord flips;
  InterceptEvents taps;
};

// One use of the channel pair: noise and taps in the configured order.
// `rng` drives the noise; each tap uses its own stream.
TransmitResult transmit(const TwoQubitState& s, const ChannelTopology& topo,
                        const NoiseConfig& cfg, RandomStream& rng);

}  // namespace qsdc
