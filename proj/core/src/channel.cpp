#include "qsdc/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace qsdc {

NoiseConfig uniform_noise(double p) { return NoiseConfig{p, p, p, p}; }

void validate(const NoiseConfig& cfg) {
  for (double p : {cfg.px1, cfg.pz1, cfg.px2, cfg.pz2})
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument(
          "NoiseConfig: flip probability outside [0, 1]");
}

TwoQubitState apply_flips(const TwoQubitState& s, const FlipRecord& rec) {
  // Amplitude bookkeeping instead of matrix products: for basis |q1 q2>,
  // Z^z contributes (-1)^(z*q) and X^x then permutes the index. Identical
  // to applying X^x1 Z^z1 (x) X^x2 Z^z2, with Z acting first per qubit.
  TwoQubitState out;
  out.renormalized = s.renormalized;
  for (int k = 0; k < 4; ++k) {
    const int q1 = (k >> 1) & 1;
    const int q2 = k & 1;
    double sign = 1.0;
    if (rec.z1 && q1) sign = -sign;
    if (rec.z2 && q2) sign = -sign;
    const int dest = ((q1 ^ (rec.x1 ? 1 : 0)) << 1) | (q2 ^ (rec.x2 ? 1 : 0));
    out.amp[dest] = sign * s.amp[k];
  }
  return out;
}

NoisyState apply_pauli_noise(const TwoQubitState& s, const NoiseConfig& cfg,
                             RandomStream& rng) {
  validate(cfg);
  FlipRecord rec;
  rec.x1 = rng.bernoulli(cfg.px1);
  rec.z1 = rng.bernoulli(cfg.pz1);
  rec.x2 = rng.bernoulli(cfg.px2);
  rec.z2 = rng.bernoulli(cfg.pz2);
  return NoisyState{apply_flips(s, rec), rec};
}

std::vector<NoiseOutcome> enumerate_noise_outcomes(const TwoQubitState& s,
                                                   const NoiseConfig& cfg) {
  validate(cfg);
  const double pr[4] = {cfg.px1, cfg.pz1, cfg.px2, cfg.pz2};
  std::vector<NoiseOutcome> out;
  for (int mask = 0; mask < 16; ++mask) {
    double prob = 1.0;
    for (int j = 0; j < 4; ++j)
      prob *= (mask >> j) & 1 ? pr[j] : 1.0 - pr[j];
    if (prob == 0.0) continue;
    FlipRecord rec;
    rec.x1 = (mask >> 0) & 1;
    rec.z1 = (mask >> 1) & 1;
    rec.x2 = (mask >> 2) & 1;
    rec.z2 = (mask >> 3) & 1;
    out.push_back(NoiseOutcome{rec, apply_flips(s, rec), prob});
  }
  return out;
}

namespace {

TwoQubitState tap_pass(const TwoQubitState& s, const ChannelTopology& topo,
                       InterceptEvents& events) {
  TwoQubitState cur = s;
  if (topo.tap1) {
    const QubitMeasurementResult r =
        measure_qubit(cur, Qubit::One, *topo.tap1->rng);
    events.bit1 = r.bit;
    cur = r.post;
  }
  if (topo.tap2) {
    const QubitMeasurementResult r =
        measure_qubit(cur, Qubit::Two, *topo.tap2->rng);
    events.bit2 = r.bit;
    cur = r.post;
  }
  return cur;
}

}  // namespace

TransmitResult transmit(const TwoQubitState& s, const ChannelTopology& topo,
                        const NoiseConfig& cfg, RandomStream& rng) {
  TransmitResult res;
  if (topo.placement == NoisePlacement::BeforeTaps) {
    const NoisyState noisy = apply_pauli_noise(s, cfg, rng);
    res.flips = noisy.flips;
    res.delivered = tap_pass(noisy.state, topo, res.taps);
  } else {
    const TwoQubitState tapped = tap_pass(s, topo, res.taps);
    const NoisyState noisy = apply_pauli_noise(tapped, cfg, rng);
    res.flips = noisy.flips;
    res.delivered = noisy.state;
  }
  return res;
}

}  // namespace qsdc
