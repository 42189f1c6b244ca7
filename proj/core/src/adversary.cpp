#include "qsdc/adversary.hpp"

#include <cmath>
#include <stdexcept>

namespace qsdc {

namespace {

bool taps_channel_one(EveStrategy strat) {
  return strat == EveStrategy::SingleChannel1 ||
         strat == EveStrategy::SynchronizedNaive ||
         strat == EveStrategy::SynchronizedBellAware;
}

bool taps_channel_two(EveStrategy strat) {
  return strat == EveStrategy::SingleChannel2 ||
         strat == EveStrategy::SynchronizedNaive ||
         strat == EveStrategy::SynchronizedBellAware;
}

}  // namespace

const char* strategy_name(EveStrategy strat) {
  switch (strat) {
    case EveStrategy::None:
      return "none";
    case EveStrategy::SingleChannel1:
      return "single-1";
    case EveStrategy::SingleChannel2:
      return "single-2";
    case EveStrategy::SynchronizedNaive:
      return "synchronized-naive";
    case EveStrategy::SynchronizedBellAware:
      return "synchronized-bell-aware";
  }
  throw std::invalid_argument("strategy_name: bad EveStrategy");
}

std::optional<EveStrategy> strategy_from_name(std::string_view name) {
  for (EveStrategy strat : kAllEveStrategies)
    if (name == strategy_name(strat)) return strat;
  return std::nullopt;
}

ChannelTopology topology_for(EveStrategy strat, RandomStream& rng) {
  ChannelTopology topo;
  if (taps_channel_one(strat)) topo.tap1 = Tap{&rng};
  if (taps_channel_two(strat)) topo.tap2 = Tap{&rng};
  return topo;
}

EveObservation interpret_intercept(EveStrategy strat,
                                   const InterceptEvents& events,
                                   RandomStream& rng) {
  EveObservation obs;
  obs.bit1 = events.bit1;
  obs.bit2 = events.bit2;
  if (!events.bit1 || !events.bit2) return obs;
  const int b1 = *events.bit1;
  const int b2 = *events.bit2;
  if (strat == EveStrategy::SynchronizedNaive) {
    obs.guess = MessageBlock((b1 << 1) | b2);
  } else if (strat == EveStrategy::SynchronizedBellAware) {
    // Correlated bits occur only for phi codewords (blocks 00 and 10),
    // anticorrelated only for psi codewords (01 and 11); nothing narrows
    // the pair further, so pick inside it uniformly.
    const int low = b1 == b2 ? 0 : 1;
    obs.guess = MessageBlock((static_cast<int>(rng.uniform_below(2)) << 1) | low);
  }
  return obs;
}

InterceptResult eve_intercept(const TwoQubitState& s, EveStrategy strat,
                              RandomStream& rng) {
  InterceptEvents events;
  TwoQubitState cur = s;
  if (taps_channel_one(strat)) {
    const QubitMeasurementResult r = measure_qubit(cur, Qubit::One, rng);
    events.bit1 = r.bit;
    cur = r.post;
  }
  if (taps_channel_two(strat)) {
    const QubitMeasurementResult r = measure_qubit(cur, Qubit::Two, rng);
    events.bit2 = r.bit;
    cur = r.post;
  }
  return InterceptResult{interpret_intercept(strat, events, rng), cur};
}

double exact_block_success_for(EveStrategy strat, MessageBlock block,
                               const NoiseConfig& noise) {
  validate(noise);
  // No guess means the score of a uniform draw, exactly 1/4, independent of
  // carrier, noise and the single measured bit.
  if (!taps_channel_one(strat) || !taps_channel_two(strat)) return 0.25;

  double success = 0.0;
  for (BellKind carrier : kAllBellKinds) {
    const TwoQubitState sent = encode(carrier, block);
    for (const NoiseOutcome& outcome : enumerate_noise_outcomes(sent, noise)) {
      for (int bits = 0; bits < 4; ++bits) {
        const double p_bits = std::norm(outcome.state.amp[bits]);
        if (p_bits == 0.0) continue;
        const double branch = 0.25 * outcome.probability * p_bits;
        if (strat == EveStrategy::SynchronizedNaive) {
          if (bits == block.value()) success += branch;
        } else {
          const int b1 = (bits >> 1) & 1;
          const int b2 = bits & 1;
          const int low = b1 == b2 ? 0 : 1;
          for (int high = 0; high < 2; ++high)
            if (((high << 1) | low) == block.value()) success += 0.5 * branch;
        }
      }
    }
  }
  return success;
}

double exact_block_success(EveStrategy strat, const NoiseConfig& noise) {
  double sum = 0.0;
  for (int m = 0; m < 4; ++m)
    sum += exact_block_success_for(strat, MessageBlock(m), noise);
  return sum / 4.0;
}

double exact_block_success(EveStrategy strat) {
  return exact_block_success(strat, NoiseConfig{});
}

double exact_message_success(EveStrategy strat, int n_blocks) {
  if (n_blocks < 0)
    throw std::invalid_argument("exact_message_success: negative block count");
  return std::pow(exact_block_success(strat), n_blocks);
}

}  // namespace qsdc
