#pragma once

#include <optional>
#include <string_view>

#include "qsdc/channel.hpp"
#include "qsdc/codec.hpp"

namespace qsdc {

enum class EveStrategy {
  None,
  SingleChannel1,
  SingleChannel2,
  SynchronizedNaive,
  SynchronizedBellAware,
};

inline constexpr std::array<EveStrategy, 5> kAllEveStrategies = {
    EveStrategy::None, EveStrategy::SingleChannel1, EveStrategy::SingleChannel2,
    EveStrategy::SynchronizedNaive, EveStrategy::SynchronizedBellAware};

// "none", "single-1", "single-2", "synchronized-naive",
// "synchronized-bell-aware"
const char* strategy_name(EveStrategy strat);
std::optional<EveStrategy> strategy_from_name(std::string_view name);

struct EveObservation {
  std::optional<int> bit1;
  std::optional<int> bit2;
  // Set whenever both bits were measured. The verbatim reading takes the
  // measured pair as the guess; the correlation-aware reading maps a
  // correlated pair to {00, 10} and an anticorrelated pair to {01, 11},
  // uniformly within the pair, since tap statistics fix only that split.
  std::optional<MessageBlock> guess;
};

struct InterceptResult {
  EveObservation observation;
  TwoQubitState post;
};

// Applies the strategy's taps to `s` directly, outside any channel.
InterceptResult eve_intercept(const TwoQubitState& s, EveStrategy strat,
                              RandomStream& rng);

// Tap layout realizing the strategy; the returned topology's taps point at
// `rng`, which must outlive it.
ChannelTopology topology_for(EveStrategy strat, RandomStream& rng);

// Turns what the taps recorded into Eve's observation and guess.
EveObservation interpret_intercept(EveStrategy strat,
                                   const InterceptEvents& events,
                                   RandomStream& rng);

// Exact probability that Eve's guess equals the true block, over uniform
// carriers and uniform blocks, by full enumeration of carrier, flip, tap
// and guess branches. Strategies that produce no guess are scored with a
// uniform guess, so their success is exactly 1/4.
double exact_block_success(EveStrategy strat);
double exact_block_success(EveStrategy strat, const NoiseConfig& noise);

// Same enumeration pinned to one block value; under the verbatim reading
// the success depends on the block sent.
double exact_block_success_for(EveStrategy strat, MessageBlock block,
                               const NoiseConfig& noise);

// exact_block_success(strat) raised to n_blocks, the whole-message success
// under uniform independent blocks. Throws on negative n_blocks; returns 1
// for zero blocks.
double exact_message_success(EveStrategy strat, int n_blocks);

}  // namespace qsdc
