#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "qsdc/adversary.hpp"
#include "qsdc/channel.hpp"
#include "qsdc/codec.hpp"

namespace qsdc {

// A bit string of even length; two bits per transmitted block.
struct Message {
  std::vector<std::uint8_t> bits;  // each 0 or 1, first bit sent first
};

// Parses "0"/"1" characters; throws on anything else.
Message message_from_bits(std::string_view text);

// Splits into blocks, first bit of each pair high. Throws on odd length.
std::vector<MessageBlock> message_blocks(const Message& msg);

struct SessionConfig {
  Message message;
  NoiseConfig noise;
  EveStrategy eve = EveStrategy::None;
  std::uint64_t master_seed = 0;
  std::uint64_t trials = 1;
  // 0 means: QSDC_SIM_THREADS from the environment if set, else the
  // hardware count. Results are identical for every thread count.
  int max_threads = 0;
};

// Per-trial streams, one lane per independent random source.
struct TrialStreams {
  RandomStream carrier;
  RandomStream noise;
  RandomStream eve;
  RandomStream decode;
};

TrialStreams trial_streams(std::uint64_t master_seed, std::uint64_t trial);

struct CarrierChoice {
  BellKind carrier;
  TwoQubitState state;  // the carrier already encoding `block`
};

// Alice draws a uniform carrier and applies the encoding operator for
// `block` to it.
CarrierChoice alice_send_block(MessageBlock block, RandomStream& rng);

struct BlockTrace {
  BellKind carrier{};
  MessageBlock block;
  GateLabel gate{};
  FlipRecord flips;
  EveObservation eve_obs;
  TwoQubitState delivered;  // the state Bob's decoder received
  MessageBlock decoded;
};

// One block end to end: carrier draw and encoding, channel with Eve's taps,
// decoding.
BlockTrace run_block(MessageBlock block, const SessionConfig& cfg,
                     TrialStreams& streams);

struct RunStats {
  double block_error_rate = 0.0;
  double bit_error_rate = 0.0;
  double eve_block_success_rate = 0.0;
  double eve_message_success_rate = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t blocks_per_trial = 0;
  // Exact counterpart of eve_block_success_rate for this run's message,
  // noise and strategy, next to the published 1/16 figure it contradicts.
  double oracle_block_success = 0.0;
  double paper_claim_block_success = 1.0 / 16.0;

  friend bool operator==(const RunStats&, const RunStats&) = default;
};

// Runs `trials` independent transmissions of the whole message and
// aggregates exact integer counts, so results do not depend on thread
// count. Throws on an odd-length message or zero trials; an empty message
// is legal and yields zero error rates and message success 1. Eve's guess
// is scored per block; strategies that never guess are scored with a
// uniform draw from the eve lane.
RunStats run_monte_carlo(const SessionConfig& cfg);

// Exact rates for one message by enumeration over carriers, flips, tap
// outcomes and decoder measurement. This is what run_monte_carlo estimates.
struct ExactRates {
  double block_error_rate = 0.0;
  double bit_error_rate = 0.0;
  double eve_block_success = 0.0;    // mean over the message's blocks
  double eve_message_success = 0.0;  // product over the message's blocks
};

ExactRates exact_session_rates(const Message& msg, const NoiseConfig& noise,
                               EveStrategy eve);

}  // namespace qsdc
