#include "qsdc/session.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace qsdc {

Message message_from_bits(std::string_view text) {
  Message msg;
  msg.bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("message_from_bits: bits must be 0 or 1");
    msg.bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return msg;
}

std::vector<MessageBlock> message_blocks(const Message& msg) {
  if (msg.bits.size() % 2 != 0)
    throw std::invalid_argument("message_blocks: message length must be even");
  std::vector<MessageBlock> blocks;
  blocks.reserve(msg.bits.size() / 2);
  for (std::size_t k = 0; k + 1 < msg.bits.size(); k += 2)
    blocks.push_back(MessageBlock(msg.bits[k] * 2 + msg.bits[k + 1]));
  return blocks;
}

TrialStreams trial_streams(std::uint64_t master_seed, std::uint64_t trial) {
  return TrialStreams{
      RandomStream::derive(master_seed, trial, kLaneCarrier),
      RandomStream::derive(master_seed, trial, kLaneNoise),
      RandomStream::derive(master_seed, trial, kLaneEve),
      RandomStream::derive(master_seed, trial, kLaneDecode),
  };
}

CarrierChoice alice_send_block(MessageBlock block, RandomStream& rng) {
  const BellKind carrier = kAllBellKinds[rng.uniform_below(4)];
  return CarrierChoice{carrier, encode(carrier, block)};
}

BlockTrace run_block(MessageBlock block, const SessionConfig& cfg,
                     TrialStreams& streams) {
  BlockTrace trace;
  trace.block = block;
  const CarrierChoice sent = alice_send_block(block, streams.carrier);
  trace.carrier = sent.carrier;
  trace.gate = select_encoding_op(sent.carrier, block);
  const ChannelTopology topo = topology_for(cfg.eve, streams.eve);
  const TransmitResult crossed =
      transmit(sent.state, topo, cfg.noise, streams.noise);
  trace.flips = crossed.flips;
  trace.eve_obs = interpret_intercept(cfg.eve, crossed.taps, streams.eve);
  trace.delivered = crossed.delivered;
  trace.decoded = decode(crossed.delivered, streams.decode);
  return trace;
}

namespace {

int bits_wrong(MessageBlock a, MessageBlock b) {
  const int x = a.value() ^ b.value();
  return ((x >> 1) & 1) + (x & 1);
}

struct Counts {
  std::uint64_t wrong_blocks = 0;
  std::uint64_t wrong_bits = 0;
  std::uint64_t eve_block_hits = 0;
  std::uint64_t eve_message_hits = 0;
};

Counts run_trials(const SessionConfig& cfg,
                  const std::vector<MessageBlock>& blocks, std::uint64_t lo,
                  std::uint64_t hi) {
  Counts c;
  for (std::uint64_t trial = lo; trial < hi; ++trial) {
    TrialStreams streams = trial_streams(cfg.master_seed, trial);
    bool whole_message = true;
    for (MessageBlock block : blocks) {
      const BlockTrace trace = run_block(block, cfg, streams);
      if (trace.decoded != block) ++c.wrong_blocks;
      c.wrong_bits += bits_wrong(trace.decoded, block);
      const MessageBlock guess =
          trace.eve_obs.guess
              ? *trace.eve_obs.guess
              : MessageBlock(static_cast<int>(streams.eve.uniform_below(4)));
      if (guess == block)
        ++c.eve_block_hits;
      else
        whole_message = false;
    }
    if (whole_message) ++c.eve_message_hits;
  }
  return c;
}

int resolve_threads(int requested, std::uint64_t trials) {
  int n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv("QSDC_SIM_THREADS")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v >= 1 && v <= 4096)
        n = static_cast<int>(v);
    }
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  if (static_cast<std::uint64_t>(n) > trials) n = static_cast<int>(trials);
  return n;
}

}  // namespace

RunStats run_monte_carlo(const SessionConfig& cfg) {
  validate(cfg.noise);
  if (cfg.trials == 0)
    throw std::invalid_argument("run_monte_carlo: trials must be positive");
  const std::vector<MessageBlock> blocks = message_blocks(cfg.message);

  RunStats stats;
  stats.trials = cfg.trials;
  stats.blocks_per_trial = blocks.size();
  if (blocks.empty()) {
    stats.eve_message_success_rate = 1.0;  // empty product
    return stats;
  }

  const int threads = resolve_threads(cfg.max_threads, cfg.trials);
  Counts total;
  if (threads == 1) {
    total = run_trials(cfg, blocks, 0, cfg.trials);
  } else {
    const std::uint64_t base = cfg.trials / threads;
    const std::uint64_t rem = cfg.trials % threads;
    std::vector<Counts> partial(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::uint64_t lo = 0;
    for (int t = 0; t < threads; ++t) {
      const std::uint64_t hi = lo + base + (static_cast<std::uint64_t>(t) < rem ? 1 : 0);
      pool.emplace_back([&cfg, &blocks, &partial, t, lo, hi] {
        partial[t] = run_trials(cfg, blocks, lo, hi);
      });
      lo = hi;
    }
    for (std::thread& th : pool) th.join();
    for (const Counts& c : partial) {
      total.wrong_blocks += c.wrong_blocks;
      total.wrong_bits += c.wrong_bits;
      total.eve_block_hits += c.eve_block_hits;
      total.eve_message_hits += c.eve_message_hits;
    }
  }

  const double blocks_total =
      static_cast<double>(cfg.trials) * static_cast<double>(blocks.size());
  stats.block_error_rate = static_cast<double>(total.wrong_blocks) / blocks_total;
  stats.bit_error_rate =
      static_cast<double>(total.wrong_bits) / (2.0 * blocks_total);
  stats.eve_block_success_rate =
      static_cast<double>(total.eve_block_hits) / blocks_total;
  stats.eve_message_success_rate =
      static_cast<double>(total.eve_message_hits) / static_cast<double>(cfg.trials);

  double oracle = 0.0;
  for (MessageBlock block : blocks)
    oracle += exact_block_success_for(cfg.eve, block, cfg.noise);
  stats.oracle_block_success = oracle / static_cast<double>(blocks.size());
  return stats;
}

namespace {

struct InterceptBranch {
  TwoQubitState state;
  double prob;
};

std::vector<InterceptBranch> intercept_branches(const TwoQubitState& s,
                                                EveStrategy strat) {
  std::vector<InterceptBranch> out;
  const bool one = strat == EveStrategy::SingleChannel1 ||
                   strat == EveStrategy::SynchronizedNaive ||
                   strat == EveStrategy::SynchronizedBellAware;
  const bool two = strat == EveStrategy::SingleChannel2 ||
                   strat == EveStrategy::SynchronizedNaive ||
                   strat == EveStrategy::SynchronizedBellAware;
  if (!one && !two) {
    out.push_back({s, 1.0});
    return out;
  }
  if (one && two) {
    for (int k = 0; k < 4; ++k) {
      const double p = std::norm(s.amp[k]);
      if (p == 0.0) continue;
      TwoQubitState basis;
      basis.amp[k] = 1.0;
      out.push_back({basis, p});
    }
    return out;
  }
  const int bit_pos = one ? 1 : 0;
  for (int b = 0; b < 2; ++b) {
    double p = 0.0;
    TwoQubitState proj;
    for (int k = 0; k < 4; ++k) {
      if (((k >> bit_pos) & 1) != b) continue;
      proj.amp[k] = s.amp[k];
      p += std::norm(s.amp[k]);
    }
    if (p == 0.0) continue;
    const double scale = std::sqrt(p);
    for (cplx& a : proj.amp) a /= scale;
    out.push_back({proj, p});
  }
  return out;
}

}  // namespace

ExactRates exact_session_rates(const Message& msg, const NoiseConfig& noise,
                               EveStrategy eve) {
  validate(noise);
  const std::vector<MessageBlock> blocks = message_blocks(msg);
  ExactRates rates;
  rates.eve_message_success = 1.0;
  if (blocks.empty()) return rates;

  const Mat4 decoder = decoder_matrix();
  const double n = static_cast<double>(blocks.size());
  for (MessageBlock block : blocks) {
    const double s = exact_block_success_for(eve, block, noise);
    rates.eve_block_success += s / n;
    rates.eve_message_success *= s;

    for (BellKind carrier : kAllBellKinds) {
      const TwoQubitState sent = encode(carrier, block);
      for (const NoiseOutcome& outcome : enumerate_noise_outcomes(sent, noise)) {
        for (const InterceptBranch& branch :
             intercept_branches(outcome.state, eve)) {
          const TwoQubitState rotated = apply(decoder, branch.state);
          for (int d = 0; d < 4; ++d) {
            const double w = 0.25 * outcome.probability * branch.prob *
                             std::norm(rotated.amp[d]);
            if (w == 0.0) continue;
            if (d != block.value()) rates.block_error_rate += w / n;
            rates.bit_error_rate +=
                w * bits_wrong(MessageBlock(d), block) / (2.0 * n);
          }
        }
      }
    }
  }
  return rates;
}

}  // namespace qsdc
