#include <doctest.h>

#include <qsdc/channel.hpp>
#include <qsdc/session.hpp>

#include "test_support.hpp"

using namespace qsdc;
using namespace testutil;

namespace {

// Closed forms from the flip-parity argument, independent of the library's
// enumeration: a flip-parity pair (xpar, zpar) shifts the delivered
// codeword by xor, so with q = (1-p)^2 + p^2 per parity,
//   no interception: block error 1 - qx*qz, bit error 1 - (qx+qz)/2
//   any interception: block error 1 - qx/2, bit error 3/4 - qx/2
// (after Eve's collapse the decoded high bit is an unbiased coin).
double parity_clean(double pa, double pb) {
  return (1.0 - pa) * (1.0 - pb) + pa * pb;
}

SessionConfig make_cfg(const std::string& bits, double p, EveStrategy eve,
                       std::uint64_t seed, std::uint64_t trials) {
  SessionConfig cfg;
  cfg.message = message_from_bits(bits);
  cfg.noise = uniform_noise(p);
  cfg.eve = eve;
  cfg.master_seed = seed;
  cfg.trials = trials;
  return cfg;
}

}  // namespace

TEST_CASE("messages parse and split into blocks") {
  const Message msg = message_from_bits("011011");
  REQUIRE(msg.bits.size() == 6);
  const std::vector<MessageBlock> blocks = message_blocks(msg);
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0].value() == 1);
  CHECK(blocks[1].value() == 2);
  CHECK(blocks[2].value() == 3);

  CHECK(message_blocks(message_from_bits("")).empty());
  CHECK_THROWS_AS(message_from_bits("01x"), std::invalid_argument);
  CHECK_THROWS_AS(message_blocks(message_from_bits("011")),
                  std::invalid_argument);
}

TEST_CASE("alice draws uniform carriers and sends the codeword") {
  RandomStream rng(200);
  const int n = 100000;
  int counts[4] = {0, 0, 0, 0};
  for (int k = 0; k < n; ++k) {
    const CarrierChoice choice = alice_send_block(MessageBlock(k & 3), rng);
    counts[static_cast<int>(choice.carrier)]++;
    if (k < 64) {
      const std::optional<BellMatch> match = classify_bell(choice.state);
      REQUIRE(match.has_value());
      CHECK(match->kind == codeword_kind(MessageBlock(k & 3)));
      CHECK(std::abs(match->phase - cplx(1.0)) <= 1e-12);
    }
  }
  for (int c : counts)
    CHECK(std::abs(c / static_cast<double>(n) - 0.25) <= sigma3(0.25, n));
}

TEST_CASE("noiseless blocks decode perfectly") {
  const SessionConfig cfg = make_cfg("00", 0.0, EveStrategy::None, 5, 1);
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    TrialStreams streams = trial_streams(5, trial);
    for (int m = 0; m < 4; ++m) {
      const BlockTrace trace = run_block(MessageBlock(m), cfg, streams);
      CHECK(trace.decoded.value() == m);
      CHECK(trace.gate == select_encoding_op(trace.carrier, trace.block));
      CHECK(trace.flips == FlipRecord{});
    }
  }
}

TEST_CASE("a certain bit flip on channel 1 shifts every block by 01") {
  SessionConfig cfg = make_cfg("00", 0.0, EveStrategy::None, 6, 1);
  cfg.noise = NoiseConfig{};
  cfg.noise.px1 = 1.0;
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    TrialStreams streams = trial_streams(6, trial);
    for (int m = 0; m < 4; ++m) {
      const BlockTrace trace = run_block(MessageBlock(m), cfg, streams);
      CHECK(trace.decoded.value() == (m ^ 1));
    }
  }
}

TEST_CASE("synchronized interception leaves a two-outcome coin for bob") {
  const SessionConfig cfg =
      make_cfg("00", 0.0, EveStrategy::SynchronizedNaive, 7, 1);
  const int n = 4000;
  int hi = 0;
  for (int trial = 0; trial < n; ++trial) {
    TrialStreams streams = trial_streams(7, trial);
    const BlockTrace trace = run_block(MessageBlock(1), cfg, streams);
    const int d = trace.decoded.value();
    CHECK((d == 1 || d == 3));  // the psi-class pair
    hi += d == 3;
  }
  CHECK(std::abs(hi / static_cast<double>(n) - 0.5) <= sigma3(0.5, n));
}

TEST_CASE("block traces replay consistently") {
  SessionConfig cfg = make_cfg("00", 0.3, EveStrategy::None, 8, 1);
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    TrialStreams streams = trial_streams(8, trial);
    const BlockTrace trace = run_block(MessageBlock(2), cfg, streams);
    const TwoQubitState replayed =
        apply_flips(encode(trace.carrier, trace.block), trace.flips);
    CHECK(max_diff(replayed, trace.delivered) <= 1e-12);
  }
}

TEST_CASE("block traces replay through eve's collapse") {
  SessionConfig cfg = make_cfg("00", 0.2, EveStrategy::SynchronizedNaive, 9, 1);
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    TrialStreams streams = trial_streams(9, trial);
    const BlockTrace trace = run_block(MessageBlock(0), cfg, streams);
    REQUIRE(trace.eve_obs.bit1.has_value());
    REQUIRE(trace.eve_obs.bit2.has_value());
    // Delivered is the basis state Eve observed up to the surviving
    // branch's phase, and that state carries nonzero weight in the
    // flipped codeword.
    const int idx = (*trace.eve_obs.bit1 << 1) | *trace.eve_obs.bit2;
    for (int k = 0; k < 4; ++k) {
      const double mag = k == idx ? 1.0 : 0.0;
      CHECK(std::abs(std::abs(trace.delivered.amp[k]) - mag) <= 1e-12);
    }
    const TwoQubitState flipped =
        apply_flips(encode(trace.carrier, trace.block), trace.flips);
    CHECK(std::norm(flipped.amp[idx]) > 0.0);
  }
}

TEST_CASE("toggling eve does not shift the noise draws") {
  SessionConfig off = make_cfg("00", 0.3, EveStrategy::None, 10, 1);
  SessionConfig on = make_cfg("00", 0.3, EveStrategy::SynchronizedNaive, 10, 1);
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    TrialStreams a = trial_streams(10, trial);
    TrialStreams b = trial_streams(10, trial);
    const BlockTrace ta = run_block(MessageBlock(3), off, a);
    const BlockTrace tb = run_block(MessageBlock(3), on, b);
    CHECK(ta.flips == tb.flips);
    CHECK(ta.carrier == tb.carrier);
  }
}

TEST_CASE("monte carlo matches the closed forms without interception") {
  for (double p : {0.1, 0.25}) {
    const SessionConfig cfg =
        make_cfg("00011011", p, EveStrategy::None, 11, 25000);
    const RunStats stats = run_monte_carlo(cfg);
    const double q = parity_clean(p, p);
    const double blk = 1.0 - q * q;
    const double bit = 1.0 - q;
    const double n = 100000.0;  // 25000 trials x 4 blocks
    CHECK(std::abs(stats.block_error_rate - blk) <= sigma3(blk, n));
    CHECK(std::abs(stats.bit_error_rate - bit) <= sigma3(bit, 2 * n));
    CHECK(std::abs(stats.eve_block_success_rate - 0.25) <= sigma3(0.25, n));
    CHECK(std::abs(stats.oracle_block_success - 0.25) <= 1e-12);

    const ExactRates exact = exact_session_rates(cfg.message, cfg.noise, cfg.eve);
    CHECK(std::abs(exact.block_error_rate - blk) <= 1e-12);
    CHECK(std::abs(exact.bit_error_rate - bit) <= 1e-12);
  }
  // Spot values: p = 0.1 gives q = 0.82, block 0.3276, bit 0.18.
  const ExactRates spot = exact_session_rates(message_from_bits("00011011"),
                                              uniform_noise(0.1),
                                              EveStrategy::None);
  CHECK(std::abs(spot.block_error_rate - 0.3276) <= 1e-12);
  CHECK(std::abs(spot.bit_error_rate - 0.18) <= 1e-12);
}

TEST_CASE("monte carlo matches the closed forms under interception") {
  const SessionConfig cfg =
      make_cfg("00011011", 0.1, EveStrategy::SynchronizedNaive, 12, 25000);
  const RunStats stats = run_monte_carlo(cfg);
  const double qx = parity_clean(0.1, 0.1);  // 0.82
  const double blk = 1.0 - qx / 2.0;         // 0.59
  const double bit = 0.75 - qx / 2.0;        // 0.34
  const double n = 100000.0;
  CHECK(std::abs(stats.block_error_rate - blk) <= sigma3(blk, n));
  CHECK(std::abs(stats.bit_error_rate - bit) <= sigma3(bit, 2 * n));
  CHECK(std::abs(stats.eve_block_success_rate - 0.25) <= sigma3(0.25, n));
  CHECK(std::abs(stats.oracle_block_success - 0.25) <= 1e-12);

  const ExactRates exact = exact_session_rates(cfg.message, cfg.noise, cfg.eve);
  CHECK(std::abs(exact.block_error_rate - blk) <= 1e-12);
  CHECK(std::abs(exact.bit_error_rate - bit) <= 1e-12);
  CHECK(std::abs(exact.eve_block_success - 0.25) <= 1e-12);
}

TEST_CASE("single-channel interception hurts bob like a synchronized one") {
  NoiseConfig asym;
  asym.px1 = 0.3;
  asym.pz1 = 0.05;
  asym.pz2 = 0.2;
  const Message msg = message_from_bits("0110");
  for (EveStrategy strat : {EveStrategy::SingleChannel1,
                            EveStrategy::SingleChannel2,
                            EveStrategy::SynchronizedBellAware}) {
    const ExactRates exact = exact_session_rates(msg, asym, strat);
    const double qx = parity_clean(0.3, 0.0);  // 0.7
    CHECK(std::abs(exact.block_error_rate - (1.0 - qx / 2.0)) <= 1e-12);
    CHECK(std::abs(exact.bit_error_rate - (0.75 - qx / 2.0)) <= 1e-12);
  }

  SessionConfig cfg;
  cfg.message = msg;
  cfg.noise = asym;
  cfg.eve = EveStrategy::SingleChannel2;
  cfg.master_seed = 13;
  cfg.trials = 25000;
  const RunStats stats = run_monte_carlo(cfg);
  CHECK(std::abs(stats.block_error_rate - 0.65) <= sigma3(0.65, 100000.0));
  CHECK(std::abs(stats.bit_error_rate - 0.4) <= sigma3(0.4, 200000.0));
  CHECK(std::abs(stats.eve_block_success_rate - 0.25) <=
        sigma3(0.25, 100000.0));
}

TEST_CASE("whole-message interception success is per-message, not a power "
          "of the average") {
  // Verbatim reading, blocks 00 01 00 01: per-block success is 1/2 at zero
  // noise, so the message success is 1/16, not 0.25^4.
  const SessionConfig cfg =
      make_cfg("00010001", 0.0, EveStrategy::SynchronizedNaive, 14, 40000);
  const ExactRates exact = exact_session_rates(cfg.message, cfg.noise, cfg.eve);
  CHECK(std::abs(exact.eve_message_success - 0.0625) <= 1e-12);
  CHECK(std::abs(exact.eve_block_success - 0.5) <= 1e-12);
  CHECK(std::abs(exact_message_success(EveStrategy::SynchronizedNaive, 4) -
                 0.00390625) <= 1e-12);

  const RunStats stats = run_monte_carlo(cfg);
  CHECK(std::abs(stats.eve_message_success_rate - 0.0625) <=
        sigma3(0.0625, 40000.0));
  CHECK(std::abs(stats.oracle_block_success - 0.5) <= 1e-12);

  // Blocks 10 and 11 are never guessed verbatim, so a message containing
  // them is never fully recovered.
  const SessionConfig dead =
      make_cfg("00011011", 0.0, EveStrategy::SynchronizedNaive, 15, 5000);
  CHECK(exact_session_rates(dead.message, dead.noise, dead.eve)
            .eve_message_success == 0.0);
  CHECK(run_monte_carlo(dead).eve_message_success_rate == 0.0);
}

TEST_CASE("correlation-aware interception attains the power identity") {
  const SessionConfig cfg =
      make_cfg("00011011", 0.0, EveStrategy::SynchronizedBellAware, 16, 40000);
  const ExactRates exact = exact_session_rates(cfg.message, cfg.noise, cfg.eve);
  CHECK(std::abs(exact.eve_message_success - 0.0625) <= 1e-12);
  CHECK(std::abs(exact.eve_message_success -
                 exact_message_success(cfg.eve, 4)) <= 1e-12);
  const RunStats stats = run_monte_carlo(cfg);
  CHECK(std::abs(stats.eve_message_success_rate - 0.0625) <=
        sigma3(0.0625, 40000.0));
}

TEST_CASE("empty messages are legal and trivially perfect") {
  const SessionConfig cfg = make_cfg("", 0.2, EveStrategy::SynchronizedNaive,
                                     17, 100);
  const RunStats stats = run_monte_carlo(cfg);
  CHECK(stats.block_error_rate == 0.0);
  CHECK(stats.bit_error_rate == 0.0);
  CHECK(stats.eve_block_success_rate == 0.0);
  CHECK(stats.eve_message_success_rate == 1.0);
  CHECK(stats.blocks_per_trial == 0);
  CHECK(stats.trials == 100);

  const ExactRates exact = exact_session_rates(cfg.message, cfg.noise, cfg.eve);
  CHECK(exact.eve_message_success == 1.0);
  CHECK(exact.block_error_rate == 0.0);
}

TEST_CASE("runs are deterministic across repeats and thread counts") {
  SessionConfig cfg = make_cfg("0110", 0.15, EveStrategy::SynchronizedBellAware,
                               18, 6000);
  const RunStats first = run_monte_carlo(cfg);
  const RunStats second = run_monte_carlo(cfg);
  CHECK(first == second);

  cfg.max_threads = 1;
  const RunStats serial = run_monte_carlo(cfg);
  cfg.max_threads = 3;
  const RunStats threaded = run_monte_carlo(cfg);
  CHECK(serial == first);
  CHECK(threaded == first);

  SessionConfig other = cfg;
  other.master_seed = 19;
  CHECK(run_monte_carlo(other) != first);
}

TEST_CASE("invalid session configs are rejected") {
  SessionConfig odd = make_cfg("01", 0.0, EveStrategy::None, 1, 10);
  odd.message.bits.push_back(1);
  CHECK_THROWS_AS(run_monte_carlo(odd), std::invalid_argument);

  SessionConfig none = make_cfg("01", 0.0, EveStrategy::None, 1, 10);
  none.trials = 0;
  CHECK_THROWS_AS(run_monte_carlo(none), std::invalid_argument);

  SessionConfig bad = make_cfg("01", 0.0, EveStrategy::None, 1, 10);
  bad.noise.px2 = 1.2;
  CHECK_THROWS_AS(run_monte_carlo(bad), std::invalid_argument);
}

TEST_CASE("paper claim fields ride along unchanged") {
  const RunStats stats =
      run_monte_carlo(make_cfg("01", 0.0, EveStrategy::None, 2, 10));
  CHECK(stats.paper_claim_block_success == 0.0625);
}
