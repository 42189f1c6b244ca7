#include <benchmark/benchmark.h>

#include <qsdc/adversary.hpp>
#include <qsdc/codec.hpp>
#include <qsdc/session.hpp>

using namespace qsdc;

namespace {

void BM_Encode(benchmark::State& state) {
  int k = 0;
  for (auto _ : state) {
    const BellKind carrier = kAllBellKinds[k & 3];
    const MessageBlock block((k >> 2) & 3);
    benchmark::DoNotOptimize(encode(carrier, block));
    ++k;
  }
}
BENCHMARK(BM_Encode);

void BM_DecodeCodeword(benchmark::State& state) {
  RandomStream rng = RandomStream::derive(1, 0, kLaneDecode);
  int k = 0;
  for (auto _ : state) {
    const TwoQubitState s = bell_state(kAllBellKinds[k & 3]);
    benchmark::DoNotOptimize(decode(s, rng));
    ++k;
  }
}
BENCHMARK(BM_DecodeCodeword);

void BM_ApplyPauliNoise(benchmark::State& state) {
  RandomStream rng = RandomStream::derive(1, 0, kLaneNoise);
  const TwoQubitState s = bell_state(BellKind::PhiPlus);
  const NoiseConfig noise = uniform_noise(0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_pauli_noise(s, noise, rng));
  }
}
BENCHMARK(BM_ApplyPauliNoise);

void BM_EnumerateNoiseOutcomes(benchmark::State& state) {
  const TwoQubitState s = bell_state(BellKind::PhiPlus);
  const NoiseConfig noise = uniform_noise(0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_noise_outcomes(s, noise));
  }
}
BENCHMARK(BM_EnumerateNoiseOutcomes);

// One block end to end including the per-trial stream derivation, the unit
// the Monte Carlo loop repeats.
void BM_RunBlock(benchmark::State& state) {
  SessionConfig cfg;
  cfg.noise = uniform_noise(0.1);
  cfg.eve = EveStrategy::SynchronizedNaive;
  std::uint64_t trial = 0;
  for (auto _ : state) {
    TrialStreams streams = trial_streams(42, trial++);
    benchmark::DoNotOptimize(
        run_block(MessageBlock(static_cast<int>(trial & 3)), cfg, streams));
  }
}
BENCHMARK(BM_RunBlock);

void BM_ExactBlockSuccess(benchmark::State& state) {
  const NoiseConfig noise = uniform_noise(0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        exact_block_success(EveStrategy::SynchronizedBellAware, noise));
  }
}
BENCHMARK(BM_ExactBlockSuccess);

void BM_MonteCarlo256(benchmark::State& state) {
  SessionConfig cfg;
  cfg.message = message_from_bits("00011011");
  cfg.noise = uniform_noise(0.1);
  cfg.eve = EveStrategy::SynchronizedNaive;
  cfg.trials = 256;
  cfg.max_threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_monte_carlo(cfg));
  }
}
BENCHMARK(BM_MonteCarlo256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
