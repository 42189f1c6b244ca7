#include "qsdc/measure.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qsdc {

namespace {

void require_normalized(const TwoQubitState& s, const char* where) {
  if (std::abs(norm(s) - 1.0) > kStateTol)
    throw std::invalid_argument(std::string(where) +
                                ": state is not normalized");
}

// Picks index k with probability weights[k] / sum(weights). The weights are
// squared amplitudes, so the sum is 1 within kStateTol; the residual mass
// from rounding goes to the last nonzero weight.
int sample_index(const double (&weights)[4], RandomStream& rng) {
  const double u = rng.uniform01();
  double acc = 0.0;
  int last = 0;
  for (int k = 0; k < 4; ++k) {
    if (weights[k] <= 0.0) continue;
    acc += weights[k];
    last = k;
    if (u < acc) return k;
  }
  return last;
}

}  // namespace

MeasurementResult measure_computational(const TwoQubitState& s,
                                        RandomStream& rng) {
  require_normalized(s, "measure_computational");
  double weights[4];
  for (int k = 0; k < 4; ++k) weights[k] = std::norm(s.amp[k]);
  MeasurementResult res;
  res.bits = sample_index(weights, rng);
  res.post.amp[res.bits] = 1.0;
  return res;
}

QubitMeasurementResult measure_qubit(const TwoQubitState& s, Qubit which,
                                     RandomStream& rng) {
  require_normalized(s, "measure_qubit");
  // Basis index bit: |q1 q2>, so qubit one is the high bit of the index.
  const int bit_pos = which == Qubit::One ? 1 : 0;
  double p1 = 0.0;
  for (int k = 0; k < 4; ++k)
    if ((k >> bit_pos) & 1) p1 += std::norm(s.amp[k]);

  QubitMeasurementResult res;
  res.bit = rng.bernoulli(p1 > 1.0 ? 1.0 : p1) ? 1 : 0;

  TwoQubitState post;
  post.renormalized = s.renormalized;
  double kept = 0.0;
  for (int k = 0; k < 4; ++k) {
    if (((k >> bit_pos) & 1) == res.bit) {
      post.amp[k] = s.amp[k];
      kept += std::norm(s.amp[k]);
    }
  }
  const double scale = std::sqrt(kept);
  for (cplx& a : post.amp) a /= scale;
  res.post = post;
  return res;
}

}  // namespace qsdc
