#pragma once

#include "qsdc/random.hpp"
#include "qsdc/states.hpp"

namespace qsdc {

struct MeasurementResult {
  int bits = 0;  // outcome index into |00>,|01>,|10>,|11>
  TwoQubitState post;
};

struct QubitMeasurementResult {
  int bit = 0;
  TwoQubitState post;  // joint state after the one-qubit collapse
};

// Full computational-basis measurement with Born probabilities |amp[k]|^2.
// The post state is the matching basis vector. Requires a normalized input
// (within kStateTol).
MeasurementResult measure_computational(const TwoQubitState& s,
                                        RandomStream& rng);

// Measures a single qubit; the other qubit keeps its conditional
// superposition, renormalized.
QubitMeasurementResult measure_qubit(const TwoQubitState& s, Qubit which,
                                     RandomStream& rng);

}  // namespace qsdc
