#pragma once

#include <optional>

#include "qsdc/gates.hpp"
#include "qsdc/measure.hpp"
#include "qsdc/states.hpp"

namespace qsdc {

// One two-bit unit of the message. The first transmitted bit is the high
// bit, so the bit pair "10" is value 2.
class MessageBlock {
 public:
  MessageBlock() = default;
  explicit MessageBlock(int value);  // throws unless 0..3

  int value() const { return value_; }
  int high_bit() const { return (value_ >> 1) & 1; }
  int low_bit() const { return value_ & 1; }

  friend bool operator==(const MessageBlock&, const MessageBlock&) = default;

 private:
  int value_ = 0;
};

// Canonical codeword for each block: 00 -> phi+, 01 -> psi+, 10 -> phi-,
// 11 -> psi-.
BellKind codeword_kind(MessageBlock block);
MessageBlock block_for_codeword(BellKind kind);

// The operator Alice applies to her qubit so that `carrier` becomes the
// codeword for `block`. Sixteen (carrier, block) rows total.
GateLabel select_encoding_op(BellKind carrier, MessageBlock block);

// Alice's encoding step. The result equals bell_state(codeword_kind(block))
// exactly, phase included, for every carrier.
TwoQubitState encode(BellKind carrier, MessageBlock block);

// Bob's decoding circuit as one matrix: CNOT (control qubit one), then
// Hadamard on qubit one. Maps each codeword to a distinct basis state.
Mat4 decoder_matrix();

// Applies the decoder and measures. Deterministic whenever `s` is a
// codeword up to global phase; `rng` is consumed only when the decoded
// distribution is genuinely spread (e.g. corrupted input).
MessageBlock decode(const TwoQubitState& s, RandomStream& rng);

struct BellMatch {
  BellKind kind;
  cplx phase;  // <bell|s>, modulus 1 up to tolerance
};

// Identifies `s` as a Bell state up to global phase, within kStateTol.
// Returns nullopt for anything else, including unnormalized input.
std::optional<BellMatch> classify_bell(const TwoQubitState& s);

}  // namespace qsdc
