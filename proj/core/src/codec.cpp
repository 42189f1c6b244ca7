#include "qsdc/codec.hpp"

#include <cmath>
#include <stdexcept>

namespace qsdc {

namespace {

int bell_index(BellKind kind) { return static_cast<int>(kind); }

// Operator table, rows by carrier, columns by block value. Each row turns
// its carrier into the canonical codeword with phase exactly +1; iY and the
// Z-first composites exist precisely to cancel the signs that plain X, Y, Z
// would leave behind.
constexpr GateLabel kEncodeTable[4][4] = {
    // carrier phi+ : 00, 01, 10, 11
    {GateLabel::I, GateLabel::X, GateLabel::Z, GateLabel::iY},
    // carrier phi-
    {GateLabel::Z, GateLabel::XZ, GateLabel::I, GateLabel::iYZ},
    // carrier psi+
    {GateLabel::X, GateLabel::I, GateLabel::iY, GateLabel::Z},
    // carrier psi-
    {GateLabel::XZ, GateLabel::Z, GateLabel::iYZ, GateLabel::I},
};

}  // namespace

MessageBlock::MessageBlock(int value) : value_(value) {
  if (value < 0 || value > 3)
    throw std::invalid_argument("MessageBlock: value outside 0..3");
}

BellKind codeword_kind(MessageBlock block) {
  switch (block.value()) {
    case 0:
      return BellKind::PhiPlus;
    case 1:
      return BellKind::PsiPlus;
    case 2:
      return BellKind::PhiMinus;
    default:
      return BellKind::PsiMinus;
  }
}

MessageBlock block_for_codeword(BellKind kind) {
  switch (kind) {
    case BellKind::PhiPlus:
      return MessageBlock(0);
    case BellKind::PsiPlus:
      return MessageBlock(1);
    case BellKind::PhiMinus:
      return MessageBlock(2);
    case BellKind::PsiMinus:
      return MessageBlock(3);
  }
  throw std::invalid_argument("block_for_codeword: bad BellKind");
}

GateLabel select_encoding_op(BellKind carrier, MessageBlock block) {
  return kEncodeTable[bell_index(carrier)][block.value()];
}

TwoQubitState encode(BellKind carrier, MessageBlock block) {
  const Mat2 op = gate_matrix(select_encoding_op(carrier, block));
  const Mat2 eye = gate_matrix(GateLabel::I);
  return apply(tensor(op, eye), bell_state(carrier));
}

Mat4 decoder_matrix() {
  return multiply(tensor(gate_matrix(GateLabel::H), gate_matrix(GateLabel::I)),
                  cnot());
}

MessageBlock decode(const TwoQubitState& s, RandomStream& rng) {
  const TwoQubitState rotated = apply(decoder_matrix(), s);
  // Deterministic shortcut when one outcome carries all the weight, so
  // codewords consume no randomness.
  for (int k = 0; k < 4; ++k)
    if (std::norm(rotated.amp[k]) >= 1.0 - kStateTol) return MessageBlock(k);
  return MessageBlock(measure_computational(rotated, rng).bits);
}

std::optional<BellMatch> classify_bell(const TwoQubitState& s) {
  if (std::abs(norm(s) - 1.0) > kStateTol) return std::nullopt;
  for (BellKind kind : kAllBellKinds) {
    const cplx overlap = inner_product(bell_state(kind), s);
    if (std::abs(overlap) >= 1.0 - kStateTol)
      return BellMatch{kind, overlap};
  }
  return std::nullopt;
}

}  // namespace qsdc
