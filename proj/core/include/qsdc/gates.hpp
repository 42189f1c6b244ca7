#pragma once

#include <array>

#include "qsdc/states.hpp"

namespace qsdc {

// Single-qubit operators used by the protocol. Composite labels denote
// matrix products applied right to left, so XZ means "Z first, then X":
// XZ = [[0,-1],[1,0]], iYZ = [[0,-1],[-1,0]]. iY is the real rotation
// [[0,1],[-1,0]].
enum class GateLabel { I, X, Y, iY, Z, H, XZ, iYZ };

inline constexpr std::array<GateLabel, 8> kAllGateLabels = {
    GateLabel::I,  GateLabel::X, GateLabel::Y,  GateLabel::iY,
    GateLabel::Z,  GateLabel::H, GateLabel::XZ, GateLabel::iYZ};

const char* gate_name(GateLabel label);

// Row-major dense matrices. Dimension 2 and 4 are the only sizes the
// protocol needs, so they are fixed-size value types.
struct Mat2 {
  std::array<cplx, 4> m{};
  cplx at(int r, int c) const { return m[2 * r + c]; }
  cplx& at(int r, int c) { return m[2 * r + c]; }
};

struct Mat4 {
  std::array<cplx, 16> m{};
  cplx at(int r, int c) const { return m[4 * r + c]; }
  cplx& at(int r, int c) { return m[4 * r + c]; }
};

Mat2 gate_matrix(GateLabel label);

Mat2 multiply(const Mat2& a, const Mat2& b);
Mat4 multiply(const Mat4& a, const Mat4& b);
Mat4 adjoint(const Mat4& a);

// Kronecker product; `a` acts on qubit one, `b` on qubit two.
Mat4 tensor(const Mat2& a, const Mat2& b);

Mat4 identity4();

// Control on qubit one, target on qubit two.
Mat4 cnot();

bool is_unitary(const Mat2& op, double tol);
bool is_unitary(const Mat4& op, double tol);

// Throws std::invalid_argument unless `op` is unitary within
// kConstructionTol. Renormalizes the product and sets the result's
// `renormalized` flag if its norm drifted by more than kConstructionTol.
TwoQubitState apply(const Mat4& op, const TwoQubitState& s);

}  // namespace qsdc
