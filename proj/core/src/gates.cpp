#include "qsdc/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace qsdc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr cplx kI{0.0, 1.0};

Mat2 pauli_x() { return Mat2{{0.0, 1.0, 1.0, 0.0}}; }
Mat2 pauli_z() { return Mat2{{1.0, 0.0, 0.0, -1.0}}; }

}  // namespace

const char* gate_name(GateLabel label) {
  switch (label) {
    case GateLabel::I:
      return "I";
    case GateLabel::X:
      return "X";
    case GateLabel::Y:
      return "Y";
    case GateLabel::iY:
      return "iY";
    case GateLabel::Z:
      return "Z";
    case GateLabel::H:
      return "H";
    case GateLabel::XZ:
      return "XZ";
    case GateLabel::iYZ:
      return "iYZ";
  }
  throw std::invalid_argument("gate_name: bad GateLabel");
}

Mat2 gate_matrix(GateLabel label) {
  switch (label) {
    case GateLabel::I:
      return Mat2{{1.0, 0.0, 0.0, 1.0}};
    case GateLabel::X:
      return pauli_x();
    case GateLabel::Y:
      return Mat2{{0.0, -kI, kI, 0.0}};
    case GateLabel::iY:
      return Mat2{{0.0, 1.0, -1.0, 0.0}};
    case GateLabel::Z:
      return pauli_z();
    case GateLabel::H:
      return Mat2{{kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2}};
    case GateLabel::XZ:
      return multiply(pauli_x(), pauli_z());
    case GateLabel::iYZ:
      return multiply(Mat2{{0.0, 1.0, -1.0, 0.0}}, pauli_z());
  }
  throw std::invalid_argument("gate_matrix: bad GateLabel");
}

Mat2 multiply(const Mat2& a, const Mat2& b) {
  Mat2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      cplx sum = 0.0;
      for (int k = 0; k < 2; ++k) sum += a.at(r, k) * b.at(k, c);
      out.at(r, c) = sum;
    }
  return out;
}

Mat4 multiply(const Mat4& a, const Mat4& b) {
  Mat4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      cplx sum = 0.0;
      for (int k = 0; k < 4; ++k) sum += a.at(r, k) * b.at(k, c);
      out.at(r, c) = sum;
    }
  return out;
}

Mat4 adjoint(const Mat4& a) {
  Mat4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out.at(r, c) = std::conj(a.at(c, r));
  return out;
}

Mat4 tensor(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int ra = 0; ra < 2; ++ra)
    for (int ca = 0; ca < 2; ++ca)
      for (int rb = 0; rb < 2; ++rb)
        for (int cb = 0; cb < 2; ++cb)
          out.at(2 * ra + rb, 2 * ca + cb) = a.at(ra, ca) * b.at(rb, cb);
  return out;
}

Mat4 identity4() {
  Mat4 out;
  for (int k = 0; k < 4; ++k) out.at(k, k) = 1.0;
  return out;
}

Mat4 cnot() {
  Mat4 out;
  out.at(0, 0) = 1.0;
  out.at(1, 1) = 1.0;
  out.at(2, 3) = 1.0;
  out.at(3, 2) = 1.0;
  return out;
}

bool is_unitary(const Mat2& op, double tol) {
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      cplx sum = 0.0;
      for (int k = 0; k < 2; ++k)
        sum += std::conj(op.at(k, r)) * op.at(k, c);
      if (std::abs(sum - (r == c ? 1.0 : 0.0)) > tol) return false;
    }
  return true;
}

bool is_unitary(const Mat4& op, double tol) {
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      cplx sum = 0.0;
      for (int k = 0; k < 4; ++k)
        sum += std::conj(op.at(k, r)) * op.at(k, c);
      if (std::abs(sum - (r == c ? 1.0 : 0.0)) > tol) return false;
    }
  return true;
}

TwoQubitState apply(const Mat4& op, const TwoQubitState& s) {
  if (!is_unitary(op, kConstructionTol))
    throw std::invalid_argument("apply: operator is not unitary");
  TwoQubitState out;
  out.renormalized = s.renormalized;
  for (int r = 0; r < 4; ++r) {
    cplx sum = 0.0;
    for (int c = 0; c < 4; ++c) sum += op.at(r, c) * s.amp[c];
    out.amp[r] = sum;
  }
  const double n = norm(out);
  if (std::abs(n - 1.0) > kConstructionTol) {
    for (cplx& a : out.amp) a /= n;
    out.renormalized = true;
  }
  return out;
}

}  // namespace qsdc
