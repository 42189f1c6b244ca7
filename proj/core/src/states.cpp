#include "qsdc/states.hpp"

#include <cmath>
#include <stdexcept>

namespace qsdc {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

const char* bell_name(BellKind kind) {
  switch (kind) {
    case BellKind::PhiPlus:
      return "phi+";
    case BellKind::PhiMinus:
      return "phi-";
    case BellKind::PsiPlus:
      return "psi+";
    case BellKind::PsiMinus:
      return "psi-";
  }
  throw std::invalid_argument("bell_name: bad BellKind");
}

double norm(const TwoQubitState& s) {
  double sum = 0.0;
  for (const cplx& a : s.amp) sum += std::norm(a);
  return std::sqrt(sum);
}

cplx inner_product(const TwoQubitState& a, const TwoQubitState& b) {
  cplx sum = 0.0;
  for (int k = 0; k < 4; ++k) sum += std::conj(a.amp[k]) * b.amp[k];
  return sum;
}

TwoQubitState scaled(const TwoQubitState& s, cplx factor) {
  TwoQubitState out = s;
  for (cplx& a : out.amp) a *= factor;
  return out;
}

TwoQubitState bell_state(BellKind kind) {
  TwoQubitState s;
  switch (kind) {
    case BellKind::PhiPlus:
      s.amp = {kInvSqrt2, 0.0, 0.0, kInvSqrt2};
      break;
    case BellKind::PhiMinus:
      s.amp = {kInvSqrt2, 0.0, 0.0, -kInvSqrt2};
      break;
    case BellKind::PsiPlus:
      s.amp = {0.0, kInvSqrt2, kInvSqrt2, 0.0};
      break;
    case BellKind::PsiMinus:
      s.amp = {0.0, kInvSqrt2, -kInvSqrt2, 0.0};
      break;
  }
  return s;
}

bool equal_up_to_global_phase(const TwoQubitState& a, const TwoQubitState& b,
                              double tol) {
  return std::abs(inner_product(a, b)) >= 1.0 - tol;
}

}  // namespace qsdc
