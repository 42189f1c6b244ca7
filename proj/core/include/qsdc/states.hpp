#pragma once

#include <array>
#include <complex>

namespace qsdc {

using cplx = std::complex<double>;

// Tolerance hierarchy: operator/construction checks are tight, state-level
// invariants looser. Exact rational-over-sqrt(2) arithmetic at dimension 4
// stays far below both bounds.
inline constexpr double kConstructionTol = 1e-12;
inline constexpr double kStateTol = 1e-9;

// Which wire of the pair. Qubit one rides channel 1 (the qubit Alice
// operates on), qubit two rides channel 2.
enum class Qubit : int { One = 1, Two = 2 };

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellKind, 4> kAllBellKinds = {
    BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus};

const char* bell_name(BellKind kind);  // "phi+", "phi-", "psi+", "psi-"

// Amplitudes over |0>,|1>.
struct SingleQubitState {
  std::array<cplx, 2> amp{};
};

// Amplitudes over |00>,|01>,|10>,|11>; the first symbol is qubit one.
// `renormalized` records that an operation corrected numeric drift larger
// than kConstructionTol; exact chains never set it.
struct TwoQubitState {
  std::array<cplx, 4> amp{};
  bool renormalized = false;
};

double norm(const TwoQubitState& s);
cplx inner_product(const TwoQubitState& a, const TwoQubitState& b);  // <a|b>
TwoQubitState scaled(const TwoQubitState& s, cplx factor);

TwoQubitState bell_state(BellKind kind);

// True iff |<a|b>| >= 1 - tol. Both inputs must be normalized. Global phase
// is never stripped elsewhere; comparisons that should ignore it go through
// this function.
bool equal_up_to_global_phase(const TwoQubitState& a, const TwoQubitState& b,
                              double tol);

}  // namespace qsdc
