#pragma once

#include <array>

#include "qsdc/states.hpp"

namespace qsdc {

// Hermitian trace-one matrix of dimension 2 or 4, stored row-major.
class DensityMatrix {
 public:
  explicit DensityMatrix(int dim);  // throws unless dim is 2 or 4

  int dim() const { return dim_; }
  cplx at(int r, int c) const { return m_[dim_ * r + c]; }
  cplx& at(int r, int c) { return m_[dim_ * r + c]; }

 private:
  int dim_;
  std::array<cplx, 16> m_{};
};

// |s><s| for a normalized pure state.
DensityMatrix density(const TwoQubitState& s);

// Tr(rho^2); 1 for pure states, 1/dim for the maximally mixed state.
double purity(const DensityMatrix& rho);

// Reduced state of the kept qubit. Only defined for dimension 4 input.
DensityMatrix partial_trace(const DensityMatrix& rho, Qubit keep);

// Hermiticity and unit trace within `tol`, plus v^dag rho v >= -tol over a
// fixed probe set (the basis vectors, the |+/-> and |+/-i> pair at
// dimension 2, and the four Bell states at dimension 4). A probe set keeps
// the check deterministic and cheap; it is a necessary condition, not a
// full eigenvalue test.
bool is_valid_density(const DensityMatrix& rho, double tol);

}  // namespace qsdc
