#include "qsdc/density.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qsdc {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr cplx kI{0.0, 1.0};
}  // namespace

DensityMatrix::DensityMatrix(int dim) : dim_(dim) {
  if (dim != 2 && dim != 4)
    throw std::invalid_argument("DensityMatrix: dim must be 2 or 4");
}

DensityMatrix density(const TwoQubitState& s) {
  DensityMatrix rho(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      rho.at(r, c) = s.amp[r] * std::conj(s.amp[c]);
  return rho;
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_rc|^2 for Hermitian rho.
  double sum = 0.0;
  for (int r = 0; r < rho.dim(); ++r)
    for (int c = 0; c < rho.dim(); ++c) sum += std::norm(rho.at(r, c));
  return sum;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Qubit keep) {
  if (rho.dim() != 4)
    throw std::invalid_argument("partial_trace: input must be 4x4");
  DensityMatrix out(2);
  // Index k = 2*q1 + q2.
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      cplx sum = 0.0;
      for (int t = 0; t < 2; ++t) {
        if (keep == Qubit::One)
          sum += rho.at(2 * r + t, 2 * c + t);
        else
          sum += rho.at(2 * t + r, 2 * t + c);
      }
      out.at(r, c) = sum;
    }
  return out;
}

bool is_valid_density(const DensityMatrix& rho, double tol) {
  const int d = rho.dim();
  cplx trace = 0.0;
  for (int r = 0; r < d; ++r) {
    trace += rho.at(r, r);
    for (int c = 0; c < d; ++c)
      if (std::abs(rho.at(r, c) - std::conj(rho.at(c, r))) > tol) return false;
  }
  if (std::abs(trace - 1.0) > tol) return false;

  std::vector<std::vector<cplx>> probes;
  for (int k = 0; k < d; ++k) {
    std::vector<cplx> e(d, 0.0);
    e[k] = 1.0;
    probes.push_back(std::move(e));
  }
  if (d == 2) {
    probes.push_back({kInvSqrt2, kInvSqrt2});
    probes.push_back({kInvSqrt2, -kInvSqrt2});
    probes.push_back({kInvSqrt2, kI * kInvSqrt2});
    probes.push_back({kInvSqrt2, -kI * kInvSqrt2});
  } else {
    for (BellKind kind : kAllBellKinds) {
      const TwoQubitState b = bell_state(kind);
      probes.push_back({b.amp[0], b.amp[1], b.amp[2], b.amp[3]});
    }
  }
  for (const auto& v : probes) {
    cplx q = 0.0;
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        q += std::conj(v[r]) * rho.at(r, c) * v[c];
    if (q.real() < -tol) return false;
  }
  return true;
}

}  // namespace qsdc
