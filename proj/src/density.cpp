// Copyright 2026 The bellcommit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include <Eigen/Eigenvalues>

#include "bellcommit/qcore.hpp"
#include "index_util.hpp"

namespace bellcommit {

DensityMatrix::DensityMatrix(ComplexMatrix entries) : rho_(std::move(entries)) {
  if (rho_.rows() != rho_.cols() || detail::log2_exact(static_cast<std::size_t>(rho_.rows())) < 0) {
    throw std::invalid_argument("density matrix must be square with power-of-two dimension");
  }
  const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kExactTol) {
    throw std::invalid_argument("density matrix is not Hermitian (deviation " +
                                std::to_string(herm) + ")");
  }
  const Complex tr = rho_.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > kExactTol) {
    throw std::invalid_argument("density matrix trace is " + std::to_string(tr.real()));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(rho_, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -kAccumTol) {
    throw std::invalid_argument("density matrix is not positive semidefinite");
  }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(dim));
}

DensityMatrix reduced_density(const StateVector& state, std::span<const int> keep) {
  const int n = state.num_qubits();
  const std::vector<int> kept(keep.begin(), keep.end());
  detail::check_targets(n, kept, "reduced_density");

  const auto offsets = detail::local_offsets(n, kept);
  const std::size_t mask = detail::target_mask(n, kept);
  const auto d = static_cast<Eigen::Index>(offsets.size());
  const auto& psi = state.amplitudes();

  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  for (std::size_t env = 0; env < state.dim(); ++env) {
    if (env & mask) continue;
    for (Eigen::Index r = 0; r < d; ++r) {
      const Complex a = psi[static_cast<Eigen::Index>(env + offsets[static_cast<std::size_t>(r)])];
      if (a == Complex{}) continue;
      for (Eigen::Index c = 0; c < d; ++c) {
        rho(r, c) += a * std::conj(psi[static_cast<Eigen::Index>(env + offsets[static_cast<std::size_t>(c)])]);
      }
    }
  }
  // Symmetrize away rounding asymmetry from the accumulation order.
  rho = (rho + rho.adjoint().eval()) * 0.5;
  return DensityMatrix(std::move(rho));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("trace_distance: dimension mismatch");
  }
  const ComplexMatrix diff = a.entries() - b.entries();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(diff, Eigen::EigenvaluesOnly);
  const double d = 0.5 * eig.eigenvalues().cwiseAbs().sum();
  return std::min(1.0, d);
}

}  // namespace bellcommit
