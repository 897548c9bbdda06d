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
#include <numbers>
#include <numeric>

#include <Eigen/QR>

#include "bellcommit/qcore.hpp"
#include "index_util.hpp"

namespace bellcommit {

std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(parent ^ mix(index));
}

Unitary::Unitary(ComplexMatrix matrix, std::vector<int> targets)
    : matrix_(std::move(matrix)), targets_(std::move(targets)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw std::invalid_argument("unitary matrix must be square");
  }
  if (targets_.empty() || targets_.size() > 12 ||
      (std::size_t{1} << targets_.size()) != static_cast<std::size_t>(matrix_.rows())) {
    throw std::invalid_argument("unitary dimension " + std::to_string(matrix_.rows()) +
                                " does not match " + std::to_string(targets_.size()) +
                                " target qubits");
  }
  for (std::size_t a = 0; a < targets_.size(); ++a) {
    if (targets_[a] < 0) throw std::invalid_argument("negative target qubit");
    for (std::size_t b = a + 1; b < targets_.size(); ++b) {
      if (targets_[a] == targets_[b]) throw std::invalid_argument("repeated target qubit");
    }
  }
  const double err = unitarity_error(matrix_);
  if (err > kAccumTol) {
    throw std::invalid_argument("matrix is not unitary (deviation " + std::to_string(err) + ")");
  }
}

Unitary Unitary::adjoint() const { return Unitary(matrix_.adjoint(), targets_); }

Unitary Unitary::on(std::vector<int> targets) const { return Unitary(matrix_, std::move(targets)); }

double unitarity_error(const ComplexMatrix& u) {
  const ComplexMatrix prod = u * u.adjoint();
  return (prod - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

namespace {

ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix z(rows, cols);
  // Column-major fill order is part of the determinism contract.
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(r, c) = Complex{re, im} * (std::numbers::sqrt2 / 2.0);
    }
  }
  return z;
}

}  // namespace

Unitary random_unitary(int num_target_qubits, Rng& rng) {
  if (num_target_qubits < 1 || num_target_qubits > 8) {
    throw std::invalid_argument("random_unitary: target count must be in [1, 8]");
  }
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << num_target_qubits);
  const ComplexMatrix z = ginibre(d, d, rng);

  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  // Q * diag(r_ii / |r_ii|) makes the distribution exactly Haar.
  for (Eigen::Index i = 0; i < d; ++i) {
    const Complex rii = r(i, i);
    const double mag = std::abs(rii);
    const Complex phase = mag > 0.0 ? rii / mag : Complex{1.0, 0.0};
    q.col(i) *= phase;
  }

  std::vector<int> targets(static_cast<std::size_t>(num_target_qubits));
  std::iota(targets.begin(), targets.end(), 0);
  return Unitary(std::move(q), std::move(targets));
}

StateVector random_state(int num_qubits, Rng& rng) {
  if (num_qubits < 0 || num_qubits > 20) {
    throw std::invalid_argument("random_state: unsupported qubit count");
  }
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
  ComplexVector v = ginibre(d, 1, rng).col(0);
  v /= v.norm();
  return StateVector(std::move(v));
}

}  // namespace bellcommit
