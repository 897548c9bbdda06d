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

#pragma once

// Dense state-vector simulation for the handful of qubits held in one
// committed pair register.
//
// Qubit ordering: qubit 0 is the leftmost tensor factor and the most
// significant bit of the amplitude index, so |q0 q1 ... q(n-1)> lives at
// index q0*2^(n-1) + ... + q(n-1).

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace bellcommit {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Random stream used everywhere a procedure consumes randomness.
using Rng = std::mt19937_64;

inline constexpr double kExactTol = 1e-12;
inline constexpr double kAccumTol = 1e-10;

/// Uniform double in [0, 1) from exactly one engine draw.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// splitmix64 finalizer combining a parent seed with a stream index.
/// Used for every trial and pair substream so results do not depend on
/// the order in which work is scheduled.
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index);

// ---------------------------------------------------------------------------

struct BellLabel {
  std::uint8_t u_i = 0;
  std::uint8_t u_j = 0;

  constexpr BellLabel() = default;
  BellLabel(int ui, int uj);

  /// Position in the canonical order (0,0),(0,1),(1,0),(1,1).
  constexpr int index() const { return 2 * u_i + u_j; }
  static BellLabel from_index(int index);

  std::string str() const;

  friend constexpr bool operator==(BellLabel, BellLabel) = default;
};

inline constexpr std::array<int, 4> kAllLabelIndices{0, 1, 2, 3};

/// Single-qubit Pauli up to global phase. Bit 0 of the value marks an X
/// component and bit 1 a Z component; ZX is the product sigma_z * sigma_x,
/// i.e. X applied first.
enum class PauliOp : std::uint8_t { Identity = 0, X = 1, Z = 2, ZX = 3 };

inline constexpr std::array<PauliOp, 4> kAllPaulis{PauliOp::Identity, PauliOp::X,
                                                   PauliOp::Z, PauliOp::ZX};

constexpr bool has_x(PauliOp p) { return (static_cast<int>(p) & 1) != 0; }
constexpr bool has_z(PauliOp p) { return (static_cast<int>(p) & 2) != 0; }

constexpr PauliOp make_pauli(bool x, bool z) {
  return static_cast<PauliOp>((x ? 1 : 0) | (z ? 2 : 0));
}

/// Composition modulo global phase: the four tags form Z2 x Z2.
constexpr PauliOp compose(PauliOp a, PauliOp b) {
  return static_cast<PauliOp>(static_cast<int>(a) ^ static_cast<int>(b));
}

std::string to_string(PauliOp p);

/// The 2x2 matrix of the operator, with ZX = [[0, 1], [-1, 0]].
ComplexMatrix pauli_matrix(PauliOp p);

// ---------------------------------------------------------------------------

class StateVector {
 public:
  /// The 0-qubit state, amplitude vector [1].
  StateVector();

  /// Validates length (power of two) and normalization within kAccumTol.
  explicit StateVector(ComplexVector amplitudes);

  static StateVector basis(int num_qubits, std::uint64_t index);
  static StateVector zeros(int num_qubits) { return basis(num_qubits, 0); }

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const ComplexVector& amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }

  double norm_squared() const { return amps_.squaredNorm(); }

  /// Max entry-wise distance to another state of the same size.
  double max_abs_diff(const StateVector& other) const;

  StateVector scaled(Complex phase) const;

 private:
  int num_qubits_ = 0;
  ComplexVector amps_;
};

// ---------------------------------------------------------------------------

/// Dense unitary acting on an ordered list of target qubits. The first
/// target is the most significant bit of the matrix's local index.
class Unitary {
 public:
  Unitary(ComplexMatrix matrix, std::vector<int> targets);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const std::vector<int>& targets() const { return targets_; }

  Unitary adjoint() const;
  Unitary on(std::vector<int> targets) const;

 private:
  ComplexMatrix matrix_;
  std::vector<int> targets_;
};

class DensityMatrix {
 public:
  /// Validates Hermiticity and unit trace within kExactTol.
  explicit DensityMatrix(ComplexMatrix entries);

  std::size_t dim() const { return static_cast<std::size_t>(rho_.rows()); }
  const ComplexMatrix& entries() const { return rho_; }
  Complex trace() const { return rho_.trace(); }

  static DensityMatrix maximally_mixed(std::size_t dim);

 private:
  ComplexMatrix rho_;
};

// ---------------------------------------------------------------------------
// Operations

StateVector make_bell(BellLabel label);

StateVector tensor(const StateVector& a, const StateVector& b);

StateVector apply_pauli(const StateVector& state, PauliOp op, int target);

StateVector apply_unitary(const StateVector& state, const Unitary& u);

/// <a|b>, conjugate-linear in a.
Complex inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

/// Projection probabilities onto the four Bell states of the given pair,
/// indexed by BellLabel::index().
std::array<double, 4> bell_probabilities(const StateVector& state, int first, int second);

struct BellOutcome {
  BellLabel label;
  double probability = 0.0;
  StateVector post_state;
};

/// Bell-basis measurement of (first, second). Samples by inverse CDF over
/// labels in canonical order using one uniform draw from rng.
BellOutcome bell_measure(const StateVector& state, int first, int second, Rng& rng);

/// Partial trace over every qubit not in keep. The order of keep fixes the
/// order of the reduced system's tensor factors.
DensityMatrix reduced_density(const StateVector& state, std::span<const int> keep);

/// Haar unitary on qubits 0..num_target_qubits-1 from QR of a complex
/// Gaussian matrix with the diagonal phase fix.
Unitary random_unitary(int num_target_qubits, Rng& rng);

/// Haar-random pure state (normalized complex Gaussian vector).
StateVector random_state(int num_qubits, Rng& rng);

double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Max entry-wise |U U^dagger - I|.
double unitarity_error(const ComplexMatrix& u);

}  // namespace bellcommit
