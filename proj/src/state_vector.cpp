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

#include "bellcommit/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "index_util.hpp"

namespace bellcommit {

BellLabel::BellLabel(int ui, int uj) {
  if ((ui != 0 && ui != 1) || (uj != 0 && uj != 1)) {
    throw std::invalid_argument("BellLabel bits must be 0 or 1, got (" + std::to_string(ui) +
                                "," + std::to_string(uj) + ")");
  }
  u_i = static_cast<std::uint8_t>(ui);
  u_j = static_cast<std::uint8_t>(uj);
}

BellLabel BellLabel::from_index(int index) {
  if (index < 0 || index > 3) {
    throw std::invalid_argument("BellLabel index out of range: " + std::to_string(index));
  }
  return BellLabel(index >> 1, index & 1);
}

std::string BellLabel::str() const {
  return std::string{static_cast<char>('0' + u_i), static_cast<char>('0' + u_j)};
}

std::string to_string(PauliOp p) {
  switch (p) {
    case PauliOp::Identity:
      return "I";
    case PauliOp::X:
      return "X";
    case PauliOp::Z:
      return "Z";
    case PauliOp::ZX:
      return "ZX";
  }
  return "?";
}

ComplexMatrix pauli_matrix(PauliOp p) {
  ComplexMatrix m(2, 2);
  switch (p) {
    case PauliOp::Identity:
      m << 1, 0, 0, 1;
      break;
    case PauliOp::X:
      m << 0, 1, 1, 0;
      break;
    case PauliOp::Z:
      m << 1, 0, 0, -1;
      break;
    case PauliOp::ZX:
      m << 0, 1, -1, 0;
      break;
  }
  return m;
}

// ---------------------------------------------------------------------------

StateVector::StateVector() : num_qubits_(0), amps_(ComplexVector::Ones(1)) {}

StateVector::StateVector(ComplexVector amplitudes) : amps_(std::move(amplitudes)) {
  num_qubits_ = detail::log2_exact(static_cast<std::size_t>(amps_.size()));
  if (num_qubits_ < 0) {
    throw std::invalid_argument("state length " + std::to_string(amps_.size()) +
                                " is not a power of two");
  }
  const double n2 = amps_.squaredNorm();
  if (std::abs(n2 - 1.0) > kAccumTol) {
    throw std::invalid_argument("state is not normalized: sum |a|^2 = " + std::to_string(n2));
  }
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
  if (num_qubits < 0 || num_qubits > 30) {
    throw std::invalid_argument("unsupported qubit count " + std::to_string(num_qubits));
  }
  const auto dim = std::size_t{1} << num_qubits;
  if (index >= dim) {
    throw std::out_of_range("basis index " + std::to_string(index) + " out of range");
  }
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return StateVector(std::move(v));
}

double StateVector::max_abs_diff(const StateVector& other) const {
  if (other.num_qubits_ != num_qubits_) {
    throw std::invalid_argument("max_abs_diff: qubit count mismatch");
  }
  return (amps_ - other.amps_).cwiseAbs().maxCoeff();
}

StateVector StateVector::scaled(Complex phase) const {
  return StateVector(amps_ * phase);
}

// ---------------------------------------------------------------------------

StateVector make_bell(BellLabel label) {
  // (|0>|u_j> + (-1)^{u_i} |1>|1 xor u_j>) / sqrt(2)
  const double h = std::numbers::sqrt2 / 2.0;
  ComplexVector v = ComplexVector::Zero(4);
  v[label.u_j] = h;
  v[2 + (1 - label.u_j)] = label.u_i ? -h : h;
  return StateVector(std::move(v));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  const auto& x = a.amplitudes();
  const auto& y = b.amplitudes();
  ComplexVector out(x.size() * y.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    out.segment(i * y.size(), y.size()) = x[i] * y;
  }
  return StateVector(std::move(out));
}

StateVector apply_pauli(const StateVector& state, PauliOp op, int target) {
  const int n = state.num_qubits();
  if (target < 0 || target >= n) {
    throw std::out_of_range("apply_pauli: target " + std::to_string(target) +
                            " out of range for " + std::to_string(n) + " qubits");
  }
  const std::size_t bit = detail::qubit_bit(n, target);
  const auto& in = state.amplitudes();
  ComplexVector out = in;
  if (has_x(op)) {
    for (std::size_t i = 0; i < state.dim(); ++i) {
      out[static_cast<Eigen::Index>(i)] = in[static_cast<Eigen::Index>(i ^ bit)];
    }
  }
  if (has_z(op)) {
    for (std::size_t i = 0; i < state.dim(); ++i) {
      if (i & bit) out[static_cast<Eigen::Index>(i)] = -out[static_cast<Eigen::Index>(i)];
    }
  }
  return StateVector(std::move(out));
}

StateVector apply_unitary(const StateVector& state, const Unitary& u) {
  const int n = state.num_qubits();
  const auto& targets = u.targets();
  detail::check_targets(n, targets, "apply_unitary");

  const auto offsets = detail::local_offsets(n, targets);
  const std::size_t mask = detail::target_mask(n, targets);
  const auto k = static_cast<Eigen::Index>(offsets.size());

  const auto& in = state.amplitudes();
  ComplexVector out(in.size());
  ComplexVector local(k);
  for (std::size_t base = 0; base < state.dim(); ++base) {
    if (base & mask) continue;
    for (Eigen::Index l = 0; l < k; ++l) {
      local[l] = in[static_cast<Eigen::Index>(base + offsets[static_cast<std::size_t>(l)])];
    }
    const ComplexVector mapped = u.matrix() * local;
    for (Eigen::Index l = 0; l < k; ++l) {
      out[static_cast<Eigen::Index>(base + offsets[static_cast<std::size_t>(l)])] = mapped[l];
    }
  }
  return StateVector(std::move(out));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("inner_product: qubit count mismatch");
  }
  return a.amplitudes().dot(b.amplitudes());
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::min(1.0, std::norm(inner_product(a, b)));
}

// ---------------------------------------------------------------------------

namespace {

// Bell amplitudes as a 4-vector over the local index |first second>.
std::array<ComplexVector, 4> bell_basis() {
  std::array<ComplexVector, 4> basis;
  for (int l : kAllLabelIndices) basis[static_cast<std::size_t>(l)] = make_bell(BellLabel::from_index(l)).amplitudes();
  return basis;
}

const std::array<ComplexVector, 4>& cached_bell_basis() {
  static const auto basis = bell_basis();
  return basis;
}

// c[label][env] = <bell_label| (restricted to env block)
std::array<std::vector<Complex>, 4> bell_coefficients(const StateVector& state, int first,
                                                      int second) {
  const int n = state.num_qubits();
  const std::vector<int> pair{first, second};
  detail::check_targets(n, pair, "bell_measure");
  const auto offsets = detail::local_offsets(n, pair);
  const std::size_t mask = detail::target_mask(n, pair);
  const auto& basis = cached_bell_basis();
  const auto& in = state.amplitudes();

  std::array<std::vector<Complex>, 4> coeffs;
  for (auto& c : coeffs) c.reserve(state.dim() / 4);
  for (std::size_t base = 0; base < state.dim(); ++base) {
    if (base & mask) continue;
    for (int l : kAllLabelIndices) {
      Complex c{0.0, 0.0};
      for (std::size_t o = 0; o < 4; ++o) {
        c += std::conj(basis[static_cast<std::size_t>(l)][static_cast<Eigen::Index>(o)]) *
             in[static_cast<Eigen::Index>(base + offsets[o])];
      }
      coeffs[static_cast<std::size_t>(l)].push_back(c);
    }
  }
  return coeffs;
}

}  // namespace

std::array<double, 4> bell_probabilities(const StateVector& state, int first, int second) {
  const auto coeffs = bell_coefficients(state, first, second);
  std::array<double, 4> probs{};
  for (int l : kAllLabelIndices) {
    double p = 0.0;
    for (const auto& c : coeffs[static_cast<std::size_t>(l)]) p += std::norm(c);
    probs[static_cast<std::size_t>(l)] = p;
  }
  return probs;
}

BellOutcome bell_measure(const StateVector& state, int first, int second, Rng& rng) {
  const auto coeffs = bell_coefficients(state, first, second);
  std::array<double, 4> probs{};
  for (int l : kAllLabelIndices) {
    for (const auto& c : coeffs[static_cast<std::size_t>(l)]) probs[static_cast<std::size_t>(l)] += std::norm(c);
  }

  const double r = uniform01(rng);
  int chosen = -1;
  double cumulative = 0.0;
  for (int l : kAllLabelIndices) {
    cumulative += probs[static_cast<std::size_t>(l)];
    if (r < cumulative) {
      chosen = l;
      break;
    }
  }
  if (chosen < 0) {
    // r landed past a total that rounded below 1; take the last reachable label.
    for (int l = 3; l >= 0; --l) {
      if (probs[static_cast<std::size_t>(l)] > 0.0) {
        chosen = l;
        break;
      }
    }
  }

  const auto idx = static_cast<std::size_t>(chosen);
  const int n = state.num_qubits();
  const std::vector<int> pair{first, second};
  const auto offsets = detail::local_offsets(n, pair);
  const std::size_t mask = detail::target_mask(n, pair);
  const auto& bell = cached_bell_basis()[idx];
  const double scale = 1.0 / std::sqrt(probs[idx]);

  ComplexVector post = ComplexVector::Zero(static_cast<Eigen::Index>(state.dim()));
  std::size_t env = 0;
  for (std::size_t base = 0; base < state.dim(); ++base) {
    if (base & mask) continue;
    const Complex c = coeffs[idx][env++] * scale;
    for (std::size_t o = 0; o < 4; ++o) {
      post[static_cast<Eigen::Index>(base + offsets[o])] = c * bell[static_cast<Eigen::Index>(o)];
    }
  }
  return BellOutcome{BellLabel::from_index(chosen), probs[idx], StateVector(std::move(post))};
}

}  // namespace bellcommit
