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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bellcommit::detail {

/// log2 of a power of two, or -1.
inline int log2_exact(std::size_t n) {
  if (n == 0 || (n & (n - 1)) != 0) return -1;
  int k = 0;
  while ((std::size_t{1} << k) != n) ++k;
  return k;
}

/// Amplitude-index bit of a qubit; qubit 0 is the most significant.
inline std::size_t qubit_bit(int num_qubits, int qubit) {
  return std::size_t{1} << (num_qubits - 1 - qubit);
}

inline void check_targets(int num_qubits, const std::vector<int>& targets, const char* what) {
  if (targets.empty()) throw std::invalid_argument(std::string(what) + ": no target qubits");
  for (std::size_t a = 0; a < targets.size(); ++a) {
    if (targets[a] < 0 || targets[a] >= num_qubits) {
      throw std::out_of_range(std::string(what) + ": qubit " + std::to_string(targets[a]) +
                              " out of range for " + std::to_string(num_qubits) + " qubits");
    }
    for (std::size_t b = a + 1; b < targets.size(); ++b) {
      if (targets[a] == targets[b]) {
        throw std::invalid_argument(std::string(what) + ": repeated qubit " +
                                    std::to_string(targets[a]));
      }
    }
  }
}

inline std::size_t target_mask(int num_qubits, const std::vector<int>& targets) {
  std::size_t mask = 0;
  for (int t : targets) mask |= qubit_bit(num_qubits, t);
  return mask;
}

/// offsets[l] is the global index offset of local basis state l, where the
/// first target is the most significant bit of l.
inline std::vector<std::size_t> local_offsets(int num_qubits, const std::vector<int>& targets) {
  const std::size_t k = targets.size();
  std::vector<std::size_t> offsets(std::size_t{1} << k, 0);
  for (std::size_t l = 0; l < offsets.size(); ++l) {
    for (std::size_t t = 0; t < k; ++t) {
      if (l & (std::size_t{1} << (k - 1 - t))) offsets[l] |= qubit_bit(num_qubits, targets[t]);
    }
  }
  return offsets;
}

}  // namespace bellcommit::detail
