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

// Test-only reference routes. These build full 2^n x 2^n operators from
// explicit bit strings and Kronecker products so the checks they feed do
// not share the library's gather/scatter index code.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline std::vector<int> bits_of(std::size_t index, int n) {
  std::vector<int> bits(static_cast<std::size_t>(n));
  for (int q = n - 1; q >= 0; --q) {
    bits[static_cast<std::size_t>(q)] = static_cast<int>(index % 2);
    index /= 2;
  }
  return bits;
}

/// Dense operator of `u` on `targets` (first target = most significant
/// local bit), identity elsewhere, built entry by entry from bit strings.
inline Matrix embed(const Matrix& u, const std::vector<int>& targets, int n) {
  const std::size_t dim = std::size_t{1} << n;
  Matrix full = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t row = 0; row < dim; ++row) {
    for (std::size_t col = 0; col < dim; ++col) {
      const auto rb = bits_of(row, n);
      const auto cb = bits_of(col, n);
      bool spectators_agree = true;
      for (int q = 0; q < n; ++q) {
        bool is_target = false;
        for (int t : targets) is_target = is_target || t == q;
        if (!is_target && rb[static_cast<std::size_t>(q)] != cb[static_cast<std::size_t>(q)]) {
          spectators_agree = false;
        }
      }
      if (!spectators_agree) continue;
      int lr = 0;
      int lc = 0;
      for (int t : targets) {
        lr = 2 * lr + rb[static_cast<std::size_t>(t)];
        lc = 2 * lc + cb[static_cast<std::size_t>(t)];
      }
      full(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = u(lr, lc);
    }
  }
  return full;
}

/// P (x) I (x) ... (x) I via Kronecker products.
inline Matrix on_first_qubit(const Matrix& p, int n) {
  const Eigen::Index rest = Eigen::Index{1} << (n - 1);
  return Eigen::kroneckerProduct(p, Matrix::Identity(rest, rest)).eval();
}

inline Matrix sigma_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline Matrix sigma_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

/// Bell state written out term by term from the defining formula
/// (|0>|u_j> + (-1)^{u_i} |1>|1 xor u_j>) / sqrt(2) using |0>,|1> kets.
inline Vector bell_by_kets(int ui, int uj) {
  Vector ket0(2), ket1(2);
  ket0 << 1, 0;
  ket1 << 0, 1;
  const Vector& kj = uj ? ket1 : ket0;
  const Vector& kj_bar = uj ? ket0 : ket1;
  const double sign = ui ? -1.0 : 1.0;
  Vector v = Eigen::kroneckerProduct(ket0, kj).eval() + sign * Eigen::kroneckerProduct(ket1, kj_bar).eval();
  return v / std::sqrt(2.0);
}

/// Partial trace by summing over traced-out bit strings.
inline Matrix partial_trace(const Vector& psi, const std::vector<int>& keep, int n) {
  const Matrix rho = psi * psi.adjoint();
  const Eigen::Index d = Eigen::Index{1} << keep.size();
  Matrix out = Matrix::Zero(d, d);
  const std::size_t dim = std::size_t{1} << n;
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const auto rb = bits_of(r, n);
      const auto cb = bits_of(c, n);
      bool traced_agree = true;
      for (int q = 0; q < n; ++q) {
        bool kept = false;
        for (int k : keep) kept = kept || k == q;
        if (!kept && rb[static_cast<std::size_t>(q)] != cb[static_cast<std::size_t>(q)]) traced_agree = false;
      }
      if (!traced_agree) continue;
      int lr = 0;
      int lc = 0;
      for (int k : keep) {
        lr = 2 * lr + rb[static_cast<std::size_t>(k)];
        lc = 2 * lc + cb[static_cast<std::size_t>(k)];
      }
      out(lr, lc) += rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

}  // namespace oracle
