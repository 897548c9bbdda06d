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
#include <sstream>

#include "bellcommit/attack.hpp"
#include "bellcommit/harness.hpp"

namespace bellcommit {

namespace {

CheckResult check(std::string name, bool passed, std::string detail = {}) {
  return CheckResult{std::move(name), passed, std::move(detail)};
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

}  // namespace

std::vector<CheckResult> run_selftest(std::uint64_t seed) {
  std::vector<CheckResult> out;
  Rng rng(seed);

  {
    double worst = 0.0;
    for (int a : kAllLabelIndices) {
      for (int b : kAllLabelIndices) {
        const double ip = std::abs(inner_product(make_bell(BellLabel::from_index(a)),
                                                 make_bell(BellLabel::from_index(b))));
        worst = std::max(worst, std::abs(ip - (a == b ? 1.0 : 0.0)));
      }
    }
    out.push_back(check("bell basis orthonormal", worst <= kExactTol, "max deviation " + fmt_double(worst)));
  }

  {
    double worst = 0.0;
    for (int l : kAllLabelIndices) {
      const BellLabel lab = BellLabel::from_index(l);
      const StateVector bell = make_bell(lab);
      worst = std::max(worst, apply_pauli(bell, PauliOp::Z, 0).max_abs_diff(
                                  make_bell(BellLabel(1 - lab.u_i, lab.u_j))));
      const double sign = lab.u_i ? -1.0 : 1.0;
      worst = std::max(worst, apply_pauli(bell, PauliOp::X, 0).max_abs_diff(
                                  make_bell(BellLabel(lab.u_i, 1 - lab.u_j)).scaled(sign)));
    }
    out.push_back(check("pauli flip identities", worst <= kExactTol, "max deviation " + fmt_double(worst)));
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const int n = 2 + i % 3;
      const StateVector psi = random_state(n, rng);
      const PauliOp p = kAllPaulis[static_cast<std::size_t>(i % 4)];
      std::vector<int> targets;
      for (int q = 1; q < n; ++q) targets.push_back(q);
      const Unitary v = random_unitary(static_cast<int>(targets.size()), rng).on(targets);
      const StateVector a = apply_pauli(apply_unitary(psi, v), p, 0);
      const StateVector b = apply_unitary(apply_pauli(psi, p, 0), v);
      worst = std::max(worst, a.max_abs_diff(b));
    }
    out.push_back(check("alice pauli commutes with receiver ops", worst <= kExactTol,
                        "max deviation " + fmt_double(worst)));
  }

  {
    bool ok = true;
    for (int a : kAllLabelIndices) {
      for (int b : kAllLabelIndices) {
        const BellLabel from = BellLabel::from_index(a);
        const BellLabel to = BellLabel::from_index(b);
        int hits = 0;
        for (PauliOp p : kAllPaulis) {
          if (fidelity(apply_pauli(make_bell(from), p, 0), make_bell(to)) > 1.0 - kExactTol) ++hits;
        }
        ok = ok && hits == 1 &&
             fidelity(apply_pauli(make_bell(from), pauli_for_flip(from, to), 0), make_bell(to)) >
                 1.0 - kExactTol;
      }
    }
    out.push_back(check("flip synthesis matches exhaustive search", ok));
  }

  {
    ExperimentConfig cfg;
    cfg.n_pairs = 4;
    cfg.trials = 50;
    cfg.ancillas = 1;
    cfg.bc_policy = BCPolicy::RandomEntangled;
    cfg.master_seed = seed;
    cfg.threads = 1;
    const AcceptanceMatrix m = acceptance_matrix(cfg);
    out.push_back(check("acceptance matrix (cheat 1, honest 1, control 0)", m.meets_expectation()));

    const HidingReport h = hiding_report(cfg);
    out.push_back(check("receiver view independent of committed value", h.meets_expectation(),
                        "max distance " + fmt_double(h.max_distance())));
  }

  return out;
}

}  // namespace bellcommit
