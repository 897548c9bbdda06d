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

// Alice's cheat: prepare every pair as bell(0,0), then at reveal time
// steer all of them to the label she wants with one Pauli on each kept
// qubit. B and C's operations commute with it, so nothing they measure
// can tell the difference.

#include "bellcommit/protocol.hpp"

namespace bellcommit {

/// The Pauli P (up to global phase) with P (x) I mapping bell(from) onto
/// bell(to). Z is needed iff the u_i bits differ, X iff the u_j bits do.
PauliOp pauli_for_flip(BellLabel from, BellLabel to);

struct CheatPlan {
  BellLabel start_label{};
  CommitValue target = CommitValue::Bit0;
  PauliOp flip = PauliOp::Identity;
};

CheatPlan make_cheat_plan(CommitValue target);

/// Physically identical to alice_commit(Bit0, ...), flagged as not bound
/// to any value.
CommitmentSession alice_commit_cheating(int n_pairs, int ancillas = 0);

/// Applies pauli_for_flip((0,0), commit_label(target)) to Alice's qubit in
/// every pair and announces commit_label(target). The applied operator is
/// the plain Pauli; the (-1)^{u_i} sign of the X identity is a global phase.
RevealMessage alice_reveal_cheat(CommitmentSession& session, CommitValue target);

}  // namespace bellcommit
