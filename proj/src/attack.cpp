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

#include "bellcommit/attack.hpp"

namespace bellcommit {

PauliOp pauli_for_flip(BellLabel from, BellLabel to) {
  return make_pauli(/*x=*/from.u_j != to.u_j, /*z=*/from.u_i != to.u_i);
}

CheatPlan make_cheat_plan(CommitValue target) {
  CheatPlan plan;
  plan.start_label = BellLabel(0, 0);
  plan.target = target;
  plan.flip = pauli_for_flip(plan.start_label, commit_label(target));
  return plan;
}

CommitmentSession alice_commit_cheating(int n_pairs, int ancillas) {
  CommitmentSession s = alice_commit(CommitValue::Bit0, n_pairs, ancillas);
  s.value_uncommitted = true;
  return s;
}

RevealMessage alice_reveal_cheat(CommitmentSession& session, CommitValue target) {
  if (session.phase != SessionPhase::Committed) {
    throw ProtocolError("session has already been revealed");
  }
  const CheatPlan plan = make_cheat_plan(target);
  for (auto& pair : session.pairs) {
    pair.state = apply_pauli(pair.state, plan.flip, kAliceQubit);
  }
  return alice_announce(session, commit_label(target));
}

}  // namespace bellcommit
