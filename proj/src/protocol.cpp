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

#include "bellcommit/protocol.hpp"

#include <algorithm>
#include <numeric>

namespace bellcommit {

std::string to_string(CommitValue v) {
  switch (v) {
    case CommitValue::Bit0:
      return "bit0";
    case CommitValue::Bit1:
      return "bit1";
    case CommitValue::Plus:
      return "plus";
    case CommitValue::Minus:
      return "minus";
  }
  return "?";
}

CommitValue parse_commit_value(std::string_view text) {
  for (auto v : kAllCommitValues) {
    if (text == to_string(v)) return v;
  }
  throw std::invalid_argument("unknown commit value '" + std::string(text) +
                              "' (expected bit0|bit1|plus|minus)");
}

BellLabel commit_label(CommitValue value) {
  switch (value) {
    case CommitValue::Bit0:
      return BellLabel(0, 0);
    case CommitValue::Bit1:
      return BellLabel(0, 1);
    case CommitValue::Plus:
      return BellLabel(1, 0);
    case CommitValue::Minus:
      return BellLabel(1, 1);
  }
  throw std::invalid_argument("invalid CommitValue");
}

CommitValue value_of_label(BellLabel label) {
  return kAllCommitValues[static_cast<std::size_t>(label.index())];
}

std::string to_string(BCPolicy p) {
  switch (p) {
    case BCPolicy::None:
      return "none";
    case BCPolicy::RandomLocal:
      return "random-local";
    case BCPolicy::RandomEntangled:
      return "random-entangled";
  }
  return "?";
}

BCPolicy parse_bc_policy(std::string_view text) {
  for (auto p : {BCPolicy::None, BCPolicy::RandomLocal, BCPolicy::RandomEntangled}) {
    if (text == to_string(p)) return p;
  }
  throw std::invalid_argument("unknown B/C policy '" + std::string(text) +
                              "' (expected none|random-local|random-entangled)");
}

std::string to_string(SessionPhase p) {
  return p == SessionPhase::Committed ? "committed" : "revealed";
}

std::vector<int> PairRegister::receiver_qubits() const {
  std::vector<int> q(static_cast<std::size_t>(1 + ancillas));
  std::iota(q.begin(), q.end(), kCQubit);
  return q;
}

void BCRecord::append(Unitary op) {
  const auto& t = op.targets();
  if (std::find(t.begin(), t.end(), kAliceQubit) != t.end()) {
    throw ProtocolError("B/C operation may not act on Alice's qubit");
  }
  ops_.push_back(std::move(op));
}

double VerificationReport::min_announced_probability() const {
  if (announced_probability.empty()) return 0.0;
  return *std::min_element(announced_probability.begin(), announced_probability.end());
}

CommitmentSession alice_commit(CommitValue value, int n_pairs, int ancillas) {
  if (n_pairs < 1) throw std::invalid_argument("alice_commit: need at least one pair");
  if (ancillas < 0 || ancillas > kMaxAncillas) {
    throw std::invalid_argument("alice_commit: ancilla count must be in [0, " +
                                std::to_string(kMaxAncillas) + "]");
  }
  const StateVector pair_state = tensor(make_bell(commit_label(value)), StateVector::zeros(ancillas));

  CommitmentSession s;
  s.n_pairs = n_pairs;
  s.ancillas = ancillas;
  s.committed = value;
  s.pairs.assign(static_cast<std::size_t>(n_pairs), PairRegister{pair_state, ancillas});
  s.bc_records.resize(static_cast<std::size_t>(n_pairs));
  return s;
}

void bc_apply_operations(CommitmentSession& session, BCPolicy policy, Rng& rng) {
  if (session.phase != SessionPhase::Committed) {
    throw ProtocolError("B/C operations require a session in the committed phase");
  }
  if (policy == BCPolicy::RandomEntangled && session.ancillas < 1) {
    throw std::invalid_argument("random-entangled B/C operations need at least one ancilla");
  }
  if (policy == BCPolicy::None) return;

  const std::uint64_t base = rng();
  for (std::size_t p = 0; p < session.pairs.size(); ++p) {
    Rng pair_rng(derive_seed(base, p));
    auto& pair = session.pairs[p];
    const std::vector<int> targets =
        policy == BCPolicy::RandomLocal ? std::vector<int>{kCQubit} : pair.receiver_qubits();
    Unitary op = random_unitary(static_cast<int>(targets.size()), pair_rng).on(targets);
    pair.state = apply_unitary(pair.state, op);
    session.bc_records[p].append(std::move(op));
  }
}

RevealMessage alice_announce(CommitmentSession& session, BellLabel label) {
  if (session.phase != SessionPhase::Committed) {
    throw ProtocolError("session has already been revealed");
  }
  session.phase = SessionPhase::Revealed;
  return RevealMessage{label, true};
}

RevealMessage alice_reveal_honest(CommitmentSession& session) {
  return alice_announce(session, commit_label(session.committed));
}

StateVector undo_bc_operations(const PairRegister& pair, const BCRecord& record) {
  StateVector state = pair.state;
  const auto& ops = record.ops();
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    state = apply_unitary(state, it->adjoint());
  }
  return state;
}

VerificationReport verify(const CommitmentSession& session, const RevealMessage& reveal,
                          Rng& rng) {
  if (session.phase != SessionPhase::Revealed) {
    throw ProtocolError("verification requires a revealed session");
  }
  if (!reveal.alice_qubits_transferred) {
    throw ProtocolError("verification requires Alice's qubits");
  }
  if (session.pairs.size() != static_cast<std::size_t>(session.n_pairs) ||
      session.bc_records.size() != session.pairs.size()) {
    throw ProtocolError("session has " + std::to_string(session.pairs.size()) + " pairs and " +
                        std::to_string(session.bc_records.size()) + " B/C records, expected " +
                        std::to_string(session.n_pairs));
  }

  VerificationReport report;
  report.announced = reveal.announced;
  report.per_pair.reserve(session.pairs.size());
  report.announced_probability.reserve(session.pairs.size());

  const std::uint64_t base = rng();
  bool all_match = true;
  for (std::size_t p = 0; p < session.pairs.size(); ++p) {
    Rng pair_rng(derive_seed(base, p));
    const StateVector restored = undo_bc_operations(session.pairs[p], session.bc_records[p]);
    const auto probs = bell_probabilities(restored, kAliceQubit, kCQubit);
    const BellOutcome outcome = bell_measure(restored, kAliceQubit, kCQubit, pair_rng);
    report.per_pair.push_back(outcome.label);
    report.announced_probability.push_back(probs[static_cast<std::size_t>(reveal.announced.index())]);
    all_match = all_match && outcome.label == reveal.announced;
  }
  report.accept = all_match;
  if (all_match) report.revealed_value = value_of_label(reveal.announced);
  return report;
}

}  // namespace bellcommit
