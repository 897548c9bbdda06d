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

// Three-party Bell-pair commitment: Alice prepares N pairs and sends the
// second qubit of each to C, B and C act on their side, and at reveal
// Alice announces one label (u_a, u_c) and hands her qubits to B, who
// verifies every pair by Bell-basis measurement.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bellcommit/qcore.hpp"

namespace bellcommit {

enum class CommitValue { Bit0, Bit1, Plus, Minus };

inline constexpr std::array<CommitValue, 4> kAllCommitValues{
    CommitValue::Bit0, CommitValue::Bit1, CommitValue::Plus, CommitValue::Minus};

std::string to_string(CommitValue v);
/// Accepts bit0|bit1|plus|minus.
CommitValue parse_commit_value(std::string_view text);

/// Coding table: Bit0 (0,0), Bit1 (0,1), Plus (1,0), Minus (1,1).
BellLabel commit_label(CommitValue value);
CommitValue value_of_label(BellLabel label);

enum class BCPolicy { None, RandomLocal, RandomEntangled };

std::string to_string(BCPolicy p);
/// Accepts none|random-local|random-entangled.
BCPolicy parse_bc_policy(std::string_view text);

enum class SessionPhase { Committed, Revealed };

std::string to_string(SessionPhase p);

/// Raised when an operation is invoked in the wrong session phase or on a
/// malformed session.
class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr int kAliceQubit = 0;
inline constexpr int kCQubit = 1;
inline constexpr int kMaxAncillas = 2;

/// One committed pair plus receiver-side ancillas, simulated on its own.
struct PairRegister {
  StateVector state;
  int ancillas = 0;

  int num_qubits() const { return 2 + ancillas; }
  /// C's qubit followed by the ancillas: everything outside Alice's hands.
  std::vector<int> receiver_qubits() const;
};

/// Operations B and C applied to one pair, in order. None may touch
/// Alice's qubit.
class BCRecord {
 public:
  void append(Unitary op);
  const std::vector<Unitary>& ops() const { return ops_; }
  bool empty() const { return ops_.empty(); }

 private:
  std::vector<Unitary> ops_;
};

struct CommitmentSession {
  int n_pairs = 0;
  int ancillas = 0;
  /// The physical preparation. For a cheating session this is Bit0 and
  /// says nothing about what Alice will later reveal.
  CommitValue committed = CommitValue::Bit0;
  bool value_uncommitted = false;
  std::vector<PairRegister> pairs;
  std::vector<BCRecord> bc_records;
  SessionPhase phase = SessionPhase::Committed;
};

struct RevealMessage {
  BellLabel announced;
  bool alice_qubits_transferred = true;
};

struct VerificationReport {
  BellLabel announced;
  std::vector<BellLabel> per_pair;
  /// Probability of the announced label on each pair just before measuring.
  std::vector<double> announced_probability;
  bool accept = false;
  std::optional<CommitValue> revealed_value;

  double min_announced_probability() const;
};

/// Prepares make_bell(commit_label(value)) (x) |0...0> for every pair.
CommitmentSession alice_commit(CommitValue value, int n_pairs, int ancillas = 0);

/// Applies the policy's receiver-side operations. Each pair draws from its
/// own substream derived from one value taken from rng.
void bc_apply_operations(CommitmentSession& session, BCPolicy policy, Rng& rng);

/// Announces `label` and hands over Alice's qubits unchanged. The honest
/// reveal is the special case label = commit_label(committed).
RevealMessage alice_announce(CommitmentSession& session, BellLabel label);

RevealMessage alice_reveal_honest(CommitmentSession& session);

/// The state B measures for one pair: recorded B/C operations undone in
/// reverse order.
StateVector undo_bc_operations(const PairRegister& pair, const BCRecord& record);

VerificationReport verify(const CommitmentSession& session, const RevealMessage& reveal,
                          Rng& rng);

}  // namespace bellcommit
