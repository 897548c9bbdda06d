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

#include "doctest.h"

#include "bellcommit/protocol.hpp"

using namespace bellcommit;

namespace {

const std::array<BCPolicy, 3> kPolicies{BCPolicy::None, BCPolicy::RandomLocal, BCPolicy::RandomEntangled};

bool policy_allowed(BCPolicy p, int ancillas) { return p != BCPolicy::RandomEntangled || ancillas >= 1; }

void check_record_locality(const CommitmentSession& s) {
  for (const auto& rec : s.bc_records) {
    for (const auto& op : rec.ops()) {
      for (int t : op.targets()) CHECK(t != kAliceQubit);
    }
  }
}

}  // namespace

TEST_SUITE("protocol") {

TEST_CASE("coding table") {
  CHECK(commit_label(CommitValue::Bit0) == BellLabel(0, 0));
  CHECK(commit_label(CommitValue::Bit1) == BellLabel(0, 1));
  CHECK(commit_label(CommitValue::Plus) == BellLabel(1, 0));
  CHECK(commit_label(CommitValue::Minus) == BellLabel(1, 1));
  CHECK(value_of_label({0, 0}) == CommitValue::Bit0);
  CHECK(value_of_label({1, 0}) == CommitValue::Plus);
  for (auto v : kAllCommitValues) {
    CHECK(value_of_label(commit_label(v)) == v);
    CHECK(parse_commit_value(to_string(v)) == v);
  }
  CHECK_THROWS_AS(parse_commit_value("bit2"), std::invalid_argument);
  for (auto p : kPolicies) CHECK(parse_bc_policy(to_string(p)) == p);
  CHECK_THROWS_AS(parse_bc_policy("random"), std::invalid_argument);
}

TEST_CASE("alice_commit prepares identical Bell pairs") {
  const auto s = alice_commit(CommitValue::Bit0, 3, 0);
  CHECK(s.n_pairs == 3);
  CHECK(s.pairs.size() == 3);
  CHECK(s.bc_records.size() == 3);
  CHECK(s.phase == SessionPhase::Committed);
  CHECK_FALSE(s.value_uncommitted);
  for (const auto& p : s.pairs) {
    CHECK(p.state.max_abs_diff(make_bell({0, 0})) == 0.0);
    CHECK(p.num_qubits() == 2);
  }
  for (const auto& r : s.bc_records) CHECK(r.empty());

  const auto one = alice_commit(CommitValue::Bit1, 1, 0);
  CHECK(one.pairs.front().state.max_abs_diff(make_bell({0, 1})) == 0.0);

  // bell(1,0) (x) |0>: amplitudes 1/sqrt2 at |000> and -1/sqrt2 at |110>.
  const auto plus = alice_commit(CommitValue::Plus, 2, 1);
  for (const auto& p : plus.pairs) {
    CHECK(p.num_qubits() == 3);
    CHECK(p.receiver_qubits() == std::vector<int>{1, 2});
    CHECK(p.state[0].real() == doctest::Approx(std::sqrt(0.5)).epsilon(kExactTol));
    CHECK(p.state[6].real() == doctest::Approx(-std::sqrt(0.5)).epsilon(kExactTol));
    CHECK(p.state.max_abs_diff(tensor(make_bell({1, 0}), StateVector::zeros(1))) == 0.0);
  }

  CHECK_THROWS_AS(alice_commit(CommitValue::Bit0, 0), std::invalid_argument);
  CHECK_THROWS_AS(alice_commit(CommitValue::Bit0, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(alice_commit(CommitValue::Bit0, 1, -1), std::invalid_argument);
}

TEST_CASE("B/C operations") {
  SUBCASE("None leaves the session untouched") {
    auto s = alice_commit(CommitValue::Minus, 4, 1);
    const auto before = s.pairs;
    Rng rng(1);
    bc_apply_operations(s, BCPolicy::None, rng);
    for (std::size_t p = 0; p < s.pairs.size(); ++p) {
      CHECK(s.pairs[p].state.max_abs_diff(before[p].state) == 0.0);
      CHECK(s.bc_records[p].empty());
    }
  }

  SUBCASE("RandomLocal keeps Alice's marginal maximally mixed") {
    auto s = alice_commit(CommitValue::Bit1, 5, 0);
    Rng rng(2);
    bc_apply_operations(s, BCPolicy::RandomLocal, rng);
    const std::vector<int> alice{kAliceQubit};
    for (std::size_t p = 0; p < s.pairs.size(); ++p) {
      CHECK(s.bc_records[p].ops().size() == 1);
      CHECK(s.bc_records[p].ops().front().targets() == std::vector<int>{kCQubit});
      const auto rho = reduced_density(s.pairs[p].state, alice);
      CHECK(trace_distance(rho, DensityMatrix::maximally_mixed(2)) <= kExactTol);
    }
    check_record_locality(s);
  }

  SUBCASE("RandomEntangled acts on C's qubit and the ancillas") {
    auto s = alice_commit(CommitValue::Plus, 3, 2);
    Rng rng(3);
    bc_apply_operations(s, BCPolicy::RandomEntangled, rng);
    for (const auto& r : s.bc_records) {
      CHECK(r.ops().size() == 1);
      CHECK(r.ops().front().targets() == std::vector<int>{1, 2, 3});
    }
    check_record_locality(s);
  }

  SUBCASE("pairs draw from distinct substreams") {
    auto s = alice_commit(CommitValue::Bit0, 2, 0);
    Rng rng(4);
    bc_apply_operations(s, BCPolicy::RandomLocal, rng);
    const auto& a = s.bc_records[0].ops().front().matrix();
    const auto& b = s.bc_records[1].ops().front().matrix();
    CHECK((a - b).cwiseAbs().maxCoeff() > 1e-3);
  }

  SUBCASE("errors") {
    auto s = alice_commit(CommitValue::Bit0, 1, 0);
    Rng rng(5);
    CHECK_THROWS_AS(bc_apply_operations(s, BCPolicy::RandomEntangled, rng), std::invalid_argument);
    alice_reveal_honest(s);
    CHECK_THROWS_AS(bc_apply_operations(s, BCPolicy::RandomLocal, rng), ProtocolError);
  }

  SUBCASE("records refuse operations on Alice's qubit") {
    BCRecord rec;
    CHECK_THROWS_AS(rec.append(Unitary(pauli_matrix(PauliOp::X), {kAliceQubit})), ProtocolError);
    CHECK_THROWS_AS(rec.append(Unitary(ComplexMatrix::Identity(4, 4), {1, kAliceQubit})), ProtocolError);
    CHECK(rec.empty());
  }
}

TEST_CASE("honest reveal") {
  auto s = alice_commit(CommitValue::Bit0, 2);
  const auto msg = alice_reveal_honest(s);
  CHECK(msg.announced == BellLabel(0, 0));
  CHECK(msg.alice_qubits_transferred);
  CHECK(s.phase == SessionPhase::Revealed);
  CHECK_THROWS_AS(alice_reveal_honest(s), ProtocolError);

  auto m = alice_commit(CommitValue::Minus, 1);
  CHECK(alice_reveal_honest(m).announced == BellLabel(1, 1));
  CHECK(m.pairs.front().state.max_abs_diff(make_bell({1, 1})) == 0.0);
}

TEST_CASE("verification") {
  SUBCASE("honest Bit1 without operations") {
    auto s = alice_commit(CommitValue::Bit1, 4);
    const auto msg = alice_reveal_honest(s);
    Rng rng(6);
    const auto rep = verify(s, msg, rng);
    CHECK(rep.accept);
    REQUIRE(rep.revealed_value.has_value());
    CHECK(*rep.revealed_value == CommitValue::Bit1);
    CHECK(rep.per_pair.size() == 4);
    for (auto l : rep.per_pair) CHECK(l == BellLabel(0, 1));
    CHECK(rep.min_announced_probability() >= 1.0 - 1e-9);
  }

  SUBCASE("honest Plus with entangling operations") {
    auto s = alice_commit(CommitValue::Plus, 3, 1);
    Rng rng(7);
    bc_apply_operations(s, BCPolicy::RandomEntangled, rng);
    for (std::size_t p = 0; p < s.pairs.size(); ++p) {
      const auto restored = undo_bc_operations(s.pairs[p], s.bc_records[p]);
      CHECK(restored.max_abs_diff(tensor(make_bell({1, 0}), StateVector::zeros(1))) <= kAccumTol);
    }
    const auto msg = alice_reveal_honest(s);
    const auto rep = verify(s, msg, rng);
    CHECK(rep.accept);
    CHECK(rep.min_announced_probability() >= 1.0 - 1e-9);
  }

  SUBCASE("a wrong announcement on unchanged qubits is rejected") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto s = alice_commit(CommitValue::Bit0, 1);
      const auto msg = alice_announce(s, BellLabel(0, 1));
      Rng rng(seed);
      const auto rep = verify(s, msg, rng);
      CHECK_FALSE(rep.accept);
      CHECK_FALSE(rep.revealed_value.has_value());
      CHECK(rep.per_pair.front() == BellLabel(0, 0));
      CHECK(rep.announced_probability.front() <= 1e-9);
    }
  }

  SUBCASE("announced-label soundness for every pair of labels") {
    for (int truth : kAllLabelIndices) {
      for (int claim : kAllLabelIndices) {
        auto s = alice_commit(value_of_label(BellLabel::from_index(truth)), 3, 1);
        Rng rng(static_cast<std::uint64_t>(truth * 4 + claim));
        bc_apply_operations(s, BCPolicy::RandomEntangled, rng);
        const auto msg = alice_announce(s, BellLabel::from_index(claim));
        const auto rep = verify(s, msg, rng);
        CHECK(rep.accept == (truth == claim));
        if (truth == claim) {
          CHECK(rep.min_announced_probability() >= 1.0 - 1e-9);
        } else {
          for (double p : rep.announced_probability) CHECK(p <= 1e-9);
        }
      }
    }
  }

  SUBCASE("phase and shape errors") {
    auto s = alice_commit(CommitValue::Bit0, 2);
    Rng rng(8);
    CHECK_THROWS_AS(verify(s, RevealMessage{{0, 0}, true}, rng), ProtocolError);
    const auto msg = alice_reveal_honest(s);
    auto broken = s;
    broken.bc_records.pop_back();
    CHECK_THROWS_AS(verify(broken, msg, rng), ProtocolError);
    CHECK_THROWS_AS(verify(s, RevealMessage{{0, 0}, false}, rng), ProtocolError);
  }
}

TEST_CASE("honest completeness across policies, sizes and seeds") {
  for (auto v : kAllCommitValues) {
    for (auto policy : kPolicies) {
      for (int n = 1; n <= 8; n += 3) {
        for (int m = 0; m <= kMaxAncillas; ++m) {
          if (!policy_allowed(policy, m)) continue;
          for (std::uint64_t seed = 0; seed < 3; ++seed) {
            auto s = alice_commit(v, n, m);
            Rng rng(seed);
            bc_apply_operations(s, policy, rng);
            check_record_locality(s);
            const auto msg = alice_reveal_honest(s);
            const auto rep = verify(s, msg, rng);
            CHECK(rep.accept);
            CHECK(rep.min_announced_probability() >= 1.0 - 1e-9);
          }
        }
      }
    }
  }
}

TEST_CASE("hiding: receiver-side view does not depend on the committed value") {
  for (auto policy : kPolicies) {
    for (int m = 0; m <= kMaxAncillas; ++m) {
      if (!policy_allowed(policy, m)) continue;
      std::vector<CommitmentSession> sessions;
      for (auto v : kAllCommitValues) {
        auto s = alice_commit(v, 3, m);
        Rng rng(77);
        bc_apply_operations(s, policy, rng);
        sessions.push_back(std::move(s));
      }
      const auto receiver = sessions.front().pairs.front().receiver_qubits();
      for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) {
          for (std::size_t p = 0; p < 3; ++p) {
            const auto ra = reduced_density(sessions[a].pairs[p].state, receiver);
            const auto rb = reduced_density(sessions[b].pairs[p].state, receiver);
            CHECK(trace_distance(ra, rb) <= kExactTol);
          }
        }
      }
    }
  }
}

}  // TEST_SUITE
