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

#include "doctest.h"

#include "bellcommit/harness.hpp"

using namespace bellcommit;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.n_pairs = 4;
  c.trials = 100;
  c.master_seed = 42;
  c.threads = 1;
  return c;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("config validation") {
  auto c = small_config();
  CHECK_NOTHROW(c.validate());

  auto bad = c;
  bad.n_pairs = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = c;
  bad.trials = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = c;
  bad.bc_policy = BCPolicy::RandomEntangled;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad.ancillas = 1;
  CHECK_NOTHROW(bad.validate());
  bad.ancillas = 3;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = c;
  bad.reveal_value = CommitValue::Plus;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad.strategy = Strategy::Cheat;
  CHECK_NOTHROW(bad.validate());
  bad.strategy = Strategy::Control;
  CHECK_NOTHROW(bad.validate());
  bad.reveal_value = bad.commit_value;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = c;
  bad.tolerance = -1.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  CHECK(parse_strategy("cheat") == Strategy::Cheat);
  CHECK_THROWS_AS(parse_strategy("liar"), ConfigError);
  CHECK(parse_output_format("csv") == OutputFormat::Csv);
  CHECK_THROWS_AS(parse_output_format("xml"), ConfigError);
}

TEST_CASE("single trials") {
  auto honest = small_config();
  honest.n_pairs = 8;
  CHECK(run_trial(honest, 0).accept);

  auto cheat = small_config();
  cheat.strategy = Strategy::Cheat;
  cheat.reveal_value = CommitValue::Minus;
  cheat.bc_policy = BCPolicy::RandomEntangled;
  cheat.ancillas = 1;
  const auto t = run_trial(cheat, 3);
  CHECK(t.accept);
  CHECK(t.prepared == CommitValue::Bit0);
  CHECK(t.announced == BellLabel(1, 1));
  CHECK(t.min_announced_probability >= 1.0 - 1e-9);

  const auto again = run_trial(cheat, 3);
  CHECK(again.accept == t.accept);
  CHECK(again.per_pair == t.per_pair);
  CHECK(again.min_announced_probability == t.min_announced_probability);
}

TEST_CASE("control trials always measure the committed label") {
  auto c = small_config();
  c.strategy = Strategy::Control;
  c.commit_value = CommitValue::Plus;
  c.reveal_value = CommitValue::Bit1;
  c.bc_policy = BCPolicy::RandomLocal;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const auto t = run_trial(c, i);
    CHECK_FALSE(t.accept);
    for (auto l : t.per_pair) CHECK(l == BellLabel(1, 0));
    CHECK(t.max_announced_probability <= 1e-9);
  }
}

TEST_CASE("experiments") {
  auto c = small_config();
  c.strategy = Strategy::Cheat;
  c.reveal_value = CommitValue::Plus;
  c.bc_policy = BCPolicy::RandomLocal;
  const auto s = run_experiment(c);
  CHECK(s.trials == 100);
  CHECK(s.accepts == 100);
  CHECK(s.acceptance_rate == 1.0);
  CHECK(meets_expectation(c, s));
  CHECK(s.per_trial.empty());

  const auto detailed = run_experiment(c, true);
  CHECK(detailed.per_trial.size() == 100);

  auto honest = small_config();
  const auto hs = run_experiment(honest);
  CHECK(hs.acceptance_rate == 1.0);
  CHECK(meets_expectation(honest, hs));

  auto zero = small_config();
  zero.trials = 0;
  CHECK_THROWS_AS(run_experiment(zero), ConfigError);
}

TEST_CASE("serial and parallel execution agree") {
  auto c = small_config();
  c.strategy = Strategy::Cheat;
  c.reveal_value = CommitValue::Minus;
  c.bc_policy = BCPolicy::RandomEntangled;
  c.ancillas = 2;
  c.trials = 64;
  c.threads = 1;
  const auto serial = run_experiment(c, true);
  c.threads = 5;
  const auto parallel = run_experiment(c, true);
  CHECK(serial.accepts == parallel.accepts);
  CHECK(serial.min_announced_probability == parallel.min_announced_probability);
  REQUIRE(serial.per_trial.size() == parallel.per_trial.size());
  for (std::size_t i = 0; i < serial.per_trial.size(); ++i) {
    CHECK(serial.per_trial[i].per_pair == parallel.per_trial[i].per_pair);
    CHECK(serial.per_trial[i].index == i);
  }
}

TEST_CASE("meets_expectation flags a detected cheat") {
  auto c = small_config();
  c.strategy = Strategy::Cheat;
  DetectionStats s;
  s.trials = 10;
  s.accepts = 9;
  s.acceptance_rate = 0.9;
  s.min_announced_probability = 1.0;
  CHECK_FALSE(meets_expectation(c, s));
  s.accepts = 10;
  s.min_announced_probability = 0.5;
  CHECK_FALSE(meets_expectation(c, s));
  c.strategy = Strategy::Control;
  s.accepts = 0;
  s.max_announced_probability = 0.0;
  CHECK(meets_expectation(c, s));
}

TEST_CASE("acceptance matrix") {
  auto c = small_config();
  c.trials = 40;
  c.bc_policy = BCPolicy::RandomEntangled;
  c.ancillas = 1;
  const auto m = acceptance_matrix(c);
  for (std::size_t v = 0; v < 4; ++v) {
    CHECK(m.cheat[v].acceptance_rate == 1.0);
    CHECK(m.honest[v].acceptance_rate == 1.0);
    CHECK_FALSE(m.control[v][v].has_value());
    for (std::size_t w = 0; w < 4; ++w) {
      if (w != v) {
        REQUIRE(m.control[v][w].has_value());
        CHECK(m.control[v][w]->acceptance_rate == 0.0);
      }
    }
  }
  CHECK(m.meets_expectation());
}

TEST_CASE("hiding report") {
  auto c = small_config();
  for (auto policy : {BCPolicy::None, BCPolicy::RandomLocal, BCPolicy::RandomEntangled}) {
    c.bc_policy = policy;
    c.ancillas = policy == BCPolicy::RandomEntangled ? 2 : 0;
    const auto h = hiding_report(c);
    for (std::size_t a = 0; a < 4; ++a) {
      CHECK(h.commit_phase[a][a] == 0.0);
      CHECK(h.after_bc_ops[a][a] == 0.0);
      for (std::size_t b = 0; b < 4; ++b) {
        CHECK(h.commit_phase[a][b] <= kExactTol);
        CHECK(h.after_bc_ops[a][b] <= kExactTol);
        CHECK(std::abs(h.commit_phase[a][b] - h.commit_phase[b][a]) <= kExactTol);
      }
    }
    CHECK(h.max_marginal_deviation <= kExactTol);
    CHECK(h.meets_expectation());
  }
}

TEST_CASE("selftest passes") {
  for (const auto& r : run_selftest(1)) {
    INFO(r.name << " " << r.detail);
    CHECK(r.passed);
  }
}

}  // TEST_SUITE
