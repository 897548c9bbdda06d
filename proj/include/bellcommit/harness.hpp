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

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bellcommit/protocol.hpp"

namespace bellcommit {

/// Honest: reveal what was committed. Cheat: commit bell(0,0), flip at
/// reveal. Control: commit honestly, announce a different label without
/// touching the qubits (the verifier must reject it).
enum class Strategy { Honest, Cheat, Control };

std::string to_string(Strategy s);
Strategy parse_strategy(std::string_view text);

enum class OutputFormat { Text, Json, Csv };

std::string to_string(OutputFormat f);
OutputFormat parse_output_format(std::string_view text);

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
  int n_pairs = 8;
  int trials = 1000;
  Strategy strategy = Strategy::Honest;
  CommitValue commit_value = CommitValue::Bit0;
  CommitValue reveal_value = CommitValue::Bit0;
  BCPolicy bc_policy = BCPolicy::None;
  int ancillas = 0;
  std::uint64_t master_seed = 0;
  double tolerance = 1e-9;
  OutputFormat output = OutputFormat::Text;
  /// Worker threads for trials; 0 picks the hardware concurrency. Never
  /// affects results.
  int threads = 0;

  /// Throws ConfigError on any violated constraint.
  void validate() const;
};

struct TrialResult {
  std::uint64_t index = 0;
  bool accept = false;
  CommitValue prepared = CommitValue::Bit0;
  BellLabel announced;
  std::vector<BellLabel> per_pair;
  double min_announced_probability = 0.0;
  double max_announced_probability = 0.0;
};

struct DetectionStats {
  int trials = 0;
  int accepts = 0;
  double acceptance_rate = 0.0;
  /// Extremes over all trials and pairs of the announced label's
  /// probability at measurement time.
  double min_announced_probability = 1.0;
  double max_announced_probability = 0.0;
  std::vector<TrialResult> per_trial;
};

/// One protocol execution on the substream derive_seed(master_seed, index).
TrialResult run_trial(const ExperimentConfig& config, std::uint64_t trial_index);

/// Aggregates config.trials trials. Identical for any thread count.
DetectionStats run_experiment(const ExperimentConfig& config, bool keep_trials = false);

/// True when the outcome is what the strategy predicts: every trial
/// accepted with certainty for Honest and Cheat, every trial rejected
/// with certainty for Control.
bool meets_expectation(const ExperimentConfig& config, const DetectionStats& stats);

struct AcceptanceMatrix {
  ExperimentConfig base;
  /// Indexed by reveal target.
  std::array<DetectionStats, 4> cheat;
  /// Indexed by committed (= revealed) value.
  std::array<DetectionStats, 4> honest;
  /// control[commit][announce]; empty on the diagonal.
  std::array<std::array<std::optional<DetectionStats>, 4>, 4> control;

  bool meets_expectation() const;
};

AcceptanceMatrix acceptance_matrix(const ExperimentConfig& base);

struct HidingReport {
  ExperimentConfig base;
  /// Max over pairs of the trace distance between receiver-side reduced
  /// states for committed values a and b, right after commit.
  std::array<std::array<double, 4>, 4> commit_phase{};
  /// Same after B/C operations drawn from the same seed for every value.
  std::array<std::array<double, 4>, 4> after_bc_ops{};
  /// Max entry-wise distance of C's single-qubit marginal from I/2.
  double max_marginal_deviation = 0.0;

  double max_distance() const;
  bool meets_expectation(double threshold = kExactTol) const;
};

HidingReport hiding_report(const ExperimentConfig& base);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Fast invariant suite behind `selftest`.
std::vector<CheckResult> run_selftest(std::uint64_t seed);

}  // namespace bellcommit
