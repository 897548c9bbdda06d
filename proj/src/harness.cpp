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

#include "bellcommit/harness.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

#include "bellcommit/attack.hpp"

namespace bellcommit {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Honest:
      return "honest";
    case Strategy::Cheat:
      return "cheat";
    case Strategy::Control:
      return "control";
  }
  return "?";
}

Strategy parse_strategy(std::string_view text) {
  for (auto s : {Strategy::Honest, Strategy::Cheat, Strategy::Control}) {
    if (text == to_string(s)) return s;
  }
  throw ConfigError("unknown strategy '" + std::string(text) + "' (expected honest|cheat|control)");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Text:
      return "text";
    case OutputFormat::Json:
      return "json";
    case OutputFormat::Csv:
      return "csv";
  }
  return "?";
}

OutputFormat parse_output_format(std::string_view text) {
  for (auto f : {OutputFormat::Text, OutputFormat::Json, OutputFormat::Csv}) {
    if (text == to_string(f)) return f;
  }
  throw ConfigError("unknown format '" + std::string(text) + "' (expected text|json|csv)");
}

void ExperimentConfig::validate() const {
  if (n_pairs < 1) throw ConfigError("--pairs must be at least 1");
  if (trials < 1) throw ConfigError("--trials must be at least 1");
  if (ancillas < 0 || ancillas > kMaxAncillas) {
    throw ConfigError("--ancillas must be in [0, " + std::to_string(kMaxAncillas) + "]");
  }
  if (bc_policy == BCPolicy::RandomEntangled && ancillas < 1) {
    throw ConfigError("random-entangled B/C operations need --ancillas >= 1");
  }
  if (!(tolerance >= 0.0 && tolerance < 1.0)) throw ConfigError("--tolerance must be in [0, 1)");
  if (threads < 0) throw ConfigError("--threads must be non-negative");
  if (strategy == Strategy::Honest && reveal_value != commit_value) {
    throw ConfigError("an honest committer must reveal the committed value");
  }
  if (strategy == Strategy::Control && reveal_value == commit_value) {
    throw ConfigError("the control strategy needs a reveal value different from the commit value");
  }
}

TrialResult run_trial(const ExperimentConfig& config, std::uint64_t trial_index) {
  config.validate();
  Rng rng(derive_seed(config.master_seed, trial_index));

  CommitmentSession session = config.strategy == Strategy::Cheat
                                  ? alice_commit_cheating(config.n_pairs, config.ancillas)
                                  : alice_commit(config.commit_value, config.n_pairs, config.ancillas);
  bc_apply_operations(session, config.bc_policy, rng);

  RevealMessage reveal;
  switch (config.strategy) {
    case Strategy::Honest:
      reveal = alice_reveal_honest(session);
      break;
    case Strategy::Cheat:
      reveal = alice_reveal_cheat(session, config.reveal_value);
      break;
    case Strategy::Control:
      reveal = alice_announce(session, commit_label(config.reveal_value));
      break;
  }
  const VerificationReport report = verify(session, reveal, rng);

  TrialResult r;
  r.index = trial_index;
  r.accept = report.accept;
  r.prepared = session.committed;
  r.announced = report.announced;
  r.per_pair = report.per_pair;
  r.min_announced_probability = report.min_announced_probability();
  r.max_announced_probability =
      *std::max_element(report.announced_probability.begin(), report.announced_probability.end());
  return r;
}

DetectionStats run_experiment(const ExperimentConfig& config, bool keep_trials) {
  config.validate();
  const auto total = static_cast<std::size_t>(config.trials);
  std::vector<TrialResult> results(total);

  std::size_t workers = config.threads > 0 ? static_cast<std::size_t>(config.threads)
                                           : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, total);

  if (workers <= 1) {
    for (std::size_t i = 0; i < total; ++i) results[i] = run_trial(config, i);
  } else {
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < total; i += workers) results[i] = run_trial(config, i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  DetectionStats stats;
  stats.trials = config.trials;
  for (const auto& r : results) {
    if (r.accept) ++stats.accepts;
    stats.min_announced_probability = std::min(stats.min_announced_probability, r.min_announced_probability);
    stats.max_announced_probability = std::max(stats.max_announced_probability, r.max_announced_probability);
  }
  stats.acceptance_rate = static_cast<double>(stats.accepts) / static_cast<double>(stats.trials);
  if (keep_trials) stats.per_trial = std::move(results);
  return stats;
}

bool meets_expectation(const ExperimentConfig& config, const DetectionStats& stats) {
  if (config.strategy == Strategy::Control) {
    return stats.accepts == 0 && stats.max_announced_probability <= config.tolerance;
  }
  return stats.accepts == stats.trials && stats.min_announced_probability >= 1.0 - config.tolerance;
}

// ---------------------------------------------------------------------------

bool AcceptanceMatrix::meets_expectation() const {
  ExperimentConfig cfg = base;
  for (std::size_t v = 0; v < 4; ++v) {
    cfg.strategy = Strategy::Cheat;
    if (!bellcommit::meets_expectation(cfg, cheat[v])) return false;
    cfg.strategy = Strategy::Honest;
    if (!bellcommit::meets_expectation(cfg, honest[v])) return false;
    cfg.strategy = Strategy::Control;
    for (std::size_t w = 0; w < 4; ++w) {
      if (control[v][w] && !bellcommit::meets_expectation(cfg, *control[v][w])) return false;
    }
  }
  return true;
}

AcceptanceMatrix acceptance_matrix(const ExperimentConfig& base) {
  base.validate();
  AcceptanceMatrix m;
  m.base = base;
  for (std::size_t v = 0; v < 4; ++v) {
    ExperimentConfig cfg = base;
    cfg.strategy = Strategy::Cheat;
    cfg.commit_value = CommitValue::Bit0;
    cfg.reveal_value = kAllCommitValues[v];
    m.cheat[v] = run_experiment(cfg);

    cfg.strategy = Strategy::Honest;
    cfg.commit_value = kAllCommitValues[v];
    m.honest[v] = run_experiment(cfg);

    cfg.strategy = Strategy::Control;
    for (std::size_t w = 0; w < 4; ++w) {
      if (w == v) continue;
      cfg.reveal_value = kAllCommitValues[w];
      m.control[v][w] = run_experiment(cfg);
    }
  }
  return m;
}

// ---------------------------------------------------------------------------

double HidingReport::max_distance() const {
  double d = 0.0;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) d = std::max({d, commit_phase[a][b], after_bc_ops[a][b]});
  }
  return d;
}

bool HidingReport::meets_expectation(double threshold) const {
  return max_distance() <= threshold && max_marginal_deviation <= threshold;
}

HidingReport hiding_report(const ExperimentConfig& base) {
  base.validate();
  HidingReport report;
  report.base = base;

  // Receiver-side reduced states per value and pair, before and after ops.
  std::array<std::vector<DensityMatrix>, 4> before;
  std::array<std::vector<DensityMatrix>, 4> after;
  const std::vector<int> c_only{kCQubit};
  const DensityMatrix half_identity = DensityMatrix::maximally_mixed(2);

  for (std::size_t v = 0; v < 4; ++v) {
    CommitmentSession s = alice_commit(kAllCommitValues[v], base.n_pairs, base.ancillas);
    const auto receiver = s.pairs.front().receiver_qubits();
    for (const auto& pair : s.pairs) {
      before[v].push_back(reduced_density(pair.state, receiver));
      const DensityMatrix c = reduced_density(pair.state, c_only);
      report.max_marginal_deviation = std::max(
          report.max_marginal_deviation,
          (c.entries() - half_identity.entries()).cwiseAbs().maxCoeff());
    }
    Rng rng(derive_seed(base.master_seed, 0));
    bc_apply_operations(s, base.bc_policy, rng);
    for (const auto& pair : s.pairs) after[v].push_back(reduced_density(pair.state, receiver));
  }

  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      double d_before = 0.0;
      double d_after = 0.0;
      for (std::size_t p = 0; p < before[a].size(); ++p) {
        d_before = std::max(d_before, trace_distance(before[a][p], before[b][p]));
        d_after = std::max(d_after, trace_distance(after[a][p], after[b][p]));
      }
      report.commit_phase[a][b] = d_before;
      report.after_bc_ops[a][b] = d_after;
    }
  }
  return report;
}

}  // namespace bellcommit
