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

// bellcommit: run the Bell-pair commitment experiments from the command line.
//
//   bellcommit run      --strategy cheat --reveal minus --bc-ops random-entangled --ancillas 1
//   bellcommit matrix   --seed 42 --format json
//   bellcommit hiding   --bc-ops random-local
//   bellcommit selftest
//
// Exit status: 0 when every configured expectation held, 1 when one failed
// (for example a cheat was detected), 2 for an invalid configuration.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bellcommit/harness.hpp"
#include "bellcommit/report.hpp"

namespace {

using namespace bellcommit;

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitConfig = 2;

struct RawOptions {
  int pairs = 8;
  int trials = 1000;
  std::string strategy = "honest";
  std::string commit = "bit0";
  std::optional<std::string> reveal;
  std::string bc_ops = "none";
  int ancillas = 0;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  std::string format = "text";
  std::string out;
  int threads = 0;
  bool detail = false;
};

void add_experiment_flags(CLI::App* cmd, RawOptions& o, bool with_strategy) {
  cmd->add_option("--pairs", o.pairs, "Bell pairs per commitment")->capture_default_str();
  cmd->add_option("--trials", o.trials, "Monte Carlo trials per experiment")->capture_default_str();
  if (with_strategy) {
    cmd->add_option("--strategy", o.strategy, "honest|cheat|control")->capture_default_str();
    cmd->add_option("--commit", o.commit, "bit0|bit1|plus|minus")->capture_default_str();
    cmd->add_option("--reveal", o.reveal, "bit0|bit1|plus|minus (defaults to --commit)");
  }
  cmd->add_option("--bc-ops", o.bc_ops, "none|random-local|random-entangled")->capture_default_str();
  cmd->add_option("--ancillas", o.ancillas, "receiver-side ancilla qubits per pair (0-2)")
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "master seed")->capture_default_str();
  cmd->add_option("--tolerance", o.tolerance, "probability tolerance for assertions")
      ->capture_default_str();
  cmd->add_option("--format", o.format, "text|json|csv")->capture_default_str();
  cmd->add_option("--out", o.out, "write the report here instead of stdout");
  cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)")->capture_default_str();
}

ExperimentConfig to_config(const RawOptions& o) {
  ExperimentConfig c;
  c.n_pairs = o.pairs;
  c.trials = o.trials;
  c.strategy = parse_strategy(o.strategy);
  c.commit_value = parse_commit_value(o.commit);
  c.reveal_value = o.reveal ? parse_commit_value(*o.reveal) : c.commit_value;
  c.bc_policy = parse_bc_policy(o.bc_ops);
  c.ancillas = o.ancillas;
  c.master_seed = o.seed;
  c.tolerance = o.tolerance;
  c.output = parse_output_format(o.format);
  c.threads = o.threads;
  c.validate();
  return c;
}

int emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return kExitConfig;
  }
  f << text;
  return kExitOk;
}

int finish(const std::string& text, const std::string& path, bool expectation_held) {
  if (const int rc = emit(text, path); rc != kExitOk) return rc;
  if (!expectation_held) {
    std::cerr << "assertion failed: results differ from the predicted acceptance pattern\n";
    return kExitAssertion;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell-pair commitment simulator: honest runs, the Pauli-flip cheat, and controls"};
  app.require_subcommand(1);

  RawOptions opts;
  auto* run = app.add_subcommand("run", "run one experiment");
  add_experiment_flags(run, opts, true);
  run->add_flag("--detail", opts.detail, "include per-trial transcripts in json output");

  auto* matrix = app.add_subcommand("matrix", "cheat / honest / control acceptance matrix");
  add_experiment_flags(matrix, opts, false);

  auto* hiding = app.add_subcommand("hiding", "pairwise trace distances of the receiver's view");
  add_experiment_flags(hiding, opts, false);

  std::uint64_t selftest_seed = 1;
  auto* selftest = app.add_subcommand("selftest", "run the built-in invariant checks");
  selftest->add_option("--seed", selftest_seed, "seed for random samples")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*selftest) {
      bool all = true;
      for (const auto& r : run_selftest(selftest_seed)) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << '\n';
        all = all && r.passed;
      }
      return all ? kExitOk : kExitAssertion;
    }

    const ExperimentConfig config = to_config(opts);
    if (*run) {
      const DetectionStats stats = run_experiment(config, opts.detail);
      return finish(render_run(config, stats), opts.out, meets_expectation(config, stats));
    }
    if (*matrix) {
      const AcceptanceMatrix m = acceptance_matrix(config);
      return finish(render_matrix(m), opts.out, m.meets_expectation());
    }
    if (*hiding) {
      const HidingReport h = hiding_report(config);
      return finish(render_hiding(h), opts.out, h.meets_expectation());
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitAssertion;
  }
  return kExitOk;
}
