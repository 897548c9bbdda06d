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

#include "bellcommit/report.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>

namespace bellcommit {

namespace {

using nlohmann::json;

std::string shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

json label_json(BellLabel l) { return l.str(); }

json nullable_stats(const std::optional<DetectionStats>& s) {
  return s ? to_json(*s) : json(nullptr);
}

DetectionStats merge(const std::array<DetectionStats, 4>& row) {
  DetectionStats out;
  for (const auto& s : row) {
    out.trials += s.trials;
    out.accepts += s.accepts;
    out.min_announced_probability = std::min(out.min_announced_probability, s.min_announced_probability);
    out.max_announced_probability = std::max(out.max_announced_probability, s.max_announced_probability);
  }
  out.acceptance_rate = out.trials ? static_cast<double>(out.accepts) / out.trials : 0.0;
  return out;
}

const char* kCsvHeader = "strategy,commit,reveal,policy,pairs,ancillas,trials,accepts,acceptance_rate\n";

void csv_row(std::ostream& os, const ExperimentConfig& cfg, Strategy strategy, CommitValue commit,
             CommitValue reveal, const DetectionStats& s) {
  os << to_string(strategy) << ',' << to_string(commit) << ',' << to_string(reveal) << ','
     << to_string(cfg.bc_policy) << ',' << cfg.n_pairs << ',' << cfg.ancillas << ',' << s.trials
     << ',' << s.accepts << ',' << shortest(s.acceptance_rate) << '\n';
}

std::string config_line(const ExperimentConfig& cfg) {
  std::ostringstream os;
  os << "pairs=" << cfg.n_pairs << " trials=" << cfg.trials << " policy=" << to_string(cfg.bc_policy)
     << " ancillas=" << cfg.ancillas << " seed=" << cfg.master_seed
     << " tolerance=" << shortest(cfg.tolerance);
  return os.str();
}

std::string rate_cell(double r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << r;
  return os.str();
}

}  // namespace

json to_json(const ExperimentConfig& c) {
  return json{{"pairs", c.n_pairs},
              {"trials", c.trials},
              {"strategy", to_string(c.strategy)},
              {"commit", to_string(c.commit_value)},
              {"reveal", to_string(c.reveal_value)},
              {"bc_ops", to_string(c.bc_policy)},
              {"ancillas", c.ancillas},
              {"seed", c.master_seed},
              {"tolerance", c.tolerance}};
}

json to_json(const DetectionStats& s) {
  json j{{"trials", s.trials},
         {"accepts", s.accepts},
         {"acceptance_rate", s.acceptance_rate},
         {"min_announced_probability", s.min_announced_probability},
         {"max_announced_probability", s.max_announced_probability}};
  if (!s.per_trial.empty()) {
    json outcomes = json::array();
    for (const auto& t : s.per_trial) outcomes.push_back(transcript_json(t));
    j["per_trial_outcomes"] = std::move(outcomes);
  }
  return j;
}

json to_json(const AcceptanceMatrix& m) {
  json values = json::array();
  json cheat = json::array();
  json honest = json::array();
  json control = json::array();
  for (std::size_t v = 0; v < 4; ++v) {
    values.push_back(to_string(kAllCommitValues[v]));
    cheat.push_back(to_json(m.cheat[v]));
    honest.push_back(to_json(m.honest[v]));
    json row = json::array();
    for (std::size_t w = 0; w < 4; ++w) row.push_back(nullable_stats(m.control[v][w]));
    control.push_back(std::move(row));
  }
  return json{{"values", std::move(values)},
              {"cheat", std::move(cheat)},
              {"honest", std::move(honest)},
              {"control", std::move(control)},
              {"control_note", "control: honest state, mismatched announcement, no flip; rows = commit, columns = announced"},
              {"meets_expectation", m.meets_expectation()}};
}

json to_json(const HidingReport& r) {
  json before = json::array();
  json after = json::array();
  for (std::size_t a = 0; a < 4; ++a) {
    before.push_back(json(r.commit_phase[a]));
    after.push_back(json(r.after_bc_ops[a]));
  }
  json values = json::array();
  for (auto v : kAllCommitValues) values.push_back(to_string(v));
  return json{{"values", std::move(values)},
              {"commit_phase", std::move(before)},
              {"after_bc_ops", std::move(after)},
              {"max_marginal_deviation", r.max_marginal_deviation},
              {"max_distance", r.max_distance()},
              {"meets_expectation", r.meets_expectation()}};
}

json transcript_json(const TrialResult& t) {
  json per_pair = json::array();
  for (auto l : t.per_pair) per_pair.push_back(label_json(l));
  return json{{"trial", t.index},
              {"phase", to_string(SessionPhase::Revealed)},
              {"value", to_string(t.prepared)},
              {"announced", label_json(t.announced)},
              {"per_pair", std::move(per_pair)},
              {"accept", t.accept}};
}

json transcript_json(const CommitmentSession& session, const VerificationReport& report) {
  json per_pair = json::array();
  for (auto l : report.per_pair) per_pair.push_back(label_json(l));
  return json{{"phase", to_string(session.phase)},
              {"value", to_string(session.committed)},
              {"announced", label_json(report.announced)},
              {"per_pair", std::move(per_pair)},
              {"accept", report.accept}};
}

// ---------------------------------------------------------------------------

std::string render_run(const ExperimentConfig& cfg, const DetectionStats& s) {
  std::ostringstream os;
  switch (cfg.output) {
    case OutputFormat::Json: {
      json j{{"version", kReportVersion}, {"config", to_json(cfg)}, {"stats", to_json(s)}};
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << kCsvHeader;
      csv_row(os, cfg, cfg.strategy, cfg.strategy == Strategy::Cheat ? CommitValue::Bit0 : cfg.commit_value,
              cfg.reveal_value, s);
      break;
    case OutputFormat::Text:
      os << "strategy " << to_string(cfg.strategy) << ": commit " << to_string(cfg.commit_value)
         << (cfg.strategy == Strategy::Cheat ? " (physically bit0)" : "") << ", reveal "
         << to_string(cfg.reveal_value) << '\n'
         << config_line(cfg) << '\n'
         << "accepted " << s.accepts << " / " << s.trials << "  rate " << rate_cell(s.acceptance_rate)
         << '\n'
         << "announced-label probability  min " << shortest(s.min_announced_probability) << "  max "
         << shortest(s.max_announced_probability) << '\n';
      break;
  }
  return os.str();
}

std::string render_matrix(const AcceptanceMatrix& m) {
  std::ostringstream os;
  switch (m.base.output) {
    case OutputFormat::Json: {
      json j{{"version", kReportVersion},
             {"config", to_json(m.base)},
             {"stats", to_json(merge(m.cheat))},
             {"matrix", to_json(m)}};
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << kCsvHeader;
      for (std::size_t v = 0; v < 4; ++v) {
        csv_row(os, m.base, Strategy::Cheat, CommitValue::Bit0, kAllCommitValues[v], m.cheat[v]);
      }
      for (std::size_t v = 0; v < 4; ++v) {
        csv_row(os, m.base, Strategy::Honest, kAllCommitValues[v], kAllCommitValues[v], m.honest[v]);
      }
      for (std::size_t v = 0; v < 4; ++v) {
        for (std::size_t w = 0; w < 4; ++w) {
          if (m.control[v][w]) {
            csv_row(os, m.base, Strategy::Control, kAllCommitValues[v], kAllCommitValues[w], *m.control[v][w]);
          }
        }
      }
      break;
    case OutputFormat::Text: {
      os << "acceptance matrix  " << config_line(m.base) << "\n\n";
      os << std::left << std::setw(28) << "" ;
      for (auto v : kAllCommitValues) os << std::setw(9) << to_string(v);
      os << '\n';
      os << std::setw(28) << "cheat (bit0 -> reveal)";
      for (const auto& s : m.cheat) os << std::setw(9) << rate_cell(s.acceptance_rate);
      os << '\n';
      os << std::setw(28) << "honest (commit = reveal)";
      for (const auto& s : m.honest) os << std::setw(9) << rate_cell(s.acceptance_rate);
      os << "\n\ncontrol: honest state, mismatched announcement (rows commit, cols announce)\n";
      for (std::size_t v = 0; v < 4; ++v) {
        os << std::setw(28) << ("  commit " + to_string(kAllCommitValues[v]));
        for (std::size_t w = 0; w < 4; ++w) {
          os << std::setw(9) << (m.control[v][w] ? rate_cell(m.control[v][w]->acceptance_rate) : "-");
        }
        os << '\n';
      }
      os << '\n' << (m.meets_expectation() ? "all cells as predicted" : "UNEXPECTED acceptance rates") << '\n';
      break;
    }
  }
  return os.str();
}

std::string render_hiding(const HidingReport& r) {
  std::ostringstream os;
  switch (r.base.output) {
    case OutputFormat::Json: {
      json j{{"version", kReportVersion},
             {"config", to_json(r.base)},
             {"stats", nullptr},
             {"hiding", to_json(r)}};
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << "value_a,value_b,policy,pairs,ancillas,commit_phase_distance,after_bc_ops_distance\n";
      for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) {
          os << to_string(kAllCommitValues[a]) << ',' << to_string(kAllCommitValues[b]) << ','
             << to_string(r.base.bc_policy) << ',' << r.base.n_pairs << ',' << r.base.ancillas << ','
             << shortest(r.commit_phase[a][b]) << ',' << shortest(r.after_bc_ops[a][b]) << '\n';
        }
      }
      break;
    case OutputFormat::Text:
      os << "receiver-side trace distances  " << config_line(r.base) << "\n\n";
      for (int pass = 0; pass < 2; ++pass) {
        const auto& table = pass == 0 ? r.commit_phase : r.after_bc_ops;
        os << (pass == 0 ? "after commit\n" : "after B/C operations\n");
        os << std::left << std::setw(8) << "";
        for (auto v : kAllCommitValues) os << std::setw(12) << to_string(v);
        os << '\n';
        for (std::size_t a = 0; a < 4; ++a) {
          os << std::setw(8) << to_string(kAllCommitValues[a]);
          for (std::size_t b = 0; b < 4; ++b) os << std::setw(12) << shortest(table[a][b]);
          os << '\n';
        }
        os << '\n';
      }
      os << "max |rho_C - I/2| " << shortest(r.max_marginal_deviation) << '\n'
         << (r.meets_expectation() ? "receiver view is independent of the committed value"
                                   : "UNEXPECTED: receiver view depends on the committed value")
         << '\n';
      break;
  }
  return os.str();
}

}  // namespace bellcommit
