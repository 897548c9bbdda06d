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

// Machine-readable and human-readable renderings of experiment results.
//
// Json reports have the shape
//   { "version": ..., "config": {...}, "stats": {...} | null,
//     "matrix": {...}?, "hiding": {...}? }
// Csv reports carry one row per (strategy, commit, reveal, policy).

#include <string>

#include <nlohmann/json.hpp>

#include "bellcommit/harness.hpp"

namespace bellcommit {

inline constexpr const char* kReportVersion = "1.0.0";

nlohmann::json to_json(const ExperimentConfig& config);
nlohmann::json to_json(const DetectionStats& stats);
nlohmann::json to_json(const AcceptanceMatrix& matrix);
nlohmann::json to_json(const HidingReport& report);

/// Transcript of one trial: phase, prepared value, announced label,
/// per-pair measured labels and the accept flag.
nlohmann::json transcript_json(const TrialResult& trial);
nlohmann::json transcript_json(const CommitmentSession& session, const VerificationReport& report);

std::string render_run(const ExperimentConfig& config, const DetectionStats& stats);
std::string render_matrix(const AcceptanceMatrix& matrix);
std::string render_hiding(const HidingReport& report);

}  // namespace bellcommit
