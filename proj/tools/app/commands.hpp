// Copyright 2026 The thermvqe Authors
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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "app/config.hpp"
#include "thermvqe/pauli.hpp"
#include "thermvqe/reweighting.hpp"

namespace thermvqe::app {

struct RunSummary {
    RunConfig config;
    std::optional<double> best_cost;
    std::optional<double> c_min;
    std::optional<bool> converged;
    std::optional<std::size_t> iterations;
    std::vector<double> spectrum;
    std::vector<double> spectrum_errors;
    /// Seconds per stage, keyed by stage name.
    std::map<std::string, double> wall_times;
    std::vector<std::filesystem::path> files;
};

struct SolveOptions {
    bool trace = false;
};

struct SweepOptions {
    /// Defaults to `<out>/theta_star.txt`.
    std::optional<std::filesystem::path> theta;
};

PauliSum build_hamiltonian(const RunConfig &cfg);
/// H itself for `observable = energy`, otherwise the observable file.
PauliSum build_observable(const RunConfig &cfg, const PauliSum &hamiltonian);
MixingSpec build_mixing(const RunConfig &cfg);

/// Runs the variational stage; writes theta_star.txt, summary.txt and,
/// with `trace`, trace.csv.
RunSummary cmd_solve(const RunConfig &cfg, const SolveOptions &opts = {});

/// Prepares the state from θ*, estimates the spectrum and sweeps β; writes
/// spectrum.csv, curve.csv and summary.txt.
RunSummary cmd_sweep(const RunConfig &cfg, const SweepOptions &opts = {});

/// Writes oracle_spectrum.csv and oracle_curve.csv.
RunSummary cmd_oracle(const RunConfig &cfg);

/// Renders config echo and results as `key = value` lines.
std::string render_summary(const RunSummary &summary);

} // namespace thermvqe::app
