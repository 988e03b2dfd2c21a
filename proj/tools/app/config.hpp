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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thermvqe/ansatz.hpp"
#include "thermvqe/vqe.hpp"

namespace thermvqe::app {

/// Invalid configuration key or value. `line` is 0 for command-line overrides.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string key, std::size_t line, const std::string &what);

    [[nodiscard]] const std::string &key() const noexcept { return key_; }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::string key_;
    std::size_t line_;
};

/// Unreadable or unwritable file.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class BetaSpacing { Linear, Log };

struct RunConfig {
    int q_s = 3;
    double j = 1.0;
    double h = 1.0;
    bool periodic = true;

    MixingFamily mixing_family = MixingFamily::Geometric;
    double mixing_param = 0.9;
    int layers = 6;
    int q_a = 3;

    /// Sixteen restarts reach C_min within 1e-3 at the default model.
    OptimizerConfig optimizer{.restarts = 16};

    /// Shot-sampled estimation when true, exact expectations otherwise.
    bool shot_mode = false;
    std::uint64_t shots = 4096;
    std::size_t jackknife_blocks = 20;

    double beta_min = 0.0;
    double beta_max = 5.0;
    std::size_t beta_count = 11;
    BetaSpacing beta_spacing = BetaSpacing::Linear;

    /// "energy" or a path to an observable file.
    std::string observable = "energy";
    /// Fill oracle columns (exact diagonalization) in sweep outputs.
    bool oracle = true;
    std::uint64_t seed = 1;
    std::filesystem::path out = "out";

    bool operator==(const RunConfig &) const = default;
};

/// Parses `key = value` lines. `#` starts a comment; keys under `result.`
/// are ignored so that a run summary parses back to its configuration.
RunConfig parse_config(std::istream &in, RunConfig base = {});
RunConfig load_config(const std::filesystem::path &path, RunConfig base = {});

/// Sets one key. A key without a dot may name the last component of a
/// dotted key when that is unambiguous (`layers` for `ansatz.layers`).
void set_value(RunConfig &cfg, const std::string &key, const std::string &value,
               std::size_t line = 0);

/// Cross-field checks; throws ConfigError naming the offending key.
void validate(const RunConfig &cfg);

/// Canonical `key = value` pairs in a fixed order.
std::vector<std::pair<std::string, std::string>> to_entries(const RunConfig &cfg);

std::vector<double> beta_grid(const RunConfig &cfg);

} // namespace thermvqe::app
