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

#include <string>
#include <vector>

#include "app/config.hpp"

namespace thermvqe::app {

struct PropertyResult {
    std::string name;
    /// Measured worst-case deviation; compared against `threshold`.
    double deviation = 0.0;
    double threshold = 0.0;
    bool passed = false;
};

struct ValidationReport {
    std::vector<PropertyResult> results;

    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] std::string render() const;
};

enum class Fault {
    None,
    /// Flips the sign of the parameter-shift gradient before it is checked.
    Gradient,
};

Fault parse_fault(const std::string &name);

struct ValidateOptions {
    /// Subsampled property suite.
    bool quick = false;
    Fault fault = Fault::None;
};

/// Runs every module's property checks on the configured model. Files for
/// the reproducibility check go to `<out>/validate/`.
ValidationReport cmd_validate(const RunConfig &cfg,
                              const ValidateOptions &opts = {});

} // namespace thermvqe::app
