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
#include <optional>
#include <string>
#include <vector>

namespace thermvqe::app {

/// Shortest round-trip-safe form: 17 significant digits.
std::string format_double(double x);
std::string format_optional(const std::optional<double> &x);

/// Truncates and writes, creating parent directories. Throws IoError.
void write_file(const std::filesystem::path &path, const std::string &content);
std::string read_file(const std::filesystem::path &path);

void write_theta(const std::filesystem::path &path,
                 const std::vector<double> &theta);
/// One angle per line; blank lines are skipped. Throws IoError on
/// unreadable files and DataError on malformed lines.
std::vector<double> read_theta(const std::filesystem::path &path);

} // namespace thermvqe::app
