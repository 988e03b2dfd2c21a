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

#include "app/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "app/config.hpp"
#include "thermvqe/errors.hpp"

namespace thermvqe::app {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_optional(const std::optional<double> &x) {
    return x ? format_double(*x) : std::string{};
}

void write_file(const std::filesystem::path &path, const std::string &content) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw IoError("cannot create directory " +
                          path.parent_path().string() + ": " + ec.message());
        }
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_theta(const std::filesystem::path &path,
                 const std::vector<double> &theta) {
    std::string text;
    for (double x : theta) {
        text += format_double(x);
        text += '\n';
    }
    write_file(path, text);
}

std::vector<double> read_theta(const std::filesystem::path &path) {
    std::istringstream in(read_file(path));
    std::vector<double> theta;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::size_t used = 0;
        double x = 0.0;
        try {
            x = std::stod(line, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 ||
            line.find_first_not_of(" \t\r", used) != std::string::npos) {
            throw DataError(path.string() + ":" + std::to_string(lineno) +
                            ": not a number");
        }
        theta.push_back(x);
    }
    return theta;
}

} // namespace thermvqe::app
