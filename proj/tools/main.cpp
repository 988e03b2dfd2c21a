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

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "app/commands.hpp"
#include "app/config.hpp"
#include "app/validate.hpp"
#include "thermvqe/errors.hpp"

namespace {

enum ExitCode : int {
    kSuccess = 0,
    kFailure = 1,
    kConfigError = 2,
    kIoError = 3,
};

/// Applies `--key=value` and `--key value` overrides left over by CLI11.
void apply_overrides(thermvqe::app::RunConfig &cfg,
                     const std::vector<std::string> &args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string &arg = args[i];
        if (arg.rfind("--", 0) != 0) {
            throw thermvqe::app::ConfigError(arg, 0,
                                             "unexpected argument '" + arg + "'");
        }
        std::string key = arg.substr(2);
        std::string value;
        if (const auto eq = key.find('='); eq != std::string::npos) {
            value = key.substr(eq + 1);
            key.erase(eq);
        } else if (i + 1 < args.size() && args[i + 1].rfind("--", 0) != 0) {
            value = args[++i];
        } else {
            throw thermvqe::app::ConfigError(key, 0,
                                             "'" + key + "' needs a value");
        }
        thermvqe::app::set_value(cfg, key, value);
    }
}

} // namespace

int main(int argc, char **argv) {
    using namespace thermvqe::app;

    CLI::App app{"Thermal averages from a variationally prepared partially "
                 "mixed state"};
    app.require_subcommand(1);
    app.allow_extras();

    std::string config_path;
    std::string out;
    std::optional<std::uint64_t> seed;
    bool trace = false;
    bool quick = false;
    std::string theta;
    std::string fault = "none";

    app.add_option("--config", config_path, "key = value configuration file");
    app.add_option("--out", out, "output directory");
    app.add_option("--seed", seed, "base seed for every random stream");
    app.add_flag("--trace", trace, "write trace.csv during solve");
    app.add_flag("--quick", quick, "subsampled validation suite");

    auto *solve = app.add_subcommand("solve", "run the variational stage");
    auto *sweep = app.add_subcommand("sweep", "estimate spectrum and thermal curve");
    auto *oracle = app.add_subcommand("oracle", "exact spectrum and thermal curve");
    auto *check = app.add_subcommand("validate", "run the property suite");
    sweep->add_option("--theta", theta, "angles file (default <out>/theta_star.txt)");
    check->add_option("--break", fault, "inject a fault: none or gradient");
    for (auto *sub : {solve, sweep, oracle, check}) {
        sub->allow_extras();
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kSuccess : kConfigError;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) {
            cfg = load_config(config_path);
        }
        std::vector<std::string> extras = app.remaining();
        for (auto *sub : app.get_subcommands()) {
            const auto more = sub->remaining();
            extras.insert(extras.end(), more.begin(), more.end());
        }
        apply_overrides(cfg, extras);
        if (!out.empty()) {
            cfg.out = out;
        }
        if (seed) {
            set_value(cfg, "seed", std::to_string(*seed));
        }

        if (solve->parsed()) {
            const auto s = cmd_solve(cfg, SolveOptions{.trace = trace});
            std::cout << render_summary(s);
        } else if (sweep->parsed()) {
            SweepOptions opts;
            if (!theta.empty()) {
                opts.theta = theta;
            }
            std::cout << render_summary(cmd_sweep(cfg, opts));
        } else if (oracle->parsed()) {
            std::cout << render_summary(cmd_oracle(cfg));
        } else {
            ValidateOptions opts{.quick = quick, .fault = Fault::None};
            try {
                opts.fault = parse_fault(fault);
            } catch (const thermvqe::ArgumentError &e) {
                throw ConfigError("break", 0, e.what());
            }
            const auto report = cmd_validate(cfg, opts);
            std::cout << report.render();
            return report.all_passed() ? kSuccess : kFailure;
        }
        return kSuccess;
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const IoError &e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
}
