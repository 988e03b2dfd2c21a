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

#include "app/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>

#include "app/io.hpp"
#include "thermvqe/errors.hpp"
#include "thermvqe/limits.hpp"

namespace thermvqe::app {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::string where(std::size_t line) {
    return line > 0 ? "line " + std::to_string(line) + ": " : "";
}

template <typename T>
T parse_integer(const std::string &key, const std::string &value,
                std::size_t line) {
    T out{};
    const char *end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError(key, line,
                          where(line) + "'" + key +
                              "' expects an integer, got '" + value + "'");
    }
    return out;
}

double parse_real(const std::string &key, const std::string &value,
                  std::size_t line) {
    double out = 0.0;
    const char *end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end || !std::isfinite(out)) {
        throw ConfigError(key, line,
                          where(line) + "'" + key +
                              "' expects a finite number, got '" + value + "'");
    }
    return out;
}

bool parse_bool(const std::string &key, const std::string &value,
                std::size_t line) {
    if (value == "true" || value == "1" || value == "yes") {
        return true;
    }
    if (value == "false" || value == "0" || value == "no") {
        return false;
    }
    throw ConfigError(key, line,
                      where(line) + "'" + key +
                          "' expects true or false, got '" + value + "'");
}

struct KeySpec {
    const char *name;
    std::function<void(RunConfig &, const std::string &key,
                       const std::string &value, std::size_t line)>
        set;
    std::function<std::string(const RunConfig &)> get;
};

const std::vector<KeySpec> &key_table() {
    using K = const std::string &;
    using V = const std::string &;
    static const std::vector<KeySpec> table = {
        {"model.q_s",
         [](RunConfig &c, K k, V v, std::size_t l) { c.q_s = parse_integer<int>(k, v, l); },
         [](const RunConfig &c) { return std::to_string(c.q_s); }},
        {"model.j",
         [](RunConfig &c, K k, V v, std::size_t l) { c.j = parse_real(k, v, l); },
         [](const RunConfig &c) { return format_double(c.j); }},
        {"model.h",
         [](RunConfig &c, K k, V v, std::size_t l) { c.h = parse_real(k, v, l); },
         [](const RunConfig &c) { return format_double(c.h); }},
        {"model.periodic",
         [](RunConfig &c, K k, V v, std::size_t l) { c.periodic = parse_bool(k, v, l); },
         [](const RunConfig &c) { return std::string(c.periodic ? "true" : "false"); }},
        {"mixing.family",
         [](RunConfig &c, K k, V v, std::size_t l) {
             try {
                 c.mixing_family = parse_mixing_family(v);
             } catch (const ArgumentError &) {
                 throw ConfigError(k, l,
                                   where(l) + "'" + k +
                                       "' must be uniform, geometric or "
                                       "boltzmann, got '" + v + "'");
             }
         },
         [](const RunConfig &c) { return to_string(c.mixing_family); }},
        {"mixing.param",
         [](RunConfig &c, K k, V v, std::size_t l) { c.mixing_param = parse_real(k, v, l); },
         [](const RunConfig &c) { return format_double(c.mixing_param); }},
        {"ansatz.layers",
         [](RunConfig &c, K k, V v, std::size_t l) { c.layers = parse_integer<int>(k, v, l); },
         [](const RunConfig &c) { return std::to_string(c.layers); }},
        {"q_a",
         [](RunConfig &c, K k, V v, std::size_t l) { c.q_a = parse_integer<int>(k, v, l); },
         [](const RunConfig &c) { return std::to_string(c.q_a); }},
        {"optimizer.method",
         [](RunConfig &c, K k, V v, std::size_t l) {
             try {
                 c.optimizer.method = parse_optimizer_method(v);
             } catch (const ArgumentError &) {
                 throw ConfigError(k, l,
                                   where(l) + "'" + k +
                                       "' must be adam or spsa, got '" + v +
                                       "'");
             }
         },
         [](const RunConfig &c) { return to_string(c.optimizer.method); }},
        {"optimizer.max_iterations",
         [](RunConfig &c, K k, V v, std::size_t l) {
             c.optimizer.max_iterations = parse_integer<std::size_t>(k, v, l);
         },
         [](const RunConfig &c) { return std::to_string(c.optimizer.max_iterations); }},
        {"optimizer.learning_rate",
         [](RunConfig &c, K k, V v, std::size_t l) { c.optimizer.learning_rate = parse_real(k, v, l); },
         [](const RunConfig &c) { return format_double(c.optimizer.learning_rate); }},
        {"optimizer.final_learning_rate",
         [](RunConfig &c, K k, V v, std::size_t l) {
             c.optimizer.final_learning_rate = parse_real(k, v, l);
         },
         [](const RunConfig &c) { return format_double(c.optimizer.final_learning_rate); }},
        {"optimizer.tolerance",
         [](RunConfig &c, K k, V v, std::size_t l) { c.optimizer.tolerance = parse_real(k, v, l); },
         [](const RunConfig &c) { return format_double(c.optimizer.tolerance); }},
        {"optimizer.plateau_window",
         [](RunConfig &c, K k, V v, std::size_t l) {
             c.optimizer.plateau_window = parse_integer<std::size_t>(k, v, l);
         },
         [](const RunConfig &c) { return std::to_string(c.optimizer.plateau_window); }},
        {"optimizer.restarts",
         [](RunConfig &c, K k, V v, std::size_t l) {
             c.optimizer.restarts = parse_integer<std::size_t>(k, v, l);
         },
         [](const RunConfig &c) { return std::to_string(c.optimizer.restarts); }},
        {"optimizer.init_range",
         [](RunConfig &c, K k, V v, std::size_t l) { c.optimizer.init_range = parse_real(k, v, l); },
         [](const RunConfig &c) { return format_double(c.optimizer.init_range); }},
        {"optimizer.spsa_perturbation",
         [](RunConfig &c, K k, V v, std::size_t l) {
             c.optimizer.spsa_perturbation = parse_real(k, v, l);
         },
         [](const RunConfig &c) { return format_double(c.optimizer.spsa_perturbation); }},
        {"mode",
         [](RunConfig &c, K k, V v, std::size_t l) {
             if (v != "exact" && v != "shots") {
                 throw ConfigError(k, l,
                                   where(l) + "'" + k +
                                       "' must be exact or shots, got '" + v +
                                       "'");
             }
             c.shot_mode = v == "shots";
         },
         [](const RunConfig &c) { return std::string(c.shot_mode ? "shots" : "exact"); }},
        {"shots",
         [](RunConfig &c, K k, V v, std::size_t l) { c.shots = parse_integer<std::uint64_t>(k, v, l); },
         [](const RunConfig &c) { return std::to_string(c.shots); }},
        {"jackknife_blocks",
         [](RunConfig &c, K k, V v, std::size_t l) {
             c.jackknife_blocks = parse_integer<std::size_t>(k, v, l);
         },
         [](const RunConfig &c) { return std::to_string(c.jackknife_blocks); }},
        {"betas.min",
         [](RunConfig &c, K k, V v, std::size_t l) { c.beta_min = parse_real(k, v, l); },
         [](const RunConfig &c) { return format_double(c.beta_min); }},
        {"betas.max",
         [](RunConfig &c, K k, V v, std::size_t l) { c.beta_max = parse_real(k, v, l); },
         [](const RunConfig &c) { return format_double(c.beta_max); }},
        {"betas.count",
         [](RunConfig &c, K k, V v, std::size_t l) { c.beta_count = parse_integer<std::size_t>(k, v, l); },
         [](const RunConfig &c) { return std::to_string(c.beta_count); }},
        {"betas.spacing",
         [](RunConfig &c, K k, V v, std::size_t l) {
             if (v != "linear" && v != "log") {
                 throw ConfigError(k, l,
                                   where(l) + "'" + k +
                                       "' must be linear or log, got '" + v +
                                       "'");
             }
             c.beta_spacing = v == "log" ? BetaSpacing::Log : BetaSpacing::Linear;
         },
         [](const RunConfig &c) {
             return std::string(c.beta_spacing == BetaSpacing::Log ? "log" : "linear");
         }},
        {"observable",
         [](RunConfig &c, K k, V v, std::size_t l) {
             if (v.empty()) {
                 throw ConfigError(k, l, where(l) + "'" + k + "' is empty");
             }
             c.observable = v;
         },
         [](const RunConfig &c) { return c.observable; }},
        {"oracle",
         [](RunConfig &c, K k, V v, std::size_t l) { c.oracle = parse_bool(k, v, l); },
         [](const RunConfig &c) { return std::string(c.oracle ? "true" : "false"); }},
        {"seed",
         [](RunConfig &c, K k, V v, std::size_t l) {
             c.seed = parse_integer<std::uint64_t>(k, v, l);
             c.optimizer.seed = c.seed;
         },
         [](const RunConfig &c) { return std::to_string(c.seed); }},
        {"out",
         [](RunConfig &c, K k, V v, std::size_t l) {
             if (v.empty()) {
                 throw ConfigError(k, l, where(l) + "'" + k + "' is empty");
             }
             c.out = v;
         },
         [](const RunConfig &c) { return c.out.string(); }},
    };
    return table;
}

const KeySpec &find_key(const std::string &key, std::size_t line) {
    const auto &table = key_table();
    for (const auto &spec : table) {
        if (key == spec.name) {
            return spec;
        }
    }
    const KeySpec *match = nullptr;
    if (key.find('.') == std::string::npos) {
        for (const auto &spec : table) {
            const std::string_view name = spec.name;
            const auto dot = name.rfind('.');
            if (dot != std::string_view::npos && name.substr(dot + 1) == key) {
                if (match != nullptr) {
                    throw ConfigError(key, line,
                                      where(line) + "ambiguous key '" + key +
                                          "'");
                }
                match = &spec;
            }
        }
    }
    if (match == nullptr) {
        throw ConfigError(key, line, where(line) + "unknown key '" + key + "'");
    }
    return *match;
}

} // namespace

ConfigError::ConfigError(std::string key, std::size_t line,
                         const std::string &what)
    : std::runtime_error(what), key_(std::move(key)), line_(line) {}

void set_value(RunConfig &cfg, const std::string &key, const std::string &value,
               std::size_t line) {
    find_key(key, line).set(cfg, key, value, line);
}

RunConfig parse_config(std::istream &in, RunConfig base) {
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        const std::string text = trim(raw);
        if (text.empty()) {
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(text, line,
                              where(line) + "expected 'key = value', got '" +
                                  text + "'");
        }
        const std::string key = trim(std::string_view(text).substr(0, eq));
        const std::string value = trim(std::string_view(text).substr(eq + 1));
        if (key.empty()) {
            throw ConfigError(key, line, where(line) + "missing key");
        }
        if (key.rfind("result.", 0) == 0) {
            continue;
        }
        set_value(base, key, value, line);
    }
    return base;
}

RunConfig load_config(const std::filesystem::path &path, RunConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config " + path.string());
    }
    return parse_config(in, std::move(base));
}

void validate(const RunConfig &cfg) {
    const auto fail = [](const char *key, const std::string &what) {
        throw ConfigError(key, 0, "'" + std::string(key) + "' " + what);
    };
    if (cfg.q_s < 1 || cfg.q_s > kMaxDenseQubits) {
        fail("model.q_s", "must lie in 1.." + std::to_string(kMaxDenseQubits));
    }
    if (cfg.q_a < 0 || cfg.q_a > cfg.q_s) {
        fail("q_a", "must lie in 0..model.q_s");
    }
    if (cfg.q_s + cfg.q_a > kMaxQubits) {
        fail("q_a", "makes the register wider than " +
                        std::to_string(kMaxQubits) + " qubits");
    }
    if (cfg.layers < 1) {
        fail("ansatz.layers", "must be at least 1");
    }
    if (cfg.optimizer.max_iterations < 1) {
        fail("optimizer.max_iterations", "must be at least 1");
    }
    if (!(cfg.optimizer.tolerance > 0.0)) {
        fail("optimizer.tolerance", "must be positive");
    }
    if (!(cfg.optimizer.learning_rate > 0.0)) {
        fail("optimizer.learning_rate", "must be positive");
    }
    if (!(cfg.optimizer.final_learning_rate > 0.0)) {
        fail("optimizer.final_learning_rate", "must be positive");
    }
    if (cfg.optimizer.restarts < 1) {
        fail("optimizer.restarts", "must be at least 1");
    }
    if (cfg.optimizer.plateau_window < 1) {
        fail("optimizer.plateau_window", "must be at least 1");
    }
    if (cfg.shot_mode && cfg.shots < 1) {
        fail("shots", "must be at least 1 in shot mode");
    }
    if (cfg.shot_mode && (cfg.jackknife_blocks < 2 ||
                          cfg.shots < cfg.jackknife_blocks)) {
        fail("jackknife_blocks", "must lie in 2..shots");
    }
    if (cfg.beta_count < 1) {
        fail("betas.count", "must be at least 1");
    }
    if (cfg.beta_min < 0.0) {
        fail("betas.min", "must be non-negative");
    }
    if (cfg.beta_count > 1 && !(cfg.beta_max > cfg.beta_min)) {
        fail("betas.max", "must exceed betas.min");
    }
    if (cfg.beta_spacing == BetaSpacing::Log && !(cfg.beta_min > 0.0)) {
        fail("betas.min", "must be positive for log spacing");
    }
    try {
        (void)mixing_family(cfg.mixing_family, std::size_t{1} << cfg.q_a,
                            cfg.mixing_param);
    } catch (const ArgumentError &e) {
        fail("mixing.param", e.what());
    }
}

std::vector<std::pair<std::string, std::string>>
to_entries(const RunConfig &cfg) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto &spec : key_table()) {
        out.emplace_back(spec.name, spec.get(cfg));
    }
    return out;
}

std::vector<double> beta_grid(const RunConfig &cfg) {
    std::vector<double> betas(cfg.beta_count);
    if (cfg.beta_count == 1) {
        betas[0] = cfg.beta_min;
        return betas;
    }
    const auto n = static_cast<double>(cfg.beta_count - 1);
    for (std::size_t i = 0; i < cfg.beta_count; ++i) {
        const double t = static_cast<double>(i) / n;
        betas[i] = cfg.beta_spacing == BetaSpacing::Linear
                       ? cfg.beta_min + t * (cfg.beta_max - cfg.beta_min)
                       : cfg.beta_min *
                             std::pow(cfg.beta_max / cfg.beta_min, t);
    }
    betas.back() = cfg.beta_max;
    return betas;
}

} // namespace thermvqe::app
