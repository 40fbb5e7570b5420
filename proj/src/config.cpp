// Copyright 2026 The groverlab Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "groverlab/experiments.hpp"

namespace groverlab {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
    fail(ErrorKind::Usage, "invalid value '" + std::string(value) + "' for " +
                               std::string(key));
}

template <typename T> T parse_number(std::string_view key, std::string_view value) {
    value = trim(value);
    T out{};
    const auto *end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        bad_value(key, value);
    }
    if constexpr (std::is_floating_point_v<T>) {
        if (!std::isfinite(out)) {
            bad_value(key, value);
        }
    }
    return out;
}

std::pair<std::size_t, std::size_t> parse_grid(std::string_view key,
                                               std::string_view value) {
    value = trim(value);
    const auto x = value.find('x');
    if (x == std::string_view::npos) {
        const auto p = parse_number<std::size_t>(key, value);
        return {p, 1};
    }
    return {parse_number<std::size_t>(key, value.substr(0, x)),
            parse_number<std::size_t>(key, value.substr(x + 1))};
}

} // namespace

std::string_view to_string(Command c) noexcept {
    switch (c) {
    case Command::Trace:
        return "trace";
    case Command::Sweep:
        return "sweep";
    case Command::Spectrum:
        return "spectrum";
    case Command::Manifold:
        return "manifold";
    case Command::Asymptotics:
        return "asymptotics";
    case Command::Verify:
        return "verify";
    }
    return "trace";
}

Command parse_command(std::string_view s) {
    for (Command c : {Command::Trace, Command::Sweep, Command::Spectrum,
                      Command::Manifold, Command::Asymptotics, Command::Verify}) {
        if (to_string(c) == s) {
            return c;
        }
    }
    fail(ErrorKind::Usage, "unknown command '" + std::string(s) + "'");
}

K0Spec K0Spec::parse(std::string_view s) {
    s = trim(s);
    K0Spec spec;
    if (s == "uniform") {
        return spec;
    }
    if (s.starts_with("momentum:")) {
        spec.kind = Kind::Momentum;
        spec.y0 = parse_number<std::size_t>("k0", s.substr(9));
        return spec;
    }
    if (s.starts_with("file:") && s.size() > 5) {
        spec.kind = Kind::File;
        spec.path = std::string(s.substr(5));
        return spec;
    }
    bad_value("k0", s);
}

std::string K0Spec::to_string() const {
    switch (kind) {
    case Kind::Uniform:
        return "uniform";
    case Kind::Momentum:
        return "momentum:" + std::to_string(y0);
    case Kind::File:
        return "file:" + path;
    }
    return "uniform";
}

std::size_t ExperimentConfig::effective_n() const {
    if (n) {
        return *n;
    }
    return command == Command::Manifold ? 10 : 1000;
}

std::pair<std::size_t, std::size_t> ExperimentConfig::effective_grid() const {
    if (grid) {
        return *grid;
    }
    switch (command) {
    case Command::Manifold:
        return {50, 50};
    case Command::Sweep:
        return {16, 16};
    default:
        return {1, 1};
    }
}

unsigned ExperimentConfig::effective_threads() const {
    if (threads > 0) {
        return threads;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

void ExperimentConfig::validate() const {
    const std::size_t N = effective_n();
    if (N < 2 || N > 1'000'000'000) {
        fail(ErrorKind::Usage, "n must lie in [2, 1e9]");
    }
    if (m_max < 1 || m_max > 100'000'000) {
        fail(ErrorKind::Usage, "m-max must lie in [1, 1e8]");
    }
    if (alpha1 && !(*alpha1 > 0.0 && *alpha1 < 1.0)) {
        fail(ErrorKind::Usage, "alpha1 must lie in (0, 1)");
    }
    if (alpha1 && k0.kind != K0Spec::Kind::Uniform) {
        fail(ErrorKind::Usage, "alpha1 and a non-uniform k0 are exclusive");
    }
    if ((a || b) && (alpha1 || k0.kind != K0Spec::Kind::Uniform)) {
        fail(ErrorKind::Usage,
             "a/b set the reduced initial state; not combinable with alpha1 or k0");
    }
    if (k0.kind == K0Spec::Kind::Momentum && k0.y0 >= N) {
        fail(ErrorKind::Usage, "momentum y0 must be below n");
    }
    if (x0 >= N) {
        fail(ErrorKind::Usage, "x0 must be below n");
    }
    if (tol && !(*tol >= 0.0)) {
        fail(ErrorKind::Usage, "tol must be non-negative");
    }
    if (threads > 1024) {
        fail(ErrorKind::Usage, "threads must be at most 1024");
    }
    const auto [p, q] = effective_grid();
    if (p < 1 || q < 1) {
        fail(ErrorKind::Usage, "grid sizes must be positive");
    }
    if (command == Command::Sweep && (p < 2 || q < 2)) {
        fail(ErrorKind::Usage, "sweep grid needs at least 2x2 points");
    }
}

void apply_config_entry(ExperimentConfig &cfg, std::string_view key,
                        std::string_view value) {
    key = trim(key);
    value = trim(value);
    if (key == "command") {
        cfg.command = parse_command(value);
    } else if (key == "n") {
        cfg.n = parse_number<std::size_t>(key, value);
    } else if (key == "beta-phase") {
        cfg.beta_phase = parse_number<double>(key, value);
    } else if (key == "delta-phase") {
        cfg.delta_phase = parse_number<double>(key, value);
    } else if (key == "m-max") {
        cfg.m_max = parse_number<std::size_t>(key, value);
    } else if (key == "a") {
        cfg.a = parse_number<double>(key, value);
    } else if (key == "b") {
        cfg.b = parse_number<double>(key, value);
    } else if (key == "k0") {
        cfg.k0 = K0Spec::parse(value);
    } else if (key == "alpha1") {
        cfg.alpha1 = parse_number<double>(key, value);
    } else if (key == "grid") {
        cfg.grid = parse_grid(key, value);
    } else if (key == "out") {
        if (value.empty()) {
            bad_value(key, value);
        }
        cfg.out = std::string(value);
    } else if (key == "seed") {
        cfg.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "x0") {
        cfg.x0 = parse_number<std::size_t>(key, value);
    } else if (key == "threads") {
        cfg.threads = parse_number<unsigned>(key, value);
    } else if (key == "tol") {
        cfg.tol = parse_number<double>(key, value);
    } else {
        fail(ErrorKind::Usage, "unknown config key '" + std::string(key) + "'");
    }
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string to_config_text(const ExperimentConfig &cfg) {
    std::ostringstream os;
    auto line = [&os](std::string_view k, const std::string &v) {
        os << k << " = " << v << '\n';
    };
    line("command", std::string(to_string(cfg.command)));
    if (cfg.n) {
        line("n", std::to_string(*cfg.n));
    }
    if (cfg.beta_phase) {
        line("beta-phase", format_double(*cfg.beta_phase));
    }
    line("delta-phase", format_double(cfg.delta_phase));
    line("m-max", std::to_string(cfg.m_max));
    if (cfg.a) {
        line("a", format_double(*cfg.a));
    }
    if (cfg.b) {
        line("b", format_double(*cfg.b));
    }
    line("k0", cfg.k0.to_string());
    if (cfg.alpha1) {
        line("alpha1", format_double(*cfg.alpha1));
    }
    if (cfg.grid) {
        line("grid", std::to_string(cfg.grid->first) + "x" +
                         std::to_string(cfg.grid->second));
    }
    if (cfg.out) {
        line("out", *cfg.out);
    }
    line("seed", std::to_string(cfg.seed));
    line("x0", std::to_string(cfg.x0));
    line("threads", std::to_string(cfg.threads));
    if (cfg.tol) {
        line("tol", format_double(*cfg.tol));
    }
    return os.str();
}

ExperimentConfig parse_config_text(std::string_view text, ExperimentConfig base) {
    std::size_t lineno = 0;
    while (!text.empty()) {
        ++lineno;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            fail(ErrorKind::Usage,
                 "config line " + std::to_string(lineno) + ": expected key = value");
        }
        apply_config_entry(base, line.substr(0, eq), line.substr(eq + 1));
    }
    return base;
}

void write_csv(std::ostream &os, const CsvTable &table) {
    auto emit = [&os](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) {
                os << ',';
            }
            os << cells[i];
        }
        os << '\n';
    };
    emit(table.header);
    for (const auto &row : table.rows) {
        emit(row);
    }
}

CVector load_amplitudes(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorKind::Io, "cannot open amplitude file '" + path + "'");
    }
    std::vector<Complex> amps;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        for (char &ch : line) {
            if (ch == ',' || ch == '\t') {
                ch = ' ';
            }
        }
        std::istringstream fields(line);
        std::vector<double> parts;
        std::string tok;
        while (fields >> tok) {
            parts.push_back(parse_number<double>("amplitude", tok));
        }
        if (parts.empty()) {
            continue;
        }
        if (parts.size() > 2) {
            fail(ErrorKind::Usage, "amplitude line '" + line + "' has >2 fields");
        }
        amps.emplace_back(parts[0], parts.size() == 2 ? parts[1] : 0.0);
    }
    CVector v(std::move(amps));
    const double n = v.norm();
    if (v.dim() == 0 || std::abs(n - 1.0) > kPhaseAcceptTol) {
        fail(ErrorKind::Normalization,
             "amplitudes in '" + path + "' are not normalized");
    }
    return Complex{1.0 / n, 0.0} * v;
}

std::vector<double> torus_axis(std::size_t p) {
    std::vector<double> out(p);
    const double pd = static_cast<double>(p);
    for (std::size_t i = 0; i < p; ++i) {
        // pi (2(i+1) - p)/p: exactly 0 at the middle, exactly pi at the end.
        out[i] = std::numbers::pi * (2.0 * static_cast<double>(i + 1) - pd) / pd;
    }
    return out;
}

} // namespace groverlab
