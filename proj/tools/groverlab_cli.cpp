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
//
// groverlab: command-line runner for the Grover kernel family experiments.
//
// Exit status: 0 success, 1 usage error, 2 numerical or invariant failure,
// 3 I/O error.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "groverlab/experiments.hpp"

namespace {

using namespace groverlab;

enum Exit { kOk = 0, kUsage = 1, kNumerical = 2, kIo = 3 };

// Flag names double as config-file keys.
const char *const kSharedFlags[] = {"n",     "beta-phase", "delta-phase", "m-max",
                                    "a",     "b",          "k0",          "alpha1",
                                    "grid",  "out",        "seed",        "x0",
                                    "threads", "tol"};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorKind::Io, "cannot read config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit_table(const ExperimentConfig &cfg, const CsvTable &table) {
    if (!cfg.out) {
        write_csv(std::cout, table);
        return;
    }
    std::ofstream out(*cfg.out, std::ios::binary | std::ios::trunc);
    if (!out) {
        fail(ErrorKind::Io, "cannot open '" + *cfg.out + "' for writing");
    }
    write_csv(out, table);
    out.flush();
    if (!out) {
        fail(ErrorKind::Io, "write to '" + *cfg.out + "' failed");
    }
}

// Summary lines go to stdout unless stdout carries the CSV.
std::ostream &report_stream(const ExperimentConfig &cfg) {
    return cfg.out ? std::cout : std::cerr;
}

int run(const ExperimentConfig &cfg) {
    switch (cfg.command) {
    case Command::Trace: {
        const TraceRun r = run_trace(cfg);
        emit_table(cfg, r.table);
        report_stream(cfg) << r.summary << '\n';
        return kOk;
    }
    case Command::Sweep:
        emit_table(cfg, run_sweep(cfg));
        return kOk;
    case Command::Spectrum:
        emit_table(cfg, run_spectrum(cfg));
        return kOk;
    case Command::Asymptotics:
        emit_table(cfg, run_asymptotics(cfg));
        return kOk;
    case Command::Manifold: {
        const auto pts = run_manifold_points(cfg);
        emit_table(cfg, manifold_table(pts));
        return kOk;
    }
    case Command::Verify: {
        cfg.validate();
        const VerifyReport report = run_verify(cfg);
        for (const auto &s : report.suites) {
            std::cout << (s.passed ? "PASS " : "FAIL ") << s.name
                      << " worst=" << format_double(s.worst)
                      << " tol=" << format_double(s.tol);
            if (!s.passed) {
                std::cout << " at " << s.detail;
            }
            std::cout << '\n';
        }
        if (!report.all_passed()) {
            for (const auto &s : report.suites) {
                if (!s.passed) {
                    std::cerr << "invariant failed: " << s.name << '\n';
                }
            }
            return kNumerical;
        }
        return kOk;
    }
    }
    return kUsage;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Usage:
        return kUsage;
    case ErrorKind::Io:
        return kIo;
    default:
        return kNumerical;
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Grover kernel family laboratory: traces, sweeps, spectra, manifolds"};
    app.require_subcommand(1, 1);

    std::map<std::string, std::string> flag_values;
    std::string config_path;
    const std::map<Command, std::string> descriptions{
        {Command::Trace, "success probability P(m) for one kernel"},
        {Command::Sweep, "peak success over a (beta, delta) torus grid"},
        {Command::Spectrum, "eigen-data, phase gaps and step-count predictions"},
        {Command::Manifold, "axis-angle point cloud of the kernel manifold"},
        {Command::Asymptotics, "large-N phase gap and step-count predictions"},
        {Command::Verify, "run the invariant suites"},
    };
    std::map<CLI::App *, Command> subcommands;
    std::map<std::string, CLI::Option *> options;
    for (const auto &[cmd, desc] : descriptions) {
        CLI::App *sub = app.add_subcommand(std::string(to_string(cmd)), desc);
        subcommands[sub] = cmd;
        for (const char *flag : kSharedFlags) {
            options[std::string(to_string(cmd)) + "/" + flag] =
                sub->add_option(std::string("--") + flag, flag_values[flag]);
        }
        sub->add_option("--config", config_path, "flat key = value file; flags override");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        CLI::App *chosen = app.get_subcommands().front();
        ExperimentConfig cfg;
        if (!config_path.empty()) {
            cfg = parse_config_text(read_file(config_path));
        }
        cfg.command = subcommands.at(chosen);
        for (const char *flag : kSharedFlags) {
            if (options.at(std::string(chosen->get_name()) + "/" + flag)->count() > 0) {
                apply_config_entry(cfg, flag, flag_values[flag]);
            }
        }
        return run(cfg);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumerical;
    }
}
