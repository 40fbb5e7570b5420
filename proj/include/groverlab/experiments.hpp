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
/**
 * @file
 * Experiment configuration and the data behind each CLI command. Commands
 * return tables; the CLI only parses flags and writes files.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "groverlab/evolution.hpp"
#include "groverlab/spectral.hpp"

namespace groverlab {

enum class Command { Trace, Sweep, Spectrum, Manifold, Asymptotics, Verify };

[[nodiscard]] std::string_view to_string(Command c) noexcept;
[[nodiscard]] Command parse_command(std::string_view s);

struct K0Spec {
    enum class Kind { Uniform, Momentum, File };
    Kind kind = Kind::Uniform;
    std::size_t y0 = 0;
    std::string path;

    /// "uniform", "momentum:<y0>" or "file:<path>".
    static K0Spec parse(std::string_view s);
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const K0Spec &, const K0Spec &) = default;
};

struct ExperimentConfig {
    Command command = Command::Trace;
    /// Absent means the command default (10 for manifold, 1000 otherwise).
    std::optional<std::size_t> n;
    /// Absent means equal to delta_phase.
    std::optional<double> beta_phase;
    double delta_phase = 0.0;
    std::size_t m_max = 1000;
    std::optional<double> a;
    std::optional<double> b;
    K0Spec k0;
    std::optional<double> alpha1;
    std::optional<std::pair<std::size_t, std::size_t>> grid;
    std::optional<std::string> out;
    std::uint64_t seed = 12345;
    std::size_t x0 = 0;
    /// Worker threads for grid commands; 0 picks the hardware concurrency.
    unsigned threads = 0;
    /// Overrides every verify tolerance (0 injects a failure).
    std::optional<double> tol;

    [[nodiscard]] std::size_t effective_n() const;
    [[nodiscard]] double effective_beta_phase() const {
        return beta_phase.value_or(delta_phase);
    }
    [[nodiscard]] std::pair<std::size_t, std::size_t> effective_grid() const;
    [[nodiscard]] unsigned effective_threads() const;

    /// Range checks; throws Error(Usage).
    void validate() const;

    friend bool operator==(const ExperimentConfig &,
                           const ExperimentConfig &) = default;
};

inline constexpr std::size_t kMaxGridPoints = 1'000'000;

/// Sets one field from its flag name (without leading dashes) and textual
/// value. Throws Error(Usage) on unknown keys or malformed values.
void apply_config_entry(ExperimentConfig &cfg, std::string_view key,
                        std::string_view value);

/// Flat `key = value` text, one line per set field, keys equal to flag names.
[[nodiscard]] std::string to_config_text(const ExperimentConfig &cfg);
/// Reads `key = value` lines ('#' starts a comment) on top of `base`.
[[nodiscard]] ExperimentConfig parse_config_text(std::string_view text,
                                                 ExperimentConfig base = {});

/// 17 significant digits; round-trips every double.
[[nodiscard]] std::string format_double(double x);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream &os, const CsvTable &table);

/// Amplitude file: one amplitude per line as `re` or `re,im` (comma or
/// blank separated); '#' starts a comment. Renormalized when within 1e-9 of
/// unit norm.
[[nodiscard]] CVector load_amplitudes(const std::string &path);

/// Phases -pi + 2 pi (i+1)/p for i = 0..p-1; ends at pi, contains 0 for
/// even p.
[[nodiscard]] std::vector<double> torus_axis(std::size_t p);

struct TraceRun {
    EvolutionTrace trace;
    CsvTable table;
    std::string summary;
};

[[nodiscard]] TraceRun run_trace(const ExperimentConfig &cfg);

struct SweepRow {
    double beta_phase = 0.0;
    double delta_phase = 0.0;
    double g_abs = 0.0;
    double peak_prob = 0.0;
    std::size_t peak_step = 0;
    std::optional<long> pred_M;
};

/// One uniform-start trace per (beta, delta) pair, beta outer.
[[nodiscard]] std::vector<SweepRow> sweep_grid(std::span<const double> beta_phases,
                                               std::span<const double> delta_phases,
                                               std::size_t N, std::size_t m_max,
                                               unsigned threads = 1);
[[nodiscard]] CsvTable sweep_table(std::span<const SweepRow> rows);
[[nodiscard]] CsvTable run_sweep(const ExperimentConfig &cfg);

struct SpectrumRow {
    std::size_t N = 0;
    double beta_phase = 0.0;
    double delta_phase = 0.0;
    std::optional<double> alpha1;
    SpectralData spectral;
    std::optional<long> M_exact;
    std::optional<long> M_asymptotic;
    std::optional<double> stability;
    std::optional<double> delta_omega_asymptotic;
    std::optional<long> M_extended;
};

[[nodiscard]] SpectrumRow spectrum_row(double beta_phase, double delta_phase,
                                       std::size_t N,
                                       std::optional<double> alpha1 = {});
[[nodiscard]] CsvTable run_spectrum(const ExperimentConfig &cfg);
[[nodiscard]] CsvTable run_asymptotics(const ExperimentConfig &cfg);

/// Manifold grid anchored at the original kernel's factor angles, so the
/// first row is always the original kernel.
[[nodiscard]] std::vector<ManifoldPoint> run_manifold_points(const ExperimentConfig &cfg);
[[nodiscard]] CsvTable manifold_table(std::span<const ManifoldPoint> points);

struct SuiteResult {
    std::string name;
    bool passed = false;
    double worst = 0.0;
    double tol = 0.0;
    std::string detail;
};

struct VerifyReport {
    std::vector<SuiteResult> suites;
    [[nodiscard]] bool all_passed() const;
};

[[nodiscard]] VerifyReport run_verify(const ExperimentConfig &cfg);

} // namespace groverlab
