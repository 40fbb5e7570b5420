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
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "groverlab/experiments.hpp"
#include "groverlab/parallel.hpp"

namespace groverlab {

namespace {

using std::numbers::pi;

template <typename T> std::string opt_cell(const std::optional<T> &v) {
    if (!v) {
        return "";
    }
    if constexpr (std::is_floating_point_v<T>) {
        return format_double(*v);
    } else {
        return std::to_string(*v);
    }
}

bool on_diagonal(UnitPhase beta, UnitPhase delta) {
    return std::abs(beta.value() - delta.value()) <= kExactTol;
}

std::string trace_summary(const EvolutionTrace &t) {
    std::ostringstream os;
    os << "peak_prob=" << format_double(t.peak_prob) << " peak_step=" << t.peak_step
       << " first_peak_step=" << opt_cell(t.first_peak_step)
       << " maxima_count=" << t.maxima_count
       << " threshold_step=" << opt_cell(t.threshold_step);
    return os.str();
}

} // namespace

TraceRun run_trace(const ExperimentConfig &cfg) {
    cfg.validate();
    const std::size_t N = cfg.effective_n();
    const auto beta = UnitPhase::from_angle(cfg.effective_beta_phase());
    const auto delta = UnitPhase::from_angle(cfg.delta_phase);

    TraceRun run;
    if (cfg.k0.kind != K0Spec::Kind::Uniform) {
        // General |k0>: simulate the full space starting from |k0> itself.
        FullSpaceConfig full;
        full.N = N;
        full.x0 = cfg.x0;
        full.phases = GroverPhases::family(beta, delta);
        full.k0 = cfg.k0.kind == K0Spec::Kind::Momentum ? momentum_state(cfg.k0.y0, N)
                                                        : load_amplitudes(cfg.k0.path);
        if (full.k0.dim() != N) {
            fail(ErrorKind::Usage, "amplitude file has " +
                                       std::to_string(full.k0.dim()) +
                                       " entries, n is " + std::to_string(N));
        }
        run.trace = full_space_trace(full, full.k0, cfg.m_max);
    } else if (cfg.alpha1) {
        const double a1 = *cfg.alpha1;
        const auto k = extended_reduced_kernel(beta, delta, a1);
        run.trace = probability_trace(k.matrix, CVector{a1, std::sqrt(1.0 - a1 * a1)},
                                      cfg.m_max);
    } else {
        InitialState init = uniform_initial(N);
        if (cfg.a && cfg.b) {
            init = InitialState(*cfg.a, *cfg.b, N);
        } else if (cfg.a) {
            init = InitialState::from_marked_coefficient(*cfg.a, N);
        } else if (cfg.b) {
            const double n = static_cast<double>(N);
            const double rest = n - std::norm(*cfg.b) * (n - 1.0);
            if (rest < 0.0) {
                fail(ErrorKind::Usage, "|b| too large for a normalized state");
            }
            init = InitialState(std::sqrt(rest), *cfg.b, N);
        }
        run.trace = probability_trace(reduced_kernel(beta, delta, N), init, cfg.m_max);
    }

    run.table.header = {"m", "prob"};
    run.table.rows.reserve(run.trace.probs.size());
    for (std::size_t m = 0; m < run.trace.probs.size(); ++m) {
        run.table.rows.push_back({std::to_string(m), format_double(run.trace.probs[m])});
    }
    run.summary = trace_summary(run.trace);
    return run;
}

std::vector<SweepRow> sweep_grid(std::span<const double> beta_phases,
                                 std::span<const double> delta_phases,
                                 std::size_t N, std::size_t m_max,
                                 unsigned threads) {
    const std::size_t cols = delta_phases.size();
    const std::size_t total = beta_phases.size() * cols;
    if (cols != 0 && total / cols != beta_phases.size()) {
        fail(ErrorKind::Resource, "sweep grid size overflows");
    }
    if (total > kMaxGridPoints) {
        fail(ErrorKind::Resource, "sweep grid of " + std::to_string(total) +
                                      " points exceeds 1e6");
    }
    const InitialState init = uniform_initial(N);
    return parallel_map<SweepRow>(total, threads, [&](std::size_t idx) {
        SweepRow row;
        row.beta_phase = beta_phases[idx / cols];
        row.delta_phase = delta_phases[idx % cols];
        const auto beta = UnitPhase::from_angle(row.beta_phase);
        const auto delta = UnitPhase::from_angle(row.delta_phase);
        row.g_abs = std::abs(beta.value() - delta.value());
        const EvolutionTrace t =
            probability_trace(reduced_kernel(beta, delta, N), init, m_max);
        row.peak_prob = t.peak_prob;
        row.peak_step = t.peak_step;
        if (on_diagonal(beta, delta) && std::abs(delta.angle()) < pi) {
            row.pred_M = optimal_steps_asymptotic(delta.angle(), N);
        }
        return row;
    });
}

CsvTable sweep_table(std::span<const SweepRow> rows) {
    CsvTable t;
    t.header = {"beta_phase", "delta_phase", "g_abs", "peak_prob", "peak_step", "pred_M"};
    for (const auto &r : rows) {
        t.rows.push_back({format_double(r.beta_phase), format_double(r.delta_phase),
                          format_double(r.g_abs), format_double(r.peak_prob),
                          std::to_string(r.peak_step), opt_cell(r.pred_M)});
    }
    return t;
}

CsvTable run_sweep(const ExperimentConfig &cfg) {
    cfg.validate();
    const auto [p, q] = cfg.effective_grid();
    if (p > kMaxGridPoints || q > kMaxGridPoints || p * q > kMaxGridPoints) {
        fail(ErrorKind::Resource, "sweep grid exceeds 1e6 points");
    }
    const auto betas = torus_axis(p);
    const auto deltas = torus_axis(q);
    const auto rows = sweep_grid(betas, deltas, cfg.effective_n(), cfg.m_max,
                                 cfg.effective_threads());
    return sweep_table(rows);
}

SpectrumRow spectrum_row(double beta_phase, double delta_phase, std::size_t N,
                         std::optional<double> alpha1) {
    SpectrumRow row;
    row.N = N;
    row.beta_phase = beta_phase;
    row.delta_phase = delta_phase;
    row.alpha1 = alpha1;
    const auto beta = UnitPhase::from_angle(beta_phase);
    const auto delta = UnitPhase::from_angle(delta_phase);
    const double phi = delta.angle();

    row.spectral = alpha1 ? eigensystem(extended_reduced_kernel(beta, delta, *alpha1))
                          : eigensystem(reduced_kernel(beta, delta, N));
    if (!row.spectral.degenerate) {
        row.M_exact = optimal_steps_exact(row.spectral);
    }
    if (on_diagonal(beta, delta) && std::abs(phi) < pi) {
        row.M_asymptotic = optimal_steps_asymptotic(phi, N, alpha1);
        row.delta_omega_asymptotic = delta_omega_asymptotic(delta, N);
        if (!alpha1 && std::abs(phi) <= kStabilityRegime) {
            row.stability = stability_expansion(phi, N);
        }
        row.M_extended = optimal_steps_asymptotic(
            phi, N, alpha1.value_or(1.0 / std::sqrt(static_cast<double>(N))));
    }
    return row;
}

namespace {

std::vector<std::pair<double, double>> spectrum_points(const ExperimentConfig &cfg) {
    if (!cfg.grid) {
        return {{cfg.effective_beta_phase(), cfg.delta_phase}};
    }
    std::vector<std::pair<double, double>> pts;
    for (double phi : torus_axis(cfg.grid->first)) {
        pts.emplace_back(phi, phi);
    }
    return pts;
}

} // namespace

CsvTable run_spectrum(const ExperimentConfig &cfg) {
    cfg.validate();
    CsvTable t;
    t.header = {"N",        "beta_phase", "delta_phase", "detK_re",  "detK_im",
                "trK_re",   "trK_im",     "omega1",      "omega2",   "delta_omega",
                "A_re",     "A_im",       "M_exact",     "M_asymptotic",
                "stability", "degenerate"};
    for (const auto &[bp, dp] : spectrum_points(cfg)) {
        const SpectrumRow r = spectrum_row(bp, dp, cfg.effective_n(), cfg.alpha1);
        const SpectralData &s = r.spectral;
        t.rows.push_back({std::to_string(r.N), format_double(r.beta_phase),
                          format_double(r.delta_phase), format_double(s.detK.real()),
                          format_double(s.detK.imag()), format_double(s.trK.real()),
                          format_double(s.trK.imag()), format_double(s.omega1),
                          format_double(s.omega2), format_double(s.delta_omega),
                          s.A ? format_double(s.A->real()) : "",
                          s.A ? format_double(s.A->imag()) : "", opt_cell(r.M_exact),
                          opt_cell(r.M_asymptotic), opt_cell(r.stability),
                          s.degenerate ? "1" : "0"});
    }
    return t;
}

CsvTable run_asymptotics(const ExperimentConfig &cfg) {
    cfg.validate();
    CsvTable t;
    t.header = {"N",         "phi",          "delta_omega_exact",
                "delta_omega_asymptotic", "rel_err", "M_exact",
                "M_asymptotic", "M_extended", "stability"};
    for (const auto &[bp, dp] : spectrum_points(cfg)) {
        // Exact values come from the standard kernel; alpha1 only feeds the
        // extended prediction.
        SpectrumRow r = spectrum_row(bp, dp, cfg.effective_n());
        if (cfg.alpha1 && r.M_asymptotic) {
            r.M_extended = optimal_steps_asymptotic(UnitPhase::from_angle(dp).angle(),
                                                    r.N, cfg.alpha1);
        }
        std::optional<double> rel;
        if (r.delta_omega_asymptotic && r.spectral.delta_omega > 0.0) {
            rel = std::abs(*r.delta_omega_asymptotic - r.spectral.delta_omega) /
                  r.spectral.delta_omega;
        }
        t.rows.push_back({std::to_string(r.N), format_double(r.delta_phase),
                          format_double(r.spectral.delta_omega),
                          opt_cell(r.delta_omega_asymptotic), opt_cell(rel),
                          opt_cell(r.M_exact), opt_cell(r.M_asymptotic),
                          opt_cell(r.M_extended), opt_cell(r.stability)});
    }
    return t;
}

std::vector<ManifoldPoint> run_manifold_points(const ExperimentConfig &cfg) {
    cfg.validate();
    const std::size_t N = cfg.effective_n();
    const auto [p, q] = cfg.effective_grid();
    if (p * q > kMaxGridPoints) {
        fail(ErrorKind::Resource, "manifold grid exceeds 1e6 points");
    }
    const FactorAxes axes = grover_factor_axes(N);
    auto axis = [](double anchor, std::size_t count) {
        std::vector<double> out(count);
        for (std::size_t i = 0; i < count; ++i) {
            const double a = anchor + 2.0 * pi * static_cast<double>(i) /
                                          static_cast<double>(count);
            out[i] = a >= 2.0 * pi ? a - 2.0 * pi : a;
        }
        return out;
    };
    const auto g1 = axis(axes.angle1, p);
    const auto g2 = axis(axes.angle2, q);
    return kernel_manifold_points(g1, g2, N, cfg.effective_threads());
}

CsvTable manifold_table(std::span<const ManifoldPoint> points) {
    CsvTable t;
    t.header = {"angle1", "angle2", "kernel_angle", "axis_x", "axis_y", "axis_z",
                "global_phase", "axis_defined", "grover_point", "equal_angles"};
    for (const auto &pt : points) {
        const auto &k = pt.kernel;
        auto axis_cell = [&](int i) {
            return k.axis_defined ? format_double(k.axis[static_cast<std::size_t>(i)])
                                  : std::string();
        };
        t.rows.push_back({format_double(pt.angle1), format_double(pt.angle2),
                          format_double(k.angle), axis_cell(0), axis_cell(1),
                          axis_cell(2), format_double(k.global_phase),
                          k.axis_defined ? "1" : "0", pt.grover_point ? "1" : "0",
                          pt.equal_angles ? "1" : "0"});
    }
    return t;
}

} // namespace groverlab
