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
// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "groverlab/experiments.hpp"
#include "oracles.hpp"

using namespace groverlab;
using std::numbers::pi;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

UnitPhase ph(double a) { return UnitPhase::from_angle(a); }

EvolutionTrace trace(double beta_phase, double delta_phase, std::size_t n,
                     std::size_t m_max) {
    return probability_trace(reduced_kernel(ph(beta_phase), ph(delta_phase), n),
                             uniform_initial(n), m_max);
}

const SuiteResult &suite(const VerifyReport &r, const std::string &name) {
    return *std::ranges::find(r.suites, name, &SuiteResult::name);
}

std::string fmt(const char *f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Outcome maxima_counts() {
    const auto t0 = Clock::now();
    const auto half = trace(pi / 2, pi / 2, 1000, 1000);
    const auto grover = trace(0.0, 0.0, 1000, 1000);
    const double dt = seconds_since(t0);
    return {half.maxima_count == 14 && grover.maxima_count == 20 && dt < 1.0,
            fmt("maxima(pi/2)=%zu maxima(0)=%zu time=%.3fs", half.maxima_count,
                grover.maxima_count, dt)};
}

Outcome inefficiency_bounds() {
    const auto t0 = Clock::now();
    const auto a = trace(pi / 2, pi / 2 + 1.25, 1000, 1000);
    const auto b = trace(pi / 2, pi / 2 + 3.0, 1000, 1000);
    const double dt = seconds_since(t0);
    return {a.peak_prob <= 0.0021923 && b.peak_prob <= 0.001864 && dt < 1.0,
            fmt("peak=%.9g (<=0.0021923) peak=%.9g (<=0.001864) time=%.3fs", a.peak_prob,
                b.peak_prob, dt)};
}

Outcome optimal_step_prediction() {
    const long m0 = optimal_steps_asymptotic(0.0, 1000);
    const long m1 = optimal_steps_asymptotic(pi / 2, 1000);
    const auto g = trace(0.0, 0.0, 1000, 1000);
    const auto h = trace(pi / 2, pi / 2, 1000, 1000);
    if (!g.first_peak_step || !h.first_peak_step) {
        return {false, "no interior maximum"};
    }
    const long s0 = static_cast<long>(*g.first_peak_step);
    const long s1 = static_cast<long>(*h.first_peak_step);
    const bool ok = m0 == 24 && (s0 == 24 || s0 == 25) && g.first_peak_prob >= 0.999 &&
                    m1 == 35 && std::abs(s1 - 35) <= 2;
    return {ok, fmt("M(0)=%ld step=%ld P=%.6f; M(pi/2)=%ld step=%ld", m0, s0,
                    g.first_peak_prob, m1, s1)};
}

Outcome asymptotic_gap() {
    double worst = 0.0;
    for (double phi : {0.0, pi / 4, -pi / 4, pi / 2, -pi / 2, 3 * pi / 4, -3 * pi / 4}) {
        for (std::size_t n : {10000, 100000}) {
            const auto s = eigensystem(reduced_kernel(ph(phi), ph(phi), n));
            const double rel =
                std::abs(delta_omega_asymptotic(ph(phi), n) - s.delta_omega) / s.delta_omega;
            worst = std::max(worst, rel);
        }
    }
    return {worst <= 0.02, fmt("worst relative error=%.3e (<=2e-2)", worst)};
}

Outcome exact_identities(const VerifyReport &r) {
    const auto &conj = suite(r, "dft_conjugation");
    const auto &dt = suite(r, "det_trace_identities");
    const auto &unit = suite(r, "kernel_unitarity");
    const bool ok = conj.worst <= 1e-12 && dt.worst <= 1e-10 && unit.worst <= 1e-12;
    return {ok, fmt("dft conjugation=%.2e det/trace=%.2e unitarity=%.2e", conj.worst, dt.worst,
                    unit.worst)};
}

Outcome oracle_equivalence(const VerifyReport &r) {
    const auto &s = suite(r, "reduced_full_equivalence");
    // Second opinion from the O(N) factor-map oracle.
    std::mt19937_64 rng(101);
    double worst = 0.0;
    for (std::size_t n = 2; n <= 256; n *= 2) {
        for (bool balanced : {true, false}) {
            const auto b = oracle::random_phase(rng);
            const auto d = balanced ? b : oracle::random_phase(rng);
            const CVector x_in = uniform_initial(n).full_vector(n - 1);
            const std::vector<oracle::cd> k0(n, 1.0 / std::sqrt(double(n)));
            const auto full = oracle::full_probs(n - 1, k0, -1.0, b, -1.0, d,
                                                 {x_in.entries().begin(), x_in.entries().end()},
                                                 200);
            const auto red = probability_trace(
                reduced_kernel(UnitPhase::from_complex(b), UnitPhase::from_complex(d), n),
                uniform_initial(n), 200);
            for (std::size_t m = 0; m <= 200; ++m) {
                worst = std::max(worst, std::abs(full[m] - red.probs[m]));
            }
        }
    }
    return {s.worst <= 1e-10 && worst <= 1e-10,
            fmt("dense full=%.2e factor-map full=%.2e (<=1e-10)", s.worst, worst)};
}

Outcome closed_form(const VerifyReport &r) {
    const auto &s = suite(r, "closed_form_iterative");
    return {s.worst <= 1e-9, fmt("worst=%.2e over 200 samples (<=1e-9)", s.worst)};
}

Outcome extended_consistency(const VerifyReport &r) {
    const auto &s = suite(r, "extended_consistency");
    return {s.passed && s.worst <= 1e-12,
            fmt("kernel diff=%.2e (<=1e-12) step counts %s", s.worst,
                s.passed ? "agree" : s.detail.c_str())};
}

Outcome initial_condition_stability() {
    constexpr std::size_t kN = 1000;
    std::mt19937_64 rng(103);
    double worst = 0.0;
    double detuned_peak = 0.0;
    bool crossed = false;
    for (int i = 0; i < 50; ++i) {
        const double r = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
        const Complex a = r * oracle::random_phase(rng);
        const Complex b = std::sqrt((kN - r * r) / (kN - 1.0)) * oracle::random_phase(rng);
        const InitialState init(a, b, kN);
        const double phi = std::uniform_real_distribution<double>(-pi / 2, pi / 2)(rng);
        const auto t = probability_trace(reduced_kernel(ph(phi), ph(phi), kN), init, 1000);
        const double predicted = perturbed_peak_estimate(init).amplitude;
        worst = std::max(worst, std::abs(std::sqrt(t.peak_prob) - predicted) / predicted);

        Complex beta;
        Complex delta;
        do {
            beta = oracle::random_phase(rng);
            delta = oracle::random_phase(rng);
        } while (std::abs(beta - delta) < 0.5);
        const auto d = probability_trace(
            reduced_kernel(UnitPhase::from_complex(beta), UnitPhase::from_complex(delta), kN),
            init, 1000);
        crossed = crossed || d.threshold_step.has_value();
        detuned_peak = std::max(detuned_peak, d.peak_prob);
    }
    return {worst <= 0.05 && !crossed,
            fmt("worst peak deviation=%.3e (<=5e-2) detuned max P=%.3e threshold %s", worst,
                detuned_peak, crossed ? "reached" : "never reached")};
}

Outcome scaling_law() {
    const auto t0 = Clock::now();
    std::string detail;
    double last = 0.0;
    bool found = true;
    for (std::size_t n : {100, 1000, 10000, 100000}) {
        const auto t = trace(0.0, 0.0, n, 1000);
        if (!t.first_peak_step) {
            found = false;
            break;
        }
        last = double(*t.first_peak_step) / std::sqrt(double(n)) / (pi / 4);
        detail += fmt("N=%zu ratio=%.4f ", n, last);
    }
    const double dt = seconds_since(t0);
    detail += fmt("time=%.3fs", dt);
    return {found && std::abs(last - 1.0) <= 0.03 && dt < 10.0, detail};
}

} // namespace

int main() {
    ExperimentConfig cfg;
    cfg.command = Command::Verify;
    const VerifyReport report = run_verify(cfg);

    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"1 maxima counts", maxima_counts},
        {"2 inefficiency bounds", inefficiency_bounds},
        {"3 optimal step prediction", optimal_step_prediction},
        {"4 asymptotic gap accuracy", asymptotic_gap},
        {"5 exact identities", [&] { return exact_identities(report); }},
        {"6 reduced/full equivalence", [&] { return oracle_equivalence(report); }},
        {"7 closed form vs iteration", [&] { return closed_form(report); }},
        {"8 extended consistency", [&] { return extended_consistency(report); }},
        {"9 initial-condition stability", initial_condition_stability},
        {"10 scaling law", scaling_law},
    };
    int failures = 0;
    for (const auto &[name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.passed ? 0 : 1;
        std::printf("%s criterion %s: %s\n", o.passed ? "PASS" : "FAIL", name, o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
