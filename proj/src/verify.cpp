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
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "groverlab/experiments.hpp"

namespace groverlab {

namespace {

using std::numbers::pi;

class Draws {
  public:
    explicit Draws(std::uint64_t seed) : rng_(seed) {}

    UnitPhase phase() {
        return UnitPhase::from_angle(std::uniform_real_distribution<double>(-pi, pi)(rng_));
    }
    std::size_t size(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }

  private:
    std::mt19937_64 rng_;
};

struct Suite {
    std::string name;
    double tol;
    double worst = 0.0;
    std::string detail;

    void observe(double residual, const std::string &where) {
        if (!(residual <= worst)) {
            worst = residual;
            detail = where;
        }
    }

    [[nodiscard]] SuiteResult result() const {
        return {name, worst <= tol, worst, tol, detail};
    }
};

SuiteResult dft_unitarity(double tol) {
    Suite s{"dft_unitarity", tol, 0.0, {}};
    for (std::size_t n = 1; n <= 64; ++n) {
        s.observe(unitarity_residual(dft_matrix(n)), "N=" + std::to_string(n));
    }
    return s.result();
}

SuiteResult dft_conjugation(double tol) {
    Suite s{"dft_conjugation", tol, 0.0, {}};
    for (std::size_t n : {2, 4, 8, 16, 64}) {
        const CMatrix u = dft_matrix(n);
        const CMatrix pbar = momentum_projector(0, n);
        const CMatrix p0 = outer(CVector::basis(n, 0), CVector::basis(n, 0));
        s.observe(max_abs_diff(mat_mul(mat_mul(adjoint(u), pbar), u), p0),
                  "N=" + std::to_string(n));
    }
    return s.result();
}

SuiteResult kernel_unitarity(double tol, Draws &draws) {
    Suite s{"kernel_unitarity", tol, 0.0, {}};
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = draws.size(2, 256);
        const auto k = reduced_kernel(draws.phase(), draws.phase(), n);
        s.observe(unitarity_residual(k.matrix), "reduced N=" + std::to_string(n));
        const double a1 = 1.0 / std::sqrt(static_cast<double>(n));
        const auto ke = extended_reduced_kernel(draws.phase(), draws.phase(), a1);
        s.observe(unitarity_residual(ke.matrix), "extended N=" + std::to_string(n));
    }
    for (std::size_t n : {2, 3, 8, 16, 64}) {
        FullSpaceConfig cfg;
        cfg.N = n;
        cfg.x0 = draws.size(0, n - 1);
        cfg.k0 = momentum_state(draws.size(0, n - 1), n);
        cfg.phases = {draws.phase(), draws.phase(), draws.phase(), draws.phase()};
        s.observe(unitarity_residual(full_kernel(cfg)), "full N=" + std::to_string(n));
    }
    return s.result();
}

SuiteResult det_trace_identities(double tol, Draws &draws) {
    Suite s{"det_trace_identities", tol, 0.0, {}};
    for (int i = 0; i < 100; ++i) {
        const auto beta = draws.phase();
        const auto delta = draws.phase();
        const std::size_t n = draws.size(2, 4096);
        const auto k = reduced_kernel(beta, delta, n);
        const Complex b = beta;
        const Complex d = delta;
        const Complex tr = -(b + d) + (1.0 + b) * (1.0 + d) / static_cast<double>(n);
        const std::string where = "N=" + std::to_string(n);
        s.observe(std::abs(det2(k.matrix) - b * d), where);
        s.observe(std::abs(trace(k.matrix) - tr), where);
    }
    return s.result();
}

SuiteResult reduced_full_equivalence(double tol, Draws &draws) {
    Suite s{"reduced_full_equivalence", tol, 0.0, {}};
    constexpr std::size_t kSteps = 200;
    for (std::size_t n = 2; n <= 256; n *= 2) {
        for (bool balanced : {true, false}) {
            const auto beta = draws.phase();
            const auto delta = balanced ? beta : draws.phase();
            FullSpaceConfig cfg;
            cfg.N = n;
            cfg.x0 = draws.size(0, n - 1);
            cfg.k0 = uniform_state(n);
            cfg.phases = GroverPhases::family(beta, delta);
            const InitialState init = uniform_initial(n);
            const auto full = full_space_trace(cfg, init.full_vector(cfg.x0), kSteps);
            const auto red = probability_trace(reduced_kernel(beta, delta, n), init, kSteps);
            double worst = 0.0;
            for (std::size_t m = 0; m <= kSteps; ++m) {
                worst = std::max(worst, std::abs(full.probs[m] - red.probs[m]));
            }
            s.observe(worst, "N=" + std::to_string(n) +
                                 (balanced ? " beta=delta" : " beta!=delta"));
        }
    }
    return s.result();
}

SuiteResult closed_form_iterative(double tol, Draws &draws) {
    Suite s{"closed_form_iterative", tol, 0.0, {}};
    for (int i = 0; i < 200; ++i) {
        const auto delta = draws.phase();
        const std::size_t n = draws.size(2, 2048);
        const std::size_t m = draws.size(0, 2000);
        const auto k = reduced_kernel(delta, delta, n);
        const InitialState init = uniform_initial(n);
        const auto spec = eigensystem(k);
        s.observe(std::abs(amplitude_closed_form(spec, k, init, m) -
                           amplitude_iterative(k, init, m)),
                  "N=" + std::to_string(n) + " m=" + std::to_string(m));
    }
    return s.result();
}

SuiteResult extended_consistency(double tol, Draws &draws) {
    Suite s{"extended_consistency", tol, 0.0, {}};
    for (std::size_t n = 4; n <= 1024; ++n) {
        const auto beta = draws.phase();
        const auto delta = draws.phase();
        const double a1 = 1.0 / std::sqrt(static_cast<double>(n));
        s.observe(max_abs_diff(extended_reduced_kernel(beta, delta, a1).matrix,
                               reduced_kernel(beta, delta, n).matrix),
                  "N=" + std::to_string(n));
    }
    // Step-count predictions are integers: any disagreement is a failure
    // regardless of tolerance.
    std::size_t mismatches = 0;
    for (std::size_t n : {16, 100, 1000, 10000, 100000}) {
        for (double phi : {0.0, 0.25, -0.5, 1.0, pi / 2, -2.0, 2.5}) {
            const double a1 = 1.0 / std::sqrt(static_cast<double>(n));
            if (optimal_steps_asymptotic(phi, n, a1) != optimal_steps_asymptotic(phi, n)) {
                ++mismatches;
            }
        }
    }
    SuiteResult r = s.result();
    if (mismatches > 0) {
        r.passed = false;
        r.detail = std::to_string(mismatches) + " step-count mismatches";
    }
    return r;
}

SuiteResult su2_roundtrip(double tol, Draws &draws) {
    Suite s{"su2_roundtrip", tol, 0.0, {}};
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = draws.size(2, 512);
        const auto k = reduced_kernel(draws.phase(), draws.phase(), n);
        s.observe(max_abs_diff(su2_compose(su2_decompose(k.matrix)), k.matrix),
                  "N=" + std::to_string(n));
    }
    return s.result();
}

SuiteResult projector_identities(double tol) {
    Suite s{"projector_identities", tol, 0.0, {}};
    for (std::size_t n : {2, 3, 5, 8, 16, 33}) {
        for (std::size_t y0 = 0; y0 < n; y0 += std::max<std::size_t>(1, n / 4)) {
            const CMatrix p = momentum_projector(y0, n);
            const std::string where = "N=" + std::to_string(n) + " y0=" + std::to_string(y0);
            s.observe(max_abs_diff(mat_mul(p, p), p), where);
            s.observe(max_abs_diff(p, adjoint(p)), where);
            s.observe(std::abs(trace(p) - 1.0), where);
            s.observe(max_abs_diff(dft_conjugate(outer(CVector::basis(n, y0),
                                                       CVector::basis(n, y0))),
                                   p),
                      where);
        }
    }
    return s.result();
}

} // namespace

bool VerifyReport::all_passed() const {
    return std::ranges::all_of(suites, &SuiteResult::passed);
}

VerifyReport run_verify(const ExperimentConfig &cfg) {
    auto tol = [&cfg](double def) { return cfg.tol.value_or(def); };
    Draws draws(cfg.seed);
    VerifyReport report;
    report.suites.push_back(dft_unitarity(tol(kExactTol)));
    report.suites.push_back(dft_conjugation(tol(kExactTol)));
    report.suites.push_back(projector_identities(tol(kExactTol)));
    report.suites.push_back(kernel_unitarity(tol(kExactTol), draws));
    report.suites.push_back(det_trace_identities(tol(kPipelineTol), draws));
    report.suites.push_back(reduced_full_equivalence(tol(kPipelineTol), draws));
    report.suites.push_back(closed_form_iterative(tol(1e-9), draws));
    report.suites.push_back(extended_consistency(tol(kExactTol), draws));
    report.suites.push_back(su2_roundtrip(tol(kPipelineTol), draws));
    return report;
}

} // namespace groverlab
