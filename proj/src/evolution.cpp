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
#include "groverlab/evolution.hpp"

#include <cmath>
#include <string>

namespace groverlab {

InitialState::InitialState(Complex a, Complex b, std::size_t N)
    : a_(a), b_(b), n_(N) {
    if (N < 2) {
        fail(ErrorKind::InvalidSize, "initial state needs N >= 2");
    }
    const double n = static_cast<double>(N);
    const double norm2 = std::norm(a) / n + std::norm(b) * (n - 1.0) / n;
    if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > kExactTol) {
        fail(ErrorKind::Normalization,
             "|a|^2/N + |b|^2 (N-1)/N = " + std::to_string(norm2));
    }
}

InitialState InitialState::from_marked_coefficient(Complex a, std::size_t N) {
    if (N < 2) {
        fail(ErrorKind::InvalidSize, "initial state needs N >= 2");
    }
    const double n = static_cast<double>(N);
    const double rest = (n - std::norm(a)) / (n - 1.0);
    if (rest < 0.0) {
        fail(ErrorKind::Normalization, "|a|^2 exceeds N");
    }
    return {a, std::sqrt(rest), N};
}

CVector InitialState::reduced_vector() const {
    const double n = static_cast<double>(n_);
    return CVector{a_ / std::sqrt(n), b_ * std::sqrt((n - 1.0) / n)};
}

CVector InitialState::full_vector(std::size_t x0) const {
    if (x0 >= n_) {
        fail(ErrorKind::Index, "marked element outside the list");
    }
    const double n = static_cast<double>(n_);
    // b sqrt((N-1)/N) |x_perp> spreads b/sqrt(N) over each unmarked element.
    CVector v(std::vector<Complex>(n_, b_ / std::sqrt(n)));
    v[x0] = a_ / std::sqrt(n);
    return v;
}

InitialState uniform_initial(std::size_t N) { return {1.0, 1.0, N}; }

EvolutionTrace summarize(std::vector<double> probs) {
    EvolutionTrace t;
    t.probs = std::move(probs);
    const auto &p = t.probs;
    for (std::size_t m = 0; m < p.size(); ++m) {
        if (m == 0 || p[m] > t.peak_prob) {
            t.peak_prob = p[m];
            t.peak_step = m;
        }
        if (!t.threshold_step && p[m] > 0.5) {
            t.threshold_step = m;
        }
        if (m > 0 && m + 1 < p.size() && p[m] > p[m - 1] && p[m] > p[m + 1]) {
            ++t.maxima_count;
            if (!t.first_peak_step) {
                t.first_peak_step = m;
                t.first_peak_prob = p[m];
            }
        }
    }
    return t;
}

namespace {

void require_2x2(const CMatrix &k, const CVector &v0) {
    if (k.rows() != 2 || k.cols() != 2 || v0.dim() != 2) {
        fail(ErrorKind::Shape, "reduced evolution works on 2x2 kernels");
    }
}

} // namespace

Complex amplitude_iterative(const CMatrix &k, const CVector &v0, std::size_t m) {
    require_2x2(k, v0);
    CVector state = v0;
    for (std::size_t step = 0; step < m; ++step) {
        state = mat_apply(k, state);
    }
    return state[0];
}

Complex amplitude_iterative(const ReducedKernel &k, const InitialState &s,
                            std::size_t m) {
    return amplitude_iterative(k.matrix, s.reduced_vector(), m);
}

Complex amplitude_closed_form(const SpectralData &s, const CVector &v0,
                              std::size_t m) {
    if (v0.dim() != 2) {
        fail(ErrorKind::Shape, "closed form expects a reduced vector");
    }
    const double md = static_cast<double>(m);
    if (s.degenerate) {
        // A unitary with one repeated eigenvalue is that eigenvalue times I.
        return std::pow(s.zeta1, md) * v0[0];
    }
    const Complex overlap = s.kappa2[0] * inner(s.kappa2, v0);
    const Complex gap = std::polar(1.0, md * s.signed_delta_omega) - 1.0;
    return std::polar(1.0, md * s.omega1) * (v0[0] + gap * overlap);
}

Complex amplitude_closed_form(const SpectralData &s, const ReducedKernel &k,
                              const InitialState &init, std::size_t m) {
    if (s.degenerate) {
        return amplitude_iterative(k, init, m);
    }
    return amplitude_closed_form(s, init.reduced_vector(), m);
}

EvolutionTrace probability_trace(const CMatrix &k, const CVector &v0,
                                 std::size_t m_max) {
    require_2x2(k, v0);
    std::vector<double> probs;
    probs.reserve(m_max + 1);
    // Hand-unrolled 2x2 product; this loop dominates sweeps.
    const Complex k00 = k(0, 0);
    const Complex k01 = k(0, 1);
    const Complex k10 = k(1, 0);
    const Complex k11 = k(1, 1);
    Complex x = v0[0];
    Complex y = v0[1];
    for (std::size_t m = 0; m <= m_max; ++m) {
        probs.push_back(std::norm(x));
        const Complex nx = k00 * x + k01 * y;
        y = k10 * x + k11 * y;
        x = nx;
    }
    return summarize(std::move(probs));
}

EvolutionTrace probability_trace(const ReducedKernel &k, const InitialState &s,
                                 std::size_t m_max) {
    return probability_trace(k.matrix, s.reduced_vector(), m_max);
}

EvolutionTrace full_space_trace(const FullSpaceConfig &cfg, const CVector &x_in,
                                std::size_t m_max) {
    if (cfg.N > kMaxFullSpaceSize) {
        fail(ErrorKind::Resource, "full-space simulation limited to N <= " +
                                      std::to_string(kMaxFullSpaceSize));
    }
    cfg.validate();
    if (x_in.dim() != cfg.N) {
        fail(ErrorKind::Shape, "initial state dimension differs from N");
    }
    if (!x_in.is_normalized(kExactTol)) {
        fail(ErrorKind::Normalization, "initial state is not normalized");
    }
    const CMatrix k = full_kernel(cfg);
    std::vector<double> probs;
    probs.reserve(m_max + 1);
    CVector state = x_in;
    for (std::size_t m = 0; m <= m_max; ++m) {
        probs.push_back(std::norm(state[cfg.x0]));
        if (m < m_max) {
            state = mat_apply(k, state);
        }
    }
    return summarize(std::move(probs));
}

PeakEstimate perturbed_peak_estimate(const InitialState &s) {
    PeakEstimate est;
    est.amplitude = std::min(std::abs(s.b()), 1.0);
    if (std::abs(s.a()) >= std::sqrt(static_cast<double>(s.N())) / 2.0) {
        est.regime = InitialRegime::MeasureDirectly;
    }
    return est;
}

} // namespace groverlab
