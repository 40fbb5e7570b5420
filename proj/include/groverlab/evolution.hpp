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
 * Iterating a kernel on an initial state: the marked-state amplitude
 * <x0|K^m|x_in> (iterated and closed form) and success-probability traces
 * with their summary statistics.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "groverlab/algebra.hpp"
#include "groverlab/kernel.hpp"
#include "groverlab/spectral.hpp"

namespace groverlab {

/// |x_in> = (a / sqrt(N)) |x0> + b sqrt((N-1)/N) |x_perp>.
class InitialState {
  public:
    /// Requires |a|^2/N + |b|^2 (N-1)/N = 1 to 1e-12 and N >= 2.
    InitialState(Complex a, Complex b, std::size_t N);

    /// b chosen real and non-negative so that the state is normalized.
    static InitialState from_marked_coefficient(Complex a, std::size_t N);

    [[nodiscard]] Complex a() const noexcept { return a_; }
    [[nodiscard]] Complex b() const noexcept { return b_; }
    [[nodiscard]] std::size_t N() const noexcept { return n_; }

    /// Coordinates in the reduced basis {|x0>, |x_perp>}.
    [[nodiscard]] CVector reduced_vector() const;
    /// The same state in C^N with the marked element at x0.
    [[nodiscard]] CVector full_vector(std::size_t x0) const;

  private:
    Complex a_;
    Complex b_;
    std::size_t n_;
};

/// a = b = 1: the uniform superposition.
[[nodiscard]] InitialState uniform_initial(std::size_t N);

struct EvolutionTrace {
    /// probs[m] = |<x0|K^m|x_in>|^2 for m = 0..m_max.
    std::vector<double> probs;
    double peak_prob = 0.0;
    /// Smallest step attaining peak_prob.
    std::size_t peak_step = 0;
    /// The first strict interior local maximum, if any.
    std::optional<std::size_t> first_peak_step;
    double first_peak_prob = 0.0;
    std::size_t maxima_count = 0;
    /// Smallest m with P(m) > 1/2.
    std::optional<std::size_t> threshold_step;

    [[nodiscard]] std::size_t m_max() const noexcept {
        return probs.empty() ? 0 : probs.size() - 1;
    }
};

/// Fills the statistics of a trace from its probabilities.
[[nodiscard]] EvolutionTrace summarize(std::vector<double> probs);

[[nodiscard]] Complex amplitude_iterative(const ReducedKernel &k,
                                          const InitialState &s, std::size_t m);
[[nodiscard]] Complex amplitude_iterative(const CMatrix &k, const CVector &v0,
                                          std::size_t m);

/// e^{i m w1} (a/sqrt(N) + (e^{i m dw} - 1) <x0|k2><k2|x_in>) with the signed
/// gap dw = w2 - w1. Degenerate spectra fall back to `k` iterated.
[[nodiscard]] Complex amplitude_closed_form(const SpectralData &s,
                                           const CVector &v0, std::size_t m);
[[nodiscard]] Complex amplitude_closed_form(const SpectralData &s,
                                           const ReducedKernel &k,
                                           const InitialState &init,
                                           std::size_t m);

[[nodiscard]] EvolutionTrace probability_trace(const ReducedKernel &k,
                                               const InitialState &s,
                                               std::size_t m_max);
/// Trace for an arbitrary reduced starting vector (e.g. the general |k0> case).
[[nodiscard]] EvolutionTrace probability_trace(const CMatrix &k,
                                               const CVector &v0,
                                               std::size_t m_max);

inline constexpr std::size_t kMaxFullSpaceSize = 4096;

/// Iterates the dense N x N kernel of `cfg` on x_in and records
/// |<x0|state>|^2.
[[nodiscard]] EvolutionTrace full_space_trace(const FullSpaceConfig &cfg,
                                              const CVector &x_in,
                                              std::size_t m_max);

enum class InitialRegime {
    /// |a| = O(1): the search proceeds as for the uniform state.
    Perturbative,
    /// |a| >= sqrt(N)/2: measuring the initial state already succeeds.
    MeasureDirectly,
};

struct PeakEstimate {
    /// Predicted peak of |<x0|K^m|x_in>|, min(|b|, 1).
    double amplitude = 0.0;
    InitialRegime regime = InitialRegime::Perturbative;
};

[[nodiscard]] PeakEstimate perturbed_peak_estimate(const InitialState &s);

} // namespace groverlab
