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
 * Spectral analysis of 2x2 reduced kernels: eigenvalues and eigenvectors,
 * phase gaps (exact and large-N), optimal iteration counts, and the
 * U(1) x SU(2) axis-angle form used to draw the kernel manifold.
 *
 * Conventions:
 *  - zeta_{1,2} = Tr/2 -+ sqrt((Tr/2)^2 - Det) with the principal square
 *    root; omega_j = arg(zeta_j) in (-pi, pi].
 *  - delta_omega is the principal angular distance min(d, 2pi - d) with
 *    d = |omega_2 - omega_1|; signed_delta_omega is omega_2 - omega_1.
 *  - Eigenvectors are unit norm with a real, non-negative second component.
 */
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "groverlab/algebra.hpp"
#include "groverlab/kernel.hpp"

namespace groverlab {

struct SpectralData {
    Complex detK;
    Complex trK;
    Complex zeta1;
    Complex zeta2;
    double omega1 = 0.0;
    double omega2 = 0.0;
    CVector kappa1;
    CVector kappa2;
    /// N (K_00 - K_11) = (beta - delta) N + (1 - beta)(1 + delta); only for
    /// kernels with a known list size.
    std::optional<Complex> A;
    double delta_omega = 0.0;
    double signed_delta_omega = 0.0;
    bool degenerate = false;
};

[[nodiscard]] SpectralData eigensystem(const CMatrix &k,
                                       std::optional<std::size_t> list_size = {});
[[nodiscard]] SpectralData eigensystem(const ReducedKernel &k);

enum class EigenBranch { Minus, Plus };

/// Exact eigenvector of reduced_kernel(beta, delta, N) from its closed form,
/// first component (A -+ N sqrt(Tr^2 - 4 Det)) / (2 (1 + delta) sqrt(N - 1))
/// relative to a second component of one; returned normalized.
[[nodiscard]] CVector closed_form_eigvec(UnitPhase beta, UnitPhase delta,
                                         std::size_t N, EigenBranch branch);

/// Large-N form of the eigenvector carrying the search: for beta != delta
/// the direction ((beta - delta) sqrt(N) / (1 + delta), 1), for beta == delta
/// the balanced state (i delta^{1/2}, 1)/sqrt(2). Normalized.
[[nodiscard]] CVector asymptotic_eigvec(UnitPhase beta, UnitPhase delta,
                                        std::size_t N);
/// Same with 1/alpha1 in place of sqrt(N) (general |k0>).
[[nodiscard]] CVector asymptotic_eigvec_extended(UnitPhase beta,
                                                 UnitPhase delta, double alpha1);

/// 4 Re(sqrt(delta)) / sqrt(N), valid on the beta == delta line.
[[nodiscard]] double delta_omega_asymptotic(UnitPhase delta, std::size_t N);

/// floor(pi / delta_omega).
[[nodiscard]] long optimal_steps_exact(const SpectralData &s);

/// floor(pi sqrt(N) / (4 cos(phi/2))), or with alpha1 given
/// floor(pi / (4 alpha1 cos(phi/2))).
[[nodiscard]] long optimal_steps_asymptotic(double phi, std::size_t N,
                                            std::optional<double> alpha1 = {});

/// (pi/4)(1 + 0.125 dphi^2) sqrt(N); meaningful for |dphi| <= 0.5.
[[nodiscard]] double stability_expansion(double dphi, std::size_t N);

inline constexpr double kStabilityRegime = 0.5;

/// K = e^{i global_phase} (cos(angle) I + i sin(angle) axis . sigma).
struct AxisAngle {
    double global_phase = 0.0;
    double angle = 0.0;
    std::array<double, 3> axis{0.0, 0.0, 1.0};
    /// False when angle is 0 or pi and any axis would do.
    bool axis_defined = false;
};

[[nodiscard]] AxisAngle su2_decompose(const CMatrix &k);
[[nodiscard]] CMatrix su2_compose(const AxisAngle &aa);
/// exp(i angle axis . sigma).
[[nodiscard]] CMatrix su2_exp(double angle, const std::array<double, 3> &axis);

/// Rotation data of the two factors iG1, iG2 of the original kernel at N.
struct FactorAxes {
    double angle1 = 0.0;
    std::array<double, 3> axis1{};
    double angle2 = 0.0;
    std::array<double, 3> axis2{};
};

[[nodiscard]] FactorAxes grover_factor_axes(std::size_t N);

struct ManifoldPoint {
    double angle1 = 0.0;
    double angle2 = 0.0;
    AxisAngle kernel;
    /// (angle1, angle2) reproduces the original kernel.
    bool grover_point = false;
    /// angle1 == angle2 mod 2 pi.
    bool equal_angles = false;
};

/// For each (angle1, angle2) in grid1 x grid2 (grid1 outer), the kernel
/// -exp(i angle2 n2.sigma) exp(i angle1 n1.sigma) with the factor axes of
/// grover_factor_axes(N), in axis-angle form.
[[nodiscard]] std::vector<ManifoldPoint>
kernel_manifold_points(std::span<const double> grid1,
                       std::span<const double> grid2, std::size_t N,
                       unsigned threads = 1);

} // namespace groverlab
