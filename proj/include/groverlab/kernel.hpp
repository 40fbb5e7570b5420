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
 * Grover operators G = lam1 P + lam2 (1 - P) and Grover kernels K = G2 G1.
 *
 * Reduced kernels live in the ordered basis {|x0>, |x_perp>}, where |x_perp>
 * is the normalized superposition of every unmarked element (or, for a
 * general projector direction |k0> = (alpha_1, ..., alpha_N), the normalized
 * tail (0, alpha_2, ..., alpha_N)). Family constructors always fix the first
 * eigenvalue of each factor to -1.
 */
#pragma once

#include <cstddef>
#include <numbers>
#include <optional>
#include <utility>

#include "groverlab/algebra.hpp"

namespace groverlab {

/// A complex number of unit modulus.
class UnitPhase {
  public:
    /// 1.
    UnitPhase() = default;

    static UnitPhase from_angle(double radians);
    /// Accepts |z| within 1e-9 of one and renormalizes; rejects otherwise.
    static UnitPhase from_complex(Complex z);

    [[nodiscard]] Complex value() const noexcept { return value_; }
    /// Principal argument in (-pi, pi].
    [[nodiscard]] double angle() const noexcept;
    /// Principal square root, argument in (-pi/2, pi/2].
    [[nodiscard]] Complex sqrt() const noexcept;

    operator Complex() const noexcept { return value_; }

  private:
    explicit UnitPhase(Complex z) : value_(z) {}
    Complex value_{1.0, 0.0};
};

inline constexpr double kPhaseAcceptTol = 1e-9;

/// The four eigenvalues of a kernel's two factors.
struct GroverPhases {
    UnitPhase alpha = UnitPhase::from_angle(std::numbers::pi);
    UnitPhase beta;
    UnitPhase gamma = UnitPhase::from_angle(std::numbers::pi);
    UnitPhase delta;

    /// alpha = gamma = -1 with the given beta, delta.
    static GroverPhases family(UnitPhase beta, UnitPhase delta);
    /// The original choice alpha = gamma = -1, beta = delta = 1.
    static GroverPhases grover();

    /// phi with delta = e^{i phi}.
    [[nodiscard]] double phi() const noexcept { return delta.angle(); }
};

struct ReducedKernel {
    CMatrix matrix;
    /// Size of the list the kernel acts on; empty for kernels built from a
    /// bare overlap alpha1.
    std::optional<std::size_t> list_size;
};

/// Normalized amplitudes (alpha_1, ..., alpha_N) of a general |k0>.
/// alpha_1 must be real and positive and strictly less than one.
class ExtendedAmplitudes {
  public:
    explicit ExtendedAmplitudes(CVector amps);

    [[nodiscard]] const CVector &amps() const noexcept { return amps_; }
    [[nodiscard]] double alpha1() const noexcept { return amps_[0].real(); }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.dim(); }

  private:
    CVector amps_;
};

struct FullSpaceConfig {
    std::size_t N = 0;
    std::size_t x0 = 0;
    CVector k0;
    GroverPhases phases;

    /// Throws on N = 0, x0 out of range or a non-normalized k0.
    void validate() const;
};

[[nodiscard]] CMatrix grover_operator(const CVector &p, Complex lam1,
                                      Complex lam2);

[[nodiscard]] ReducedKernel reduced_kernel(UnitPhase beta, UnitPhase delta,
                                           std::size_t N);

/// Reduced kernel for a general |k0> with real overlap alpha1 = <x0|k0>.
[[nodiscard]] ReducedKernel extended_reduced_kernel(UnitPhase beta,
                                                    UnitPhase delta,
                                                    double alpha1);
[[nodiscard]] ReducedKernel extended_reduced_kernel(UnitPhase beta,
                                                    UnitPhase delta,
                                                    const ExtendedAmplitudes &k0);

/// Uniform superposition (1, ..., 1)/sqrt(N).
[[nodiscard]] CVector uniform_state(std::size_t N);
/// |y0^> = U_DFT |y0>, components exp(2 pi i x y0 / N)/sqrt(N).
[[nodiscard]] CVector momentum_state(std::size_t y0, std::size_t N);
/// |y0^><y0^|. y0 = 0 gives the all-1/N matrix.
[[nodiscard]] CMatrix momentum_projector(std::size_t y0, std::size_t N);

[[nodiscard]] CMatrix full_kernel(const FullSpaceConfig &cfg);

/// U_DFT M U_DFT^{-1}.
[[nodiscard]] CMatrix dft_conjugate(const CMatrix &m);

/// The reduced basis {|x0>, |x_perp>} embedded in C^N for the uniform |k0>.
[[nodiscard]] std::pair<CVector, CVector> reduced_basis(std::size_t N,
                                                        std::size_t x0);
/// {|x0>, |x_perp>} for a general |k0>, with x0 the first coordinate.
[[nodiscard]] std::pair<CVector, CVector>
extended_basis(const ExtendedAmplitudes &k0);

/// 2x2 matrix of <e_i|M|e_j> for the orthonormal pair (e_0, e_1).
[[nodiscard]] CMatrix restrict_to(const CMatrix &m, const CVector &e0,
                                  const CVector &e1);

} // namespace groverlab
