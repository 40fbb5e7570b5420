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
#include "groverlab/kernel.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace groverlab {

namespace {

// Components this small are rounding residue of sin/cos at multiples of
// pi/2; zeroing them makes e.g. from_angle(pi) exactly -1.
constexpr double kSnap = 4.0 * std::numeric_limits<double>::epsilon();

double snap(double x) { return std::abs(x) < kSnap ? 0.0 : x; }

} // namespace

UnitPhase UnitPhase::from_angle(double radians) {
    if (!std::isfinite(radians)) {
        fail(ErrorKind::NonFinite, "phase angle");
    }
    return UnitPhase(Complex{snap(std::cos(radians)), snap(std::sin(radians))});
}

UnitPhase UnitPhase::from_complex(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        fail(ErrorKind::NonFinite, "phase value");
    }
    const double mod = std::abs(z);
    if (std::abs(mod - 1.0) > kPhaseAcceptTol) {
        fail(ErrorKind::Normalization,
             "phase modulus " + std::to_string(mod) + " is not 1");
    }
    return UnitPhase(z / mod);
}

double UnitPhase::angle() const noexcept {
    const double a = std::arg(value_);
    // std::arg returns -pi for (-1, -0.0); keep the interval half-open.
    return a == -std::numbers::pi ? std::numbers::pi : a;
}

Complex UnitPhase::sqrt() const noexcept { return std::polar(1.0, angle() / 2.0); }

GroverPhases GroverPhases::family(UnitPhase beta, UnitPhase delta) {
    GroverPhases p;
    p.beta = beta;
    p.delta = delta;
    return p;
}

GroverPhases GroverPhases::grover() { return family(UnitPhase{}, UnitPhase{}); }

ExtendedAmplitudes::ExtendedAmplitudes(CVector amps) : amps_(std::move(amps)) {
    if (amps_.dim() < 2) {
        fail(ErrorKind::InvalidSize, "|k0> needs at least two amplitudes");
    }
    if (!amps_.is_normalized(kExactTol)) {
        fail(ErrorKind::Normalization, "|k0> amplitudes are not normalized");
    }
    const Complex a1 = amps_[0];
    if (std::abs(a1.imag()) > kExactTol || a1.real() <= 0.0) {
        fail(ErrorKind::Normalization, "alpha_1 must be real and positive");
    }
    amps_[0] = a1.real();
    if (a1.real() >= 1.0 - kExactTol) {
        fail(ErrorKind::DegenerateSubspace,
             "|k0> has no component orthogonal to |x0>");
    }
}

void FullSpaceConfig::validate() const {
    if (N == 0) {
        fail(ErrorKind::InvalidSize, "list size must be positive");
    }
    if (x0 >= N) {
        fail(ErrorKind::Index, "marked element " + std::to_string(x0) +
                                   " outside list of size " + std::to_string(N));
    }
    if (k0.dim() != N) {
        fail(ErrorKind::Shape, "|k0> dimension differs from list size");
    }
    if (!k0.is_normalized(kExactTol)) {
        fail(ErrorKind::Normalization, "|k0> is not normalized");
    }
}

CMatrix grover_operator(const CVector &p, Complex lam1, Complex lam2) {
    if (!p.is_normalized(kExactTol)) {
        fail(ErrorKind::Normalization, "projector direction is not a unit vector");
    }
    for (Complex lam : {lam1, lam2}) {
        if (std::abs(std::abs(lam) - 1.0) > kPhaseAcceptTol) {
            fail(ErrorKind::Normalization, "eigenvalue is not of unit modulus");
        }
    }
    // lam2 I + (lam1 - lam2) p p^dagger
    const std::size_t n = p.dim();
    const Complex diff = lam1 - lam2;
    CMatrix g(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            g(r, c) = diff * p[r] * std::conj(p[c]);
        }
        g(r, r) += lam2;
    }
    return g;
}

ReducedKernel reduced_kernel(UnitPhase beta, UnitPhase delta, std::size_t N) {
    if (N < 2) {
        fail(ErrorKind::InvalidSize, "reduced kernel needs N >= 2");
    }
    const Complex b = beta;
    const Complex d = delta;
    const double n = static_cast<double>(N);
    const double s = std::sqrt(n - 1.0);
    const Complex one_d = 1.0 + d;
    CMatrix k{{(1.0 + d * (1.0 - n)) / n, -b * one_d * s / n},
              {one_d * s / n, b * (one_d - n) / n}};
    return {std::move(k), N};
}

ReducedKernel extended_reduced_kernel(UnitPhase beta, UnitPhase delta,
                                      double alpha1) {
    if (!(alpha1 >= 0.0 && alpha1 <= 1.0)) {
        fail(ErrorKind::Normalization, "alpha1 must lie in (0, 1)");
    }
    if (alpha1 == 0.0 || alpha1 == 1.0) {
        fail(ErrorKind::DegenerateSubspace,
             "alpha1 in {0, 1} leaves the reduced space one-dimensional");
    }
    const Complex b = beta;
    const Complex d = delta;
    const Complex big_delta = 1.0 + d;
    const double a2 = alpha1 * alpha1;
    const double c = std::sqrt(1.0 - a2);
    CMatrix k{{-d + big_delta * a2, -b * big_delta * alpha1 * c},
              {big_delta * alpha1 * c, b * (big_delta * a2 - 1.0)}};
    return {std::move(k), std::nullopt};
}

ReducedKernel extended_reduced_kernel(UnitPhase beta, UnitPhase delta,
                                      const ExtendedAmplitudes &k0) {
    auto k = extended_reduced_kernel(beta, delta, k0.alpha1());
    k.list_size = k0.size();
    return k;
}

CVector uniform_state(std::size_t N) {
    if (N == 0) {
        fail(ErrorKind::InvalidSize, "uniform state of dimension 0");
    }
    return CVector(std::vector<Complex>(N, 1.0 / std::sqrt(static_cast<double>(N))));
}

CVector momentum_state(std::size_t y0, std::size_t N) {
    if (y0 >= N) {
        fail(ErrorKind::Index, "momentum " + std::to_string(y0) +
                                   " outside [0, " + std::to_string(N) + ")");
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(N));
    const double step = 2.0 * std::numbers::pi / static_cast<double>(N);
    CVector v(N);
    for (std::size_t x = 0; x < N; ++x) {
        v[x] = std::polar(scale, step * static_cast<double>((x * y0) % N));
    }
    return v;
}

CMatrix momentum_projector(std::size_t y0, std::size_t N) {
    const CVector k = momentum_state(y0, N);
    return outer(k, k);
}

CMatrix full_kernel(const FullSpaceConfig &cfg) {
    cfg.validate();
    const CMatrix g1 = grover_operator(CVector::basis(cfg.N, cfg.x0),
                                       cfg.phases.alpha, cfg.phases.beta);
    const CMatrix g2 = grover_operator(cfg.k0, cfg.phases.gamma, cfg.phases.delta);
    return mat_mul(g2, g1);
}

CMatrix dft_conjugate(const CMatrix &m) {
    if (!m.is_square()) {
        fail(ErrorKind::Shape, "DFT conjugation of a non-square matrix");
    }
    const CMatrix u = dft_matrix(m.rows());
    return mat_mul(mat_mul(u, m), adjoint(u));
}

std::pair<CVector, CVector> reduced_basis(std::size_t N, std::size_t x0) {
    if (N < 2) {
        fail(ErrorKind::InvalidSize, "reduced basis needs N >= 2");
    }
    CVector e0 = CVector::basis(N, x0);
    CVector perp(std::vector<Complex>(N, 1.0 / std::sqrt(static_cast<double>(N - 1))));
    perp[x0] = 0.0;
    return {std::move(e0), std::move(perp)};
}

std::pair<CVector, CVector> extended_basis(const ExtendedAmplitudes &k0) {
    const std::size_t n = k0.size();
    const double c = std::sqrt(1.0 - k0.alpha1() * k0.alpha1());
    CVector perp(n);
    for (std::size_t i = 1; i < n; ++i) {
        perp[i] = k0.amps()[i] / c;
    }
    return {CVector::basis(n, 0), std::move(perp)};
}

CMatrix restrict_to(const CMatrix &m, const CVector &e0, const CVector &e1) {
    const CVector m0 = mat_apply(m, e0);
    const CVector m1 = mat_apply(m, e1);
    return CMatrix{{inner(e0, m0), inner(e0, m1)}, {inner(e1, m0), inner(e1, m1)}};
}

} // namespace groverlab
