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
#include "groverlab/spectral.hpp"

#include <cmath>
#include <numbers>

#include "groverlab/parallel.hpp"

namespace groverlab {

namespace {

using std::numbers::pi;

constexpr double kDegenerateTol = kExactTol;
constexpr double kAxisTol = 1e-12;

double principal_arg(Complex z) {
    const double a = std::arg(z);
    return a == -pi ? pi : a;
}

/// Principal square root with values on the branch cut (imaginary part lost
/// in rounding) sent to the positive imaginary axis.
Complex principal_sqrt(Complex z) {
    if (std::abs(z.imag()) <= 1e-14 * std::abs(z)) {
        z = {z.real(), 0.0};
    }
    return std::sqrt(z);
}

CVector unit_with_real_tail(Complex first, Complex second) {
    const double n = std::hypot(std::abs(first), std::abs(second));
    Complex phase = 1.0;
    if (std::abs(second) > 0.0) {
        phase = std::conj(second) / std::abs(second);
    } else if (std::abs(first) > 0.0) {
        phase = std::conj(first) / std::abs(first);
    }
    CVector v{first * phase / n, second * phase / n};
    v[1] = v[1].real();
    return v;
}

CVector eigvec_for(const CMatrix &k, Complex zeta) {
    // Rows of (K - zeta I) annihilate the eigenvector; take the better
    // conditioned of the two null-vector candidates.
    const Complex a = k(0, 0);
    const Complex b = k(0, 1);
    const Complex c = k(1, 0);
    const Complex d = k(1, 1);
    const Complex u0 = b;
    const Complex u1 = zeta - a;
    const Complex w0 = zeta - d;
    const Complex w1 = c;
    if (std::norm(u0) + std::norm(u1) >= std::norm(w0) + std::norm(w1)) {
        return unit_with_real_tail(u0, u1);
    }
    return unit_with_real_tail(w0, w1);
}

} // namespace

SpectralData eigensystem(const CMatrix &k, std::optional<std::size_t> list_size) {
    if (k.rows() != 2 || k.cols() != 2) {
        fail(ErrorKind::Shape, "eigensystem expects a 2x2 kernel");
    }
    SpectralData s;
    s.detK = det2(k);
    s.trK = trace(k);
    // (Tr/2)^2 - Det rewritten without the cancellation between its terms.
    const Complex half_diff = (k(0, 0) - k(1, 1)) / 2.0;
    const Complex root = principal_sqrt(half_diff * half_diff + k(0, 1) * k(1, 0));
    s.zeta1 = s.trK / 2.0 - root;
    s.zeta2 = s.trK / 2.0 + root;
    s.omega1 = principal_arg(s.zeta1);
    s.omega2 = principal_arg(s.zeta2);
    if (list_size) {
        s.A = static_cast<double>(*list_size) * (k(0, 0) - k(1, 1));
    }

    if (std::abs(s.zeta1 - s.zeta2) <= kDegenerateTol) {
        s.degenerate = true;
        s.kappa1 = CVector::basis(2, 0);
        s.kappa2 = CVector::basis(2, 1);
        s.delta_omega = 0.0;
        s.signed_delta_omega = 0.0;
        return s;
    }

    s.kappa1 = eigvec_for(k, s.zeta1);
    s.kappa2 = eigvec_for(k, s.zeta2);
    s.signed_delta_omega = s.omega2 - s.omega1;
    const double d = std::abs(s.signed_delta_omega);
    s.delta_omega = std::min(d, 2.0 * pi - d);
    return s;
}

SpectralData eigensystem(const ReducedKernel &k) {
    return eigensystem(k.matrix, k.list_size);
}

CVector closed_form_eigvec(UnitPhase beta, UnitPhase delta, std::size_t N,
                           EigenBranch branch) {
    if (N < 2) {
        fail(ErrorKind::InvalidSize, "closed-form eigenvector needs N >= 2");
    }
    const Complex b = beta;
    const Complex d = delta;
    const Complex one_d = 1.0 + d;
    if (std::abs(one_d) <= kExactTol) {
        fail(ErrorKind::SingularDenominator, "delta = -1");
    }
    const double n = static_cast<double>(N);
    const Complex det = b * d;
    const Complex tr = -(b + d) + (1.0 + b) * one_d / n;
    const Complex a = (b - d) * n + (1.0 - b) * one_d;
    const Complex root = n * principal_sqrt(tr * tr - 4.0 * det);
    const Complex num = branch == EigenBranch::Minus ? a - root : a + root;
    return unit_with_real_tail(num / (2.0 * one_d * std::sqrt(n - 1.0)), 1.0);
}

namespace {

CVector asymptotic_impl(UnitPhase beta, UnitPhase delta, double scale) {
    const Complex b = beta;
    const Complex d = delta;
    if (std::abs(b - d) <= kExactTol) {
        const double r = 1.0 / std::numbers::sqrt2;
        return CVector{Complex{0.0, 1.0} * delta.sqrt() * r, r};
    }
    if (std::abs(1.0 + d) <= kExactTol) {
        fail(ErrorKind::SingularDenominator,
             "beta != delta with delta = -1 has no finite asymptotic direction");
    }
    return unit_with_real_tail((b - d) * scale / (1.0 + d), 1.0);
}

} // namespace

CVector asymptotic_eigvec(UnitPhase beta, UnitPhase delta, std::size_t N) {
    if (N < 2) {
        fail(ErrorKind::InvalidSize, "asymptotic eigenvector needs N >= 2");
    }
    return asymptotic_impl(beta, delta, std::sqrt(static_cast<double>(N)));
}

CVector asymptotic_eigvec_extended(UnitPhase beta, UnitPhase delta,
                                   double alpha1) {
    if (!(alpha1 > 0.0 && alpha1 < 1.0)) {
        fail(ErrorKind::DegenerateSubspace, "alpha1 must lie in (0, 1)");
    }
    return asymptotic_impl(beta, delta, 1.0 / alpha1);
}

double delta_omega_asymptotic(UnitPhase delta, std::size_t N) {
    if (N == 0) {
        fail(ErrorKind::InvalidSize, "N must be positive");
    }
    const double re = delta.sqrt().real();
    if (re <= kExactTol) {
        fail(ErrorKind::DivergentPeriod, "phi = pi gives a vanishing phase gap");
    }
    return 4.0 * re / std::sqrt(static_cast<double>(N));
}

long optimal_steps_exact(const SpectralData &s) {
    if (s.degenerate || s.delta_omega <= 0.0) {
        fail(ErrorKind::DivergentPeriod, "degenerate spectrum has no period");
    }
    return static_cast<long>(std::floor(pi / s.delta_omega));
}

long optimal_steps_asymptotic(double phi, std::size_t N,
                              std::optional<double> alpha1) {
    if (!std::isfinite(phi)) {
        fail(ErrorKind::NonFinite, "phi");
    }
    if (std::abs(phi) >= pi) {
        fail(ErrorKind::DivergentPeriod, "phi = pi has no optimal step count");
    }
    const double denom = 4.0 * std::cos(phi / 2.0);
    if (alpha1) {
        if (!(*alpha1 > 0.0 && *alpha1 < 1.0)) {
            fail(ErrorKind::DegenerateSubspace, "alpha1 must lie in (0, 1)");
        }
        return static_cast<long>(std::floor(pi / (*alpha1 * denom)));
    }
    if (N == 0) {
        fail(ErrorKind::InvalidSize, "N must be positive");
    }
    return static_cast<long>(
        std::floor(pi * std::sqrt(static_cast<double>(N)) / denom));
}

double stability_expansion(double dphi, std::size_t N) {
    return (pi / 4.0) * (1.0 + 0.125 * dphi * dphi) *
           std::sqrt(static_cast<double>(N));
}

AxisAngle su2_decompose(const CMatrix &k) {
    if (k.rows() != 2 || k.cols() != 2) {
        fail(ErrorKind::Shape, "su2_decompose expects a 2x2 matrix");
    }
    AxisAngle out;
    out.global_phase = principal_arg(det2(k)) / 2.0;
    const Complex unphase = std::polar(1.0, -out.global_phase);
    const Complex a = unphase * k(0, 0);
    const Complex b = unphase * k(0, 1);
    const Complex c = unphase * k(1, 0);
    const Complex d = unphase * k(1, 1);

    // a = cos + i sin n_z, b = sin (n_y + i n_x), c = sin (-n_y + i n_x).
    const double cos_part = (a + d).real() / 2.0;
    const std::array<double, 3> v{(b + c).imag() / 2.0, (b - c).real() / 2.0,
                                  (a - d).imag() / 2.0};
    const double sin_part = std::hypot(v[0], v[1], v[2]);
    out.angle = std::atan2(sin_part, cos_part);
    if (sin_part > kAxisTol) {
        out.axis = {v[0] / sin_part, v[1] / sin_part, v[2] / sin_part};
        out.axis_defined = true;
    }
    return out;
}

CMatrix su2_exp(double angle, const std::array<double, 3> &axis) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const auto [nx, ny, nz] = axis;
    return CMatrix{{Complex{c, s * nz}, Complex{s * ny, s * nx}},
                   {Complex{-s * ny, s * nx}, Complex{c, -s * nz}}};
}

CMatrix su2_compose(const AxisAngle &aa) {
    return std::polar(1.0, aa.global_phase) * su2_exp(aa.angle, aa.axis);
}

FactorAxes grover_factor_axes(std::size_t N) {
    if (N < 2) {
        fail(ErrorKind::InvalidSize, "factor axes need N >= 2");
    }
    const double n = static_cast<double>(N);
    const CVector k0{1.0 / std::sqrt(n), std::sqrt((n - 1.0) / n)};
    const Complex i{0.0, 1.0};
    const CMatrix ig1 = i * grover_operator(CVector::basis(2, 0), -1.0, 1.0);
    const CMatrix ig2 = i * grover_operator(k0, -1.0, 1.0);
    const AxisAngle f1 = su2_decompose(ig1);
    const AxisAngle f2 = su2_decompose(ig2);
    return {f1.angle, f1.axis, f2.angle, f2.axis};
}

namespace {

bool same_angle_mod_2pi(double x, double y) {
    const double d = std::remainder(x - y, 2.0 * pi);
    return std::abs(d) <= 1e-12;
}

} // namespace

std::vector<ManifoldPoint> kernel_manifold_points(std::span<const double> grid1,
                                                  std::span<const double> grid2,
                                                  std::size_t N,
                                                  unsigned threads) {
    if (grid1.empty() || grid2.empty()) {
        return {};
    }
    const FactorAxes axes = grover_factor_axes(N);
    const std::size_t cols = grid2.size();
    return parallel_map<ManifoldPoint>(
        grid1.size() * cols, threads, [&](std::size_t idx) {
            ManifoldPoint p;
            p.angle1 = grid1[idx / cols];
            p.angle2 = grid2[idx % cols];
            // G2 G1 = (-i)(iG2) (-i)(iG1); the two -i combine to -1.
            const CMatrix k = Complex{-1.0, 0.0} *
                              mat_mul(su2_exp(p.angle2, axes.axis2),
                                      su2_exp(p.angle1, axes.axis1));
            p.kernel = su2_decompose(k);
            p.grover_point = same_angle_mod_2pi(p.angle1, axes.angle1) &&
                             same_angle_mod_2pi(p.angle2, axes.angle2);
            p.equal_angles = same_angle_mod_2pi(p.angle1, p.angle2);
            return p;
        });
}

} // namespace groverlab
