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
#include <random>

#include "catch_amalgamated.hpp"

#include "groverlab/kernel.hpp"
#include "oracles.hpp"

using namespace groverlab;
using std::numbers::pi;

namespace {

ErrorKind kind_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("expected groverlab::Error");
    return ErrorKind::Usage;
}

double diff_to_oracle(const CMatrix &k, const oracle::Mat2 &o) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            worst = std::max(worst, std::abs(k(i, j) - o[i][j]));
        }
    }
    return worst;
}

} // namespace

TEST_CASE("UnitPhase", "[kernel]") {
    CHECK(UnitPhase::from_angle(pi).value() == Complex{-1.0, 0.0});
    CHECK(UnitPhase::from_angle(pi).angle() == pi);
    CHECK(UnitPhase::from_angle(-pi).angle() == pi);
    CHECK(UnitPhase::from_angle(pi / 2).value() == Complex{0.0, 1.0});
    // principal root of i
    CHECK(std::abs(UnitPhase::from_angle(pi / 2).sqrt() - std::polar(1.0, pi / 4)) < 1e-15);
    // renormalized within 1e-9, rejected beyond
    CHECK(std::abs(std::abs(UnitPhase::from_complex({1.0 + 5e-10, 0.0}).value()) - 1.0) <
          1e-15);
    CHECK(kind_of([] { (void)UnitPhase::from_complex({1.1, 0.0}); }) ==
          ErrorKind::Normalization);
    const auto g = GroverPhases::grover();
    CHECK(g.alpha.value() == Complex{-1.0, 0.0});
    CHECK(g.gamma.value() == Complex{-1.0, 0.0});
    CHECK(g.phi() == 0.0);
}

TEST_CASE("grover_operator", "[kernel]") {
    const CVector e0 = CVector::basis(2, 0);
    CHECK(max_abs_diff(grover_operator(e0, -1.0, 1.0), CMatrix{{-1, 0}, {0, 1}}) == 0.0);
    CHECK(max_abs_diff(grover_operator(e0, 1.0, 1.0), CMatrix::identity(2)) == 0.0);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(max_abs_diff(grover_operator(CVector{r, r}, -1.0, 1.0), CMatrix{{0, -1}, {-1, 0}}) <=
          1e-15);
    CHECK(kind_of([] { (void)grover_operator(CVector{1.0, 1.0}, -1.0, 1.0); }) ==
          ErrorKind::Normalization);

    SECTION("involution with lam1=-1, lam2=1") {
        std::mt19937_64 rng(3);
        std::normal_distribution<double> g;
        for (std::size_t n = 1; n <= 12; ++n) {
            std::vector<Complex> raw(n);
            for (auto &z : raw) {
                z = {g(rng), g(rng)};
            }
            CVector p(raw);
            p = Complex{1.0 / p.norm(), 0.0} * p;
            const CMatrix gm = grover_operator(p, -1.0, 1.0);
            CHECK(max_abs_diff(mat_mul(gm, gm), CMatrix::identity(n)) <= 1e-12);
        }
    }
}

TEST_CASE("reduced_kernel examples", "[kernel]") {
    const UnitPhase one;
    const UnitPhase minus = UnitPhase::from_angle(pi);
    CHECK(max_abs_diff(reduced_kernel(one, one, 2).matrix, CMatrix{{0, -1}, {1, 0}}) <= 1e-15);
    const double h = std::sqrt(3.0) / 2.0;
    CHECK(max_abs_diff(reduced_kernel(one, one, 4).matrix, CMatrix{{-0.5, -h}, {h, -0.5}}) <=
          1e-15);
    for (std::size_t n : {2, 7, 1000}) {
        CHECK(max_abs_diff(reduced_kernel(minus, minus, n).matrix, CMatrix::identity(2)) == 0.0);
    }
    CHECK(reduced_kernel(one, one, 9).list_size == 9u);
    CHECK(kind_of([] { (void)reduced_kernel(UnitPhase{}, UnitPhase{}, 1); }) ==
          ErrorKind::InvalidSize);
}

TEST_CASE("reduced_kernel equals the factor product and has Det = beta delta",
          "[kernel][property]") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const Complex b = oracle::random_phase(rng);
        const Complex d = oracle::random_phase(rng);
        const std::size_t n = 2 + rng() % 255;
        const auto k = reduced_kernel(UnitPhase::from_complex(b), UnitPhase::from_complex(d), n);
        INFO("N=" << n);
        CHECK(diff_to_oracle(k.matrix, oracle::family_kernel(b, d, n)) <= 1e-13);
        CHECK(is_unitary(k.matrix, 1e-12));
        CHECK(std::abs(det2(k.matrix) - b * d) <= 1e-12);
    }
}

TEST_CASE("extended_reduced_kernel", "[kernel]") {
    const UnitPhase one;
    const UnitPhase minus = UnitPhase::from_angle(pi);
    const double h = std::sqrt(3.0) / 2.0;
    CHECK(max_abs_diff(extended_reduced_kernel(one, one, 0.5).matrix,
                       CMatrix{{-0.5, -h}, {h, -0.5}}) <= 1e-15);
    for (double a1 : {0.1, 0.5, 0.9}) {
        CHECK(max_abs_diff(extended_reduced_kernel(minus, minus, a1).matrix,
                           CMatrix::identity(2)) == 0.0);
    }
    CHECK(kind_of([] { (void)extended_reduced_kernel(UnitPhase{}, UnitPhase{}, 0.0); }) ==
          ErrorKind::DegenerateSubspace);
    CHECK(kind_of([] { (void)extended_reduced_kernel(UnitPhase{}, UnitPhase{}, 1.0); }) ==
          ErrorKind::DegenerateSubspace);

    SECTION("alpha1 = 1/sqrt(N) reproduces the standard kernel") {
        std::mt19937_64 rng(5);
        for (std::size_t n = 2; n <= 256; ++n) {
            const auto b = UnitPhase::from_complex(oracle::random_phase(rng));
            const auto d = UnitPhase::from_complex(oracle::random_phase(rng));
            const auto ke = extended_reduced_kernel(b, d, 1.0 / std::sqrt(double(n)));
            CHECK(max_abs_diff(ke.matrix, reduced_kernel(b, d, n).matrix) <= 1e-12);
            CHECK(is_unitary(ke.matrix, 1e-12));
        }
    }
}

TEST_CASE("extended kernel is the restriction of the full kernel", "[kernel]") {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> g;
    for (std::size_t n : {3, 5, 16, 40}) {
        std::vector<Complex> raw(n);
        for (auto &z : raw) {
            z = {g(rng), g(rng)};
        }
        raw[0] = std::abs(raw[0]);
        CVector v(raw);
        const ExtendedAmplitudes amps(Complex{1.0 / v.norm(), 0.0} * v);
        const auto beta = UnitPhase::from_complex(oracle::random_phase(rng));
        const auto delta = UnitPhase::from_complex(oracle::random_phase(rng));
        FullSpaceConfig cfg{n, 0, amps.amps(), GroverPhases::family(beta, delta)};
        const auto [e0, e1] = extended_basis(amps);
        const CMatrix k = full_kernel(cfg);
        INFO("N=" << n);
        CHECK(max_abs_diff(restrict_to(k, e0, e1),
                           extended_reduced_kernel(beta, delta, amps).matrix) <= 1e-12);
        // span{x0, x_perp} is invariant: K e1 has no component outside it.
        const CVector ke1 = mat_apply(k, e1);
        const CVector back = inner(e0, ke1) * e0 + inner(e1, ke1) * e1;
        CHECK(max_abs_diff(ke1, back) <= 1e-12);
    }
    CHECK_THROWS_AS(ExtendedAmplitudes(CVector{1.0, 0.0}), Error);
    CHECK_THROWS_AS(ExtendedAmplitudes(CVector{Complex{0.0, 0.6}, 0.8}), Error);
}

TEST_CASE("momentum_projector", "[kernel]") {
    CHECK(max_abs_diff(momentum_projector(0, 3),
                       CMatrix{{1. / 3, 1. / 3, 1. / 3},
                               {1. / 3, 1. / 3, 1. / 3},
                               {1. / 3, 1. / 3, 1. / 3}}) <= 1e-15);
    CHECK(max_abs_diff(momentum_projector(1, 2), CMatrix{{0.5, -0.5}, {-0.5, 0.5}}) <= 1e-15);
    for (std::size_t n : {1, 2, 5, 12}) {
        for (std::size_t y0 = 0; y0 < n; ++y0) {
            const CMatrix p = momentum_projector(y0, n);
            CHECK(std::abs(trace(p) - 1.0) <= 1e-12);
            CHECK(is_idempotent(p, 1e-12));
            CHECK(is_hermitian(p, 1e-12));
        }
    }
    CHECK(kind_of([] { (void)momentum_projector(3, 3); }) == ErrorKind::Index);
}

TEST_CASE("full_kernel", "[kernel]") {
    SECTION("N=2 Grover fixing is the 90 degree rotation") {
        FullSpaceConfig cfg{2, 0, uniform_state(2), GroverPhases::grover()};
        CHECK(max_abs_diff(full_kernel(cfg), CMatrix{{0, -1}, {1, 0}}) <= 1e-15);
    }
    SECTION("all phases one gives the identity") {
        GroverPhases ones{UnitPhase{}, UnitPhase{}, UnitPhase{}, UnitPhase{}};
        FullSpaceConfig cfg{5, 2, momentum_state(3, 5), ones};
        CHECK(max_abs_diff(full_kernel(cfg), CMatrix::identity(5)) <= 1e-15);
    }
    SECTION("restriction to the reduced basis at N=8, x0=3") {
        FullSpaceConfig cfg{8, 3, uniform_state(8), GroverPhases::grover()};
        const auto [e0, e1] = reduced_basis(8, 3);
        CHECK(max_abs_diff(restrict_to(full_kernel(cfg), e0, e1),
                           reduced_kernel(UnitPhase{}, UnitPhase{}, 8).matrix) <= 1e-12);
    }
    SECTION("factorization U G_{x=0} U^-1 G_{x0}") {
        for (std::size_t n : {2, 4, 8, 16}) {
            const std::size_t x0 = n / 2;
            FullSpaceConfig cfg{n, x0, uniform_state(n), GroverPhases::grover()};
            const CMatrix g0 = grover_operator(CVector::basis(n, 0), -1.0, 1.0);
            const CMatrix gx0 = grover_operator(CVector::basis(n, x0), -1.0, 1.0);
            CHECK(max_abs_diff(mat_mul(dft_conjugate(g0), gx0), full_kernel(cfg)) <= 1e-12);
        }
    }
    SECTION("random kernels are unitary") {
        std::mt19937_64 rng(8);
        for (std::size_t n : {2, 3, 17, 64, 256}) {
            auto ph = [&] { return UnitPhase::from_complex(oracle::random_phase(rng)); };
            FullSpaceConfig cfg{n, n - 1, momentum_state(n / 3, n), {ph(), ph(), ph(), ph()}};
            CHECK(is_unitary(full_kernel(cfg), 1e-12));
        }
    }
    SECTION("invalid configs") {
        FullSpaceConfig bad{4, 4, uniform_state(4), GroverPhases::grover()};
        CHECK(kind_of([&] { (void)full_kernel(bad); }) == ErrorKind::Index);
        bad.x0 = 0;
        bad.k0 = CVector{1.0, 1.0, 0.0, 0.0};
        CHECK(kind_of([&] { (void)full_kernel(bad); }) == ErrorKind::Normalization);
    }
}

TEST_CASE("dft_conjugate", "[kernel]") {
    const CMatrix p0 = outer(CVector::basis(4, 0), CVector::basis(4, 0));
    CHECK(max_abs_diff(dft_conjugate(p0), momentum_projector(0, 4)) <= 1e-12);
    CHECK(max_abs_diff(dft_conjugate(CMatrix::identity(4)), CMatrix::identity(4)) <= 1e-12);
    const CMatrix p1 = outer(CVector::basis(4, 1), CVector::basis(4, 1));
    CHECK(max_abs_diff(dft_conjugate(p1), momentum_projector(1, 4)) <= 1e-12);
    // Entry form exp(2 pi i (x - x') y0 / N)/N.
    const CMatrix mp = momentum_projector(1, 4);
    CHECK(std::abs(mp(1, 0) - Complex{0.0, 0.25}) <= 1e-15);
    CHECK_THROWS_AS(dft_conjugate(CMatrix(2, 3)), Error);
}
