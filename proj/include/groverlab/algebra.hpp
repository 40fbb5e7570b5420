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
 * Dense complex vectors and matrices sized at run time, plus the unitary
 * discrete Fourier transform. Storage is row-major; everything is double
 * precision.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "groverlab/error.hpp"

namespace groverlab {

using Complex = std::complex<double>;

/// Tolerance for identities that hold exactly in exact arithmetic.
inline constexpr double kExactTol = 1e-12;
/// Tolerance for results that pass through several composed operations.
inline constexpr double kPipelineTol = 1e-10;

class CVector {
  public:
    CVector() = default;
    explicit CVector(std::size_t dim);
    CVector(std::initializer_list<Complex> entries);
    explicit CVector(std::vector<Complex> entries);

    [[nodiscard]] std::size_t dim() const noexcept { return data_.size(); }
    [[nodiscard]] Complex operator[](std::size_t i) const { return data_[i]; }
    Complex &operator[](std::size_t i) { return data_[i]; }

    [[nodiscard]] std::span<const Complex> entries() const noexcept {
        return data_;
    }
    [[nodiscard]] std::span<Complex> entries() noexcept { return data_; }

    [[nodiscard]] double norm() const;
    [[nodiscard]] bool is_normalized(double tol = kExactTol) const;

    static CVector basis(std::size_t dim, std::size_t index);

  private:
    std::vector<Complex> data_;
};

class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols);
    /// Rows given as nested lists, e.g. {{0, -1}, {1, 0}}.
    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    [[nodiscard]] Complex operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    Complex &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }

    [[nodiscard]] std::span<const Complex> entries() const noexcept {
        return data_;
    }

    static CMatrix identity(std::size_t n);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

bool operator==(const CVector &a, const CVector &b);
bool operator==(const CMatrix &a, const CMatrix &b);

CVector operator*(Complex s, const CVector &v);
CVector operator+(const CVector &a, const CVector &b);
CMatrix operator*(Complex s, const CMatrix &m);
CMatrix operator+(const CMatrix &a, const CMatrix &b);
CMatrix operator-(const CMatrix &a, const CMatrix &b);

/// Entry (y, x) is exp(2*pi*i*x*y/N)/sqrt(N).
[[nodiscard]] CMatrix dft_matrix(std::size_t n);

[[nodiscard]] CVector mat_apply(const CMatrix &m, const CVector &v);
[[nodiscard]] CMatrix mat_mul(const CMatrix &a, const CMatrix &b);
[[nodiscard]] CMatrix adjoint(const CMatrix &m);
/// u * v^dagger.
[[nodiscard]] CMatrix outer(const CVector &u, const CVector &v);
/// <u|v>, conjugate-linear in the first argument.
[[nodiscard]] Complex inner(const CVector &u, const CVector &v);

[[nodiscard]] Complex trace(const CMatrix &m);
[[nodiscard]] Complex det2(const CMatrix &m);

/// Largest entrywise modulus of a - b.
[[nodiscard]] double max_abs_diff(const CMatrix &a, const CMatrix &b);
[[nodiscard]] double max_abs_diff(const CVector &a, const CVector &b);

/// Max-norm residual of M^dagger M - I.
[[nodiscard]] double unitarity_residual(const CMatrix &m);
[[nodiscard]] bool is_unitary(const CMatrix &m, double tol = kExactTol);
[[nodiscard]] bool is_hermitian(const CMatrix &m, double tol = kExactTol);
[[nodiscard]] bool is_idempotent(const CMatrix &m, double tol = kExactTol);

} // namespace groverlab
