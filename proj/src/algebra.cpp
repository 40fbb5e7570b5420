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
#include "groverlab/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace groverlab {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidSize:
        return "invalid size";
    case ErrorKind::Shape:
        return "shape mismatch";
    case ErrorKind::Normalization:
        return "normalization";
    case ErrorKind::Index:
        return "index out of range";
    case ErrorKind::DegenerateSubspace:
        return "degenerate subspace";
    case ErrorKind::DivergentPeriod:
        return "divergent period";
    case ErrorKind::SingularDenominator:
        return "singular denominator";
    case ErrorKind::Resource:
        return "resource limit";
    case ErrorKind::NonFinite:
        return "non-finite value";
    case ErrorKind::Io:
        return "I/O";
    case ErrorKind::Usage:
        return "usage";
    }
    return "unknown";
}

namespace {

void require_finite(std::span<const Complex> xs) {
    for (const auto &z : xs) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            fail(ErrorKind::NonFinite, "NaN or Inf entry");
        }
    }
}

} // namespace

CVector::CVector(std::size_t dim) : data_(dim) {}

CVector::CVector(std::initializer_list<Complex> entries) : data_(entries) {
    require_finite(data_);
}

CVector::CVector(std::vector<Complex> entries) : data_(std::move(entries)) {
    require_finite(data_);
}

double CVector::norm() const {
    double s = 0.0;
    for (const auto &z : data_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

bool CVector::is_normalized(double tol) const {
    double s = 0.0;
    for (const auto &z : data_) {
        s += std::norm(z);
    }
    return std::abs(s - 1.0) <= tol;
}

CVector CVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        fail(ErrorKind::Index, "basis index " + std::to_string(index) +
                                   " >= dimension " + std::to_string(dim));
    }
    CVector v(dim);
    v[index] = 1.0;
    return v;
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            fail(ErrorKind::Shape, "ragged matrix literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
    require_finite(data_);
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

bool operator==(const CVector &a, const CVector &b) {
    return std::ranges::equal(a.entries(), b.entries());
}

bool operator==(const CMatrix &a, const CMatrix &b) {
    return a.rows() == b.rows() && a.cols() == b.cols() &&
           std::ranges::equal(a.entries(), b.entries());
}

CVector operator*(Complex s, const CVector &v) {
    CVector out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        out[i] = s * v[i];
    }
    return out;
}

CVector operator+(const CVector &a, const CVector &b) {
    if (a.dim() != b.dim()) {
        fail(ErrorKind::Shape, "vector sum of different dimensions");
    }
    CVector out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

CMatrix operator*(Complex s, const CMatrix &m) {
    CMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(r, c) = s * m(r, c);
        }
    }
    return out;
}

namespace {

template <typename Op>
CMatrix elementwise(const CMatrix &a, const CMatrix &b, Op op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        fail(ErrorKind::Shape, "elementwise op on different shapes");
    }
    CMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r, c) = op(a(r, c), b(r, c));
        }
    }
    return out;
}

} // namespace

CMatrix operator+(const CMatrix &a, const CMatrix &b) {
    return elementwise(a, b, std::plus<>{});
}

CMatrix operator-(const CMatrix &a, const CMatrix &b) {
    return elementwise(a, b, std::minus<>{});
}

CMatrix dft_matrix(std::size_t n) {
    if (n == 0) {
        fail(ErrorKind::InvalidSize, "DFT size must be positive");
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    CMatrix u(n, n);
    for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t x = 0; x < n; ++x) {
            // Reduce the exponent mod N first; keeps the angle small.
            const auto k = static_cast<double>((x * y) % n);
            u(y, x) = std::polar(scale, step * k);
        }
    }
    return u;
}

CVector mat_apply(const CMatrix &m, const CVector &v) {
    if (m.cols() != v.dim()) {
        fail(ErrorKind::Shape, "matrix-vector product: " +
                                   std::to_string(m.cols()) + " columns vs " +
                                   std::to_string(v.dim()) + " entries");
    }
    CVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Complex acc = 0.0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            acc += m(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

CMatrix mat_mul(const CMatrix &a, const CMatrix &b) {
    if (a.cols() != b.rows()) {
        fail(ErrorKind::Shape, "matrix product: inner dimensions differ");
    }
    CMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex lhs = a(r, k);
            if (lhs == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); ++c) {
                out(r, c) += lhs * b(k, c);
            }
        }
    }
    return out;
}

CMatrix adjoint(const CMatrix &m) {
    CMatrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(c, r) = std::conj(m(r, c));
        }
    }
    return out;
}

CMatrix outer(const CVector &u, const CVector &v) {
    CMatrix out(u.dim(), v.dim());
    for (std::size_t r = 0; r < u.dim(); ++r) {
        for (std::size_t c = 0; c < v.dim(); ++c) {
            out(r, c) = u[r] * std::conj(v[c]);
        }
    }
    return out;
}

Complex inner(const CVector &u, const CVector &v) {
    if (u.dim() != v.dim()) {
        fail(ErrorKind::Shape, "inner product of different dimensions");
    }
    Complex acc = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) {
        acc += std::conj(u[i]) * v[i];
    }
    return acc;
}

Complex trace(const CMatrix &m) {
    if (!m.is_square()) {
        fail(ErrorKind::Shape, "trace of non-square matrix");
    }
    Complex acc = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        acc += m(i, i);
    }
    return acc;
}

Complex det2(const CMatrix &m) {
    if (m.rows() != 2 || m.cols() != 2) {
        fail(ErrorKind::Shape, "det2 expects a 2x2 matrix");
    }
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        fail(ErrorKind::Shape, "comparing matrices of different shapes");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

double max_abs_diff(const CVector &a, const CVector &b) {
    if (a.dim() != b.dim()) {
        fail(ErrorKind::Shape, "comparing vectors of different dimensions");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

double unitarity_residual(const CMatrix &m) {
    if (!m.is_square()) {
        fail(ErrorKind::Shape, "unitarity test on non-square matrix");
    }
    const std::size_t n = m.rows();
    double worst = 0.0;
    // (M^dagger M)_{ij} = sum_k conj(M_ki) M_kj, without forming the adjoint.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                acc += std::conj(m(k, i)) * m(k, j);
            }
            if (i == j) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

bool is_unitary(const CMatrix &m, double tol) {
    return unitarity_residual(m) <= tol;
}

bool is_hermitian(const CMatrix &m, double tol) {
    if (!m.is_square()) {
        fail(ErrorKind::Shape, "hermiticity test on non-square matrix");
    }
    return max_abs_diff(m, adjoint(m)) <= tol;
}

bool is_idempotent(const CMatrix &m, double tol) {
    if (!m.is_square()) {
        fail(ErrorKind::Shape, "idempotence test on non-square matrix");
    }
    return max_abs_diff(mat_mul(m, m), m) <= tol;
}

} // namespace groverlab
