// Copyright 2026 The Eigenlogic Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

/// @file linop.hpp
/// Dense complex linear algebra for the small Hilbert spaces used by the
/// logical observables: amplitude vectors, diagonal operators, density
/// matrices and Born-rule expectations.

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "eigenlogic/error.hpp"

namespace eigenlogic::linop {

using Complex = std::complex<double>;

/// Tolerance for algebraic identities (idempotence, hermiticity, trace).
inline constexpr double kIdentityTol = 1e-12;
/// Tolerance used when gating on state normalization.
inline constexpr double kNormTol = 1e-9;
/// Lowest eigenvalue still accepted as positive semidefinite.
inline constexpr double kPsdTol = 1e-10;

class ComplexVector {
  public:
    ComplexVector() = default;
    explicit ComplexVector(std::vector<Complex> amplitudes)
        : amplitudes_(std::move(amplitudes)) {
        if (amplitudes_.empty()) {
            throw DimensionError("ComplexVector: dimension must be positive");
        }
    }
    ComplexVector(std::initializer_list<Complex> amplitudes)
        : ComplexVector(std::vector<Complex>(amplitudes)) {}

    /// Canonical basis vector |index> of the given dimension.
    static ComplexVector basis(std::size_t dim, std::size_t index) {
        if (index >= dim) {
            throw DomainError("basis index " + std::to_string(index) +
                              " out of range for dimension " +
                              std::to_string(dim));
        }
        std::vector<Complex> amps(dim, Complex{0.0, 0.0});
        amps[index] = Complex{1.0, 0.0};
        return ComplexVector(std::move(amps));
    }

    [[nodiscard]] std::size_t dim() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] const Complex &operator[](std::size_t i) const {
        return amplitudes_[i];
    }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }

    [[nodiscard]] double norm_squared() const noexcept {
        double acc = 0.0;
        for (const auto &a : amplitudes_) {
            acc += std::norm(a);
        }
        return acc;
    }
    [[nodiscard]] double norm() const noexcept { return std::sqrt(norm_squared()); }

    bool operator==(const ComplexVector &) const = default;

  private:
    std::vector<Complex> amplitudes_;
};

/// A ComplexVector whose Euclidean norm is 1. Construction verifies the
/// norm and throws rather than renormalizing.
class QuantumState {
  public:
    explicit QuantumState(ComplexVector v, double tol = kNormTol)
        : vec_(std::move(v)) {
        if (std::abs(vec_.norm() - 1.0) > tol) {
            throw DomainError("state is not normalized (norm " +
                              std::to_string(vec_.norm()) + ")");
        }
    }
    QuantumState(std::initializer_list<Complex> amplitudes)
        : QuantumState(ComplexVector(amplitudes)) {}

    static QuantumState basis(std::size_t dim, std::size_t index) {
        return QuantumState(ComplexVector::basis(dim, index));
    }

    [[nodiscard]] std::size_t dim() const noexcept { return vec_.dim(); }
    [[nodiscard]] const Complex &operator[](std::size_t i) const { return vec_[i]; }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return vec_.amplitudes();
    }
    [[nodiscard]] const ComplexVector &vector() const noexcept { return vec_; }

    bool operator==(const QuantumState &) const = default;

  private:
    ComplexVector vec_;
};

/// Real diagonal operator in the canonical basis. Off-diagonal entries are
/// zero and not stored. All instances commute with each other.
class DiagonalOperator {
  public:
    DiagonalOperator() = default;
    explicit DiagonalOperator(std::vector<double> diagonal)
        : diag_(std::move(diagonal)) {
        if (diag_.empty()) {
            throw DimensionError("DiagonalOperator: dimension must be positive");
        }
    }
    DiagonalOperator(std::initializer_list<double> diagonal)
        : DiagonalOperator(std::vector<double>(diagonal)) {}

    static DiagonalOperator identity(std::size_t dim) {
        return DiagonalOperator(std::vector<double>(dim, 1.0));
    }
    static DiagonalOperator zero(std::size_t dim) {
        return DiagonalOperator(std::vector<double>(dim, 0.0));
    }

    [[nodiscard]] std::size_t dim() const noexcept { return diag_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return diag_[i]; }
    [[nodiscard]] std::span<const double> diagonal() const noexcept { return diag_; }

    /// d*d == d entrywise within tol.
    [[nodiscard]] bool is_idempotent(double tol = kIdentityTol) const noexcept {
        for (double d : diag_) {
            if (std::abs(d * d - d) > tol) {
                return false;
            }
        }
        return true;
    }

    friend DiagonalOperator operator+(const DiagonalOperator &a,
                                      const DiagonalOperator &b) {
        return zip(a, b, [](double x, double y) { return x + y; });
    }
    friend DiagonalOperator operator-(const DiagonalOperator &a,
                                      const DiagonalOperator &b) {
        return zip(a, b, [](double x, double y) { return x - y; });
    }
    /// Operator product; for diagonal operators this is entrywise.
    friend DiagonalOperator operator*(const DiagonalOperator &a,
                                      const DiagonalOperator &b) {
        return zip(a, b, [](double x, double y) { return x * y; });
    }
    friend DiagonalOperator operator*(double s, const DiagonalOperator &a) {
        std::vector<double> out(a.diag_);
        for (double &d : out) {
            d *= s;
        }
        return DiagonalOperator(std::move(out));
    }
    friend DiagonalOperator operator-(const DiagonalOperator &a) { return -1.0 * a; }

    bool operator==(const DiagonalOperator &) const = default;

  private:
    template <class Fn>
    static DiagonalOperator zip(const DiagonalOperator &a, const DiagonalOperator &b,
                                Fn fn) {
        if (a.dim() != b.dim()) {
            throw DimensionError("operator dimensions differ: " +
                                 std::to_string(a.dim()) + " vs " +
                                 std::to_string(b.dim()));
        }
        std::vector<double> out(a.dim());
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = fn(a.diag_[i], b.diag_[i]);
        }
        return DiagonalOperator(std::move(out));
    }

    std::vector<double> diag_;
};

/// Hermitian, unit-trace, positive semidefinite matrix (row-major storage).
class DensityMatrix {
  public:
    /// Validates hermiticity, unit trace and positivity.
    DensityMatrix(std::size_t dim, std::vector<Complex> entries)
        : dim_(dim), entries_(std::move(entries)) {
        if (dim_ == 0 || entries_.size() != dim_ * dim_) {
            throw DimensionError("DensityMatrix: expected " +
                                 std::to_string(dim_ * dim_) + " entries");
        }
        validate();
    }

    /// I/dim.
    static DensityMatrix maximally_mixed(std::size_t dim) {
        std::vector<Complex> e(dim * dim, Complex{0.0, 0.0});
        for (std::size_t i = 0; i < dim; ++i) {
            e[i * dim + i] = Complex{1.0 / static_cast<double>(dim), 0.0};
        }
        return DensityMatrix(dim, std::move(e));
    }

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] const Complex &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    [[nodiscard]] Complex trace() const noexcept {
        Complex t{0.0, 0.0};
        for (std::size_t i = 0; i < dim_; ++i) {
            t += entries_[i * dim_ + i];
        }
        return t;
    }

    /// rho*rho == rho within tol; true exactly for pure states.
    [[nodiscard]] bool is_idempotent(double tol = kPsdTol) const {
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                Complex acc{0.0, 0.0};
                for (std::size_t k = 0; k < dim_; ++k) {
                    acc += (*this)(i, k) * (*this)(k, j);
                }
                if (std::abs(acc - (*this)(i, j)) > tol) {
                    return false;
                }
            }
        }
        return true;
    }

    /// Ascending eigenvalues.
    [[nodiscard]] std::vector<double> eigenvalues() const {
        Eigen::MatrixXcd m(static_cast<Eigen::Index>(dim_),
                           static_cast<Eigen::Index>(dim_));
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    (*this)(i, j);
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
            m, Eigen::EigenvaluesOnly);
        const auto &ev = solver.eigenvalues();
        return {ev.data(), ev.data() + ev.size()};
    }

  private:
    void validate() const {
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = i; j < dim_; ++j) {
                if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) >
                    kIdentityTol) {
                    throw DomainError("DensityMatrix: not Hermitian");
                }
            }
        }
        if (std::abs(trace() - Complex{1.0, 0.0}) > kIdentityTol) {
            throw DomainError("DensityMatrix: trace is not 1");
        }
        for (double ev : eigenvalues()) {
            if (ev < -kPsdTol) {
                throw DomainError("DensityMatrix: not positive semidefinite");
            }
        }
    }

    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// Kronecker product; entry i*dim(b)+j is a_i*b_j.
inline DiagonalOperator kron(const DiagonalOperator &a, const DiagonalOperator &b) {
    std::vector<double> out;
    out.reserve(a.dim() * b.dim());
    for (double x : a.diagonal()) {
        for (double y : b.diagonal()) {
            out.push_back(x * y);
        }
    }
    return DiagonalOperator(std::move(out));
}

inline ComplexVector kron(const ComplexVector &a, const ComplexVector &b) {
    std::vector<Complex> out;
    out.reserve(a.dim() * b.dim());
    for (const auto &x : a.amplitudes()) {
        for (const auto &y : b.amplitudes()) {
            out.push_back(x * y);
        }
    }
    return ComplexVector(std::move(out));
}

/// Product state; the first factor is the most significant index.
inline QuantumState kron(const QuantumState &a, const QuantumState &b) {
    return QuantumState(kron(a.vector(), b.vector()));
}

/// Tensor product of a non-empty list of states, left to right.
inline QuantumState kron_all(std::span<const QuantumState> states) {
    if (states.empty()) {
        throw DimensionError("kron_all: empty state list");
    }
    QuantumState acc = states.front();
    for (std::size_t i = 1; i < states.size(); ++i) {
        acc = kron(acc, states[i]);
    }
    return acc;
}

/// rho = |psi><psi|. States off by more than kNormTol are rejected; drift
/// below that gate is divided out so the trace is 1 to kIdentityTol.
inline DensityMatrix density_from_state(const ComplexVector &psi) {
    if (std::abs(psi.norm() - 1.0) > kNormTol) {
        throw DomainError("density_from_state: state is not normalized");
    }
    const std::size_t n = psi.dim();
    const double scale = 1.0 / psi.norm_squared();
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            e[i * n + j] = psi[i] * std::conj(psi[j]) * scale;
        }
    }
    return DensityMatrix(n, std::move(e));
}

inline DensityMatrix density_from_state(const QuantumState &psi) {
    return density_from_state(psi.vector());
}

/// Born rule <psi|F|psi> = sum_i |psi_i|^2 d_i.
inline double expectation(const QuantumState &psi, const DiagonalOperator &f) {
    if (psi.dim() != f.dim()) {
        throw DimensionError("expectation: state dimension " +
                             std::to_string(psi.dim()) + " vs operator dimension " +
                             std::to_string(f.dim()));
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < f.dim(); ++i) {
        acc += std::norm(psi[i]) * f[i];
    }
    return acc;
}

/// Tr(rho F) = sum_i rho_ii d_i.
inline double expectation_rho(const DensityMatrix &rho, const DiagonalOperator &f) {
    if (rho.dim() != f.dim()) {
        throw DimensionError("expectation_rho: matrix dimension " +
                             std::to_string(rho.dim()) + " vs operator dimension " +
                             std::to_string(f.dim()));
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < f.dim(); ++i) {
        acc += rho(i, i).real() * f[i];
    }
    return acc;
}

} // namespace eigenlogic::linop
