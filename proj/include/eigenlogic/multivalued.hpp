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

/// @file multivalued.hpp
/// Three-valued observables: the angular-momentum alphabet {+1,0,-1} and its
/// projector polynomials, the {0,1,2} dictators and Min/Max connectives, and
/// multivariate interpolation expressing any observable as a polynomial in
/// dictators.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "eigenlogic/binary.hpp"
#include "eigenlogic/error.hpp"
#include "eigenlogic/linop.hpp"

namespace eigenlogic {

/// A = L_z / hbar = diag(+1, 0, -1).
inline LogicalObservable angular_momentum_observable() {
    return dictator(Alphabet::angular_momentum(), 1, 0);
}

struct TriProjectors {
    LogicalObservable plus;  ///< eigenvalue +1
    LogicalObservable zero;  ///< eigenvalue 0
    LogicalObservable minus; ///< eigenvalue -1
};

/// Pi_{+1} = A(A+I)/2, Pi_0 = I - A^2, Pi_{-1} = A(A-I)/2.
inline TriProjectors tri_projectors(const LogicalObservable &a) {
    for (double d : a.op().diagonal()) {
        if (d != 1.0 && d != 0.0 && d != -1.0) {
            throw DomainError("tri_projectors: eigenvalue " + std::to_string(d) +
                              " not in {+1, 0, -1}");
        }
    }
    const auto &A = a.op();
    const auto I = DiagonalOperator::identity(a.dim());
    auto wrap = [&](DiagonalOperator op) {
        return LogicalObservable(std::move(op), a.inputs(), a.arity(),
                                 Alphabet::boolean());
    };
    return {wrap(0.5 * (A * (A + I))), wrap(I - A * A), wrap(0.5 * (A * (A - I)))};
}

struct DictatorPair {
    LogicalObservable u; ///< first (most significant) argument
    LogicalObservable v; ///< second argument
};

/// U and V over {0,1,2} with two arguments.
inline DictatorPair dictators_3() {
    return {dictator(Alphabet::ternary(), 2, 0), dictator(Alphabet::ternary(), 2, 1)};
}

inline LogicalObservable min3() {
    return observable_from_truth_table(TruthTable::from_function(
        Alphabet::ternary(), 2,
        [](std::span<const int> x) { return std::min(x[0], x[1]); }));
}

inline LogicalObservable max3() {
    return observable_from_truth_table(TruthTable::from_function(
        Alphabet::ternary(), 2,
        [](std::span<const int> x) { return std::max(x[0], x[1]); }));
}

/// The spectral development generalizes unchanged to m letters.
inline LogicalObservable observable_from_truth_table_m(const TruthTable &t) {
    return observable_from_truth_table(t);
}

/// Multivariate polynomial sum_e c_e x_1^e_1 ... x_n^e_n with every exponent
/// at most m-1. Only nonzero coefficients are stored.
class PolynomialExpansion {
  public:
    using Exponents = std::vector<std::size_t>;

    PolynomialExpansion(std::size_t m, std::size_t arity) : m_(m), arity_(arity) {}

    [[nodiscard]] std::size_t m() const noexcept { return m_; }
    [[nodiscard]] std::size_t arity() const noexcept { return arity_; }
    [[nodiscard]] const std::map<Exponents, double> &coefficients() const noexcept {
        return coeffs_;
    }

    [[nodiscard]] double coefficient(const Exponents &e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? 0.0 : it->second;
    }

    void set(const Exponents &e, double c) {
        if (e.size() != arity_) {
            throw DimensionError("exponent tuple length differs from arity");
        }
        for (auto k : e) {
            if (k >= m_) {
                throw DomainError("exponent " + std::to_string(k) + " exceeds m-1");
            }
        }
        if (c == 0.0) {
            coeffs_.erase(e);
        } else {
            coeffs_[e] = c;
        }
    }

    [[nodiscard]] double evaluate(std::span<const double> point) const {
        if (point.size() != arity_) {
            throw DimensionError("evaluation point length differs from arity");
        }
        double acc = 0.0;
        for (const auto &[e, c] : coeffs_) {
            double term = c;
            for (std::size_t k = 0; k < arity_; ++k) {
                term *= std::pow(point[k], static_cast<double>(e[k]));
            }
            acc += term;
        }
        return acc;
    }

    /// Human-readable form with variables x1..xn, e.g. "x1*x2 - 0.5*x1^2".
    [[nodiscard]] std::string to_string(std::span<const std::string> names = {}) const {
        if (coeffs_.empty()) {
            return "0";
        }
        // Lower total degree first; within a degree, earlier variables first.
        std::vector<std::pair<Exponents, double>> terms(coeffs_.begin(), coeffs_.end());
        auto degree = [](const Exponents &e) {
            return std::accumulate(e.begin(), e.end(), std::size_t{0});
        };
        std::stable_sort(terms.begin(), terms.end(), [&](const auto &a, const auto &b) {
            const auto da = degree(a.first), db = degree(b.first);
            return da != db ? da < db : a.first > b.first;
        });
        std::string out;
        bool first = true;
        for (const auto &[e, c] : terms) {
            std::string mono;
            for (std::size_t k = 0; k < arity_; ++k) {
                if (e[k] == 0) {
                    continue;
                }
                if (!mono.empty()) {
                    mono += "*";
                }
                mono += k < names.size() ? names[k] : "x" + std::to_string(k + 1);
                if (e[k] > 1) {
                    mono += "^" + std::to_string(e[k]);
                }
            }
            const double mag = std::abs(c);
            std::string num = format_number(mag);
            if (first) {
                out += c < 0 ? "-" : "";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (mono.empty()) {
                out += num;
            } else if (mag == 1.0) {
                out += mono;
            } else {
                out += num + "*" + mono;
            }
            first = false;
        }
        return out;
    }

  private:
    static std::string format_number(double x) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", x);
        return buf;
    }

    std::size_t m_;
    std::size_t arity_;
    std::map<Exponents, double> coeffs_;
};

namespace detail {

/// Solves a x = b in place by Gaussian elimination with partial pivoting.
/// a is row-major n x n.
inline std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) {
                pivot = r;
            }
        }
        if (std::abs(a[pivot * n + col]) < 1e-14) {
            throw Error("interpolation system is singular");
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a[col * n + c], a[pivot * n + c]);
            }
            std::swap(b[col], b[pivot]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = a[r * n + col] / a[col * n + col];
            if (factor == 0.0) {
                continue;
            }
            for (std::size_t c = col; c < n; ++c) {
                a[r * n + c] -= factor * a[col * n + c];
            }
            b[r] -= factor * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double acc = b[i];
        for (std::size_t c = i + 1; c < n; ++c) {
            acc -= a[i * n + c] * x[c];
        }
        x[i] = acc / a[i * n + i];
    }
    return x;
}

} // namespace detail

/// Coefficients of the unique polynomial (exponents <= m-1) in the argument
/// values that reproduces f at every input tuple. Solves the m^n x m^n
/// evaluation system whose rows are input tuples and columns monomials.
inline PolynomialExpansion interpolate_polynomial(const LogicalObservable &f) {
    const std::size_t m = f.m();
    const std::size_t n = f.arity();
    const std::size_t dim = f.dim();
    std::vector<double> system(dim * dim);
    for (std::size_t row = 0; row < dim; ++row) {
        const auto point = basis_digits(row, m, n);
        for (std::size_t col = 0; col < dim; ++col) {
            const auto exps = basis_digits(col, m, n);
            double v = 1.0;
            for (std::size_t k = 0; k < n; ++k) {
                v *= std::pow(static_cast<double>(f.inputs()[point[k]]),
                              static_cast<double>(exps[k]));
            }
            system[row * dim + col] = v;
        }
    }
    std::vector<double> rhs(f.op().diagonal().begin(), f.op().diagonal().end());
    const auto coeffs = detail::solve_dense(std::move(system), std::move(rhs));

    PolynomialExpansion p(m, n);
    for (std::size_t col = 0; col < dim; ++col) {
        // Elimination noise on structurally-zero terms.
        if (std::abs(coeffs[col]) < 1e-12) {
            continue;
        }
        p.set(basis_digits(col, m, n), coeffs[col]);
    }
    return p;
}

/// Substitutes diagonal operators for the polynomial's variables using
/// entrywise powers and products.
inline DiagonalOperator evaluate_polynomial(const PolynomialExpansion &p,
                                            std::span<const LogicalObservable> dictators) {
    if (dictators.size() != p.arity()) {
        throw DimensionError("evaluate_polynomial: expected " +
                             std::to_string(p.arity()) + " dictators, got " +
                             std::to_string(dictators.size()));
    }
    if (dictators.empty()) {
        throw DimensionError("evaluate_polynomial: no dictators supplied");
    }
    const std::size_t dim = dictators.front().dim();
    for (const auto &d : dictators) {
        if (d.dim() != dim) {
            throw DimensionError("evaluate_polynomial: dictator dimensions differ");
        }
    }
    std::vector<double> out(dim, 0.0);
    std::vector<double> point(p.arity());
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t k = 0; k < p.arity(); ++k) {
            point[k] = dictators[k].eigenvalue(i);
        }
        out[i] = p.evaluate(point);
    }
    return DiagonalOperator(std::move(out));
}

} // namespace eigenlogic
