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

/// @file binary.hpp
/// Logical observables: truth tables, alphabets, rank-1 projectors, the
/// sixteen two-argument connectives and the {+1,-1} isometric form.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eigenlogic/error.hpp"
#include "eigenlogic/linop.hpp"

namespace eigenlogic {

using linop::DiagonalOperator;

/// m^n with explicit overflow detection.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
            throw OverflowError(std::to_string(base) + "^" + std::to_string(exp) +
                                " does not fit in 64 bits");
        }
        result *= base;
    }
    return result;
}

/// Ordered set of truth-value letters. Position in the list is the letter's
/// digit in basis-index arithmetic.
class Alphabet {
  public:
    Alphabet() = default;
    explicit Alphabet(std::vector<int> letters, std::vector<std::string> labels = {})
        : letters_(std::move(letters)), labels_(std::move(labels)) {
        if (letters_.size() < 2) {
            throw DomainError("alphabet needs at least two letters");
        }
        auto sorted = letters_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw DomainError("alphabet letters must be distinct");
        }
        if (!labels_.empty() && labels_.size() != letters_.size()) {
            throw DomainError("alphabet labels must match letter count");
        }
    }

    /// {0,1}: false, true.
    static Alphabet boolean() { return Alphabet({0, 1}, {"false", "true"}); }
    /// {+1,-1}: false -> +1, true -> -1.
    static Alphabet isometric() { return Alphabet({+1, -1}, {"false", "true"}); }
    /// {0,1,2}: no light, weak-level light, high-level light.
    static Alphabet ternary() {
        return Alphabet({0, 1, 2}, {"no light", "weak-level light", "high-level light"});
    }
    /// Eigenvalues of L_z/hbar for l = 1.
    static Alphabet angular_momentum() {
        return Alphabet({+1, 0, -1}, {"false", "neutral", "true"});
    }
    /// {0, 1, ..., m-1}.
    static Alphabet integers(std::size_t m) {
        std::vector<int> letters(m);
        for (std::size_t i = 0; i < m; ++i) {
            letters[i] = static_cast<int>(i);
        }
        return Alphabet(std::move(letters));
    }

    [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
    [[nodiscard]] std::span<const int> letters() const noexcept { return letters_; }
    [[nodiscard]] int operator[](std::size_t i) const { return letters_[i]; }

    [[nodiscard]] std::optional<std::size_t> index_of(int letter) const noexcept {
        auto it = std::find(letters_.begin(), letters_.end(), letter);
        if (it == letters_.end()) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - letters_.begin());
    }
    [[nodiscard]] bool contains(int letter) const noexcept {
        return index_of(letter).has_value();
    }
    /// Nearest letter within tol of x, if any.
    [[nodiscard]] std::optional<int> letter_near(double x,
                                                 double tol = linop::kIdentityTol) const {
        for (int l : letters_) {
            if (std::abs(x - static_cast<double>(l)) <= tol) {
                return l;
            }
        }
        return std::nullopt;
    }
    [[nodiscard]] std::string label(int letter) const {
        auto idx = index_of(letter);
        if (!idx || labels_.empty()) {
            return std::to_string(letter);
        }
        return labels_[*idx];
    }

    bool operator==(const Alphabet &other) const { return letters_ == other.letters_; }

  private:
    std::vector<int> letters_;
    std::vector<std::string> labels_;
};

/// Digits of a basis index: leftmost argument is the most significant.
inline std::vector<std::size_t> basis_digits(std::size_t index, std::size_t m,
                                             std::size_t n) {
    std::vector<std::size_t> digits(n);
    for (std::size_t k = n; k-- > 0;) {
        digits[k] = index % m;
        index /= m;
    }
    return digits;
}

/// Inverse of basis_digits: sum_k x_k m^(n-1-k).
inline std::size_t basis_index(std::span<const std::size_t> digits, std::size_t m) {
    std::size_t index = 0;
    for (std::size_t d : digits) {
        if (d >= m) {
            throw DomainError("digit " + std::to_string(d) + " out of range for m=" +
                              std::to_string(m));
        }
        index = index * m + d;
    }
    return index;
}

/// Total function from n-tuples over an alphabet to letters of the same
/// alphabet, stored in basis-index order.
class TruthTable {
  public:
    TruthTable(Alphabet alphabet, std::size_t arity, std::vector<int> values)
        : alphabet_(std::move(alphabet)), arity_(arity), values_(std::move(values)) {
        if (arity_ < 1) {
            throw DomainError("truth table arity must be at least 1");
        }
        const auto rows = checked_pow(alphabet_.size(), arity_);
        if (values_.size() != rows) {
            throw DimensionError("truth table needs " + std::to_string(rows) +
                                 " values, got " + std::to_string(values_.size()));
        }
        for (int v : values_) {
            if (!alphabet_.contains(v)) {
                throw DomainError("truth table value " + std::to_string(v) +
                                  " is not an alphabet letter");
            }
        }
    }

    /// Tabulates fn over every assignment. fn receives letters, not digits.
    static TruthTable from_function(const Alphabet &alphabet, std::size_t arity,
                                    const std::function<int(std::span<const int>)> &fn) {
        const auto rows = checked_pow(alphabet.size(), arity);
        std::vector<int> values(rows);
        std::vector<int> args(arity);
        for (std::size_t i = 0; i < rows; ++i) {
            const auto digits = basis_digits(i, alphabet.size(), arity);
            for (std::size_t k = 0; k < arity; ++k) {
                args[k] = alphabet[digits[k]];
            }
            values[i] = fn(args);
        }
        return TruthTable(alphabet, arity, std::move(values));
    }

    [[nodiscard]] const Alphabet &alphabet() const noexcept { return alphabet_; }
    [[nodiscard]] std::size_t m() const noexcept { return alphabet_.size(); }
    [[nodiscard]] std::size_t arity() const noexcept { return arity_; }
    [[nodiscard]] std::size_t rows() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const int> values() const noexcept { return values_; }
    [[nodiscard]] int operator[](std::size_t index) const { return values_[index]; }

    /// Letters assigned to each argument at a basis index.
    [[nodiscard]] std::vector<int> assignment(std::size_t index) const {
        auto digits = basis_digits(index, m(), arity_);
        std::vector<int> letters(arity_);
        for (std::size_t k = 0; k < arity_; ++k) {
            letters[k] = alphabet_[digits[k]];
        }
        return letters;
    }

    bool operator==(const TruthTable &) const = default;

  private:
    Alphabet alphabet_;
    std::size_t arity_;
    std::vector<int> values_;
};

/// Diagonal operator whose eigenvalues are truth values. Carries the input
/// alphabet (which fixes the m^n dimension and the letter at each digit) and
/// the eigenvalue alphabet.
class LogicalObservable {
  public:
    LogicalObservable(DiagonalOperator op, Alphabet inputs, std::size_t arity,
                      Alphabet values)
        : op_(std::move(op)), inputs_(std::move(inputs)), arity_(arity),
          values_(std::move(values)) {
        const auto dim = checked_pow(inputs_.size(), arity_);
        if (op_.dim() != dim) {
            throw DimensionError("observable dimension " + std::to_string(op_.dim()) +
                                 " does not equal m^n = " + std::to_string(dim));
        }
        for (double d : op_.diagonal()) {
            if (!values_.letter_near(d)) {
                throw DomainError("eigenvalue " + std::to_string(d) +
                                  " is not a letter of the value alphabet");
            }
        }
    }

    [[nodiscard]] const DiagonalOperator &op() const noexcept { return op_; }
    [[nodiscard]] std::size_t dim() const noexcept { return op_.dim(); }
    [[nodiscard]] std::size_t m() const noexcept { return inputs_.size(); }
    [[nodiscard]] std::size_t arity() const noexcept { return arity_; }
    [[nodiscard]] const Alphabet &inputs() const noexcept { return inputs_; }
    [[nodiscard]] const Alphabet &alphabet() const noexcept { return values_; }
    [[nodiscard]] double eigenvalue(std::size_t index) const { return op_[index]; }

    /// Eigenvalues in {0,1} and F*F == F.
    [[nodiscard]] bool is_projective() const noexcept {
        return values_ == Alphabet::boolean() && op_.is_idempotent();
    }

    /// -F, valid when the value alphabet is closed under negation.
    [[nodiscard]] LogicalObservable negated() const {
        return LogicalObservable(-op_, inputs_, arity_, values_);
    }

    bool operator==(const LogicalObservable &o) const {
        return op_ == o.op_ && inputs_ == o.inputs_ && arity_ == o.arity_ &&
               values_ == o.values_;
    }

  private:
    DiagonalOperator op_;
    Alphabet inputs_;
    std::size_t arity_;
    Alphabet values_;
};

/// Projector onto the basis state |index> of an m-letter, n-argument space.
inline LogicalObservable rank1_projector(std::size_t m, std::size_t n,
                                         std::size_t index) {
    const auto dim = checked_pow(m, n);
    if (index >= dim) {
        throw DomainError("projector index " + std::to_string(index) +
                          " out of range for dimension " + std::to_string(dim));
    }
    std::vector<double> d(dim, 0.0);
    d[index] = 1.0;
    return LogicalObservable(DiagonalOperator(std::move(d)), Alphabet::integers(m), n,
                             Alphabet::boolean());
}

/// F = sum_x f(x) Pi_x, i.e. diag(f(x_0), f(x_1), ...).
inline LogicalObservable observable_from_truth_table(const TruthTable &t) {
    std::vector<double> d(t.values().begin(), t.values().end());
    return LogicalObservable(DiagonalOperator(std::move(d)), t.alphabet(), t.arity(),
                             t.alphabet());
}

/// Observable of a two-argument Boolean connective from its 4-bit diagonal
/// string ("0001" is AND).
inline LogicalObservable binary_connective(std::string_view bits) {
    if (bits.size() != 4 || bits.find_first_not_of("01") != std::string_view::npos) {
        throw DomainError("connective key must be four characters of 0/1, got '" +
                          std::string(bits) + "'");
    }
    std::vector<int> values(4);
    for (std::size_t i = 0; i < 4; ++i) {
        values[i] = bits[i] - '0';
    }
    return observable_from_truth_table(TruthTable(Alphabet::boolean(), 2, values));
}

/// Diagonal of a projective binary observable as its 4-bit key.
inline std::string connective_key(const LogicalObservable &f) {
    if (f.dim() != 4 || !f.is_projective()) {
        throw DomainError("connective_key: not a projective two-argument observable");
    }
    std::string key;
    for (double d : f.op().diagonal()) {
        key.push_back(d > 0.5 ? '1' : '0');
    }
    return key;
}

struct NamedConnective {
    std::string_view name;
    std::string_view bits;
};

/// Names for all sixteen two-argument connectives, keyed by diagonal.
inline constexpr std::array<NamedConnective, 16> kBinaryConnectiveNames{{
    {"FALSE", "0000"},
    {"AND", "0001"},
    {"A_AND_NOT_B", "0010"},
    {"A", "0011"},
    {"NOT_A_AND_B", "0100"},
    {"B", "0101"},
    {"XOR", "0110"},
    {"OR", "0111"},
    {"NOR", "1000"},
    {"EQUIV", "1001"},
    {"NOT_B", "1010"},
    {"CONVERSE", "1011"},
    {"NOT_A", "1100"},
    {"IMPLIES", "1101"},
    {"NAND", "1110"},
    {"TRUE", "1111"},
}};

/// Case-insensitive lookup of a connective name; also accepts the 4-bit key.
inline std::optional<std::string_view> connective_bits(std::string_view name) {
    auto upper = std::string(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (const auto &nc : kBinaryConnectiveNames) {
        if (nc.name == upper || nc.bits == upper) {
            return nc.bits;
        }
    }
    return std::nullopt;
}

inline std::string_view connective_name(std::string_view bits) {
    for (const auto &nc : kBinaryConnectiveNames) {
        if (nc.bits == bits) {
            return nc.name;
        }
    }
    throw DomainError("no connective with key '" + std::string(bits) + "'");
}

/// The sixteen two-argument connectives ordered by their 4-bit key.
inline std::vector<LogicalObservable> all_binary_connectives() {
    std::vector<LogicalObservable> out;
    out.reserve(16);
    for (const auto &nc : kBinaryConnectiveNames) {
        out.push_back(binary_connective(nc.bits));
    }
    return out;
}

/// Number of connectives with n arguments over m letters, m^(m^n).
inline std::uint64_t connective_count(std::uint64_t m, std::uint64_t n) {
    if (m < 2 || n < 1) {
        throw DomainError("connective_count requires m >= 2 and n >= 1");
    }
    return checked_pow(m, checked_pow(m, n));
}

/// G = I - 2F: false (0) -> +1, true (1) -> -1.
inline LogicalObservable to_isometric(const LogicalObservable &f) {
    if (!f.is_projective()) {
        throw DomainError("to_isometric: observable is not projective");
    }
    const auto id = DiagonalOperator::identity(f.dim());
    return LogicalObservable(id - 2.0 * f.op(), f.inputs(), f.arity(),
                             Alphabet::isometric());
}

/// F = (I - G)/2, inverse of to_isometric.
inline LogicalObservable from_isometric(const LogicalObservable &g) {
    if (!(g.alphabet() == Alphabet::isometric())) {
        throw DomainError("from_isometric: eigenvalues must lie in {+1,-1}");
    }
    const auto id = DiagonalOperator::identity(g.dim());
    return LogicalObservable(0.5 * (id - g.op()), g.inputs(), g.arity(),
                             Alphabet::boolean());
}

/// Observable reading argument k (0-based) of an n-argument system.
inline LogicalObservable dictator(const Alphabet &alphabet, std::size_t arity,
                                  std::size_t k) {
    if (k >= arity) {
        throw DomainError("dictator argument index out of range");
    }
    return observable_from_truth_table(TruthTable::from_function(
        alphabet, arity, [k](std::span<const int> args) { return args[k]; }));
}

} // namespace eigenlogic
