/*
   Copyright 2026 The k3w Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file ffield.hpp
 * @brief Exact arithmetic in a prime field F_p and a tower of at most two
 * extensions above it, plus dense linear algebra over such fields.
 *
 * Every element is stored as its coefficient sequence over the prime field,
 * least-degree-first. For a layer K = B[X]/(f) of degree m over a base B of
 * degree n over F_p, the sequence has m blocks of n coefficients; block j holds
 * the (flattened) base coefficient of X^j. Equality is sequence equality.
 */

#ifndef K3W_FFIELD_HPP
#define K3W_FFIELD_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "k3w/errors.hpp"

namespace k3w {

using u128 = unsigned __int128;

std::string to_string(u128 v);

class FieldContext;
class FieldValue;
using ContextPtr = std::shared_ptr<const FieldContext>;

class FieldContext : public std::enable_shared_from_this<FieldContext> {
   public:
    /// The prime field F_p. Requires p prime and 5 <= p < 2^15.
    static ContextPtr prime(std::uint32_t p);

    /**
     * Adjoins a root of @p modulus (coefficients over @p base, low degree
     * first, monic, degree >= 2). Irreducibility is checked with the
     * distinct-degree gcd criterion and ReducibleModulus is thrown on failure.
     * At most two extension layers are allowed, and the second must be
     * quadratic.
     */
    static ContextPtr extension(const ContextPtr& base, const std::vector<FieldValue>& modulus);

    std::uint32_t characteristic() const noexcept { return p_; }
    /// Total degree over the prime field.
    std::size_t degree() const noexcept { return degree_; }
    /// Degree over the immediate base (1 for the prime field).
    std::size_t layer_degree() const noexcept { return modulus_.empty() ? 1 : modulus_.size() - 1; }
    std::size_t layers() const noexcept { return layers_; }
    bool is_prime_field() const noexcept { return base_ == nullptr; }
    const ContextPtr& base() const noexcept { return base_; }
    /// Modulus coefficients over the base, low degree first (empty for F_p).
    const std::vector<FieldValue>& modulus() const noexcept { return modulus_; }
    /// Number of elements, p^degree.
    u128 size() const noexcept { return size_; }
    /// True when the layer modulus has the shape x^p - x + c with c != 0 over F_p.
    bool artin_schreier() const noexcept { return artin_schreier_; }

    /// Structural equality: same characteristic and same moduli all the way down.
    bool same_as(const FieldContext& other) const noexcept;
    /// True when @p sub equals this context or one of its base layers.
    bool contains(const FieldContext& sub) const noexcept;

    FieldValue zero() const;
    FieldValue one() const;
    FieldValue from_int(long long v) const;
    /// Residue class of X in the top layer (the prime field has no generator; returns 1).
    FieldValue generator() const;
    /// Element with base-p digits of @p index as coefficients. index < size().
    FieldValue element(std::uint64_t index) const;
    template <class Rng>
    FieldValue random(Rng& rng) const;

    std::string describe() const;

    // Raw arithmetic on coefficient blocks of this context; used by FieldValue.
    using Coeffs = std::vector<std::uint32_t>;
    void raw_add(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                 std::span<std::uint32_t> out) const;
    void raw_sub(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                 std::span<std::uint32_t> out) const;
    void raw_mul(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                 std::span<std::uint32_t> out) const;

    FieldContext(const FieldContext&) = delete;
    FieldContext& operator=(const FieldContext&) = delete;

   private:
    FieldContext() = default;

    std::uint32_t p_ = 0;
    std::size_t degree_ = 1;
    std::size_t layers_ = 0;
    u128 size_ = 0;
    bool artin_schreier_ = false;
    ContextPtr base_;
    std::vector<FieldValue> modulus_;
    Coeffs modulus_raw_;  // m blocks of base-degree coefficients, monic term dropped
};

class FieldValue {
   public:
    /// An unset value with no context; arithmetic on it throws ContextMismatch.
    FieldValue() = default;
    FieldValue(ContextPtr ctx, long long v);
    /// Coefficients are reduced mod p; missing trailing coefficients are zero.
    FieldValue(ContextPtr ctx, std::vector<std::uint32_t> coeffs);

    const ContextPtr& context() const noexcept { return ctx_; }
    bool has_context() const noexcept { return ctx_ != nullptr; }
    std::span<const std::uint32_t> coefficients() const noexcept { return c_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    /// The value as an integer in [0, p) when it lies in the prime subfield.
    std::optional<std::uint32_t> prime_value() const noexcept;
    /// Base-p encoding of the coefficient sequence (inverse of FieldContext::element).
    std::uint64_t index() const;

    FieldValue operator-() const;
    FieldValue& operator+=(const FieldValue& rhs);
    FieldValue& operator-=(const FieldValue& rhs);
    FieldValue& operator*=(const FieldValue& rhs);
    FieldValue& operator/=(const FieldValue& rhs);

    FieldValue pow(u128 n) const;
    /// Signed exponent; negative powers need a nonzero value.
    FieldValue pow_signed(long long n) const;
    FieldValue inverse() const;
    /// The p-th power map.
    FieldValue frobenius() const;
    /// Inverse of the p-th power map (x^(p^(degree-1))).
    FieldValue pth_root() const;

    std::string to_string() const;

    friend bool operator==(const FieldValue& a, const FieldValue& b) noexcept;
    friend bool operator!=(const FieldValue& a, const FieldValue& b) noexcept { return !(a == b); }

   private:
    ContextPtr ctx_;
    std::vector<std::uint32_t> c_;

    void require_same(const FieldValue& rhs) const;
};

inline FieldValue operator+(FieldValue a, const FieldValue& b) { return a += b; }
inline FieldValue operator-(FieldValue a, const FieldValue& b) { return a -= b; }
inline FieldValue operator*(FieldValue a, const FieldValue& b) { return a *= b; }
inline FieldValue operator/(FieldValue a, const FieldValue& b) { return a /= b; }

/// Embeds @p v into @p target, which must equal v's context or lie above it in a tower.
FieldValue lift(const FieldValue& v, const ContextPtr& target);

/// Returns whichever of @p a, @p b contains the other; throws ContextMismatch otherwise.
ContextPtr common_context(const ContextPtr& a, const ContextPtr& b);

/// An element of exact multiplicative order n. Throws std::invalid_argument unless n | size-1.
FieldValue root_of_unity(const ContextPtr& ctx, std::uint64_t n);

/// Multiplicative order of a nonzero value.
u128 multiplicative_order(const FieldValue& v);

template <class Rng>
FieldValue FieldContext::random(Rng& rng) const {
    std::uniform_int_distribution<std::uint32_t> digit(0, p_ - 1);
    std::vector<std::uint32_t> c(degree_);
    for (auto& x : c) x = digit(rng);
    return FieldValue(shared_from_this(), std::move(c));
}

/// Dense matrix over one field context.
class Matrix {
   public:
    Matrix() = default;
    Matrix(ContextPtr ctx, std::size_t rows, std::size_t cols);
    static Matrix identity(ContextPtr ctx, std::size_t n);
    /// Row-major entries; all must share @p ctx (integers are accepted via from_int beforehand).
    static Matrix from_rows(ContextPtr ctx, const std::vector<std::vector<FieldValue>>& rows);
    static Matrix from_ints(ContextPtr ctx, const std::vector<std::vector<long long>>& rows);

    const ContextPtr& context() const noexcept { return ctx_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldValue& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    FieldValue& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix scaled(const FieldValue& s) const;
    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    Matrix transpose() const;
    /// Entrywise Frobenius.
    Matrix frobenius() const;
    FieldValue determinant() const;
    Matrix inverse() const;
    Matrix lifted(const ContextPtr& target) const;

   private:
    ContextPtr ctx_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldValue> e_;
};

/// Reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of the right null space {v : M v = 0}, one basis vector per free column.
std::vector<std::vector<FieldValue>> kernel(const Matrix& m);

}  // namespace k3w

#endif
