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
 * @file binform.hpp
 * @brief Homogeneous binary forms f(t0, t1) of fixed degree.
 *
 * Coefficient i is the coefficient of t0^(d-i) * t1^i. A 2x2 matrix L acts by
 * substitution (t0, t1) -> (L00 t0 + L01 t1, L10 t0 + L11 t1), so that
 * f∘(L·M) = (f∘L)∘M.
 *
 * Root structure is reported through irreducible factors over the
 * coefficient field: the point (0:1) is the factor t0, and every other
 * factor is the homogenization of a monic irreducible g(t) in t = t1/t0.
 */

#ifndef K3W_BINFORM_HPP
#define K3W_BINFORM_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "k3w/ffield.hpp"
#include "k3w/upoly.hpp"

namespace k3w {

/// A point (u : v) of P^1, normalized so its first nonzero coordinate is 1.
class ProjPoint {
   public:
    ProjPoint(FieldValue u, FieldValue v);
    static ProjPoint infinity(const ContextPtr& ctx) { return ProjPoint(ctx->zero(), ctx->one()); }
    static ProjPoint affine(const FieldValue& t) { return ProjPoint(t.context()->one(), t); }

    const FieldValue& u() const noexcept { return u_; }
    const FieldValue& v() const noexcept { return v_; }
    bool is_infinity() const noexcept { return u_.is_zero(); }
    /// Image under the base action of L (column-vector convention).
    ProjPoint mapped(const Matrix& L) const;
    std::string to_string() const;

    bool operator==(const ProjPoint& o) const { return u_ == o.u_ && v_ == o.v_; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }

   private:
    FieldValue u_, v_;
};

/// All q + 1 points of P^1 over ctx: (1:t) in element-index order, then (0:1).
std::vector<ProjPoint> projective_line(const ContextPtr& ctx);

class BinaryForm {
   public:
    /// The zero form of degree @p degree.
    BinaryForm(ContextPtr ctx, std::size_t degree);
    BinaryForm(ContextPtr ctx, std::vector<FieldValue> coeffs);
    /// coeff * t0^(d-i) * t1^i
    static BinaryForm monomial(const FieldValue& coeff, std::size_t degree, std::size_t t1_exp);
    static BinaryForm from_ints(const ContextPtr& ctx, const std::vector<long long>& coeffs);

    const ContextPtr& context() const noexcept { return ctx_; }
    std::size_t degree() const noexcept { return c_.size() - 1; }
    /// Coefficient of t0^(d-i) t1^i.
    const FieldValue& coeff(std::size_t i) const { return c_.at(i); }
    const std::vector<FieldValue>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept;

    BinaryForm operator-() const;
    BinaryForm& operator+=(const BinaryForm& rhs);
    BinaryForm& operator-=(const BinaryForm& rhs);
    BinaryForm operator*(const BinaryForm& rhs) const;
    BinaryForm scaled(const FieldValue& s) const;
    BinaryForm pow(std::size_t n) const;

    FieldValue evaluate(const FieldValue& t0, const FieldValue& t1) const;
    FieldValue evaluate(const ProjPoint& pt) const { return evaluate(pt.u(), pt.v()); }
    BinaryForm lifted(const ContextPtr& target) const;

    /// Exponent of t0 dividing the form (the order at (0:1)). Zero form: degree + 1.
    std::size_t order_at_infinity() const noexcept;
    /// f(1, t) as a polynomial in t.
    Poly dehomogenize() const;
    /// t0^d g(t1/t0); requires deg g <= d.
    static BinaryForm homogenize(const Poly& g, std::size_t degree);

    bool operator==(const BinaryForm& rhs) const;
    bool operator!=(const BinaryForm& rhs) const { return !(*this == rhs); }

    /// e.g. "t0^2*t1^10 + 8*t0^12"; "0" for the zero form.
    std::string to_string() const;

   private:
    ContextPtr ctx_;
    std::vector<FieldValue> c_;
};

inline BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
inline BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }

/// f∘L. Singular L is allowed here; invariant_forms rejects it.
BinaryForm substitute(const BinaryForm& f, const Matrix& L);

struct FormFactor {
    BinaryForm form;                  ///< t0, or the homogenized monic irreducible
    std::size_t multiplicity = 0;
    std::size_t degree = 0;           ///< field-of-definition degree of each root
    std::optional<ProjPoint> point;   ///< the root, when degree == 1
};

struct FactorStructure {
    FieldValue unit;
    std::vector<FormFactor> factors;

    /// unit * prod(factor^multiplicity)
    BinaryForm reassemble() const;
    /// Number of geometric roots counted with multiplicity: sum degree * multiplicity.
    std::size_t weighted_root_count() const;
    /// Number of distinct geometric roots: sum of degrees.
    std::size_t distinct_root_count() const;
};

/**
 * Multiplicity strata of a nonzero form, refined into irreducible factors
 * over the coefficient field. Factor order: (0:1) first, then by
 * (degree, coefficients). Throws std::domain_error on the zero form.
 */
FactorStructure squarefree_decomposition(const BinaryForm& f);

/// Largest e with factor^e dividing f, where factor comes from a FactorStructure.
/// Returns std::nullopt when f is the zero form (order +infinity).
std::optional<std::size_t> order_along(const BinaryForm& f, const FormFactor& factor);

/// Basis of {f of degree d : f∘L = f}. Throws std::invalid_argument for singular L.
std::vector<BinaryForm> invariant_forms(const ContextPtr& ctx, std::size_t degree, const Matrix& L);

/**
 * Parses a homogeneous form such as "t0^2*t1^10 - 3*t0^12" over @p ctx.
 * Coefficients are integers, optionally times powers of "w", the context's
 * generator. Every term must have the same total degree in t0, t1.
 * @p degree, when given, fixes the degree (needed for the zero form "0").
 */
BinaryForm parse_form(const std::string& text, const ContextPtr& ctx, std::optional<std::size_t> degree = std::nullopt);

}  // namespace k3w

#endif
