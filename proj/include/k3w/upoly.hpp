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

// Dense univariate polynomials over a FieldContext, with the gcd-based
// machinery (squarefree decomposition, distinct/equal degree splitting,
// root finding) that the binary-form layer needs.

#ifndef K3W_UPOLY_HPP
#define K3W_UPOLY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "k3w/ffield.hpp"

namespace k3w {

class Poly {
   public:
    explicit Poly(ContextPtr ctx);
    /// Coefficients low degree first; trailing zeros are trimmed.
    Poly(ContextPtr ctx, std::vector<FieldValue> coeffs);
    static Poly monomial(ContextPtr ctx, std::size_t deg, const FieldValue& coeff);
    static Poly x(ContextPtr ctx) { return monomial(ctx, 1, ctx->one()); }
    static Poly constant(const FieldValue& c);

    const ContextPtr& context() const noexcept { return ctx_; }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
    FieldValue coeff(std::size_t i) const;
    const FieldValue& leading() const;
    const std::vector<FieldValue>& coefficients() const noexcept { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly operator*(const Poly& rhs) const;
    Poly scaled(const FieldValue& s) const;
    Poly monic() const;
    Poly derivative() const;
    FieldValue eval(const FieldValue& x) const;
    /// For a polynomial in x^p only: the polynomial whose p-th power it is.
    Poly pth_root() const;

    bool operator==(const Poly& rhs) const;
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

   private:
    ContextPtr ctx_;
    std::vector<FieldValue> c_;
    void trim();
};

inline Poly operator+(Poly a, const Poly& b) { return a += b; }
inline Poly operator-(Poly a, const Poly& b) { return a -= b; }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
/// Monic gcd (zero when both inputs are zero). Classical Euclid.
Poly gcd(const Poly& a, const Poly& b);
Poly powmod(const Poly& base, u128 e, const Poly& mod);

/// Distinct-degree criterion: f of degree n is irreducible iff
/// gcd(f, x^(q^i) - x) = 1 for 1 <= i <= n/2.
bool is_irreducible(const Poly& f);

/// Squarefree decomposition of a monic polynomial in characteristic p:
/// pairs (squarefree part, multiplicity) with pairwise coprime parts.
std::vector<std::pair<Poly, std::size_t>> squarefree_parts(const Poly& f);

/// For squarefree monic f: pairs (product of all irreducible factors of degree k, k).
std::vector<std::pair<Poly, std::size_t>> distinct_degree_split(const Poly& f);

/// For squarefree monic f whose irreducible factors all have degree k: the factors.
/// Cantor-Zassenhaus with a fixed seed, so the output order is deterministic.
std::vector<Poly> equal_degree_split(const Poly& f, std::size_t k);

/// Monic irreducible factors with multiplicity, sorted by (degree, coefficients).
std::vector<std::pair<Poly, std::size_t>> factor(const Poly& f);

/// Roots of f in its coefficient field, sorted by index, without multiplicity.
std::vector<FieldValue> roots(const Poly& f);

}  // namespace k3w

#endif
