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
 * @file wpsaut.hpp
 * @brief Triangular automorphisms of weighted P(1,1,4,6):
 *
 *     (t0, t1, x, y) -> (L (t0, t1), c x + q(t0, t1), d y),   deg q = 4,
 *
 * taken modulo the weighted scaling (λ t0, λ t1, λ^4 x, λ^6 y).
 *
 * compose(s, t) is the point map s∘t (apply t first). Pulling an equation
 * back is a right action: F∘(s∘t) = (F∘s)∘t.
 */

#ifndef K3W_WPSAUT_HPP
#define K3W_WPSAUT_HPP

#include <array>
#include <cstddef>
#include <random>
#include <string>

#include "k3w/weierstrass.hpp"

namespace k3w {

class WpsAut {
   public:
    /// All parts are lifted to a common context. Throws std::invalid_argument
    /// for singular L, c = 0, d = 0 or deg q != 4.
    WpsAut(Matrix L, FieldValue c, BinaryForm q, FieldValue d);

    static WpsAut identity(const ContextPtr& ctx);
    /// (λ t0, λ t1, λ^4 x, λ^6 y)
    static WpsAut scaling(const FieldValue& lambda);
    /// The base action of M on (t0, t1), identity on x and y.
    static WpsAut linear(const Matrix& M);

    const ContextPtr& context() const noexcept { return L_.context(); }
    const Matrix& L() const noexcept { return L_; }
    const FieldValue& c() const noexcept { return c_; }
    const BinaryForm& q() const noexcept { return q_; }
    const FieldValue& d() const noexcept { return d_; }

    WpsAut lifted(const ContextPtr& target) const;
    /// Image of a point given in coordinates (t0, t1, x, y).
    std::array<FieldValue, 4> apply(const std::array<FieldValue, 4>& p) const;
    std::string to_string() const;

   private:
    Matrix L_;
    FieldValue c_;
    BinaryForm q_;
    FieldValue d_;
};

/// s∘t as point maps.
WpsAut compose(const WpsAut& s, const WpsAut& t);
WpsAut inverse(const WpsAut& s);
/// s^n for n >= 0.
WpsAut power(const WpsAut& s, std::size_t n);
/// True iff s = scaling(λ)∘t for some nonzero λ.
bool equal_mod_scaling(const WpsAut& s, const WpsAut& t);
/// Least n >= 1 with s^n equal to the identity mod scaling. BudgetExceeded past @p cap.
std::size_t order_mod_scaling(const WpsAut& s, std::size_t cap = 64);

/// det(L) c / d: the factor by which s* multiplies dt∧dx / y.
FieldValue symplectic_multiplier(const WpsAut& s);

/// F = y2·y^2 + x[3] x^3 + x[2] x^2 + x[1] x + x[0], with x[k] of degree 12 - 4k.
struct SurfaceEquation {
    FieldValue y2;
    std::array<BinaryForm, 4> x;

    static SurfaceEquation from_model(const FibrationModel& m);
    const ContextPtr& context() const noexcept { return y2.context(); }
    SurfaceEquation lifted(const ContextPtr& target) const;
    SurfaceEquation scaled(const FieldValue& u) const;
    FieldValue evaluate(const std::array<FieldValue, 4>& p) const;
    bool operator==(const SurfaceEquation& o) const;
    std::string to_string() const;
};

/// F∘s, computed in the common context of F and s.
SurfaceEquation pullback(const SurfaceEquation& F, const WpsAut& s);
/// The unit u with F∘s = u F. Throws NotAnAutomorphism otherwise.
FieldValue equation_scalar(const WpsAut& s, const SurfaceEquation& F);

struct AutReport {
    bool preserves_equation = false;
    FieldValue equation_scalar;  ///< unset when the equation is not preserved
    std::size_t order = 0;
    FieldValue multiplier;
    bool symplectic = false;
};
AutReport analyze(const WpsAut& s, const SurfaceEquation& F, std::size_t order_cap = 64);

/// k in [0, ord b) with a∘b∘a^-1 = b^k mod scaling. Throws std::domain_error if none.
std::size_t normalizer_witness(const WpsAut& a, const WpsAut& b, std::size_t order_cap = 64);

// ---------------------------------------------------------------------------
// The maps of the pencil.

/// (t0, t1, x, y) -> (t0, t0 + t1, x, y) over eps's context.
WpsAut g_map(const FieldValue& eps);
/// The same base translation, named separately for the lifted setting.
WpsAut e_tilde(const ContextPtr& ctx);

/// Fields carrying a root b of b^11 - b + 3 eps^3 and a square root of -1.
struct ArtinSchreierTower {
    FieldValue eps;       ///< in the top field
    ContextPtr b_field;   ///< F11[b], or F11 when eps = 0
    ContextPtr top;       ///< b_field adjoined sqrt(-1)
    FieldValue b;         ///< in top
    FieldValue sqrt_m1;   ///< in top
};
/// eps = 0 uses b = 0 and top = F11[s]/(s^2 + 1).
ArtinSchreierTower artin_schreier_tower(const FieldValue& eps);

/// (t0, -t1 + b t0, -x + 3 eps t0^4, ±sqrt(-1) y). @p root_sign picks the square root.
WpsAut i_tilde(const ArtinSchreierTower& tower, int root_sign = 1);

// ---------------------------------------------------------------------------
// Hermitian normal form over F121.

struct HermitianNormalization {
    Matrix substitution;          ///< [[α^11, α], [1, 1]]
    FieldValue lambda, mu;        ///< t0 t1^11 - t0^11 t1 becomes λ t0^12 + μ t1^12
    bool cross_terms_vanish = false;
    FieldValue s1, r, w;          ///< t1 -> s1 t1, x -> r x, y -> w y
    WpsAut composite;             ///< the full change of variables
    FieldValue kappa;             ///< X0's equation pulls back to kappa * normalized
    SurfaceEquation normalized;   ///< y^2 + x^3 + t0^12 + t1^12 when successful
};

/// Throws std::invalid_argument when α lies in F11 (the substitution is singular).
HermitianNormalization hermitian_diagonalize(const FieldValue& alpha);

/// True iff conj(M)^T M = I with conj the Frobenius. When true, also checks
/// (t0^12 + t1^12)∘M = t0^12 + t1^12 and throws std::logic_error if that fails.
bool gu2_check(const Matrix& M);

/**
 * Map syntax: "g(E)", "e~", "i~(E)", "i~(E,-)", "scale(X)", "unitary(A,B,C,D)",
 * "tri(L00,L01,L10,L11;C;Q;D)", "id". E is an integer; X, A.. are F121
 * values such as "3+2*w" (w^2 = -1); Q is a quartic form over F121.
 */
WpsAut parse_aut(const std::string& text);

/// The field F11[w]/(w^2 + 1), built once.
const ContextPtr& f121_context();
/// Parses "3", "2*w", "3+2*w", "-w" over f121_context().
FieldValue parse_f121(const std::string& text);

/// A random unit column (a, b) with a^12 + b^12 = 1 completed to
/// [[a, -conj(b) δ], [b, conj(a) δ]] with δ^12 = 1. @p k must be F121.
template <class Rng>
Matrix random_unitary(const ContextPtr& k, Rng& rng) {
    while (true) {
        const FieldValue a = k->random(rng), b = k->random(rng);
        if (a.pow(12) + b.pow(12) != k->one()) continue;
        FieldValue delta = k->random(rng);
        if (delta.is_zero() || delta.pow(12) != k->one()) continue;
        Matrix M(k, 2, 2);
        M(0, 0) = a;
        M(1, 0) = b;
        M(0, 1) = -b.frobenius() * delta;
        M(1, 1) = a.frobenius() * delta;
        return M;
    }
}

}  // namespace k3w

#endif
