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

#include "k3w/counting.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace k3w {

namespace {

std::uint64_t field_size(const ContextPtr& ctx) { return static_cast<std::uint64_t>(ctx->size()); }

void check_budget(const ContextPtr& ctx, bool allow_large) {
    if (!allow_large && ctx->size() > kCountBudget)
        throw BudgetExceeded("field of size " + to_string(ctx->size()) + " exceeds the counting budget of " +
                             std::to_string(kCountBudget));
    if (ctx->size() > 14641) throw BudgetExceeded("counting is limited to q <= 11^4");
}

// Number of square roots of each field element, indexed by FieldValue::index().
std::vector<std::uint8_t> root_counts(const ContextPtr& ctx) {
    std::vector<std::uint8_t> n(field_size(ctx), 0);
    for (std::uint64_t i = 0; i < n.size(); ++i) {
        const auto y = ctx->element(i);
        ++n[static_cast<std::size_t>((y * y).index())];
    }
    return n;
}

struct FibreCoeffs {
    FieldValue a2, a4, a6;
};

FibreCoeffs at(const FibrationModel& m, const ProjPoint& t) {
    return {m.a2.evaluate(t), m.a4.evaluate(t), m.a6.evaluate(t)};
}

// -(x^3 + a2 x^2 + a4 x + a6), so that y^2 equals it on the fibre.
FieldValue rhs(const FibreCoeffs& f, const FieldValue& x) { return -(((x + f.a2) * x + f.a4) * x + f.a6); }

ProjPoint lift_point(const ProjPoint& p, const ContextPtr& ctx) { return ProjPoint(lift(p.u(), ctx), lift(p.v(), ctx)); }

FibrationModel model_over(const FibrationModel& m, const ContextPtr& ctx) {
    if (!ctx->contains(*m.context())) throw ContextMismatch("the surface is not defined over the counting field");
    return m.lifted(ctx);
}

}  // namespace

ContextPtr extension_of_degree(const ContextPtr& base, std::size_t k) {
    if (k == 0) throw std::invalid_argument("extension degree must be positive");
    if (k == 1) return base;
    if (base->is_prime_field() && base->characteristic() == 11 && k == 2) return f121_context();
    const std::uint64_t q = field_size(base);
    // Coefficients c_0..c_{k-1} read as base-q digits of a counter.
    for (std::uint64_t n = 1;; ++n) {
        std::vector<FieldValue> coeffs;
        std::uint64_t r = n;
        for (std::size_t i = 0; i < k; ++i) {
            coeffs.push_back(base->element(r % q));
            r /= q;
        }
        if (r != 0) throw std::logic_error("no irreducible polynomial found");
        coeffs.push_back(base->one());
        if (coeffs[0].is_zero()) continue;
        if (is_irreducible(Poly(base, coeffs))) return FieldContext::extension(base, coeffs);
    }
}

ContextPtr field_of_degree(std::uint32_t p, std::size_t k) { return extension_of_degree(FieldContext::prime(p), k); }

std::uint64_t fibre_point_count(const FibrationModel& m, const ProjPoint& t, const ContextPtr& ctx) {
    const auto model = model_over(m, ctx);
    const auto roots = root_counts(ctx);
    const auto f = at(model, lift_point(t, ctx));
    std::uint64_t n = 1;
    for (std::uint64_t i = 0; i < roots.size(); ++i) n += roots[static_cast<std::size_t>(rhs(f, ctx->element(i)).index())];
    return n;
}

PointCount surface_point_count(const FibrationModel& m, const ContextPtr& ctx, bool allow_large) {
    check_budget(ctx, allow_large);
    const auto model = model_over(m, ctx);
    const auto roots = root_counts(ctx);
    std::vector<FieldValue> xs;
    for (std::uint64_t i = 0; i < roots.size(); ++i) xs.push_back(ctx->element(i));
    PointCount pc;
    pc.q = field_size(ctx);
    for (const auto& t : projective_line(ctx)) {
        const auto f = at(model, t);
        std::uint64_t n = 1;
        for (const auto& x : xs) n += roots[static_cast<std::size_t>(rhs(f, x).index())];
        pc.fibres.emplace_back(t, n);
        pc.total += n;
    }
    return pc;
}

std::vector<SurfacePoint> surface_points(const FibrationModel& m, const ContextPtr& ctx, bool allow_large) {
    check_budget(ctx, allow_large);
    const auto model = model_over(m, ctx);
    // y values grouped by y^2
    std::vector<std::vector<FieldValue>> sqrt_of(field_size(ctx));
    std::vector<FieldValue> xs;
    for (std::uint64_t i = 0; i < field_size(ctx); ++i) {
        const auto y = ctx->element(i);
        sqrt_of[static_cast<std::size_t>((y * y).index())].push_back(y);
        xs.push_back(y);
    }
    std::vector<SurfacePoint> pts;
    for (const auto& t : projective_line(ctx)) {
        const auto f = at(model, t);
        for (const auto& x : xs)
            for (const auto& y : sqrt_of[static_cast<std::size_t>(rhs(f, x).index())])
                pts.push_back(SurfacePoint{t, std::make_pair(x, y)});
        pts.push_back(SurfacePoint{t, std::nullopt});
    }
    return pts;
}

bool is_fixed(const WpsAut& s, const SurfacePoint& P) {
    const auto K = common_context(s.context(), P.base.u().context());
    const WpsAut sK = s.lifted(K);
    const ProjPoint t = lift_point(P.base, K);
    if (!P.xy) return t.mapped(sK.L()) == t;
    const auto img = sK.apply({t.u(), t.v(), lift(P.xy->first, K), lift(P.xy->second, K)});
    // the normalized base coordinate fixes λ
    const FieldValue lambda = t.is_infinity() ? img[1] / t.v() : img[0] / t.u();
    if (lambda.is_zero()) return false;
    const FieldValue l2 = lambda * lambda, l4 = l2 * l2;
    return img[0] == lambda * t.u() && img[1] == lambda * t.v() && img[2] == l4 * lift(P.xy->first, K) &&
           img[3] == l4 * l2 * lift(P.xy->second, K);
}

FixedLocusReport fixed_point_count(const FibrationModel& m, const WpsAut& s, const ContextPtr& ctx,
                                   const std::string& label, bool allow_large) {
    equation_scalar(s, SurfaceEquation::from_model(m));
    FixedLocusReport rep;
    rep.label = label.empty() ? s.to_string() : label;
    rep.q = field_size(ctx);
    for (const auto& P : surface_points(m, ctx, allow_large)) {
        if (!is_fixed(s, P)) continue;
        ++rep.fixed;
        if (rep.by_base.empty() || rep.by_base.back().first != P.base) rep.by_base.emplace_back(P.base, 0);
        ++rep.by_base.back().second;
    }
    return rep;
}

std::vector<std::size_t> base_orbit_census(const FibrationModel& m, const WpsAut& s) {
    equation_scalar(s, SurfaceEquation::from_model(m));
    const auto K = common_context(m.context(), s.context());
    const auto delta = discriminant(m.lifted(K));
    const auto fs = squarefree_decomposition(delta);
    std::size_t deg = 1;
    for (const auto& f : fs.factors) deg = std::lcm(deg, f.degree);
    const auto E = extension_of_degree(K, deg);

    std::vector<ProjPoint> roots;
    for (const auto& f : fs.factors) {
        if (f.form.order_at_infinity() > 0) {
            roots.push_back(ProjPoint::infinity(E));
            continue;
        }
        const auto g = f.form.dehomogenize();
        std::vector<FieldValue> lc;
        for (const auto& c : g.coefficients()) lc.push_back(lift(c, E));
        for (const auto& r : k3w::roots(Poly(E, lc))) roots.push_back(ProjPoint::affine(r));
    }
    if (roots.size() != fs.distinct_root_count()) throw std::logic_error("discriminant did not split");

    const auto C = common_context(E, s.context());
    for (auto& r : roots) r = lift_point(r, C);
    const Matrix L = s.lifted(C).L();
    std::vector<bool> seen(roots.size(), false);
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        ProjPoint p = roots[i];
        do {
            auto it = std::find(roots.begin(), roots.end(), p);
            if (it == roots.end()) throw std::logic_error("base action does not preserve the discriminant");
            seen[static_cast<std::size_t>(it - roots.begin())] = true;
            ++len;
            p = p.mapped(L);
        } while (p != roots[i]);
        sizes.push_back(len);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace k3w
