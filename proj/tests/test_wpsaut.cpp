// Automorphisms of P(1,1,4,6): composition, orders, equation scalars,
// multipliers, the Hermitian normal form and GU2 invariance.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "k3w/wpsaut.hpp"

using namespace k3w;

namespace {

ContextPtr f11() { return FieldContext::prime(11); }
const ContextPtr& f121() { return f121_context(); }

WpsAut random_aut(const ContextPtr& k, std::mt19937_64& rng) {
    while (true) {
        Matrix L(k, 2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) L(i, j) = k->random(rng);
        auto c = k->random(rng), d = k->random(rng);
        if (L.determinant().is_zero() || c.is_zero() || d.is_zero()) continue;
        std::vector<FieldValue> q;
        for (int i = 0; i < 5; ++i) q.push_back(k->random(rng));
        return WpsAut(L, c, BinaryForm(k, q), d);
    }
}

std::array<FieldValue, 4> random_point(const ContextPtr& k, std::mt19937_64& rng) {
    return {k->random(rng), k->random(rng), k->random(rng), k->random(rng)};
}

// Forward-mode dual numbers for the chart Jacobian.
struct Dual {
    FieldValue v, dv;
    Dual operator+(const Dual& o) const { return {v + o.v, dv + o.dv}; }
    Dual operator*(const Dual& o) const { return {v * o.v, v * o.dv + dv * o.v}; }
    Dual operator/(const Dual& o) const {
        auto inv = o.v.inverse();
        return {v * inv, (dv * o.v - v * o.dv) * inv * inv};
    }
};

Dual cst(const FieldValue& v) { return {v, v.context()->zero()}; }

// Multiplier of dt∧dx / y computed in the chart t0 = 1 at (t, x, y).
FieldValue chart_multiplier(const WpsAut& s, const FieldValue& t, const FieldValue& x, const FieldValue& y) {
    const auto& k = s.context();
    auto image = [&](const Dual& T, const Dual& X) {
        Dual T0 = cst(s.L()(0, 0)) + cst(s.L()(0, 1)) * T;
        Dual T1 = cst(s.L()(1, 0)) + cst(s.L()(1, 1)) * T;
        Dual q = cst(k->zero()), tp = cst(k->one());
        for (std::size_t i = 0; i <= 4; ++i) {
            q = q + cst(s.q().coeff(i)) * tp;
            tp = tp * T;
        }
        Dual Xn = cst(s.c()) * X + q;
        Dual T04 = T0 * T0 * T0 * T0;
        return std::pair{T1 / T0, Xn / T04};
    };
    auto [tt, xt] = image({t, k->one()}, cst(x));
    auto [tx, xx] = image(cst(t), {x, k->one()});
    FieldValue J = tt.dv * xx.dv - tx.dv * xt.dv;
    FieldValue T0 = s.L()(0, 0) + s.L()(0, 1) * t;
    FieldValue ynew = s.d() * y / T0.pow(6);
    return J * y / ynew;
}

SurfaceEquation X(const FieldValue& eps) { return SurfaceEquation::from_model(build_standard_surface(eps)); }

SurfaceEquation fermat(const ContextPtr& k) {
    return {k->one(), {BinaryForm::monomial(k->one(), 12, 0) + BinaryForm::monomial(k->one(), 12, 12), BinaryForm(k, 8),
                       BinaryForm(k, 4), BinaryForm::monomial(k->one(), 0, 0)}};
}

}  // namespace

TEST_CASE("construction rejects degenerate maps") {
    auto k = f11();
    CHECK_THROWS(WpsAut(Matrix::from_ints(k, {{1, 1}, {1, 1}}), k->one(), BinaryForm(k, 4), k->one()));
    CHECK_THROWS(WpsAut(Matrix::identity(k, 2), k->zero(), BinaryForm(k, 4), k->one()));
    CHECK_THROWS(WpsAut(Matrix::identity(k, 2), k->one(), BinaryForm(k, 4), k->zero()));
    CHECK_THROWS(WpsAut(Matrix::identity(k, 2), k->one(), BinaryForm(k, 3), k->one()));
}

TEST_CASE("composition, inverse and scaling") {
    std::mt19937_64 rng(1);
    auto k = f121();
    for (int t = 0; t < 20; ++t) {
        auto s = random_aut(k, rng), u = random_aut(k, rng);
        CHECK(equal_mod_scaling(compose(s, inverse(s)), WpsAut::identity(k)));
        CHECK(equal_mod_scaling(compose(inverse(s), s), WpsAut::identity(k)));
        // compose agrees with applying the point maps in sequence.
        auto p = random_point(k, rng);
        CHECK(compose(s, u).apply(p) == s.apply(u.apply(p)));
        // Pullback is a right action.
        auto F = X(k->from_int(static_cast<long long>(rng() % 11)));
        CHECK(pullback(F, compose(s, u)) == pullback(pullback(F, s), u));
        // Pullback agrees with evaluation.
        CHECK(pullback(F, s).evaluate(p) == F.lifted(k).evaluate(s.apply(p)));
        auto lam = k->random(rng);
        if (!lam.is_zero()) {
            CHECK(equal_mod_scaling(WpsAut::scaling(lam), WpsAut::identity(k)));
            CHECK(equal_mod_scaling(compose(WpsAut::scaling(lam), s), s));
        }
    }
    // A non-scalar diagonal is not the identity.
    CHECK(!equal_mod_scaling(WpsAut::linear(Matrix::from_ints(k, {{1, 0}, {0, 2}})), WpsAut::identity(k)));
    // Matching L but wrong weights on x.
    CHECK(!equal_mod_scaling(WpsAut(Matrix::identity(k, 2), k->from_int(2), BinaryForm(k, 4), k->one()),
                             WpsAut::identity(k)));
}

TEST_CASE("the involution i~ squared is the elliptic involution") {
    for (int e : {0, 1}) {
        auto tw = artin_schreier_tower(f11()->from_int(e));
        auto i = i_tilde(tw);
        auto k = tw.top;
        auto inv = WpsAut(Matrix::identity(k, 2), k->one(), BinaryForm(k, 4), k->from_int(-1));
        auto sq = compose(i, i);
        CHECK(sq.L() == Matrix::identity(k, 2));
        CHECK(sq.c() == k->one());
        CHECK(sq.q().is_zero());
        CHECK(sq.d() == k->from_int(-1));
        CHECK(equal_mod_scaling(sq, inv));
    }
}

TEST_CASE("orders") {
    auto k = f11();
    for (int e = 0; e < 11; ++e) {
        auto g = g_map(k->from_int(e));
        CHECK(order_mod_scaling(g) == 11);
        CHECK(symplectic_multiplier(g) == k->one());
    }
    CHECK(order_mod_scaling(WpsAut::identity(k)) == 1);
    for (int e : {0, 1}) {
        auto tw = artin_schreier_tower(k->from_int(e));
        CHECK(order_mod_scaling(i_tilde(tw)) == 4);
        CHECK(order_mod_scaling(i_tilde(tw, -1)) == 4);
    }
    // diag(1, 2) over F11 has order 10 on the base.
    CHECK(order_mod_scaling(WpsAut::linear(Matrix::from_ints(k, {{1, 0}, {0, 2}}))) == 10);
    CHECK_THROWS_AS(order_mod_scaling(WpsAut::linear(Matrix::from_ints(k, {{1, 0}, {0, 2}})), 5), BudgetExceeded);
}

TEST_CASE("equation scalars") {
    auto k = f11();
    for (int e = 0; e < 11; ++e) {
        auto eps = k->from_int(e);
        CHECK(equation_scalar(g_map(eps), X(eps)) == k->one());
        CHECK(equation_scalar(e_tilde(k), X(eps)) == k->one());
    }
    CHECK_THROWS_AS(equation_scalar(WpsAut::linear(Matrix::from_ints(k, {{1, 0}, {0, 2}})), X(k->one())),
                    NotAnAutomorphism);
}

TEST_CASE("i~ preserves the equation up to -1") {
    std::mt19937_64 rng(2);
    for (int e : {0, 1, 4}) {
        auto tw = artin_schreier_tower(f11()->from_int(e));
        auto F = X(f11()->from_int(e));
        for (int sign : {1, -1}) {
            auto i = i_tilde(tw, sign);
            CHECK(equation_scalar(i, F) == tw.top->from_int(-1));
            // Pointwise oracle: F(i(P)) = -F(P).
            for (int t = 0; t < 5; ++t) {
                auto p = random_point(tw.top, rng);
                CHECK(F.lifted(tw.top).evaluate(i.apply(p)) == -F.lifted(tw.top).evaluate(p));
            }
        }
        // b satisfies its defining equation.
        CHECK((tw.b.pow(11) - tw.b + tw.top->from_int(3) * tw.eps.pow(3)).is_zero());
    }
}

TEST_CASE("multipliers") {
    auto k = f11();
    CHECK(symplectic_multiplier(g_map(k->one())) == k->one());
    auto tw = artin_schreier_tower(k->one());
    auto m = symplectic_multiplier(i_tilde(tw));
    CHECK(m == -tw.sqrt_m1);
    CHECK(m.pow(2) == tw.top->from_int(-1));
    CHECK(multiplicative_order(m) == 4);

    auto zeta = root_of_unity(f121(), 12);
    Matrix D = Matrix::identity(f121(), 2);
    D(1, 1) = zeta;
    CHECK(symplectic_multiplier(WpsAut::linear(D)) == zeta);

    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        auto s = random_aut(f121(), rng), u = random_aut(f121(), rng);
        CHECK(symplectic_multiplier(compose(s, u)) == symplectic_multiplier(s) * symplectic_multiplier(u));
        auto lam = f121()->random(rng);
        if (!lam.is_zero())
            CHECK(symplectic_multiplier(compose(WpsAut::scaling(lam), s)) == symplectic_multiplier(s));
        // Chart oracle at a point with T0 != 0 and y != 0.
        auto tv = f121()->random(rng), xv = f121()->random(rng), yv = f121()->random(rng);
        if (yv.is_zero() || (s.L()(0, 0) + s.L()(0, 1) * tv).is_zero()) continue;
        CHECK(chart_multiplier(s, tv, xv, yv) == symplectic_multiplier(s));
    }
}

TEST_CASE("equation scalars multiply along composition") {
    auto k = f11();
    auto tw = artin_schreier_tower(k->one());
    auto F = X(k->one());
    auto i = i_tilde(tw);
    auto g = e_tilde(tw.top);
    CHECK(equation_scalar(compose(i, g), F) == equation_scalar(i, F) * equation_scalar(g, F));
    CHECK(equation_scalar(compose(i, i), F) == tw.top->one());
    CHECK(equation_scalar(compose(compose(i, g), i), F) == tw.top->one());
}

TEST_CASE("normalizer witness") {
    auto k = f11();
    for (int e : {0, 1}) {
        auto tw = artin_schreier_tower(k->from_int(e));
        auto i = i_tilde(tw);
        auto et = e_tilde(tw.top);
        CHECK(normalizer_witness(i, et) == 10);
    }
    CHECK(normalizer_witness(g_map(k->one()), g_map(k->one())) == 1);
    auto tw1 = artin_schreier_tower(k->one());
    CHECK_THROWS_AS(normalizer_witness(e_tilde(tw1.top), i_tilde(tw1)), std::domain_error);
}

TEST_CASE("hermitian diagonalization") {
    auto k = f121();
    auto target = fermat(k);
    std::size_t tried = 0;
    for (std::uint64_t idx = 0; idx < 121; ++idx) {
        auto a = k->element(idx);
        if (a.frobenius() == a) {
            CHECK_THROWS_AS(hermitian_diagonalize(a), std::invalid_argument);
            continue;
        }
        ++tried;
        auto h = hermitian_diagonalize(a);
        CHECK(h.cross_terms_vanish);
        CHECK(!h.lambda.is_zero());
        CHECK(!h.mu.is_zero());
        CHECK(h.normalized == target);
        CHECK(h.kappa == h.lambda);
        CHECK(h.s1.pow(12) * h.mu == h.lambda);
    }
    CHECK(tried == 110);
}

TEST_CASE("GU2 membership") {
    auto k = f121();
    CHECK(gu2_check(Matrix::identity(k, 2)));
    auto zeta = root_of_unity(k, 12);
    Matrix D = Matrix::identity(k, 2);
    D(1, 1) = zeta;
    CHECK(gu2_check(D));
    CHECK(multiplicative_order(symplectic_multiplier(WpsAut::linear(D))) == 12);
    CHECK(equation_scalar(WpsAut::linear(D), fermat(k)) == k->one());
    CHECK(!gu2_check(Matrix::from_ints(f11(), {{2, 0}, {0, 1}})));

    std::mt19937_64 rng(4);
    auto f = fermat(k).x[0];
    for (int t = 0; t < 1000; ++t) {
        auto M = random_unitary(k, rng);
        CHECK(gu2_check(M));
        CHECK(substitute(f, M) == f);
    }
    for (int t = 0; t < 200; ++t) {
        auto M = random_unitary(k, rng);
        auto delta = k->random(rng);
        if (delta.is_zero() || delta.pow(12).is_one()) continue;
        CHECK(!gu2_check(M.scaled(delta)));
    }
}

TEST_CASE("map parser") {
    auto k = f11();
    CHECK(equal_mod_scaling(parse_aut("g(3)"), g_map(k->from_int(3))));
    CHECK(equal_mod_scaling(parse_aut("e~"), e_tilde(k)));
    CHECK(order_mod_scaling(parse_aut("i~(1)")) == 4);
    CHECK(parse_aut("i~(0,-)").d() == -artin_schreier_tower(k->zero()).sqrt_m1);
    CHECK(equal_mod_scaling(parse_aut("scale(3+2*w)"), WpsAut::identity(f121())));
    CHECK(gu2_check(parse_aut("unitary(1,0,0,w)").L()));
    auto t = parse_aut("tri(1,0,0,1; 1; 3*t0^4; -1)");
    CHECK(t.q() == parse_form("3*t0^4", f121()));
    CHECK(parse_f121("3+2*w") == FieldValue(f121(), std::vector<std::uint32_t>{3, 2}));
    CHECK_THROWS(parse_aut("h(1)"));
    CHECK_THROWS(parse_aut("unitary(1,0,0)"));
    CHECK_THROWS(parse_aut("g(x)"));
}
