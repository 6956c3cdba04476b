// Acceptance suite: one line per criterion with its wall-time limit.
// Uses the library directly, independently of the k3verify report code.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "k3w/classify.hpp"
#include "k3w/counting.hpp"
#include "k3w/latcheck.hpp"
#include "k3w/permgrp.hpp"
#include "k3w/wpsaut.hpp"

using namespace k3w;

namespace {

ContextPtr F11() { return FieldContext::prime(11); }
FibrationModel X(long long e) { return build_standard_surface(F11()->from_int(e)); }

BinaryForm mono(const ContextPtr& k, long long c, std::size_t d, std::size_t t1) {
    return BinaryForm::monomial(k->from_int(c), d, t1);
}

// -t0^2 (t1^11 - t1 t0^10)(5 t1^11 - 5 t1 t0^10 + 4 eps^3 t0^11), built from monomials
BinaryForm expected_delta(long long e) {
    const auto k = F11();
    const auto h = mono(k, 1, 11, 11) - mono(k, 1, 11, 1);
    const auto second = mono(k, 5, 11, 11) - mono(k, 5, 11, 1) + mono(k, 4 * e * e * e, 11, 0);
    return -(mono(k, 1, 2, 0) * h * second);
}

struct Failure {
    std::string what;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Failure{what};
}

struct Criterion {
    int id;
    std::string name;
    double limit_ms;
    std::function<void()> body;
};

void c1_discriminant() {
    for (long long e = 0; e < 11; ++e) {
        const auto d = discriminant(X(e)), want = expected_delta(e);
        require(d.degree() == 24, "degree of the discriminant");
        for (std::size_t i = 0; i <= 24; ++i)
            require(d.coeff(i) == want.coeff(i), "eps=" + std::to_string(e) + " coefficient " + std::to_string(i));
    }
}

void c2_census() {
    const auto II = KodairaType::II(), I1 = KodairaType::I_n(1);
    for (long long e = 0; e < 11; ++e) {
        const auto c = fibre_census(X(e));
        std::size_t ii = 0, i1 = 0, other = 0;
        bool ii_at_infinity = false;
        for (const auto& f : c.fibres) {
            if (f.type == II) {
                ii += f.locus.degree;
                ii_at_infinity = ii_at_infinity || (f.locus.point && f.locus.point->is_infinity());
            } else if (f.type == I1) {
                i1 += f.locus.degree;
            } else {
                other += f.locus.degree;
            }
        }
        const std::string tag = "eps=" + std::to_string(e);
        require(other == 0, tag + ": unexpected fibre type");
        if (e == 0) {
            require(ii == 12 && i1 == 0, tag + ": expected 12 x II");
        } else {
            require(ii == 1 && ii_at_infinity && i1 == 22, tag + ": expected II at (0:1) and 22 x I1");
        }
    }
}

void c3_automorphisms() {
    const auto k = F11();
    for (long long e = 0; e < 11; ++e) {
        const auto g = g_map(k->from_int(e));
        require(order_mod_scaling(g) == 11, "order of g_" + std::to_string(e));
        require(symplectic_multiplier(g).is_one(), "multiplier of g_" + std::to_string(e));
        require(equation_scalar(g, SurfaceEquation::from_model(X(e))).is_one(), "g_eps preserves X_eps");
    }
    for (long long e : {0, 1}) {
        const auto tower = artin_schreier_tower(k->from_int(e));
        for (int sign : {1, -1}) {
            const auto i = i_tilde(tower, sign);
            const auto u = equation_scalar(i, SurfaceEquation::from_model(X(e)));
            require(u == -u.context()->one(), "scalar of i~ is -1");
            require(order_mod_scaling(i) == 4, "order of i~ is 4");
            const auto m = symplectic_multiplier(i);
            require(m.pow(2) == -m.context()->one(), "multiplier of i~ is a primitive 4th root");
            // i~ e~ i~^-1 = e~^-1
            const auto et = e_tilde(k);
            require(equal_mod_scaling(compose(compose(i, et), inverse(i)), inverse(et)), "i~ inverts e~");
        }
    }
}

void c4_hermitian() {
    const auto& k = f121_context();
    std::mt19937_64 rng(20261015);
    const auto target = SurfaceEquation::from_model(
        FibrationModel(BinaryForm(k, 4), BinaryForm(k, 8), mono(k, 1, 12, 0) + mono(k, 1, 12, 12)));
    int done = 0;
    while (done < 10) {
        const auto a = k->random(rng);
        if (a.frobenius() == a) continue;
        const auto h = hermitian_diagonalize(a);
        require(h.cross_terms_vanish, "cross terms vanish for alpha=" + a.to_string());
        require(h.normalized == target, "normal form for alpha=" + a.to_string());
        require(pullback(SurfaceEquation::from_model(X(0)).lifted(k), h.composite) ==
                    target.scaled(h.kappa),
                "composite pulls X0 back to kappa times the normal form");
        ++done;
    }
    const auto fermat = mono(k, 1, 12, 0) + mono(k, 1, 12, 12);
    for (int t = 0; t < 1000; ++t) {
        const auto M = random_unitary(k, rng);
        const auto prod = M.frobenius().transpose() * M;
        require(prod == Matrix::identity(k, 2), "sample is unitary");
        require(substitute(fermat, M) == fermat, "unitary sample preserves t0^12 + t1^12");
    }
}

void c5_groups() {
    const std::vector<std::pair<std::string, std::uint64_t>> table{
        {"C11", 11}, {"F55", 55}, {"L2_11", 660}, {"M11", 7920}, {"M22", 443520}};
    for (const auto& [name, order] : table) {
        const auto G = standard_group(name);
        require(G.order() == order, name + " order");
        std::uint64_t seen = 0;
        G.for_each_element([&](const Perm& g) {
            const auto n = g.order();
            require((n >= 1 && n <= 8) || n == 11, name + " element of order " + std::to_string(n));
            ++seen;
        });
        require(seen == order, name + " enumeration count");
        if (order >= 660) require(sylow11_normalizer_order(G) == 55, name + " Sylow 11-normalizer");
    }
}

void c6_mu() {
    const std::vector<std::pair<std::string, Rational>> table{
        {"C11", 4}, {"F55", 4}, {"L2_11", 4}, {"M11", 3}, {"M22", 3}};
    for (const auto& [name, value] : table) {
        const auto s = element_order_spectrum(standard_group(name));
        require(mu(s) == value, name + " mu by the character average");
        require(mu_via_identity(s) == value, name + " mu by the order identity");
    }
}

void c7_sieve() {
    const auto rep = admissible_orders();
    if (rep.orders() != std::vector<std::uint64_t>{11, 55, 660, 7920, 443520}) {
        std::ostringstream os;
        os << "survivors:";
        for (auto o : rep.orders()) os << " " << o;
        for (const auto& r : rep.rejected) os << "; " << r.order << ": " << r.first_failure;
        throw Failure{os.str()};
    }
}

void c8_lattice() {
    for (long long m = 1; m <= 50; ++m)
        for (long long b = 1; b <= 50; ++b) {
            const auto d = var0_determinant(m, b);
            require(d == 242 * (m * m + b * m) - 110 * m && d > 0, "var0 determinant");
        }
    const IntSymMatrix U({{0, 1}, {1, 0}}), U11({{0, 11}, {11, 0}});
    const auto a = rank2_case(U);
    require(a.kind == Rank2Kind::U && a.isotropic && U.form({(*a.isotropic)[0], (*a.isotropic)[1]}) == 0, "det -1");
    require(rank2_case_for_determinant(-11).kind == Rank2Kind::Impossible, "det -11");
    const auto c = rank2_case(U11, true);
    require(c.kind == Rank2Kind::U11 && c.isotropic && U11.form({(*c.isotropic)[0], (*c.isotropic)[1]}) == 0,
            "det -121");
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> small(-500, 500), len(1, 5), mult(1, 30);
    for (int t = 0; t < 100; ++t) {
        std::vector<long long> o, ms, bs;
        for (long long i = 0, n = len(rng); i < n; ++i) {
            o.push_back(11 * mult(rng));
            ms.push_back(small(rng));
            bs.push_back(small(rng));
        }
        require(mod11_contradiction(11 * small(rng) + 1, o, ms, bs, small(rng)) == std::pair<int, int>{0, 1},
                "mod 11 pair");
    }
}

void c9_counting() {
    const auto k = F11();
    const auto pc = surface_point_count(X(0), k);
    require(pc.total == 144, "|X0(F11)| = " + std::to_string(pc.total));
    require(pc.fibres.size() == 12, "12 fibres");
    for (const auto& [t, n] : pc.fibres) require(n == 12, "12 points on the fibre over " + t.to_string());
    const auto fx = fixed_point_count(X(0), g_map(k->zero()), k);
    require(fx.fixed == 12 && fx.by_base.size() == 1 && fx.by_base[0].first.is_infinity(), "g0 fixed points");
    require(base_orbit_census(X(0), g_map(k->zero())) == std::vector<std::size_t>{1, 11}, "orbits eps=0");
    require(base_orbit_census(X(1), g_map(k->one())) == std::vector<std::size_t>{1, 11, 11}, "orbits eps=1");
    for (long long e = 0; e < 11; ++e)
        for (const auto& ctx : {k, f121_context()}) {
            const auto q = static_cast<long long>(ctx->size());
            const auto N = static_cast<long long>(surface_point_count(X(e), ctx).total);
            require(std::llabs(N - 1 - q * q) <= 22 * q, "Weil bound eps=" + std::to_string(e) + " q=" + std::to_string(q));
        }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "discriminant exactness", 1000, c1_discriminant},
        {2, "fibre census", 1000, c2_census},
        {3, "automorphism suite", 5000, c3_automorphisms},
        {4, "hermitian normalization", 10000, c4_hermitian},
        {5, "group orders and spectra", 120000, c5_groups},
        {6, "mathieu characters", 120000, c6_mu},
        {7, "order sieve", 1000, c7_sieve},
        {8, "lattice checks", 1000, c8_lattice},
        {9, "counting", 60000, c9_counting},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = true;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body();
        } catch (const Failure& f) {
            ok = false;
            detail = f.what;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (ok && ms > c.limit_ms) {
            ok = false;
            detail = "time limit exceeded";
        }
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): "
                  << static_cast<long long>(ms) << " ms, limit " << static_cast<long long>(c.limit_ms) << " ms";
        if (!detail.empty()) std::cout << " -- " << detail;
        std::cout << std::endl;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all 9 criteria passed") << std::endl;
    return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
