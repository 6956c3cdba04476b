// Field arithmetic, towers, roots of unity and linear algebra.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "k3w/ffield.hpp"
#include "k3w/upoly.hpp"

using namespace k3w;

namespace {

std::vector<FieldValue> ints(const ContextPtr& k, std::initializer_list<long long> v) {
    std::vector<FieldValue> out;
    for (auto x : v) out.push_back(k->from_int(x));
    return out;
}

ContextPtr f121() { return FieldContext::extension(FieldContext::prime(11), ints(FieldContext::prime(11), {1, 0, 1})); }

// Integer oracle for multiplication in F_p[x]/(x^2 + 1).
std::pair<int, int> gauss_mul(int a0, int a1, int b0, int b1) {
    return {((a0 * b0 - a1 * b1) % 11 + 11) % 11, (a0 * b1 + a1 * b0) % 11};
}

}  // namespace

TEST_CASE("prime field basics") {
    auto k = FieldContext::prime(11);
    CHECK(k->from_int(3) * k->from_int(4) == k->one());
    CHECK(k->from_int(5).inverse() == k->from_int(9));
    CHECK(k->from_int(-1).prime_value() == 10u);
    CHECK_THROWS_AS(k->zero().inverse(), DivisionByZero);
    CHECK_THROWS_AS(k->one() / k->zero(), DivisionByZero);
    CHECK_THROWS(FieldContext::prime(12));
    CHECK_THROWS(FieldContext::prime(3));
    CHECK(k->size() == 11);
}

TEST_CASE("exhaustive inverse oracle in F11") {
    auto k = FieldContext::prime(11);
    for (int a = 1; a < 11; ++a) {
        int inv = 0;
        for (int b = 1; b < 11; ++b)
            if (a * b % 11 == 1) inv = b;
        CHECK(k->from_int(a).inverse() == k->from_int(inv));
    }
}

TEST_CASE("F121 multiplication matches the Gaussian-integer oracle") {
    auto k = f121();
    CHECK(k->size() == 121);
    for (int a0 = 0; a0 < 11; a0 += 3)
        for (int a1 = 0; a1 < 11; a1 += 2)
            for (int b0 = 0; b0 < 11; ++b0)
                for (int b1 = 0; b1 < 11; b1 += 5) {
                    FieldValue a(k, {std::uint32_t(a0), std::uint32_t(a1)});
                    FieldValue b(k, {std::uint32_t(b0), std::uint32_t(b1)});
                    auto [c0, c1] = gauss_mul(a0, a1, b0, b1);
                    CHECK((a * b) == FieldValue(k, {std::uint32_t(c0), std::uint32_t(c1)}));
                }
    CHECK(k->generator() * k->generator() == k->from_int(-1));
}

TEST_CASE("frobenius squared is the identity on F121") {
    auto k = f121();
    for (std::uint64_t i = 0; i < 121; ++i) {
        auto v = k->element(i);
        CHECK(v.frobenius().frobenius() == v);
        CHECK(v.pow(121) == v);
        CHECK(v.index() == i);
    }
}

TEST_CASE("reducible and malformed moduli") {
    auto k = FieldContext::prime(11);
    CHECK_THROWS_AS(FieldContext::extension(k, ints(k, {-3, 0, 1})), ReducibleModulus);
    CHECK_THROWS(FieldContext::extension(k, ints(k, {1, 2})));
    CHECK_THROWS(FieldContext::extension(k, ints(k, {1, 0, 2})));
}

TEST_CASE("Artin-Schreier extension") {
    auto k = FieldContext::prime(11);
    std::vector<FieldValue> mod(12, k->zero());
    mod[0] = k->from_int(3);
    mod[1] = k->from_int(-1);
    mod[11] = k->one();
    auto kb = FieldContext::extension(k, mod);
    CHECK(kb->artin_schreier());
    CHECK(kb->degree() == 11);
    CHECK(kb->size() == u128(285311670611ull));
    auto b = kb->generator();
    CHECK((b.pow(11) - b + kb->from_int(3)).is_zero());
    // b + i is also a root: the Artin-Schreier orbit.
    for (int i = 0; i < 11; ++i) {
        auto r = b + kb->from_int(i);
        CHECK((r.pow(11) - r + kb->from_int(3)).is_zero());
    }
    // -1 stays a non-square (11^11 = 3 mod 4), so s^2 + 1 is irreducible above.
    auto top = FieldContext::extension(kb, {kb->one(), kb->zero(), kb->one()});
    CHECK(top->degree() == 22);
    auto s = top->generator();
    CHECK(s * s == top->from_int(-1));
    auto bl = lift(b, top);
    CHECK((bl.pow(11) - bl + top->from_int(3)).is_zero());
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(7);
    auto k11 = FieldContext::prime(11);
    std::vector<FieldValue> mod(12, k11->zero());
    mod[0] = k11->from_int(3);
    mod[1] = k11->from_int(-1);
    mod[11] = k11->one();
    auto kb = FieldContext::extension(k11, mod);
    auto top = FieldContext::extension(kb, {kb->one(), kb->zero(), kb->one()});
    for (const auto& k : {k11, f121(), kb, top}) {
        for (int i = 0; i < 40; ++i) {
            auto a = k->random(rng), b = k->random(rng), c = k->random(rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
            if (!a.is_zero()) CHECK(a * a.inverse() == k->one());
            CHECK(a.pth_root().frobenius() == a);
        }
        auto a = k->random(rng);
        CHECK(a.pow(k->size()) == a);
    }
}

TEST_CASE("root_of_unity") {
    auto k = FieldContext::prime(11);
    auto z5 = root_of_unity(k, 5);
    CHECK(z5.pow(5) == k->one());
    CHECK(z5 != k->one());
    CHECK_THROWS_AS(root_of_unity(k, 12), std::invalid_argument);
    auto k2 = f121();
    auto z = root_of_unity(k2, 12);
    CHECK(z.pow(12) == k2->one());
    CHECK(z.pow(6) != k2->one());
    CHECK(z.pow(4) != k2->one());
    CHECK(multiplicative_order(z) == 12);
    CHECK(multiplicative_order(root_of_unity(k2, 120)) == 120);
}

TEST_CASE("context mismatch") {
    auto k = FieldContext::prime(11);
    auto k2 = f121();
    auto k13 = FieldContext::prime(13);
    CHECK_THROWS_AS(k->one() + k13->one(), ContextMismatch);
    CHECK(lift(k->from_int(4), k2) == k2->from_int(4));
    CHECK_THROWS_AS(lift(k2->generator(), k), ContextMismatch);
    CHECK_THROWS_AS(FieldValue() + k->one(), ContextMismatch);
}

TEST_CASE("kernel and rank") {
    auto k = FieldContext::prime(11);
    CHECK(kernel(Matrix::identity(k, 3)).empty());
    CHECK(kernel(Matrix(k, 2, 3)).size() == 3);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
        Matrix m(k, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = (rng() % 3 == 0) ? k->zero() : k->random(rng);
        auto ker = kernel(m);
        CHECK(ker.size() + rank(m) == c);
        for (const auto& v : ker) {
            for (std::size_t i = 0; i < r; ++i) {
                FieldValue s = k->zero();
                for (std::size_t j = 0; j < c; ++j) s += m(i, j) * v[j];
                CHECK(s.is_zero());
            }
        }
    }
}

TEST_CASE("matrix inverse and determinant") {
    auto k = f121();
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        Matrix m(k, 3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = k->random(rng);
        if (m.determinant().is_zero()) {
            CHECK_THROWS(m.inverse());
            continue;
        }
        CHECK(m * m.inverse() == Matrix::identity(k, 3));
        CHECK((m * m).determinant() == m.determinant() * m.determinant());
    }
}

TEST_CASE("polynomial factorization over F11") {
    auto k = FieldContext::prime(11);
    // x^11 - x splits into all linear factors.
    std::vector<FieldValue> c(12, k->zero());
    c[1] = k->from_int(-1);
    c[11] = k->one();
    Poly f(k, c);
    CHECK(roots(f).size() == 11);
    auto fac = factor(f);
    CHECK(fac.size() == 11);
    // (x^2 + 1)^3 (x - 2)
    Poly g = Poly(k, ints(k, {1, 0, 1}));
    Poly h = g * g * g * Poly(k, ints(k, {-2, 1}));
    auto hf = factor(h);
    REQUIRE(hf.size() == 2);
    CHECK(hf[0].first.degree() == 1);
    CHECK(hf[0].second == 1);
    CHECK(hf[1].first == g);
    CHECK(hf[1].second == 3);
    // x^11 - x + 3 is irreducible; (x^11 - x + 3)^11 is a p-th power.
    std::vector<FieldValue> as(12, k->zero());
    as[0] = k->from_int(3);
    as[1] = k->from_int(-1);
    as[11] = k->one();
    Poly a(k, as);
    CHECK(is_irreducible(a));
    Poly a11 = Poly::constant(k->one());
    for (int i = 0; i < 11; ++i) a11 = a11 * a;
    auto af = factor(a11);
    REQUIRE(af.size() == 1);
    CHECK(af[0].second == 11);
    CHECK(af[0].first == a);
}

TEST_CASE("equal degree split recovers random products") {
    auto k = FieldContext::prime(11);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        Poly prod = Poly::constant(k->one());
        std::size_t n = 0;
        while (n < 3) {
            std::vector<FieldValue> c{k->random(rng), k->random(rng), k->one()};
            Poly q(k, c);
            if (!is_irreducible(q) || !gcd(prod, q).is_one()) continue;
            prod = prod * q;
            ++n;
        }
        auto parts = equal_degree_split(prod, 2);
        CHECK(parts.size() == 3);
        Poly back = Poly::constant(k->one());
        for (const auto& p : parts) back = back * p;
        CHECK(back == prod);
    }
}
