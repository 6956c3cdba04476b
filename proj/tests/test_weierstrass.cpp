// Weierstrass models: depression, discriminant, c4, fibre census.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>

#include "k3w/weierstrass.hpp"

using namespace k3w;

namespace {

ContextPtr f11() { return FieldContext::prime(11); }
ContextPtr f121() {
    auto k = f11();
    return FieldContext::extension(k, {k->one(), k->zero(), k->one()});
}

BinaryForm random_form(const ContextPtr& k, std::size_t d, std::mt19937_64& rng) {
    std::vector<FieldValue> c;
    for (std::size_t i = 0; i <= d; ++i) c.push_back(k->random(rng));
    return BinaryForm(k, c);
}

FibrationModel random_model(const ContextPtr& k, std::mt19937_64& rng) {
    return FibrationModel(random_form(k, 4, rng), random_form(k, 8, rng), random_form(k, 12, rng));
}

// Oracle: discriminant of the monic cubic x^3 + p x^2 + q x + r as -Res(f, f'),
// with the resultant taken as a 5x5 Sylvester determinant.
FieldValue cubic_disc(const FieldValue& p, const FieldValue& q, const FieldValue& r) {
    const auto& k = p.context();
    auto z = k->zero();
    auto one = k->one();
    auto three = k->from_int(3), two = k->from_int(2);
    Matrix s = Matrix::from_rows(k, {{one, p, q, r, z},
                                     {z, one, p, q, r},
                                     {three, two * p, q, z, z},
                                     {z, three, two * p, q, z},
                                     {z, z, three, two * p, q}});
    return -s.determinant();
}

// The closed form to be matched: -t0^2 h (5h + 4 eps^3 t0^11), h = t1^11 - t1 t0^10.
BinaryForm closed_form_delta(const FieldValue& eps) {
    const auto& k = eps.context();
    auto h = parse_form("t1^11 - t1*t0^10", k);
    auto third = h.scaled(k->from_int(5)) + BinaryForm::monomial(k->from_int(4) * eps.pow(3), 11, 0);
    return -(parse_form("t0^2", k) * h * third);
}

std::multiset<std::pair<std::string, std::size_t>> census_shape(const FibreCensus& c) {
    std::multiset<std::pair<std::string, std::size_t>> out;
    for (const auto& f : c.fibres) out.insert({f.type.name(), f.locus.degree});
    return out;
}

}  // namespace

TEST_CASE("standard surface coefficients") {
    auto k = f11();
    auto m0 = build_standard_surface(k->zero());
    CHECK(m0.a2.is_zero());
    CHECK(m0.a4.is_zero());
    CHECK(m0.a6 == parse_form("t1^11*t0 - t0^11*t1", k));
    auto m1 = build_standard_surface(k->one());
    CHECK(m1.a2 == parse_form("t0^4", k));
    for (int e = 0; e < 11; ++e) CHECK(build_standard_surface(k->from_int(e)).a6.degree() == 12);
    CHECK_THROWS(FibrationModel(BinaryForm(k, 3), BinaryForm(k, 8), BinaryForm(k, 12)));
}

TEST_CASE("depressed model") {
    auto k = f11();
    auto m0 = build_standard_surface(k->zero());
    auto d0 = depress(m0);
    CHECK(d0.A.is_zero());
    CHECK(d0.B == m0.a6);

    auto m1 = build_standard_surface(k->one());
    auto d1 = depress(m1);
    CHECK(d1.A == parse_form("7*t0^8", k));
    CHECK(d1.B == parse_form("7*t0^12", k) + m1.a6);

    std::mt19937_64 rng(1);
    auto kq = f121();
    for (int t = 0; t < 20; ++t) {
        auto m = random_model(kq, rng);
        auto d = depress(m);
        // Oracle: shift x -> x - a2/3 pointwise and compare cubic values.
        auto u = kq->random(rng), v = kq->random(rng), x = kq->random(rng);
        auto a2 = m.a2.evaluate(u, v), a4 = m.a4.evaluate(u, v), a6 = m.a6.evaluate(u, v);
        auto xs = x - a2 / kq->from_int(3);
        auto lhs = xs.pow(3) + a2 * xs * xs + a4 * xs + a6;
        auto rhs = x.pow(3) + d.A.evaluate(u, v) * x + d.B.evaluate(u, v);
        CHECK(lhs == rhs);
    }
    auto a = random_model(kq, rng);
    FibrationModel flat(BinaryForm(kq, 4), a.a4, a.a6);
    auto df = depress(flat);
    CHECK(df.A == a.a4);
    CHECK(df.B == a.a6);
}

TEST_CASE("discriminant matches the closed form for every eps") {
    auto k = f11();
    for (int e = 0; e < 11; ++e) {
        auto eps = k->from_int(e);
        auto m = build_standard_surface(eps);
        CHECK(discriminant(m) == closed_form_delta(eps));
        CHECK(discriminant(m) == discriminant_general(m));
    }
    auto h = parse_form("t1^11 - t1*t0^10", k);
    CHECK(discriminant(build_standard_surface(k->zero())) == (parse_form("t0^2", k) * h * h).scaled(k->from_int(-5)));
}

TEST_CASE("discriminant against the Sylvester oracle") {
    auto k = f121();
    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; ++t) {
        auto m = random_model(k, rng);
        auto d = discriminant_general(m);
        CHECK(d == (d.is_zero() ? d : discriminant(m)));
        auto u = k->random(rng), v = k->random(rng);
        CHECK(d.evaluate(u, v) == cubic_disc(m.a2.evaluate(u, v), m.a4.evaluate(u, v), m.a6.evaluate(u, v)));
    }
}

TEST_CASE("vanishing discriminant") {
    auto k = f11();
    FibrationModel m(BinaryForm(k, 4), BinaryForm(k, 8), BinaryForm(k, 12));
    CHECK_THROWS_AS(discriminant(m), NotEllipticFibration);
    CHECK_THROWS_AS(fibre_census(m), NotEllipticFibration);
}

TEST_CASE("c4") {
    auto k = f11();
    CHECK(c4(build_standard_surface(k->zero())).is_zero());
    CHECK(c4(build_standard_surface(k->one())) == parse_form("5*t0^8", k));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        auto m = random_model(f121(), rng);
        CHECK(c4(m) == depress(m).A.scaled(m.context()->from_int(-48)));
    }
}

TEST_CASE("kodaira table") {
    using F = KodairaType::Family;
    CHECK(kodaira_type(0, 1) == KodairaType::I_n(1));
    CHECK(kodaira_type(0, 13) == KodairaType::I_n(13));
    CHECK(kodaira_type(1, 2) == KodairaType::II());
    CHECK(kodaira_type(std::nullopt, 2) == KodairaType::II());
    CHECK(kodaira_type(1, 3).family == F::III);
    CHECK(kodaira_type(2, 4).family == F::IV);
    CHECK(kodaira_type(2, 6) == KodairaType{F::IStar, 0});
    CHECK(kodaira_type(3, 6) == KodairaType{F::IStar, 0});
    CHECK(kodaira_type(2, 9) == KodairaType{F::IStar, 3});
    CHECK(kodaira_type(std::nullopt, 8).family == F::IVStar);
    CHECK(kodaira_type(3, 9).family == F::IIIStar);
    CHECK(kodaira_type(4, 10).family == F::IIStar);
    CHECK(kodaira_type(2, 14) == KodairaType{F::IStar, 8});
    CHECK_THROWS_AS(kodaira_type(4, 12), NonMinimalModel);
    CHECK_THROWS_AS(kodaira_type(std::nullopt, 16), NonMinimalModel);
    CHECK_THROWS_AS(kodaira_type(1, 1), std::invalid_argument);
    CHECK(kodaira_type(2, 6).name() == "I0*");
    CHECK(kodaira_type(4, 10).name() == "II*");
}

TEST_CASE("fibre census of the pencil") {
    auto k = f11();
    auto c0 = fibre_census(build_standard_surface(k->zero()));
    CHECK(c0.count(KodairaType::II()) == 12);
    CHECK(c0.geometric_fibre_count() == 12);
    for (const auto& f : c0.fibres) {
        CHECK(f.locus.degree == 1);
        CHECK(f.description() == "cuspidal");
        CHECK(!f.ord_c4.has_value());
    }
    for (int e = 1; e < 11; ++e) {
        auto c = fibre_census(build_standard_surface(k->from_int(e)));
        CHECK(c.count(KodairaType::II()) == 1);
        CHECK(c.count(KodairaType::I_n(1)) == 22);
        CHECK(c.geometric_fibre_count() == 23);
        REQUIRE(!c.fibres.empty());
        CHECK(c.fibres[0].locus.point->is_infinity());
        CHECK(c.fibres[0].type == KodairaType::II());
        // The third factor is squarefree: its gcd with the derivative is trivial.
        auto third = parse_form("5*t1^11 - 5*t1*t0^10", k) + BinaryForm::monomial(k->from_int(4 * e * e * e), 11, 0);
        auto g = third.dehomogenize();
        CHECK(gcd(g, g.derivative()).is_one());
    }
}

TEST_CASE("census total degree and double locus") {
    auto k = f11();
    auto h = parse_form("t1^11 - t1*t0^10", k);
    for (int e = 0; e < 11; ++e) {
        auto c = fibre_census(build_standard_surface(k->from_int(e)));
        CHECK(c.total_ord_delta() == 24);
        std::size_t doubles = 0;
        for (const auto& f : c.fibres) {
            if (f.ord_delta != 2) continue;
            doubles += f.locus.degree;
            const bool at_inf = f.locus.point && f.locus.point->is_infinity();
            const bool on_h = f.locus.point && h.evaluate(*f.locus.point).is_zero();
            CHECK((at_inf || (e == 0 && on_h)));
        }
        CHECK(doubles == (e == 0 ? 12u : 1u));
    }
}

TEST_CASE("census is invariant under base substitutions") {
    auto k = f11();
    std::mt19937_64 rng(4);
    for (int e : {0, 1, 5}) {
        auto m = build_standard_surface(k->from_int(e));
        auto shape = census_shape(fibre_census(m));
        for (int t = 0; t < 5; ++t) {
            Matrix L(k, 2, 2);
            do {
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t j = 0; j < 2; ++j) L(i, j) = k->random(rng);
            } while (L.determinant().is_zero());
            auto moved = fibre_census(base_change(m, L));
            CHECK(census_shape(moved) == shape);
            // A root p of the moved discriminant sits over L p.
            for (const auto& f : moved.fibres) {
                if (!f.locus.point) continue;
                auto p = f.locus.point->mapped(L);
                CHECK(discriminant(m).evaluate(p).is_zero());
            }
        }
    }
}

TEST_CASE("smoothness verdict") {
    auto k = f11();
    CHECK(verify_smooth(build_standard_surface(k->zero())));
    CHECK(verify_smooth(build_standard_surface(k->one())));
    FibrationModel bad(BinaryForm(k, 4), BinaryForm(k, 8), parse_form("t0^4*t1^8", k));
    CHECK(!verify_smooth(bad));
    auto c = fibre_census(FibrationModel(BinaryForm(k, 4), BinaryForm(k, 8), parse_form("t0^4*t1^8 + t0^12", k)));
    CHECK(c.fibres[0].type.name() == "IV*");
}
