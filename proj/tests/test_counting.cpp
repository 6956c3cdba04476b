// Point counts and fixed loci against direct enumeration of the equation.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "k3w/counting.hpp"

using namespace k3w;

namespace {

ContextPtr F11() { return FieldContext::prime(11); }

FibrationModel X(long long e) { return build_standard_surface(F11()->from_int(e)); }

// Oracle: solutions of F(t0, t1, x, y) = 0 with (t0, t1) normalized, plus
// one section point per base point.
std::uint64_t brute_count(const FibrationModel& m, const ContextPtr& k) {
    const auto F = SurfaceEquation::from_model(m).lifted(k);
    std::uint64_t n = 0;
    for (const auto& t : projective_line(k)) {
        ++n;
        for (std::uint64_t i = 0; i < k->size(); ++i)
            for (std::uint64_t j = 0; j < k->size(); ++j)
                if (F.evaluate({t.u(), t.v(), k->element(i), k->element(j)}).is_zero()) ++n;
    }
    return n;
}

std::set<std::string> fixed_set(const FibrationModel& m, const WpsAut& s, const ContextPtr& k) {
    std::set<std::string> out;
    for (const auto& P : surface_points(m, k))
        if (is_fixed(s, P))
            out.insert(P.base.to_string() + (P.xy ? P.xy->first.to_string() + "," + P.xy->second.to_string() : "o"));
    return out;
}

}  // namespace

TEST_CASE("fields of given degree") {
    CHECK(field_of_degree(11, 1)->size() == 11);
    CHECK(field_of_degree(11, 2)->same_as(*f121_context()));
    CHECK(field_of_degree(11, 3)->size() == 1331);
    CHECK(extension_of_degree(f121_context(), 2)->size() == 14641);
    CHECK_THROWS(extension_of_degree(f121_context(), 3));
}

TEST_CASE("X0 over F11") {
    const auto m = X(0);
    auto pc = surface_point_count(m, F11());
    CHECK(pc.q == 11);
    CHECK(pc.total == 144);
    CHECK(pc.fibres.size() == 12);
    for (const auto& [t, n] : pc.fibres) CHECK(n == 12);
    CHECK(brute_count(m, F11()) == 144);
    CHECK(fibre_point_count(m, ProjPoint::infinity(F11()), F11()) == 12);
}

TEST_CASE("counts agree with enumeration for every epsilon over F11") {
    for (long long e = 0; e < 11; ++e) {
        const auto m = X(e);
        auto pc = surface_point_count(m, F11());
        CHECK(pc.total == brute_count(m, F11()));
        std::uint64_t sum = 0;
        for (const auto& [t, n] : pc.fibres) {
            sum += n;
            CHECK(n >= 1);
            CHECK(n == fibre_point_count(m, t, F11()));
            // Hasse: |n - 12| <= 2 sqrt(11)
            CHECK(n + 6 >= 12);
            CHECK(n <= 12 + 6);
        }
        CHECK(sum == pc.total);
        CHECK(pc.total == surface_points(m, F11()).size());
    }
}

TEST_CASE("cuspidal fibres have q + 1 points") {
    const auto k = f121_context();
    for (long long e : {0, 1, 5}) {
        const auto m = X(e);
        auto census = fibre_census(m);
        for (const auto& f : census.fibres) {
            if (!(f.type == KodairaType::II()) || !f.locus.point) continue;
            CHECK(fibre_point_count(m, *f.locus.point, F11()) == 12);
            CHECK(fibre_point_count(m, *f.locus.point, k) == 122);
        }
    }
}

TEST_CASE("Weil bound") {
    for (long long e = 0; e < 11; ++e)
        for (const auto& k : {F11(), f121_context()}) {
            const auto q = static_cast<long long>(k->size());
            const auto N = static_cast<long long>(surface_point_count(X(e), k).total);
            CHECK(std::llabs(N - 1 - q * q) <= 22 * q);
        }
}

TEST_CASE("budget") {
    CHECK_THROWS_AS(surface_point_count(X(0), field_of_degree(11, 3)), BudgetExceeded);
    CHECK(surface_point_count(X(0), field_of_degree(11, 3), true).total > 0);
}

TEST_CASE("fixed points") {
    const auto k = F11();
    const auto m0 = X(0);
    auto g0 = fixed_point_count(m0, g_map(k->zero()), k, "g(0)");
    CHECK(g0.fixed == 12);
    REQUIRE(g0.by_base.size() == 1);
    CHECK(g0.by_base[0].first == ProjPoint::infinity(k));
    CHECK(g0.by_base[0].second == 12);
    CHECK(fixed_point_count(m0, WpsAut::identity(k), k).fixed == 144);
    CHECK(fixed_point_count(m0, WpsAut::scaling(k->from_int(3)), k).fixed == 144);
    auto e = fixed_point_count(m0, e_tilde(f121_context()), f121_context());
    CHECK(e.fixed == 122);
    CHECK_THROWS_AS(fixed_point_count(m0, WpsAut::linear(Matrix::from_ints(k, {{1, 0}, {0, 2}})), k), NotAnAutomorphism);
    for (long long eps = 0; eps < 11; ++eps) {
        const auto m = X(eps);
        auto g = fixed_point_count(m, g_map(k->from_int(eps)), k);
        CHECK(g.fixed == 12);
        CHECK(g.by_base.size() == 1);
    }
}

TEST_CASE("fixed points of s are fixed by its powers") {
    const auto k = F11();
    for (long long eps : {0, 1, 4}) {
        const auto m = X(eps);
        const auto g = g_map(k->from_int(eps));
        const auto base = fixed_set(m, g, k);
        for (std::size_t n = 2; n <= 5; ++n) {
            const auto more = fixed_set(m, power(g, n), k);
            CHECK(std::includes(more.begin(), more.end(), base.begin(), base.end()));
        }
        CHECK(fixed_set(m, power(g, 11), k).size() == surface_point_count(m, k).total);
    }
}

TEST_CASE("base orbits on singular fibres") {
    const auto k = F11();
    CHECK(base_orbit_census(X(0), g_map(k->zero())) == std::vector<std::size_t>{1, 11});
    CHECK(base_orbit_census(X(1), g_map(k->one())) == std::vector<std::size_t>{1, 11, 11});
    CHECK(base_orbit_census(X(0), WpsAut::identity(k)) == std::vector<std::size_t>(12, 1));
    CHECK(base_orbit_census(X(1), WpsAut::identity(k)) == std::vector<std::size_t>(23, 1));
    for (long long e = 2; e < 11; ++e)
        for (auto s : base_orbit_census(X(e), g_map(k->from_int(e)))) CHECK(11 % s == 0);
}
