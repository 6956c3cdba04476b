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

#include "k3w/weierstrass.hpp"

namespace k3w {

FibrationModel::FibrationModel(BinaryForm a2_, BinaryForm a4_, BinaryForm a6_, std::optional<FieldValue> eps)
    : a2(std::move(a2_)), a4(std::move(a4_)), a6(std::move(a6_)), epsilon(std::move(eps)) {
    if (a2.degree() != 4 || a4.degree() != 8 || a6.degree() != 12)
        throw std::invalid_argument("Weierstrass coefficients must have degrees 4, 8, 12");
    if (!a2.context()->same_as(*a4.context()) || !a2.context()->same_as(*a6.context())) throw ContextMismatch();
    if (a2.context()->characteristic() < 5) throw std::invalid_argument("characteristic must be at least 5");
}

FibrationModel FibrationModel::lifted(const ContextPtr& target) const {
    std::optional<FieldValue> e;
    if (epsilon) e = lift(*epsilon, target);
    return FibrationModel(a2.lifted(target), a4.lifted(target), a6.lifted(target), e);
}

std::string KodairaType::name() const {
    switch (family) {
        case Family::I: return "I" + std::to_string(n);
        case Family::II: return "II";
        case Family::III: return "III";
        case Family::IV: return "IV";
        case Family::IStar: return "I" + std::to_string(n) + "*";
        case Family::IIStar: return "II*";
        case Family::IIIStar: return "III*";
        case Family::IVStar: return "IV*";
    }
    return "?";
}

KodairaType kodaira_type(std::optional<std::size_t> ord_c4, std::size_t ord_delta) {
    using F = KodairaType::Family;
    if (ord_delta == 0) return {F::I, 0};
    if (ord_c4 && *ord_c4 == 0) return {F::I, ord_delta};
    // Additive reduction. nullopt compares above every integer.
    const auto c4_at_least = [&](std::size_t k) { return !ord_c4 || *ord_c4 >= k; };
    const auto bad = [&]() -> KodairaType {
        throw std::invalid_argument("no fibre with ordC4 = " + (ord_c4 ? std::to_string(*ord_c4) : std::string("inf")) +
                                    ", ordDelta = " + std::to_string(ord_delta));
    };
    if (ord_delta >= 12 && c4_at_least(4))
        throw NonMinimalModel("non-minimal: ordDelta = " + std::to_string(ord_delta) + " with ordC4 >= 4");
    if (ord_c4 && *ord_c4 == 2 && ord_delta >= 6) return {F::IStar, ord_delta - 6};
    switch (ord_delta) {
        case 2: return {F::II, 0};
        case 3: return {F::III, 0};
        case 4: return {F::IV, 0};
        case 6: return {F::IStar, 0};
        case 8: return {F::IVStar, 0};
        case 9: return {F::IIIStar, 0};
        case 10: return {F::IIStar, 0};
        default: return bad();
    }
}

std::string FibreRecord::description() const {
    if (type == KodairaType::I_n(1)) return "nodal";
    if (type == KodairaType::II()) return "cuspidal";
    if (type == KodairaType::I_n(0)) return "smooth";
    return "other";
}

std::size_t FibreCensus::count(const KodairaType& t) const {
    std::size_t n = 0;
    for (const auto& f : fibres)
        if (f.type == t) n += f.locus.degree;
    return n;
}

std::size_t FibreCensus::geometric_fibre_count() const {
    std::size_t n = 0;
    for (const auto& f : fibres) n += f.locus.degree;
    return n;
}

std::size_t FibreCensus::total_ord_delta() const {
    std::size_t n = 0;
    for (const auto& f : fibres) n += f.locus.degree * f.ord_delta;
    return n;
}

FibrationModel build_standard_surface(const FieldValue& eps) {
    const auto& k = eps.context();
    auto a2 = BinaryForm::monomial(eps, 4, 0);
    BinaryForm a4(k, 8);
    auto a6 = BinaryForm::monomial(k->one(), 12, 11) - BinaryForm::monomial(k->one(), 12, 1);
    return FibrationModel(std::move(a2), std::move(a4), std::move(a6), eps);
}

DepressedModel depress(const FibrationModel& m) {
    const auto& k = m.context();
    const FieldValue third = k->from_int(3).inverse();
    const FieldValue two27 = k->from_int(2) / k->from_int(27);
    BinaryForm A = m.a4 - (m.a2 * m.a2).scaled(third);
    BinaryForm B = m.a6 - (m.a2 * m.a4).scaled(third) + (m.a2 * m.a2 * m.a2).scaled(two27);
    return {std::move(A), std::move(B)};
}

BinaryForm discriminant(const FibrationModel& m) {
    const auto& k = m.context();
    const auto [A, B] = depress(m);
    BinaryForm d = (A * A * A).scaled(k->from_int(-4)) - (B * B).scaled(k->from_int(27));
    if (d.is_zero()) throw NotEllipticFibration();
    return d;
}

BinaryForm discriminant_general(const FibrationModel& m) {
    const auto& k = m.context();
    const auto& a2 = m.a2;
    const auto& a4 = m.a4;
    const auto& a6 = m.a6;
    return a2 * a2 * a4 * a4 - (a4 * a4 * a4).scaled(k->from_int(4)) - (a2 * a2 * a2 * a6).scaled(k->from_int(4)) -
           (a6 * a6).scaled(k->from_int(27)) + (a2 * a4 * a6).scaled(k->from_int(18));
}

BinaryForm c4(const FibrationModel& m) {
    const auto& k = m.context();
    return (m.a2 * m.a2).scaled(k->from_int(16)) - m.a4.scaled(k->from_int(48));
}

FibrationModel base_change(const FibrationModel& m, const Matrix& L) {
    auto a2 = substitute(m.a2, L);
    auto a4 = substitute(m.a4, L);
    auto a6 = substitute(m.a6, L);
    std::optional<FieldValue> e;
    if (m.epsilon) e = lift(*m.epsilon, a2.context());
    return FibrationModel(std::move(a2), std::move(a4), std::move(a6), e);
}

FibreCensus fibre_census(const FibrationModel& m) {
    FibreCensus census{discriminant(m), {}};
    const BinaryForm cc = c4(m);
    for (const auto& f : squarefree_decomposition(census.discriminant).factors) {
        const auto oc = order_along(cc, f);
        const auto type = kodaira_type(oc, f.multiplicity);
        census.fibres.push_back(FibreRecord{f, f.multiplicity, oc, type});
    }
    return census;
}

bool verify_smooth(const FibrationModel& m) {
    FibreCensus census{BinaryForm(m.context(), 0), {}};
    try {
        census = fibre_census(m);
    } catch (const NonMinimalModel&) {
        return false;
    }
    for (const auto& f : census.fibres)
        if (f.type != KodairaType::I_n(1) && f.type != KodairaType::II()) return false;
    return census.discriminant.degree() == 24 && census.total_ord_delta() == 24;
}

}  // namespace k3w
