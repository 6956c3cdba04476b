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
 * @file weierstrass.hpp
 * @brief Elliptic fibrations y^2 + x^3 + a2 x^2 + a4 x + a6 = 0 over P^1.
 *
 * a2, a4, a6 are binary forms of degree 4, 8, 12. The discriminant is
 * normalized as -4A^3 - 27B^2 on the depressed model y^2 + x^3 + A x + B,
 * without the usual factor -16.
 */

#ifndef K3W_WEIERSTRASS_HPP
#define K3W_WEIERSTRASS_HPP

#include <optional>
#include <string>
#include <vector>

#include "k3w/binform.hpp"

namespace k3w {

struct FibrationModel {
    BinaryForm a2, a4, a6;
    std::optional<FieldValue> epsilon;

    /// Checks degrees 4/8/12, a shared context and characteristic >= 5.
    FibrationModel(BinaryForm a2, BinaryForm a4, BinaryForm a6, std::optional<FieldValue> epsilon = std::nullopt);

    const ContextPtr& context() const noexcept { return a2.context(); }
    FibrationModel lifted(const ContextPtr& target) const;
};

struct DepressedModel {
    BinaryForm A, B;
};

/// Kodaira symbol. n is the index of I_n and I_n*; zero otherwise.
struct KodairaType {
    enum class Family { I, II, III, IV, IStar, IIStar, IIIStar, IVStar };
    Family family = Family::I;
    std::size_t n = 0;

    std::string name() const;
    bool operator==(const KodairaType&) const = default;

    static KodairaType I_n(std::size_t n) { return {Family::I, n}; }
    static KodairaType II() { return {Family::II, 0}; }
};

/**
 * The char >= 5 table. ord_c4 == nullopt means c4 vanishes identically.
 * Throws NonMinimalModel for additive fibres with ordΔ >= 12, and
 * std::invalid_argument for pairs no Weierstrass model can produce.
 */
KodairaType kodaira_type(std::optional<std::size_t> ord_c4, std::size_t ord_delta);

struct FibreRecord {
    FormFactor locus;
    std::size_t ord_delta = 0;
    std::optional<std::size_t> ord_c4;
    KodairaType type;

    /// "nodal" for I1, "cuspidal" for II, "other" otherwise.
    std::string description() const;
};

struct FibreCensus {
    BinaryForm discriminant;
    std::vector<FibreRecord> fibres;

    /// Geometric fibre count of a type: each record counts with its locus degree.
    std::size_t count(const KodairaType& t) const;
    std::size_t geometric_fibre_count() const;
    /// Sum of ordΔ over geometric fibres.
    std::size_t total_ord_delta() const;
};

/// a2 = eps t0^4, a4 = 0, a6 = t1^11 t0 - t0^11 t1, over eps's context.
FibrationModel build_standard_surface(const FieldValue& eps);

DepressedModel depress(const FibrationModel& m);
/// -4A^3 - 27B^2. Throws NotEllipticFibration when it vanishes.
BinaryForm discriminant(const FibrationModel& m);
/// The cubic discriminant written directly in a2, a4, a6 (no depression). May be zero.
BinaryForm discriminant_general(const FibrationModel& m);
/// 16 a2^2 - 48 a4.
BinaryForm c4(const FibrationModel& m);

/// Every a_k replaced by a_k∘L.
FibrationModel base_change(const FibrationModel& m, const Matrix& L);

FibreCensus fibre_census(const FibrationModel& m);
/// True iff every fibre is I1 or II and the census accounts for degree 24.
/// A non-minimal fibre gives false.
bool verify_smooth(const FibrationModel& m);

}  // namespace k3w

#endif
