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
 * @file counting.hpp
 * @brief Point counts and fixed loci of a fibration over F_q, fibre by fibre.
 *
 * Each fibre contributes its affine solutions (x, y) plus one section point.
 * Points are compared modulo (t0, t1, x, y) ~ (λt0, λt1, λ^4 x, λ^6 y).
 */

#ifndef K3W_COUNTING_HPP
#define K3W_COUNTING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3w/wpsaut.hpp"

namespace k3w {

/// Fields above this size need allow_large.
inline constexpr std::uint64_t kCountBudget = 121;

/// F_{p^k}: F_p for k = 1, f121_context() for p = 11, k = 2, otherwise the
/// extension by the first monic irreducible of degree k in index order.
ContextPtr field_of_degree(std::uint32_t p, std::size_t k);

/// Extension of @p base of degree @p k (k = 1 returns base). Only the towers
/// supported by FieldContext are reachable; std::invalid_argument otherwise.
ContextPtr extension_of_degree(const ContextPtr& base, std::size_t k);

/// Affine solutions of the fibre over t, plus one.
std::uint64_t fibre_point_count(const FibrationModel& m, const ProjPoint& t, const ContextPtr& ctx);

struct PointCount {
    std::uint64_t q = 0;
    std::vector<std::pair<ProjPoint, std::uint64_t>> fibres;  ///< in projective_line() order
    std::uint64_t total = 0;
};

/// Throws BudgetExceeded when q > kCountBudget and !allow_large.
PointCount surface_point_count(const FibrationModel& m, const ContextPtr& ctx, bool allow_large = false);

/// A point of the surface: the section point of a fibre when xy is empty.
struct SurfacePoint {
    ProjPoint base;
    std::optional<std::pair<FieldValue, FieldValue>> xy;
};

/// All F_q-points, fibre by fibre.
std::vector<SurfacePoint> surface_points(const FibrationModel& m, const ContextPtr& ctx, bool allow_large = false);

/// True iff σ(P) = P modulo weighted scaling. A section point is fixed iff its base point is.
bool is_fixed(const WpsAut& s, const SurfacePoint& P);

struct FixedLocusReport {
    std::string label;
    std::uint64_t q = 0;
    std::uint64_t fixed = 0;
    std::vector<std::pair<ProjPoint, std::uint64_t>> by_base;  ///< base points carrying fixed points
};

/// Throws NotAnAutomorphism if s does not preserve the surface.
FixedLocusReport fixed_point_count(const FibrationModel& m, const WpsAut& s, const ContextPtr& ctx,
                                   const std::string& label = "", bool allow_large = false);

/// Orbit sizes, sorted, of the base action of s on the distinct roots of the
/// discriminant, computed in a splitting field.
std::vector<std::size_t> base_orbit_census(const FibrationModel& m, const WpsAut& s);

}  // namespace k3w

#endif
