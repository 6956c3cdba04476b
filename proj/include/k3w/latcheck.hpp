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
 * @file latcheck.hpp
 * @brief Small integer lattice and congruence checks: rank 2 even Gram
 * matrices of determinant -1, -11, -121, a 3x3 determinant identity and a
 * mod 11 incompatibility.
 */

#ifndef K3W_LATCHECK_HPP
#define K3W_LATCHECK_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace k3w {

/// Symmetric integer matrix of dimension 2 or 3.
class IntSymMatrix {
   public:
    /// Throws std::invalid_argument unless rows form a symmetric 2x2 or 3x3 matrix.
    explicit IntSymMatrix(const std::vector<std::vector<long long>>& rows);

    std::size_t dim() const noexcept { return n_; }
    long long operator()(std::size_t i, std::size_t j) const { return e_[i][j]; }
    bool even() const noexcept;
    /// Exact determinant by cofactor expansion.
    __int128 determinant() const;
    /// v^T M v
    __int128 form(const std::vector<long long>& v) const;

   private:
    std::size_t n_ = 0;
    std::array<std::array<long long, 3>, 3> e_{};
};

enum class Rank2Kind { U, Impossible, U11, NonElementary };

struct Rank2Result {
    Rank2Kind kind;
    long long det = 0;
    std::optional<std::array<long long, 2>> isotropic;  ///< primitive, v^T M v = 0
    bool search_confirmed = false;  ///< an isotropic vector with |x|,|y| <= 20 was found by search
    std::string witness;
    std::string name() const;  ///< "U", "impossible", "U(11)", "non-elementary"
};

/// Residue check behind det -11: 4ab - c^2 = -11 forces c^2 = 3 mod 4.
/// Returns the set of squares mod 4 together with a one-line witness.
std::pair<std::vector<int>, std::string> squares_mod4_witness();

/**
 * Classifies an even 2x2 Gram matrix [[2a, c], [c, 2b]] with determinant
 * -1, -11 or -121. For -121 with @p elementary11 every entry must be
 * divisible by 11 (std::invalid_argument otherwise).
 * Throws std::invalid_argument for other determinants or odd diagonals.
 */
Rank2Result rank2_case(const IntSymMatrix& M, bool elementary11 = false);
/// The determinant-only form of the analysis: -11 is impossible for any even
/// matrix; -1 and -121 return the normal forms U and U(11).
Rank2Result rank2_case_for_determinant(long long det);

/// det [[0, 11m, 1], [11m, 110m, 11b], [1, 11b, -2]]. Checks the value against
/// 242(m^2 + bm) - 110m and positivity (std::logic_error on mismatch).
/// Throws std::invalid_argument for m < 1 or b < 1.
long long var0_determinant(long long m, long long b);

enum class Mod11Form {
    Squared,  ///< r (sum m_i #O_i) S^2 = r^2 (1 + sum b_i #O_i)^2
    Unit,     ///< same with r^2 replaced by 1
};

/// (lhs mod 11, rhs mod 11) of the identity above. Requires every orbit size
/// = 0 mod 11, r = 1 mod 11 and matching list lengths; std::invalid_argument
/// names the offending value otherwise.
std::pair<int, int> mod11_contradiction(long long r, const std::vector<long long>& orbit_sizes,
                                        const std::vector<long long>& m, const std::vector<long long>& b,
                                        long long S2, Mod11Form form = Mod11Form::Squared);

}  // namespace k3w

#endif
