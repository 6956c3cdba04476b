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
 * @file classify.hpp
 * @brief Order sieve for finite groups of symplectic automorphisms whose
 * order is 2^a 3^b 5^c 7^d 11, using Sylow counts and the bound on μ.
 *
 * For each prime q in {5, 7, 11} dividing N, m_q is the index of a Sylow
 * q-subgroup in its normalizer. There are a_q = N(q-1)/(q m_q) elements of
 * order q.
 */

#ifndef K3W_CLASSIFY_HPP
#define K3W_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3w/permgrp.hpp"

namespace k3w {

struct OrderCandidate {
    int a = 0, b = 0, c = 0, d = 0;
    /// 2^a 3^b 5^c 7^d 11
    std::uint64_t order() const;
    /// Throws std::invalid_argument outside a <= 7, b <= 2, c <= 1, d <= 1.
    void validate() const;
};

/// m5 / m7 are set exactly when 5 / 7 divide N.
struct MqAssignment {
    std::optional<std::uint64_t> m5, m7;
    std::uint64_t m11 = 1;
    std::string to_string() const;
    bool operator==(const MqAssignment&) const = default;
};

struct SylowData {
    std::uint64_t n_q = 0;  ///< number of Sylow q-subgroups
    std::uint64_t a_q = 0;  ///< number of elements of order q
};

/// Requires q | N, q^2 ∤ N, m | q - 1 and m | N / q; std::invalid_argument otherwise.
SylowData sylow_data(std::uint64_t N, std::uint64_t q, std::uint64_t m);

/// Empty when @p A is a valid assignment for N, else the violated rule.
std::string assignment_violation(std::uint64_t N, const MqAssignment& A);

/// 8 + 16/N - [5|N] 16/(5 m5) - [7|N] 30/(7 m7) - 60/(11 m11).
/// Throws std::invalid_argument for an invalid assignment.
Rational mu_upper_bound(std::uint64_t N, const MqAssignment& A);

/// One assignment checked against the constraints in order.
struct AssignmentTrace {
    MqAssignment assignment;
    std::vector<std::string> checks;  ///< passed checks, then the failure if any
    std::string failure;              ///< empty when every constraint holds
    std::optional<Rational> bound;
};

struct CandidateResult {
    OrderCandidate candidate;
    std::uint64_t order = 0;
    bool admissible = false;
    std::optional<MqAssignment> witness;
    std::optional<Rational> witness_bound;
    std::string first_failure;  ///< failure of the first assignment, for rejected orders
    std::vector<AssignmentTrace> traces;
};

struct SieveOptions {
    bool sylow = true;  ///< impose n_q = 1 mod q
    bool bound = true;  ///< impose mu_upper_bound >= 3
};

struct SearchReport {
    std::vector<CandidateResult> survivors;  ///< sorted by order
    std::vector<CandidateResult> rejected;   ///< sorted by order
    std::string formulation = "generic";
    std::vector<std::uint64_t> orders() const;
};

/// Runs the sieve over the full grid a <= 7, b <= 2, c <= 1, d <= 1.
SearchReport admissible_orders(const SieveOptions& options = {});

/// Checks a single N = 2^a 3^b 5^c 7^d 11 (std::invalid_argument otherwise).
CandidateResult sieve_order(std::uint64_t N, const SieveOptions& options = {});

/// 11 -> C11, 55 -> 11:5, 660 -> L2(11), 7920 -> M11, 443520 -> M22.
/// Throws std::invalid_argument for any other N.
std::string order_to_group(std::uint64_t N);
/// Key into standard_group() for the same table.
std::string order_to_group_key(std::uint64_t N);

}  // namespace k3w

#endif
