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
 * @file permgrp.hpp
 * @brief Permutation groups through a deterministic Schreier-Sims stabilizer
 * chain, element-order spectra and the Mathieu character numbers ε(n), μ(G).
 *
 * Points are 1..n in text and 0..n-1 in memory. Products apply the left
 * factor first: (a * b)(p) = b(a(p)).
 */

#ifndef K3W_PERMGRP_HPP
#define K3W_PERMGRP_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "k3w/errors.hpp"

namespace k3w {

using Rational = boost::rational<long long>;

class Perm {
   public:
    Perm() = default;
    /// Throws std::invalid_argument unless @p images is a bijection of 0..n-1.
    explicit Perm(std::vector<std::uint32_t> images);
    static Perm identity(std::size_t n);
    /// Cycle notation with 1-based points, e.g. "(1,2,3)(4,5)"; "()" is the identity.
    static Perm parse(const std::string& cycles, std::size_t degree);

    std::size_t degree() const noexcept { return img_.size(); }
    std::uint32_t operator[](std::uint32_t p) const { return img_[p]; }
    const std::vector<std::uint32_t>& images() const noexcept { return img_; }
    bool is_identity() const noexcept;
    Perm inverse() const;
    /// lcm of the cycle lengths.
    std::uint64_t order() const;
    std::string to_cycles() const;

    friend Perm operator*(const Perm& a, const Perm& b);
    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

   private:
    std::vector<std::uint32_t> img_;
};

/// Default cap on full element enumeration.
inline constexpr std::uint64_t kEnumerationBudget = 10'000'000;

class PermGroup {
   public:
    /// Builds the stabilizer chain immediately. All generators must share a degree.
    PermGroup(std::size_t degree, std::vector<Perm> generators);

    std::size_t degree() const noexcept { return degree_; }
    const std::vector<Perm>& generators() const noexcept { return gens_; }
    std::uint64_t order() const noexcept { return order_; }
    const std::vector<std::uint32_t>& base() const noexcept { return base_; }
    std::vector<std::size_t> transversal_sizes() const;

    bool contains(const Perm& g) const;
    /// Mixed-radix index in [0, order) of a member; throws std::invalid_argument otherwise.
    std::uint64_t index_of(const Perm& g) const;
    /// Inverse of index_of.
    Perm element(std::uint64_t index) const;
    /// Visits every element once, in index order. Throws BudgetExceeded above @p budget.
    void for_each_element(const std::function<void(const Perm&)>& f, std::uint64_t budget = kEnumerationBudget) const;

   private:
    struct Level {
        std::uint32_t point;
        std::vector<Perm> gens;
        std::vector<std::uint32_t> orbit;   // discovery order
        std::vector<int> position;          // point -> index in orbit, or -1
        std::vector<Perm> transversal;      // aligned with orbit: maps point to orbit[k]
        std::vector<Perm> inverses;         // transversal inverses
    };

    std::size_t degree_;
    std::vector<Perm> gens_;
    std::vector<Level> levels_;
    std::vector<std::uint32_t> base_;
    std::uint64_t order_ = 1;

    void extend(std::size_t level, const Perm& g);
    void rebuild_orbit(Level& lv);
    /// Residue of g after sifting from @p level down; identity iff member.
    Perm sift(Perm g, std::size_t level) const;
};

struct OrderSpectrum {
    std::map<std::uint64_t, std::uint64_t> counts;  ///< element order -> number of elements
    std::uint64_t group_order = 0;
};

OrderSpectrum element_order_spectrum(const PermGroup& G, std::uint64_t budget = kEnumerationBudget);

/// 24 / (n prod_{p | n} (1 + 1/p)).
Rational epsilon(std::uint64_t n);
/// (1/#G) sum_g ε(ord g).
Rational mu(const OrderSpectrum& s);
Rational mu(const PermGroup& G, std::uint64_t budget = kEnumerationBudget);
/// 8 + (16 - 2a3 - 4a4 - 4a5 - 6a6 - 5a7 - 6a8 - 6a11) / #G. Throws
/// std::domain_error if an element order falls outside {1..8, 11}.
Rational mu_via_identity(const OrderSpectrum& s);

/// "C11", "F55" (alias "11:5"), "L2_11" (alias "L2(11)"), "M11", "M22".
/// Generators are validated against the expected order; std::logic_error on mismatch.
PermGroup standard_group(const std::string& name);
std::vector<std::string> standard_group_names();

/// One permutation per line in cycle notation; '#' starts a comment; an
/// optional "degree N" line fixes the degree (otherwise the largest point).
PermGroup parse_generator_file(const std::string& text);

/// Order of N_G(S) for the Sylow 11-subgroup generated by the first order-11
/// element in index order. Requires 11 || #G.
std::uint64_t sylow11_normalizer_order(const PermGroup& G, std::uint64_t budget = kEnumerationBudget);

/// Smallest normal subgroup containing @p x.
PermGroup normal_closure(const PermGroup& G, const Perm& x);

/// Conjugacy class representatives of elements of prime order, with class sizes.
std::vector<std::pair<Perm, std::uint64_t>> prime_order_classes(const PermGroup& G,
                                                                std::uint64_t budget = kEnumerationBudget);

/// True iff G is nontrivial and the normal closure of a representative of
/// each conjugacy class of prime-order elements is all of G. A nontrivial
/// normal subgroup always contains such an element, so this decides simplicity.
bool simplicity_probe(const PermGroup& G, std::uint64_t budget = kEnumerationBudget);

}  // namespace k3w

#endif
