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

#include "k3w/permgrp.hpp"

#include <algorithm>
#include <optional>
#include <boost/algorithm/string.hpp>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace k3w {

// ---------------------------------------------------------------------------
// Perm

Perm::Perm(std::vector<std::uint32_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (auto v : img_) {
        if (v >= img_.size() || seen[v]) throw std::invalid_argument("permutation images are not a bijection");
        seen[v] = true;
    }
}

Perm Perm::identity(std::size_t n) {
    std::vector<std::uint32_t> v(n);
    std::iota(v.begin(), v.end(), 0u);
    return Perm(std::move(v));
}

Perm Perm::parse(const std::string& text, std::size_t degree) {
    std::vector<std::uint32_t> img(degree);
    std::iota(img.begin(), img.end(), 0u);
    std::vector<bool> used(degree, false);
    std::size_t i = 0;
    const auto fail = [&](const std::string& why) {
        throw std::invalid_argument("bad cycle notation \"" + text + "\": " + why);
    };
    const auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i == text.size()) fail("empty");
    while (i < text.size()) {
        if (text[i] != '(') fail("expected '('");
        ++i;
        std::vector<std::uint32_t> cycle;
        while (true) {
            skip();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            if (!cycle.empty()) {
                if (i >= text.size() || text[i] != ',') fail("expected ','");
                ++i;
                skip();
            }
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a point");
            std::uint64_t v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + static_cast<std::uint64_t>(text[i++] - '0');
                if (v > degree) fail("point exceeds degree " + std::to_string(degree));
            }
            if (v == 0) fail("points start at 1");
            if (used[v - 1]) fail("point " + std::to_string(v) + " repeated");
            used[v - 1] = true;
            cycle.push_back(static_cast<std::uint32_t>(v - 1));
        }
        for (std::size_t k = 0; k < cycle.size(); ++k) img[cycle[k]] = cycle[(k + 1) % cycle.size()];
        skip();
    }
    return Perm(std::move(img));
}

bool Perm::is_identity() const noexcept {
    for (std::uint32_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Perm Perm::inverse() const {
    std::vector<std::uint32_t> v(img_.size());
    for (std::uint32_t i = 0; i < img_.size(); ++i) v[img_[i]] = i;
    Perm r;
    r.img_ = std::move(v);
    return r;
}

std::uint64_t Perm::order() const {
    std::vector<bool> seen(img_.size(), false);
    std::uint64_t l = 1;
    for (std::uint32_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (std::uint32_t j = i; !seen[j]; j = img_[j]) {
            seen[j] = true;
            ++len;
        }
        l = std::lcm(l, len);
    }
    return l;
}

std::string Perm::to_cycles() const {
    std::ostringstream os;
    std::vector<bool> seen(img_.size(), false);
    for (std::uint32_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == i) continue;
        os << "(";
        for (std::uint32_t j = i; !seen[j]; j = img_[j]) {
            seen[j] = true;
            os << (j == i ? "" : ",") << j + 1;
        }
        os << ")";
    }
    const std::string s = os.str();
    return s.empty() ? "()" : s;
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("permutation degrees differ");
    Perm r;
    r.img_.resize(a.degree());
    for (std::uint32_t i = 0; i < a.degree(); ++i) r.img_[i] = b.img_[a.img_[i]];
    return r;
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators) : degree_(degree), gens_(std::move(generators)) {
    if (degree == 0) throw std::invalid_argument("degree must be positive");
    for (const auto& g : gens_) {
        if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
        if (!sift(g, 0).is_identity()) extend(0, g);
    }
    for (const auto& lv : levels_) {
        base_.push_back(lv.point);
        if (order_ > (std::uint64_t(1) << 62) / lv.orbit.size()) throw BudgetExceeded("group order overflows 64 bits");
        order_ *= lv.orbit.size();
    }
}

std::vector<std::size_t> PermGroup::transversal_sizes() const {
    std::vector<std::size_t> out;
    for (const auto& lv : levels_) out.push_back(lv.orbit.size());
    return out;
}

void PermGroup::rebuild_orbit(Level& lv) {
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
        for (const auto& s : lv.gens) {
            const std::uint32_t q = s[lv.orbit[k]];
            if (lv.position[q] >= 0) continue;
            lv.position[q] = static_cast<int>(lv.orbit.size());
            lv.orbit.push_back(q);
            lv.transversal.push_back(lv.transversal[k] * s);
            lv.inverses.push_back(lv.transversal.back().inverse());
        }
    }
}

void PermGroup::extend(std::size_t level, const Perm& g) {
    if (level == levels_.size()) {
        std::uint32_t moved = 0;
        while (g[moved] == moved) ++moved;
        Level lv;
        lv.point = moved;
        lv.position.assign(degree_, -1);
        lv.position[moved] = 0;
        lv.orbit.push_back(moved);
        lv.transversal.push_back(Perm::identity(degree_));
        lv.inverses.push_back(Perm::identity(degree_));
        levels_.push_back(std::move(lv));
    }
    levels_[level].gens.push_back(g);
    rebuild_orbit(levels_[level]);
    // Every Schreier generator must sift through the deeper levels. Deeper
    // extensions never touch this level, but may reallocate levels_.
    for (std::size_t k = 0; k < levels_[level].orbit.size(); ++k) {
        for (std::size_t si = 0; si < levels_[level].gens.size(); ++si) {
            const Level& lv = levels_[level];
            const Perm& s = lv.gens[si];
            const std::uint32_t img = s[lv.orbit[k]];
            const Perm schreier = lv.transversal[k] * s * lv.inverses[static_cast<std::size_t>(lv.position[img])];
            const Perm h = sift(schreier, level + 1);
            if (!h.is_identity()) extend(level + 1, h);
        }
    }
}

Perm PermGroup::sift(Perm g, std::size_t level) const {
    for (std::size_t j = level; j < levels_.size(); ++j) {
        if (g.is_identity()) return g;
        const Level& lv = levels_[j];
        const int pos = lv.position[g[lv.point]];
        if (pos < 0) return g;
        g = g * lv.inverses[static_cast<std::size_t>(pos)];
    }
    return g;
}

bool PermGroup::contains(const Perm& g) const { return g.degree() == degree_ && sift(g, 0).is_identity(); }

std::uint64_t PermGroup::index_of(const Perm& g0) const {
    if (g0.degree() != degree_) throw std::invalid_argument("degree mismatch");
    Perm g = g0;
    std::uint64_t index = 0, radix = 1;
    for (const auto& lv : levels_) {
        const int pos = lv.position[g[lv.point]];
        if (pos < 0) throw std::invalid_argument("element not in group");
        index += static_cast<std::uint64_t>(pos) * radix;
        radix *= lv.orbit.size();
        g = g * lv.inverses[static_cast<std::size_t>(pos)];
    }
    if (!g.is_identity()) throw std::invalid_argument("element not in group");
    return index;
}

Perm PermGroup::element(std::uint64_t index) const {
    if (index >= order_) throw std::out_of_range("element index out of range");
    std::vector<std::size_t> digit(levels_.size());
    for (std::size_t j = 0; j < levels_.size(); ++j) {
        digit[j] = index % levels_[j].orbit.size();
        index /= levels_[j].orbit.size();
    }
    Perm g = Perm::identity(degree_);
    for (std::size_t j = levels_.size(); j-- > 0;) g = g * levels_[j].transversal[digit[j]];
    return g;
}

void PermGroup::for_each_element(const std::function<void(const Perm&)>& f, std::uint64_t budget) const {
    if (order_ > budget)
        throw BudgetExceeded("group order " + std::to_string(order_) + " exceeds enumeration budget " +
                             std::to_string(budget));
    // Depth-first over levels, deepest level outermost, so level 0 varies fastest.
    std::vector<Perm> partial(levels_.size() + 1, Perm::identity(degree_));
    const std::function<void(std::size_t)> rec = [&](std::size_t depth) {
        if (depth == 0) {
            f(partial[0]);
            return;
        }
        const Level& lv = levels_[depth - 1];
        for (const auto& t : lv.transversal) {
            partial[depth - 1] = partial[depth] * t;
            rec(depth - 1);
        }
    };
    rec(levels_.size());
}

// ---------------------------------------------------------------------------
// Spectra and Mathieu numbers

OrderSpectrum element_order_spectrum(const PermGroup& G, std::uint64_t budget) {
    OrderSpectrum s;
    s.group_order = G.order();
    G.for_each_element([&](const Perm& g) { ++s.counts[g.order()]; }, budget);
    return s;
}

Rational epsilon(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("epsilon needs n >= 1");
    // n prod (1 + 1/p) = prod p^(e-1) (p + 1)
    long long denom = 1;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        m /= p;
        denom *= static_cast<long long>(p + 1);
        while (m % p == 0) {
            m /= p;
            denom *= static_cast<long long>(p);
        }
    }
    if (m > 1) denom *= static_cast<long long>(m + 1);
    return Rational(24, denom);
}

Rational mu(const OrderSpectrum& s) {
    Rational sum = 0;
    for (const auto& [n, a] : s.counts) sum += epsilon(n) * static_cast<long long>(a);
    return sum / static_cast<long long>(s.group_order);
}

Rational mu(const PermGroup& G, std::uint64_t budget) { return mu(element_order_spectrum(G, budget)); }

Rational mu_via_identity(const OrderSpectrum& s) {
    static const std::map<std::uint64_t, long long> weight{{1, 0}, {2, 0}, {3, 2}, {4, 4}, {5, 4},
                                                          {6, 6}, {7, 5}, {8, 6}, {11, 6}};
    long long num = 16;
    for (const auto& [n, a] : s.counts) {
        const auto it = weight.find(n);
        if (it == weight.end())
            throw std::domain_error("element order " + std::to_string(n) + " outside {1,...,8,11}");
        num -= it->second * static_cast<long long>(a);
    }
    return Rational(8) + Rational(num, static_cast<long long>(s.group_order));
}

// ---------------------------------------------------------------------------
// Standard groups

namespace {

// x -> a x + b on F_11, points labelled x + 1.
Perm affine11(std::uint32_t a, std::uint32_t b) {
    std::vector<std::uint32_t> img(11);
    for (std::uint32_t x = 0; x < 11; ++x) img[x] = (a * x + b) % 11;
    return Perm(std::move(img));
}

// Moebius map z -> (a z + b) / (c z + d) on P^1(F_11); z labelled z + 1, infinity is 12.
Perm moebius11(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
    const auto inv = [](std::uint32_t v) {
        for (std::uint32_t w = 1; w < 11; ++w)
            if (v * w % 11 == 1) return w;
        return 0u;
    };
    constexpr std::uint32_t kInf = 11;
    std::vector<std::uint32_t> img(12);
    for (std::uint32_t z = 0; z <= 11; ++z) {
        std::uint32_t num, den;
        if (z == kInf) {
            num = a;
            den = c;
        } else {
            num = (a * z + b) % 11;
            den = (c * z + d) % 11;
        }
        img[z] = den == 0 ? kInf : num * inv(den) % 11;
    }
    return Perm(std::move(img));
}

struct Table {
    const char* name;
    std::size_t degree;
    std::vector<const char*> gens;
    std::uint64_t order;
};

// Standard generators from the ATLAS of finite group representations.
const Table kM11{"M11", 11, {"(2,10)(4,11)(5,7)(8,9)", "(1,4,3,8)(2,5,6,9)"}, 7920};
const Table kM22{"M22",
                 22,
                 {"(1,13)(2,8)(3,16)(4,12)(6,22)(7,17)(9,10)(11,14)",
                  "(1,22,3,21)(2,18,4,13)(5,12)(6,11,7,15)(8,14,20,10)(17,19)"},
                 443520};

PermGroup from_table(const Table& t) {
    std::vector<Perm> gens;
    for (const char* g : t.gens) gens.push_back(Perm::parse(g, t.degree));
    PermGroup G(t.degree, std::move(gens));
    if (G.order() != t.order)
        throw std::logic_error(std::string("embedded generators for ") + t.name + " give order " +
                               std::to_string(G.order()));
    return G;
}

PermGroup checked(PermGroup G, std::uint64_t expected, const std::string& name) {
    if (G.order() != expected)
        throw std::logic_error("generators for " + name + " give order " + std::to_string(G.order()));
    return G;
}

}  // namespace

std::vector<std::string> standard_group_names() { return {"C11", "F55", "L2_11", "M11", "M22"}; }

PermGroup standard_group(const std::string& name) {
    if (name == "C11") return checked(PermGroup(11, {affine11(1, 1)}), 11, name);
    if (name == "F55" || name == "11:5") return checked(PermGroup(11, {affine11(1, 1), affine11(4, 0)}), 55, name);
    if (name == "L2_11" || name == "L2(11)")
        return checked(PermGroup(12, {moebius11(1, 1, 0, 1), moebius11(0, 10, 1, 0)}), 660, name);
    if (name == "M11") return from_table(kM11);
    if (name == "M22") return from_table(kM22);
    throw std::invalid_argument("unknown group \"" + name + "\"");
}

PermGroup parse_generator_file(const std::string& text) {
    std::vector<std::string> lines;
    std::optional<std::size_t> degree;
    std::size_t max_point = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        boost::trim(line);
        if (line.empty()) continue;
        if (boost::starts_with(line, "degree")) {
            degree = std::stoul(line.substr(6));
            continue;
        }
        std::string digits;
        for (char c : line) {
            if (std::isdigit(static_cast<unsigned char>(c))) {
                digits += c;
            } else {
                if (!digits.empty()) max_point = std::max<std::size_t>(max_point, std::stoul(digits));
                digits.clear();
            }
        }
        lines.push_back(line);
    }
    const std::size_t n = degree.value_or(max_point);
    if (n == 0) throw std::invalid_argument("generator file gives no degree");
    std::vector<Perm> gens;
    for (const auto& l : lines) gens.push_back(Perm::parse(l, n));
    return PermGroup(n, std::move(gens));
}

// ---------------------------------------------------------------------------
// Sylow normalizer, classes, simplicity

std::uint64_t sylow11_normalizer_order(const PermGroup& G, std::uint64_t budget) {
    if (G.order() % 11 != 0 || G.order() % 121 == 0)
        throw std::invalid_argument("sylow11_normalizer_order needs 11 || #G");
    if (G.order() > budget) throw BudgetExceeded("group order exceeds enumeration budget");
    std::optional<Perm> s;
    for (std::uint64_t i = 0; i < G.order() && !s; ++i) {
        const Perm g = G.element(i);
        const std::uint64_t o = g.order();
        if (o % 11 != 0) continue;
        Perm p = Perm::identity(G.degree());
        for (std::uint64_t k = 0; k < o / 11; ++k) p = p * g;
        s = p;
    }
    std::set<Perm> S;
    Perm p = Perm::identity(G.degree());
    for (int k = 0; k < 11; ++k) {
        S.insert(p);
        p = p * *s;
    }
    std::uint64_t count = 0;
    G.for_each_element(
        [&](const Perm& g) {
            if (S.count(g.inverse() * *s * g)) ++count;
        },
        budget);
    return count;
}

PermGroup normal_closure(const PermGroup& G, const Perm& x) {
    std::vector<Perm> gens{x};
    PermGroup N(G.degree(), gens);
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& g : G.generators()) {
            const Perm gi = g.inverse();
            for (std::size_t k = 0; k < gens.size(); ++k) {
                const Perm c = gi * gens[k] * g;
                if (N.contains(c)) continue;
                gens.push_back(c);
                N = PermGroup(G.degree(), gens);
                grew = true;
            }
        }
    }
    return N;
}

std::vector<std::pair<Perm, std::uint64_t>> prime_order_classes(const PermGroup& G, std::uint64_t budget) {
    if (G.order() > budget) throw BudgetExceeded("group order exceeds enumeration budget");
    const auto is_prime = [](std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t p = 2; p * p <= n; ++p)
            if (n % p == 0) return false;
        return true;
    };
    std::vector<bool> visited(G.order(), false);
    std::vector<Perm> ginv;
    for (const auto& g : G.generators()) ginv.push_back(g.inverse());
    std::vector<std::pair<Perm, std::uint64_t>> out;
    for (std::uint64_t i = 0; i < G.order(); ++i) {
        if (visited[i]) continue;
        const Perm rep = G.element(i);
        if (!is_prime(rep.order())) continue;
        std::deque<Perm> queue{rep};
        visited[i] = true;
        std::uint64_t size = 1;
        while (!queue.empty()) {
            const Perm h = std::move(queue.front());
            queue.pop_front();
            for (std::size_t k = 0; k < ginv.size(); ++k) {
                Perm c = ginv[k] * h * G.generators()[k];
                const std::uint64_t ci = G.index_of(c);
                if (visited[ci]) continue;
                visited[ci] = true;
                ++size;
                queue.push_back(std::move(c));
            }
        }
        out.emplace_back(rep, size);
    }
    return out;
}

bool simplicity_probe(const PermGroup& G, std::uint64_t budget) {
    if (G.order() == 1) return false;
    for (const auto& [rep, size] : prime_order_classes(G, budget))
        if (normal_closure(G, rep).order() != G.order()) return false;
    return true;
}

}  // namespace k3w
