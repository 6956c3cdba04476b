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

#include "k3w/latcheck.hpp"

#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

namespace k3w {

namespace {

long long mod11(long long v) { return ((v % 11) + 11) % 11; }

long long isqrt_exact(long long v) {
    if (v < 0) return -1;
    long long s = 0;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s * s == v ? s : -1;
}

// Root of a x^2 + c xy + b y^2 over Q, which exists when c^2 - 4ab is a square.
std::array<long long, 2> isotropic_from_roots(long long a, long long b, long long c) {
    if (a == 0) return {1, 0};
    if (b == 0) return {0, 1};
    const long long s = isqrt_exact(c * c - 4 * a * b);
    if (s < 0) throw std::logic_error("discriminant is not a square");
    long long x = -c + s, y = 2 * a;
    const long long g = std::gcd(std::llabs(x), std::llabs(y));
    x /= g;
    y /= g;
    if (y < 0 || (y == 0 && x < 0)) {
        x = -x;
        y = -y;
    }
    return {x, y};
}

bool search_isotropic(const IntSymMatrix& M) {
    for (long long x = -20; x <= 20; ++x)
        for (long long y = -20; y <= 20; ++y)
            if ((x || y) && M.form({x, y}) == 0) return true;
    return false;
}

}  // namespace

IntSymMatrix::IntSymMatrix(const std::vector<std::vector<long long>>& rows) : n_(rows.size()) {
    if (n_ != 2 && n_ != 3) throw std::invalid_argument("Gram matrix must be 2x2 or 3x3");
    for (std::size_t i = 0; i < n_; ++i) {
        if (rows[i].size() != n_) throw std::invalid_argument("Gram matrix must be square");
        for (std::size_t j = 0; j < n_; ++j) e_[i][j] = rows[i][j];
    }
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (e_[i][j] != e_[j][i]) throw std::invalid_argument("Gram matrix must be symmetric");
}

bool IntSymMatrix::even() const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
        if (e_[i][i] % 2 != 0) return false;
    return true;
}

__int128 IntSymMatrix::determinant() const {
    auto at = [this](std::size_t i, std::size_t j) { return static_cast<__int128>(e_[i][j]); };
    if (n_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

__int128 IntSymMatrix::form(const std::vector<long long>& v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length does not match the Gram matrix");
    __int128 s = 0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) s += static_cast<__int128>(v[i]) * e_[i][j] * v[j];
    return s;
}

std::string Rank2Result::name() const {
    switch (kind) {
        case Rank2Kind::U: return "U";
        case Rank2Kind::Impossible: return "impossible";
        case Rank2Kind::U11: return "U(11)";
        case Rank2Kind::NonElementary: return "non-elementary";
    }
    return "?";
}

std::pair<std::vector<int>, std::string> squares_mod4_witness() {
    std::set<int> sq;
    for (int c = 0; c < 4; ++c) sq.insert(c * c % 4);
    std::string w = "4ab - c^2 = -11 gives c^2 = 3 mod 4, but squares mod 4 are {";
    for (auto it = sq.begin(); it != sq.end(); ++it) w += (it == sq.begin() ? "" : ",") + std::to_string(*it);
    w += "}";
    if (sq.count(3)) throw std::logic_error("3 is a square mod 4");
    return {{sq.begin(), sq.end()}, w};
}

Rank2Result rank2_case_for_determinant(long long det) {
    if (det == -11) return Rank2Result{Rank2Kind::Impossible, det, std::nullopt, false, squares_mod4_witness().second};
    if (det == -1) return rank2_case(IntSymMatrix({{0, 1}, {1, 0}}));
    if (det == -121) return rank2_case(IntSymMatrix({{0, 11}, {11, 0}}), true);
    throw std::invalid_argument("determinant must be -1, -11 or -121, got " + std::to_string(det));
}

Rank2Result rank2_case(const IntSymMatrix& M, bool elementary11) {
    if (M.dim() != 2) throw std::invalid_argument("rank2_case needs a 2x2 matrix");
    if (!M.even()) throw std::invalid_argument("Gram matrix must be even");
    const long long det = static_cast<long long>(M.determinant());
    const long long a = M(0, 0) / 2, b = M(1, 1) / 2, c = M(0, 1);
    Rank2Result r{Rank2Kind::U, det, std::nullopt, false, {}};
    switch (det) {
        case -1:
            r.kind = Rank2Kind::U;
            r.witness = "even unimodular indefinite of rank 2";
            break;
        case -11:
            // unreachable for an actual even matrix, kept for completeness
            r.kind = Rank2Kind::Impossible;
            r.witness = squares_mod4_witness().second;
            return r;
        case -121:
            if (elementary11) {
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t j = 0; j < 2; ++j)
                        if (M(i, j) % 11 != 0)
                            throw std::invalid_argument("11-elementary determinant -121 needs entries divisible by 11");
                r.kind = Rank2Kind::U11;
                r.witness = "M/11 is even unimodular indefinite of rank 2";
            } else {
                r.kind = Rank2Kind::NonElementary;
                r.witness = "determinant -121 without the 11-elementary condition";
            }
            break;
        default:
            throw std::invalid_argument("determinant must be -1, -11 or -121, got " + std::to_string(det));
    }
    const auto v = isotropic_from_roots(a, b, c);
    if (M.form({v[0], v[1]}) != 0) throw std::logic_error("isotropic vector check failed");
    r.isotropic = v;
    r.search_confirmed = search_isotropic(M);
    return r;
}

long long var0_determinant(long long m, long long b) {
    if (m < 1 || b < 1) throw std::invalid_argument("m and b must be positive");
    if (m > 1'000'000'000LL || b > 1'000'000'000LL) throw std::invalid_argument("m and b must be at most 10^9");
    const IntSymMatrix G({{0, 11 * m, 1}, {11 * m, 110 * m, 11 * b}, {1, 11 * b, -2}});
    const __int128 det = G.determinant();
    const __int128 M = m, B = b;
    const __int128 closed = 242 * (M * M + B * M) - 110 * M;
    if (det != closed) throw std::logic_error("determinant does not match 242(m^2+bm)-110m");
    if (det <= 0) throw std::logic_error("determinant is not positive");
    return static_cast<long long>(det);
}

std::pair<int, int> mod11_contradiction(long long r, const std::vector<long long>& orbit_sizes,
                                        const std::vector<long long>& m, const std::vector<long long>& b,
                                        long long S2, Mod11Form form) {
    if (mod11(r) != 1) throw std::invalid_argument("r = " + std::to_string(r) + " is not 1 mod 11");
    if (m.size() != orbit_sizes.size() || b.size() != orbit_sizes.size())
        throw std::invalid_argument("m and b must have one entry per orbit");
    for (auto o : orbit_sizes)
        if (o <= 0 || o % 11 != 0) throw std::invalid_argument("orbit size " + std::to_string(o) + " is not a positive multiple of 11");
    long long sm = 0, sb = 1;
    for (std::size_t i = 0; i < orbit_sizes.size(); ++i) {
        sm = mod11(sm + mod11(m[i]) * mod11(orbit_sizes[i]));
        sb = mod11(sb + mod11(b[i]) * mod11(orbit_sizes[i]));
    }
    const long long lhs = mod11(mod11(r) * sm % 11 * mod11(S2));
    long long rhs = sb * sb % 11;
    if (form == Mod11Form::Squared) rhs = mod11(r) * mod11(r) % 11 * rhs % 11;
    return {static_cast<int>(lhs), static_cast<int>(rhs)};
}

}  // namespace k3w
