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

#include "k3w/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace k3w {

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

Rational frac(std::uint64_t num, std::uint64_t den) {
    return Rational(static_cast<long long>(num), static_cast<long long>(den));
}

std::string rat(const Rational& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::optional<OrderCandidate> decompose(std::uint64_t N) {
    if (N == 0 || N % 11 != 0) return std::nullopt;
    OrderCandidate c;
    std::uint64_t m = N / 11;
    const std::pair<int*, std::uint64_t> parts[] = {{&c.a, 2}, {&c.b, 3}, {&c.c, 5}, {&c.d, 7}};
    for (auto [e, p] : parts)
        while (m % p == 0) {
            m /= p;
            ++*e;
        }
    if (m != 1) return std::nullopt;
    try {
        c.validate();
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    return c;
}

std::vector<MqAssignment> assignments_for(std::uint64_t N) {
    std::vector<std::optional<std::uint64_t>> m5s{std::nullopt}, m7s{std::nullopt};
    if (N % 5 == 0) m5s = {1, 2, 4};
    if (N % 7 == 0) m7s = {1, 3};
    std::vector<MqAssignment> out;
    for (auto m11 : {1, 5})
        for (const auto& m5 : m5s)
            for (const auto& m7 : m7s) out.push_back(MqAssignment{m5, m7, static_cast<std::uint64_t>(m11)});
    return out;
}

AssignmentTrace check(std::uint64_t N, const MqAssignment& A, const SieveOptions& opt) {
    AssignmentTrace t{A, {}, {}, std::nullopt};
    if (auto why = assignment_violation(N, A); !why.empty()) {
        t.failure = why;
        return t;
    }
    t.checks.push_back("assignment valid");
    if (opt.sylow) {
        const std::pair<std::uint64_t, std::optional<std::uint64_t>> qs[] = {{5, A.m5}, {7, A.m7}, {11, A.m11}};
        for (const auto& [q, m] : qs) {
            if (!m) continue;
            const auto n = sylow_data(N, q, *m).n_q;
            const std::string line =
                "n" + std::to_string(q) + " = " + std::to_string(n) + " = " + std::to_string(n % q) + " mod " + std::to_string(q);
            if (n % q != 1) {
                t.failure = line;
                return t;
            }
            t.checks.push_back(line);
        }
    }
    const Rational b = mu_upper_bound(N, A);
    t.bound = b;
    const std::string line = "mu <= " + rat(b);
    if (opt.bound && b < Rational(3)) {
        t.failure = line + " < 3";
        return t;
    }
    t.checks.push_back(line);
    return t;
}

}  // namespace

std::uint64_t OrderCandidate::order() const { return ipow(2, a) * ipow(3, b) * ipow(5, c) * ipow(7, d) * 11; }

void OrderCandidate::validate() const {
    if (a < 0 || a > 7 || b < 0 || b > 2 || c < 0 || c > 1 || d < 0 || d > 1)
        throw std::invalid_argument("exponents outside a <= 7, b <= 2, c <= 1, d <= 1");
}

std::string MqAssignment::to_string() const {
    std::string s;
    if (m5) s += "m5=" + std::to_string(*m5) + " ";
    if (m7) s += "m7=" + std::to_string(*m7) + " ";
    return s + "m11=" + std::to_string(m11);
}

SylowData sylow_data(std::uint64_t N, std::uint64_t q, std::uint64_t m) {
    if (q < 2 || N % q != 0) throw std::invalid_argument(std::to_string(q) + " does not divide " + std::to_string(N));
    if ((N / q) % q == 0) throw std::invalid_argument(std::to_string(q) + "^2 divides " + std::to_string(N));
    if (m == 0 || (q - 1) % m != 0)
        throw std::invalid_argument("m = " + std::to_string(m) + " does not divide " + std::to_string(q - 1));
    if ((N / q) % m != 0)
        throw std::invalid_argument("m = " + std::to_string(m) + " does not divide N/q = " + std::to_string(N / q));
    return SylowData{N / (q * m), N * (q - 1) / (q * m)};
}

std::string assignment_violation(std::uint64_t N, const MqAssignment& A) {
    if (N % 11 != 0) return "11 does not divide N";
    if (A.m5.has_value() != (N % 5 == 0)) return "m5 must be given exactly when 5 | N";
    if (A.m7.has_value() != (N % 7 == 0)) return "m7 must be given exactly when 7 | N";
    if (A.m11 != 1 && A.m11 != 5) return "m11 must be 1 or 5";
    if (A.m11 == 5 && N % 5 != 0) return "m11 = 5 needs 5 | N";
    if (A.m7) {
        if (*A.m7 != 1 && *A.m7 != 3) return "m7 must be 1 or 3";
        if (*A.m7 == 3 && N % 3 != 0) return "m7 = 3 needs 3 | N";
    }
    if (A.m5) {
        if (*A.m5 != 1 && *A.m5 != 2 && *A.m5 != 4) return "m5 must be 1, 2 or 4";
        if ((N / 5) % *A.m5 != 0) return "m5 = " + std::to_string(*A.m5) + " does not divide N/5";
    }
    return {};
}

Rational mu_upper_bound(std::uint64_t N, const MqAssignment& A) {
    if (auto why = assignment_violation(N, A); !why.empty()) throw std::invalid_argument(why);
    Rational b = Rational(8) + frac(16, N) - frac(60, 11 * A.m11);
    if (A.m5) b -= frac(16, 5 * *A.m5);
    if (A.m7) b -= frac(30, 7 * *A.m7);
    return b;
}

CandidateResult sieve_order(std::uint64_t N, const SieveOptions& options) {
    auto cand = decompose(N);
    if (!cand) throw std::invalid_argument(std::to_string(N) + " is not 2^a 3^b 5^c 7^d 11 within the grid");
    CandidateResult r;
    r.candidate = *cand;
    r.order = N;
    for (const auto& A : assignments_for(N)) {
        auto t = check(N, A, options);
        if (t.failure.empty() && !r.admissible) {
            r.admissible = true;
            r.witness = A;
            r.witness_bound = t.bound;
        }
        r.traces.push_back(std::move(t));
    }
    if (!r.admissible) r.first_failure = r.traces.front().assignment.to_string() + ": " + r.traces.front().failure;
    return r;
}

SearchReport admissible_orders(const SieveOptions& options) {
    SearchReport rep;
    for (int a = 0; a <= 7; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 1; ++c)
                for (int d = 0; d <= 1; ++d) {
                    auto r = sieve_order(OrderCandidate{a, b, c, d}.order(), options);
                    (r.admissible ? rep.survivors : rep.rejected).push_back(std::move(r));
                }
    auto by_order = [](const CandidateResult& x, const CandidateResult& y) { return x.order < y.order; };
    std::sort(rep.survivors.begin(), rep.survivors.end(), by_order);
    std::sort(rep.rejected.begin(), rep.rejected.end(), by_order);
    return rep;
}

std::vector<std::uint64_t> SearchReport::orders() const {
    std::vector<std::uint64_t> out;
    for (const auto& s : survivors) out.push_back(s.order);
    return out;
}

namespace {
const std::map<std::uint64_t, std::pair<std::string, std::string>>& group_table() {
    static const std::map<std::uint64_t, std::pair<std::string, std::string>> t{
        {11, {"C11", "C11"}},
        {55, {"11:5", "F55"}},
        {660, {"L2(11)", "L2_11"}},
        {7920, {"M11", "M11"}},
        {443520, {"M22", "M22"}},
    };
    return t;
}
}  // namespace

std::string order_to_group(std::uint64_t N) {
    auto it = group_table().find(N);
    if (it == group_table().end()) throw std::invalid_argument(std::to_string(N) + " is not an admissible order");
    return it->second.first;
}

std::string order_to_group_key(std::uint64_t N) {
    auto it = group_table().find(N);
    if (it == group_table().end()) throw std::invalid_argument(std::to_string(N) + " is not an admissible order");
    return it->second.second;
}

}  // namespace k3w
