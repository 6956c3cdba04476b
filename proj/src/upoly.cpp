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

#include "k3w/upoly.hpp"

#include <algorithm>
#include <random>

namespace k3w {

Poly::Poly(ContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw ContextMismatch("polynomial over a null context");
}

Poly::Poly(ContextPtr ctx, std::vector<FieldValue> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    if (!ctx_) throw ContextMismatch("polynomial over a null context");
    for (const auto& c : c_)
        if (!c.has_context() || !c.context()->same_as(*ctx_)) throw ContextMismatch();
    trim();
}

Poly Poly::monomial(ContextPtr ctx, std::size_t deg, const FieldValue& coeff) {
    std::vector<FieldValue> c(deg + 1, ctx->zero());
    c[deg] = coeff;
    return Poly(std::move(ctx), std::move(c));
}

Poly Poly::constant(const FieldValue& c) { return Poly(c.context(), {c}); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldValue Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ctx_->zero(); }

const FieldValue& Poly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (!ctx_->same_as(*rhs.ctx_)) throw ContextMismatch();
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), ctx_->zero());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (!ctx_->same_as(*rhs.ctx_)) throw ContextMismatch();
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), ctx_->zero());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
}

Poly Poly::operator*(const Poly& rhs) const {
    if (!ctx_->same_as(*rhs.ctx_)) throw ContextMismatch();
    if (is_zero() || rhs.is_zero()) return Poly(ctx_);
    std::vector<FieldValue> out(c_.size() + rhs.c_.size() - 1, ctx_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    }
    return Poly(ctx_, std::move(out));
}

Poly Poly::scaled(const FieldValue& s) const {
    Poly r = *this;
    for (auto& c : r.c_) c *= s;
    r.trim();
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(ctx_);
    std::vector<FieldValue> out;
    out.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * ctx_->from_int(static_cast<long long>(i)));
    return Poly(ctx_, std::move(out));
}

FieldValue Poly::eval(const FieldValue& x) const {
    FieldValue acc = ctx_->zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::pth_root() const {
    const std::size_t p = ctx_->characteristic();
    std::vector<FieldValue> out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i % p != 0) {
            if (!c_[i].is_zero()) throw std::domain_error("pth_root: not a polynomial in x^p");
            continue;
        }
        out.push_back(c_[i].pth_root());
    }
    return Poly(ctx_, std::move(out));
}

bool Poly::operator==(const Poly& rhs) const { return ctx_->same_as(*rhs.ctx_) && c_ == rhs.c_; }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    const auto& ctx = a.context();
    if (a.degree() < b.degree()) return {Poly(ctx), a};
    std::vector<FieldValue> rem = a.coefficients();
    std::vector<FieldValue> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), ctx->zero());
    const FieldValue inv = b.leading().inverse();
    const auto db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero()) continue;
        const FieldValue f = rem[k] * inv;
        quo[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coefficients()[j];
    }
    rem.resize(db);
    return {Poly(ctx, std::move(quo)), Poly(ctx, std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly powmod(const Poly& base, u128 e, const Poly& mod) {
    Poly result = Poly::constant(base.context()->one()) % mod;
    Poly b = base % mod;
    while (e > 0) {
        if (e & 1) result = (result * b) % mod;
        e >>= 1;
        if (e > 0) b = (b * b) % mod;
    }
    return result;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const auto& ctx = f.context();
    const u128 q = ctx->size();
    const Poly x = Poly::x(ctx);
    Poly h = x % f;
    for (long i = 1; i <= f.degree() / 2; ++i) {
        h = powmod(h, q, f);
        if (!gcd(f, h - x).is_one()) return false;
    }
    return true;
}

std::vector<std::pair<Poly, std::size_t>> squarefree_parts(const Poly& f) {
    std::vector<std::pair<Poly, std::size_t>> out;
    if (f.degree() < 1) return out;
    const std::size_t p = f.context()->characteristic();
    const Poly df = f.derivative();
    if (df.is_zero()) {
        for (auto& [g, m] : squarefree_parts(f.pth_root())) out.emplace_back(std::move(g), m * p);
        return out;
    }
    Poly c = gcd(f, df);
    Poly w = f.monic() / c;
    std::size_t i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (z.degree() > 0) out.emplace_back(z.monic(), i);
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (c.degree() > 0) {
        for (auto& [g, m] : squarefree_parts(c.monic().pth_root())) out.emplace_back(std::move(g), m * p);
    }
    return out;
}

std::vector<std::pair<Poly, std::size_t>> distinct_degree_split(const Poly& f) {
    std::vector<std::pair<Poly, std::size_t>> out;
    const auto& ctx = f.context();
    const Poly x = Poly::x(ctx);
    Poly rest = f.monic();
    Poly h = x % rest;
    std::size_t k = 0;
    while (rest.degree() >= 2 * static_cast<long>(k + 1)) {
        ++k;
        h = powmod(h, ctx->size(), rest);
        Poly g = gcd(rest, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, k);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, static_cast<std::size_t>(rest.degree()));
    return out;
}

namespace {

// a^((q^k - 1)/2) mod f, computed as (a * a^q * ... * a^(q^(k-1)))^((q-1)/2)
// so the exponent never exceeds q.
Poly half_norm_power(const Poly& a, std::size_t k, const Poly& f) {
    const u128 q = f.context()->size();
    Poly prod = a % f;
    Poly conj = a % f;
    for (std::size_t i = 1; i < k; ++i) {
        conj = powmod(conj, q, f);
        prod = (prod * conj) % f;
    }
    return powmod(prod, (q - 1) / 2, f);
}

void split_rec(const Poly& f, std::size_t k, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.degree() <= static_cast<long>(k)) {
        if (f.degree() > 0) out.push_back(f.monic());
        return;
    }
    const auto& ctx = f.context();
    const Poly one = Poly::constant(ctx->one());
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<FieldValue> c;
        for (long i = 0; i < f.degree(); ++i) c.push_back(ctx->random(rng));
        Poly a(ctx, std::move(c));
        if (a.degree() < 1) continue;
        Poly g = gcd(f, a);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            split_rec(g, k, rng, out);
            split_rec(f / g, k, rng, out);
            return;
        }
        g = gcd(f, half_norm_power(a, k, f) - one);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            split_rec(g, k, rng, out);
            split_rec(f / g, k, rng, out);
            return;
        }
    }
    throw std::logic_error("equal-degree splitting did not converge");
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = static_cast<std::size_t>(a.degree()) + 1; i-- > 0;) {
        const auto ia = a.coeff(i).index();
        const auto ib = b.coeff(i).index();
        if (ia != ib) return ia < ib;
    }
    return false;
}

}  // namespace

std::vector<Poly> equal_degree_split(const Poly& f, std::size_t k) {
    if (f.context()->characteristic() == 2) throw std::domain_error("equal-degree splitting needs odd characteristic");
    std::mt19937_64 rng(0x6b33u + k);
    std::vector<Poly> out;
    split_rec(f.monic(), k, rng, out);
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

std::vector<std::pair<Poly, std::size_t>> factor(const Poly& f) {
    std::vector<std::pair<Poly, std::size_t>> out;
    if (f.degree() < 1) return out;
    for (const auto& [part, mult] : squarefree_parts(f.monic())) {
        for (const auto& [block, k] : distinct_degree_split(part)) {
            for (auto& g : equal_degree_split(block, k)) out.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (poly_less(a.first, b.first)) return true;
        if (poly_less(b.first, a.first)) return false;
        return a.second < b.second;
    });
    return out;
}

std::vector<FieldValue> roots(const Poly& f) {
    std::vector<FieldValue> out;
    if (f.degree() < 1) return out;
    const auto& ctx = f.context();
    const Poly x = Poly::x(ctx);
    Poly sf = f.monic();
    // Distinct linear factors: gcd(f, x^q - x).
    Poly lin = gcd(sf, powmod(x, ctx->size(), sf) - x);
    if (lin.degree() < 1) return out;
    for (const auto& g : equal_degree_split(lin, 1)) out.push_back(-g.coeff(0));
    std::sort(out.begin(), out.end(), [](const FieldValue& a, const FieldValue& b) { return a.index() < b.index(); });
    return out;
}

}  // namespace k3w
