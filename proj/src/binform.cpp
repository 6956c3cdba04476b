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

#include "k3w/binform.hpp"

#include <cctype>
#include <sstream>

namespace k3w {

// ---------------------------------------------------------------------------
// ProjPoint

ProjPoint::ProjPoint(FieldValue u, FieldValue v) : u_(std::move(u)), v_(std::move(v)) {
    if (u_.is_zero() && v_.is_zero()) throw std::invalid_argument("(0:0) is not a point of P^1");
    if (!u_.is_zero()) {
        v_ /= u_;
        u_ = u_.context()->one();
    } else {
        v_ = v_.context()->one();
    }
}

ProjPoint ProjPoint::mapped(const Matrix& L) const {
    const auto ctx = common_context(L.context(), u_.context());
    const Matrix M = L.lifted(ctx);
    const FieldValue u = lift(u_, ctx), v = lift(v_, ctx);
    return ProjPoint(M(0, 0) * u + M(0, 1) * v, M(1, 0) * u + M(1, 1) * v);
}

std::string ProjPoint::to_string() const { return "(" + u_.to_string() + ":" + v_.to_string() + ")"; }

std::vector<ProjPoint> projective_line(const ContextPtr& ctx) {
    if (ctx->size() > (u128(1) << 24)) throw BudgetExceeded("projective line too large to enumerate");
    const auto q = static_cast<std::uint64_t>(ctx->size());
    std::vector<ProjPoint> pts;
    pts.reserve(q + 1);
    for (std::uint64_t i = 0; i < q; ++i) pts.push_back(ProjPoint::affine(ctx->element(i)));
    pts.push_back(ProjPoint::infinity(ctx));
    return pts;
}

// ---------------------------------------------------------------------------
// BinaryForm

BinaryForm::BinaryForm(ContextPtr ctx, std::size_t degree) : ctx_(std::move(ctx)), c_(degree + 1, ctx_->zero()) {}

BinaryForm::BinaryForm(ContextPtr ctx, std::vector<FieldValue> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("a binary form needs degree + 1 coefficients");
    for (const auto& c : c_)
        if (!c.has_context() || !c.context()->same_as(*ctx_)) throw ContextMismatch();
}

BinaryForm BinaryForm::monomial(const FieldValue& coeff, std::size_t degree, std::size_t t1_exp) {
    if (t1_exp > degree) throw std::invalid_argument("monomial exponent exceeds degree");
    BinaryForm f(coeff.context(), degree);
    f.c_[t1_exp] = coeff;
    return f;
}

BinaryForm BinaryForm::from_ints(const ContextPtr& ctx, const std::vector<long long>& coeffs) {
    std::vector<FieldValue> c;
    for (auto x : coeffs) c.push_back(ctx->from_int(x));
    return BinaryForm(ctx, std::move(c));
}

bool BinaryForm::is_zero() const noexcept {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

BinaryForm BinaryForm::operator-() const {
    BinaryForm r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& rhs) {
    if (degree() != rhs.degree()) throw std::invalid_argument("adding forms of different degrees");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& rhs) {
    if (degree() != rhs.degree()) throw std::invalid_argument("subtracting forms of different degrees");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
    return *this;
}

BinaryForm BinaryForm::operator*(const BinaryForm& rhs) const {
    if (!ctx_->same_as(*rhs.ctx_)) throw ContextMismatch();
    BinaryForm out(ctx_, degree() + rhs.degree());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out.c_[i + j] += c_[i] * rhs.c_[j];
    }
    return out;
}

BinaryForm BinaryForm::scaled(const FieldValue& s) const {
    BinaryForm r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

BinaryForm BinaryForm::pow(std::size_t n) const {
    BinaryForm result = monomial(ctx_->one(), 0, 0);
    for (std::size_t i = 0; i < n; ++i) result = result * *this;
    return result;
}

FieldValue BinaryForm::evaluate(const FieldValue& t0, const FieldValue& t1) const {
    const auto ctx = common_context(ctx_, t0.context());
    const FieldValue a = lift(t0, ctx), b = lift(t1, ctx);
    const std::size_t d = degree();
    // Horner in t1/t0, tracking powers of t0 explicitly so t0 = 0 needs no special case.
    std::vector<FieldValue> pa(d + 1, ctx->one()), pb(d + 1, ctx->one());
    for (std::size_t k = 1; k <= d; ++k) {
        pa[k] = pa[k - 1] * a;
        pb[k] = pb[k - 1] * b;
    }
    FieldValue acc = ctx->zero();
    for (std::size_t i = 0; i <= d; ++i)
        if (!c_[i].is_zero()) acc += lift(c_[i], ctx) * pa[d - i] * pb[i];
    return acc;
}

BinaryForm BinaryForm::lifted(const ContextPtr& target) const {
    std::vector<FieldValue> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(lift(x, target));
    return BinaryForm(target, std::move(c));
}

std::size_t BinaryForm::order_at_infinity() const noexcept {
    const std::size_t d = degree();
    for (std::size_t i = d + 1; i-- > 0;)
        if (!c_[i].is_zero()) return d - i;
    return d + 1;
}

Poly BinaryForm::dehomogenize() const { return Poly(ctx_, c_); }

BinaryForm BinaryForm::homogenize(const Poly& g, std::size_t degree) {
    if (g.degree() > static_cast<long>(degree)) throw std::invalid_argument("homogenize: degree too small");
    BinaryForm f(g.context(), degree);
    for (std::size_t i = 0; i < g.coefficients().size(); ++i) f.c_[i] = g.coefficients()[i];
    return f;
}

bool BinaryForm::operator==(const BinaryForm& rhs) const {
    return ctx_->same_as(*rhs.ctx_) && c_ == rhs.c_;
}

std::string BinaryForm::to_string() const {
    std::ostringstream os;
    const std::size_t d = degree();
    bool first = true;
    for (std::size_t i = 0; i <= d; ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const std::size_t e0 = d - i, e1 = i;
        std::string mono;
        if (e0 > 0) mono += "t0" + (e0 > 1 ? "^" + std::to_string(e0) : std::string());
        if (e1 > 0) mono += (mono.empty() ? "" : "*") + std::string("t1") + (e1 > 1 ? "^" + std::to_string(e1) : std::string());
        if (mono.empty()) {
            os << c_[i].to_string();
        } else if (c_[i].is_one()) {
            os << mono;
        } else {
            os << c_[i].to_string() << "*" << mono;
        }
    }
    if (first) os << "0";
    return os.str();
}

BinaryForm substitute(const BinaryForm& f, const Matrix& L) {
    if (L.rows() != 2 || L.cols() != 2) throw std::invalid_argument("substitution matrix must be 2x2");
    const auto ctx = common_context(f.context(), L.context());
    const BinaryForm g = f.lifted(ctx);
    const Matrix M = L.lifted(ctx);
    const std::size_t d = f.degree();
    const BinaryForm a(ctx, {M(0, 0), M(0, 1)});
    const BinaryForm b(ctx, {M(1, 0), M(1, 1)});
    std::vector<BinaryForm> pa{BinaryForm::monomial(ctx->one(), 0, 0)}, pb{pa[0]};
    for (std::size_t k = 1; k <= d; ++k) {
        pa.push_back(pa.back() * a);
        pb.push_back(pb.back() * b);
    }
    BinaryForm out(ctx, d);
    for (std::size_t i = 0; i <= d; ++i) {
        if (g.coeff(i).is_zero()) continue;
        out += (pa[d - i] * pb[i]).scaled(g.coeff(i));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Factor structure

BinaryForm FactorStructure::reassemble() const {
    BinaryForm out = BinaryForm::monomial(unit, 0, 0);
    for (const auto& f : factors) out = out * f.form.pow(f.multiplicity);
    return out;
}

std::size_t FactorStructure::weighted_root_count() const {
    std::size_t n = 0;
    for (const auto& f : factors) n += f.degree * f.multiplicity;
    return n;
}

std::size_t FactorStructure::distinct_root_count() const {
    std::size_t n = 0;
    for (const auto& f : factors) n += f.degree;
    return n;
}

FactorStructure squarefree_decomposition(const BinaryForm& f) {
    if (f.is_zero()) throw std::domain_error("squarefree decomposition of the zero form");
    const auto& ctx = f.context();
    FactorStructure out;
    const std::size_t k0 = f.order_at_infinity();
    if (k0 > 0) {
        // (0:1) analysed by swapping variables: it is the factor t0.
        FormFactor inf{BinaryForm(ctx, {ctx->one(), ctx->zero()}), k0, 1, ProjPoint::infinity(ctx)};
        out.factors.push_back(std::move(inf));
    }
    const Poly g = f.dehomogenize();
    out.unit = g.leading();
    for (const auto& [pi, mult] : factor(g)) {
        const auto deg = static_cast<std::size_t>(pi.degree());
        FormFactor ff{BinaryForm::homogenize(pi, deg), mult, deg, std::nullopt};
        if (deg == 1) ff.point = ProjPoint::affine(-pi.coeff(0));
        out.factors.push_back(std::move(ff));
    }
    return out;
}

std::optional<std::size_t> order_along(const BinaryForm& f, const FormFactor& factor) {
    if (f.is_zero()) return std::nullopt;
    if (factor.point && factor.point->is_infinity()) return f.order_at_infinity();
    const Poly pi = factor.form.lifted(f.context()).dehomogenize();
    Poly g = f.dehomogenize();
    std::size_t e = 0;
    while (true) {
        auto [q, r] = divmod(g, pi);
        if (!r.is_zero()) break;
        g = std::move(q);
        ++e;
    }
    return e;
}

std::vector<BinaryForm> invariant_forms(const ContextPtr& ctx, std::size_t degree, const Matrix& L) {
    const auto work = common_context(ctx, L.context());
    if (L.rows() != 2 || L.cols() != 2) throw std::invalid_argument("invariant_forms: L must be 2x2");
    if (L.determinant().is_zero()) throw std::invalid_argument("invariant_forms: singular substitution");
    const std::size_t n = degree + 1;
    Matrix S(work, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const BinaryForm img = substitute(BinaryForm::monomial(work->one(), degree, j), L);
        for (std::size_t i = 0; i < n; ++i) S(i, j) = img.coeff(i);
    }
    std::vector<BinaryForm> out;
    for (auto& v : kernel(S - Matrix::identity(work, n))) out.emplace_back(work, std::move(v));
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class FormParser {
   public:
    FormParser(const std::string& s, const ContextPtr& ctx) : s_(s), ctx_(ctx) {}

    struct Term {
        FieldValue coeff;
        std::size_t e0 = 0, e1 = 0;
    };

    std::vector<Term> parse() {
        std::vector<Term> terms;
        skip();
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = get() == '-';
            skip();
        }
        while (true) {
            Term t = term();
            if (neg) t.coeff = -t.coeff;
            terms.push_back(std::move(t));
            skip();
            if (pos_ == s_.size()) break;
            const char op = get();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            neg = op == '-';
            skip();
        }
        return terms;
    }

   private:
    const std::string& s_;
    ContextPtr ctx_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("form parse error at offset " + std::to_string(pos_) + ": " + msg + " in \"" + s_ + "\"");
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    unsigned long long number() {
        skip();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        unsigned long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<unsigned long long>(get() - '0');
            if (v > (1ull << 40)) fail("number too large");
        }
        return v;
    }
    unsigned long long exponent() {
        skip();
        if (peek() != '^') return 1;
        get();
        return number();
    }
    Term term() {
        Term t{ctx_->one(), 0, 0};
        while (true) {
            skip();
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                t.coeff *= ctx_->from_int(static_cast<long long>(number() % ctx_->characteristic()));
            } else if (c == 't') {
                get();
                const char which = get();
                if (which != '0' && which != '1') fail("expected t0 or t1");
                (which == '0' ? t.e0 : t.e1) += exponent();
            } else if (c == 'w') {
                get();
                t.coeff *= ctx_->generator().pow(exponent());
            } else {
                fail("unexpected character");
            }
            skip();
            if (peek() != '*') break;
            get();
        }
        return t;
    }
};

}  // namespace

BinaryForm parse_form(const std::string& text, const ContextPtr& ctx, std::optional<std::size_t> degree) {
    FormParser parser(text, ctx);
    auto terms = parser.parse();
    std::optional<std::size_t> d = degree;
    for (const auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        const std::size_t td = t.e0 + t.e1;
        if (d && *d != td) throw std::invalid_argument("form is not homogeneous of degree " + std::to_string(*d) + ": \"" + text + "\"");
        d = td;
    }
    if (!d) {
        // Only zero terms; use the first term's degree.
        d = terms.front().e0 + terms.front().e1;
    }
    std::vector<FieldValue> c(*d + 1, ctx->zero());
    for (const auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        c[t.e1] += t.coeff;
    }
    return BinaryForm(ctx, std::move(c));
}

}  // namespace k3w
