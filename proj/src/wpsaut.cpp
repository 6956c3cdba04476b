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

#include "k3w/wpsaut.hpp"

#include <boost/algorithm/string.hpp>
#include <sstream>

namespace k3w {

namespace {

ContextPtr widest(std::initializer_list<ContextPtr> ctxs) {
    ContextPtr out;
    for (const auto& c : ctxs) out = out ? common_context(out, c) : c;
    return out;
}

std::size_t binom(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BinaryForm constant_form(const FieldValue& v) { return BinaryForm::monomial(v, 0, 0); }

}  // namespace

// ---------------------------------------------------------------------------
// WpsAut

WpsAut::WpsAut(Matrix L, FieldValue c, BinaryForm q, FieldValue d)
    : L_(L.lifted(widest({L.context(), c.context(), q.context(), d.context()}))),
      c_(lift(c, L_.context())),
      q_(q.lifted(L_.context())),
      d_(lift(d, L_.context())) {
    if (L_.rows() != 2 || L_.cols() != 2) throw std::invalid_argument("base part must be 2x2");
    if (q_.degree() != 4) throw std::invalid_argument("x-translation must be a quartic form");
    if (L_.determinant().is_zero()) throw std::invalid_argument("singular base action");
    if (c_.is_zero()) throw std::invalid_argument("x-coefficient must be nonzero");
    if (d_.is_zero()) throw std::invalid_argument("y-coefficient must be nonzero");
}

WpsAut WpsAut::identity(const ContextPtr& ctx) {
    return WpsAut(Matrix::identity(ctx, 2), ctx->one(), BinaryForm(ctx, 4), ctx->one());
}

WpsAut WpsAut::scaling(const FieldValue& lambda) {
    const auto& k = lambda.context();
    return WpsAut(Matrix::identity(k, 2).scaled(lambda), lambda.pow(4), BinaryForm(k, 4), lambda.pow(6));
}

WpsAut WpsAut::linear(const Matrix& M) {
    const auto& k = M.context();
    return WpsAut(M, k->one(), BinaryForm(k, 4), k->one());
}

WpsAut WpsAut::lifted(const ContextPtr& target) const {
    return WpsAut(L_.lifted(target), lift(c_, target), q_.lifted(target), lift(d_, target));
}

std::array<FieldValue, 4> WpsAut::apply(const std::array<FieldValue, 4>& p) const {
    const auto ctx = common_context(context(), p[0].context());
    const WpsAut s = ctx->same_as(*context()) ? *this : lifted(ctx);
    std::array<FieldValue, 4> v;
    for (std::size_t i = 0; i < 4; ++i) v[i] = lift(p[i], ctx);
    const auto& L = s.L();
    return {L(0, 0) * v[0] + L(0, 1) * v[1], L(1, 0) * v[0] + L(1, 1) * v[1], s.c() * v[2] + s.q().evaluate(v[0], v[1]),
            s.d() * v[3]};
}

std::string WpsAut::to_string() const {
    std::ostringstream os;
    os << "L=[[" << L_(0, 0).to_string() << "," << L_(0, 1).to_string() << "],[" << L_(1, 0).to_string() << ","
       << L_(1, 1).to_string() << "]] c=" << c_.to_string() << " q=" << q_.to_string() << " d=" << d_.to_string();
    return os.str();
}

WpsAut compose(const WpsAut& s0, const WpsAut& t0) {
    const auto ctx = common_context(s0.context(), t0.context());
    const WpsAut s = s0.lifted(ctx), t = t0.lifted(ctx);
    return WpsAut(s.L() * t.L(), s.c() * t.c(), t.q().scaled(s.c()) + substitute(s.q(), t.L()), s.d() * t.d());
}

WpsAut inverse(const WpsAut& s) {
    const Matrix Li = s.L().inverse();
    const FieldValue ci = s.c().inverse();
    return WpsAut(Li, ci, substitute(s.q(), Li).scaled(-ci), s.d().inverse());
}

WpsAut power(const WpsAut& s, std::size_t n) {
    WpsAut r = WpsAut::identity(s.context());
    for (std::size_t i = 0; i < n; ++i) r = compose(s, r);
    return r;
}

bool equal_mod_scaling(const WpsAut& s0, const WpsAut& t0) {
    const auto ctx = common_context(s0.context(), t0.context());
    const WpsAut s = s0.lifted(ctx), t = t0.lifted(ctx);
    FieldValue lambda;
    for (std::size_t i = 0; i < 2 && !lambda.has_context(); ++i)
        for (std::size_t j = 0; j < 2 && !lambda.has_context(); ++j)
            if (!t.L()(i, j).is_zero()) lambda = s.L()(i, j) / t.L()(i, j);
    if (lambda.is_zero()) return false;
    const FieldValue l4 = lambda.pow(4);
    return s.L() == t.L().scaled(lambda) && s.c() == t.c() * l4 && s.q() == t.q().scaled(l4) &&
           s.d() == t.d() * lambda.pow(6);
}

std::size_t order_mod_scaling(const WpsAut& s, std::size_t cap) {
    const WpsAut id = WpsAut::identity(s.context());
    WpsAut p = s;
    for (std::size_t n = 1; n <= cap; ++n) {
        if (equal_mod_scaling(p, id)) return n;
        p = compose(s, p);
    }
    throw BudgetExceeded("order exceeds cap " + std::to_string(cap));
}

FieldValue symplectic_multiplier(const WpsAut& s) { return s.L().determinant() * s.c() / s.d(); }

// ---------------------------------------------------------------------------
// SurfaceEquation

SurfaceEquation SurfaceEquation::from_model(const FibrationModel& m) {
    const auto& k = m.context();
    return {k->one(), {m.a6, m.a4, m.a2, constant_form(k->one())}};
}

SurfaceEquation SurfaceEquation::lifted(const ContextPtr& target) const {
    return {lift(y2, target), {x[0].lifted(target), x[1].lifted(target), x[2].lifted(target), x[3].lifted(target)}};
}

SurfaceEquation SurfaceEquation::scaled(const FieldValue& u) const {
    return {y2 * u, {x[0].scaled(u), x[1].scaled(u), x[2].scaled(u), x[3].scaled(u)}};
}

FieldValue SurfaceEquation::evaluate(const std::array<FieldValue, 4>& p) const {
    FieldValue acc = x[3].evaluate(p[0], p[1]);
    for (std::size_t k = 3; k-- > 0;) acc = acc * p[2] + x[k].evaluate(p[0], p[1]);
    return acc + lift(y2, acc.context()) * p[3] * p[3];
}

bool SurfaceEquation::operator==(const SurfaceEquation& o) const {
    if (!context()->same_as(*o.context())) return false;
    return y2 == o.y2 && x == o.x;
}

std::string SurfaceEquation::to_string() const {
    std::ostringstream os;
    os << "(" << y2.to_string() << ")*y^2";
    const char* xs[] = {"", "*x", "*x^2", "*x^3"};
    for (std::size_t k = 4; k-- > 0;)
        if (!x[k].is_zero()) os << " + (" << x[k].to_string() << ")" << xs[k];
    return os.str();
}

SurfaceEquation pullback(const SurfaceEquation& F0, const WpsAut& s0) {
    const auto ctx = common_context(F0.context(), s0.context());
    const SurfaceEquation F = F0.lifted(ctx);
    const WpsAut s = s0.lifted(ctx);
    std::array<BinaryForm, 4> base{substitute(F.x[0], s.L()), substitute(F.x[1], s.L()), substitute(F.x[2], s.L()),
                                   substitute(F.x[3], s.L())};
    std::vector<BinaryForm> qpow{constant_form(ctx->one())};
    for (std::size_t i = 1; i <= 3; ++i) qpow.push_back(qpow.back() * s.q());
    std::array<BinaryForm, 4> out{BinaryForm(ctx, 12), BinaryForm(ctx, 8), BinaryForm(ctx, 4), BinaryForm(ctx, 0)};
    // sum_k base_k (c x + q)^k = sum_j x^j sum_{k>=j} C(k,j) c^j q^(k-j) base_k
    for (std::size_t j = 0; j <= 3; ++j) {
        const FieldValue cj = s.c().pow(j);
        for (std::size_t k = j; k <= 3; ++k) {
            if (base[k].is_zero()) continue;
            out[j] += (base[k] * qpow[k - j]).scaled(cj * ctx->from_int(static_cast<long long>(binom(k, j))));
        }
    }
    return {F.y2 * s.d() * s.d(), std::move(out)};
}

FieldValue equation_scalar(const WpsAut& s, const SurfaceEquation& F) {
    const SurfaceEquation G = pullback(F, s);
    const SurfaceEquation Fl = F.lifted(G.context());
    if (Fl.y2.is_zero()) throw NotAnAutomorphism("equation has no y^2 term");
    const FieldValue u = G.y2 / Fl.y2;
    if (!(G == Fl.scaled(u))) throw NotAnAutomorphism();
    return u;
}

AutReport analyze(const WpsAut& s, const SurfaceEquation& F, std::size_t order_cap) {
    AutReport r;
    try {
        r.equation_scalar = equation_scalar(s, F);
        r.preserves_equation = true;
    } catch (const NotAnAutomorphism&) {
        r.preserves_equation = false;
    }
    r.order = order_mod_scaling(s, order_cap);
    r.multiplier = symplectic_multiplier(s);
    r.symplectic = r.multiplier.is_one();
    return r;
}

std::size_t normalizer_witness(const WpsAut& a, const WpsAut& b, std::size_t order_cap) {
    const std::size_t n = order_mod_scaling(b, order_cap);
    const WpsAut conj = compose(compose(a, b), inverse(a));
    WpsAut p = WpsAut::identity(b.context());
    for (std::size_t k = 0; k < n; ++k) {
        if (equal_mod_scaling(conj, p)) return k;
        p = compose(b, p);
    }
    throw std::domain_error("conjugate is not a power of the second map");
}

// ---------------------------------------------------------------------------
// Named maps

WpsAut g_map(const FieldValue& eps) {
    const auto& k = eps.context();
    return WpsAut::linear(Matrix::from_ints(k, {{1, 0}, {1, 1}}));
}

WpsAut e_tilde(const ContextPtr& ctx) { return WpsAut::linear(Matrix::from_ints(ctx, {{1, 0}, {1, 1}})); }

ArtinSchreierTower artin_schreier_tower(const FieldValue& eps) {
    const auto& k = eps.context();
    if (!k->is_prime_field()) throw std::invalid_argument("eps must lie in the prime field");
    const FieldValue c = k->from_int(3) * eps.pow(3);
    if (c.is_zero()) {
        const ContextPtr top = FieldContext::extension(k, {k->one(), k->zero(), k->one()});
        return {lift(eps, top), k, top, top->zero(), top->generator()};
    }
    std::vector<FieldValue> mod(k->characteristic() + 1, k->zero());
    mod[0] = c;
    mod[1] = k->from_int(-1);
    mod.back() = k->one();
    const ContextPtr kb = FieldContext::extension(k, mod);
    const ContextPtr top = FieldContext::extension(kb, {kb->one(), kb->zero(), kb->one()});
    return {lift(eps, top), kb, top, lift(kb->generator(), top), top->generator()};
}

WpsAut i_tilde(const ArtinSchreierTower& tw, int root_sign) {
    const auto& k = tw.top;
    Matrix L = Matrix::from_rows(k, {{k->one(), k->zero()}, {tw.b, k->from_int(-1)}});
    const FieldValue d = root_sign >= 0 ? tw.sqrt_m1 : -tw.sqrt_m1;
    return WpsAut(L, k->from_int(-1), BinaryForm::monomial(k->from_int(3) * tw.eps, 4, 0), d);
}

// ---------------------------------------------------------------------------
// Hermitian normalization and GU2

namespace {

std::optional<FieldValue> find_root(const ContextPtr& k, std::uint64_t n, const FieldValue& target) {
    for (std::uint64_t i = 1; i < static_cast<std::uint64_t>(k->size()); ++i) {
        const FieldValue v = k->element(i);
        if (v.pow(n) == target) return v;
    }
    return std::nullopt;
}

BinaryForm fermat12(const ContextPtr& k) {
    return BinaryForm::monomial(k->one(), 12, 0) + BinaryForm::monomial(k->one(), 12, 12);
}

}  // namespace

HermitianNormalization hermitian_diagonalize(const FieldValue& alpha) {
    const auto& k = alpha.context();
    if (k->degree() != 2) throw std::invalid_argument("alpha must lie in a quadratic extension of the prime field");
    const FieldValue ab = alpha.frobenius();
    if (ab == alpha) throw std::invalid_argument("alpha lies in the prime field: substitution is singular");
    Matrix S = Matrix::from_rows(k, {{ab, alpha}, {k->one(), k->one()}});

    const FibrationModel x0 = build_standard_surface(k->zero());
    const BinaryForm g = substitute(x0.a6, S);
    bool cross_zero = true;
    for (std::size_t i = 1; i < 12; ++i) cross_zero = cross_zero && g.coeff(i).is_zero();
    const FieldValue lambda = g.coeff(0), mu = g.coeff(12);
    if (!cross_zero || lambda.is_zero() || mu.is_zero()) throw std::logic_error("hermitian substitution failed to diagonalize");

    const auto s1 = find_root(k, 12, lambda / mu);
    const auto r = find_root(k, 3, lambda);
    const auto w = find_root(k, 2, lambda);
    if (!s1 || !r || !w) throw std::logic_error("scaling roots missing in the quadratic field");

    Matrix D = Matrix::identity(k, 2);
    D(1, 1) = *s1;
    WpsAut composite(S * D, *r, BinaryForm(k, 4), *w);
    const SurfaceEquation pulled = pullback(SurfaceEquation::from_model(x0), composite);
    const FieldValue kappa = pulled.y2;
    SurfaceEquation normalized = pulled.scaled(kappa.inverse());
    return {S, lambda, mu, cross_zero, *s1, *r, *w, composite, kappa, normalized};
}

bool gu2_check(const Matrix& M0) {
    if (M0.rows() != 2 || M0.cols() != 2) throw std::invalid_argument("gu2_check needs a 2x2 matrix");
    const Matrix M = M0.context()->degree() == 1 ? M0.lifted(f121_context()) : M0;
    if (M.context()->degree() != 2) throw std::invalid_argument("gu2_check needs entries in a quadratic field");
    const auto& k = M.context();
    if (M.frobenius().transpose() * M != Matrix::identity(k, 2)) return false;
    const BinaryForm f = fermat12(k);
    if (substitute(f, M) != f) throw std::logic_error("unitary matrix does not preserve t0^12 + t1^12");
    return true;
}

// ---------------------------------------------------------------------------
// Parsing

const ContextPtr& f121_context() {
    static const ContextPtr k = [] {
        auto p = FieldContext::prime(11);
        return FieldContext::extension(p, {p->one(), p->zero(), p->one()});
    }();
    return k;
}

FieldValue parse_f121(const std::string& text) { return parse_form(text, f121_context(), 0).coeff(0); }

namespace {

std::vector<std::string> split_trim(const std::string& s, const char* seps) {
    std::vector<std::string> parts;
    boost::split(parts, s, boost::is_any_of(seps));
    for (auto& p : parts) boost::trim(p);
    return parts;
}

long long parse_int(const std::string& s) {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("expected an integer, got \"" + s + "\"");
    return v;
}

}  // namespace

WpsAut parse_aut(const std::string& raw) {
    const std::string text = boost::trim_copy(raw);
    const auto open = text.find('(');
    const std::string name = boost::trim_copy(text.substr(0, open));
    std::string args;
    if (open != std::string::npos) {
        if (text.back() != ')') throw std::invalid_argument("unbalanced parentheses in map \"" + text + "\"");
        args = text.substr(open + 1, text.size() - open - 2);
    }
    const auto f11 = FieldContext::prime(11);
    if (name == "id") return WpsAut::identity(f11);
    if (name == "e~") return e_tilde(f11);
    if (name == "g") return g_map(f11->from_int(parse_int(boost::trim_copy(args))));
    if (name == "i~") {
        const auto parts = split_trim(args, ",");
        int sign = 1;
        if (parts.size() == 2) {
            if (parts[1] != "-" && parts[1] != "+") throw std::invalid_argument("root sign must be + or -");
            sign = parts[1] == "-" ? -1 : 1;
        } else if (parts.size() != 1) {
            throw std::invalid_argument("i~ takes eps and an optional sign");
        }
        return i_tilde(artin_schreier_tower(f11->from_int(parse_int(parts[0]))), sign);
    }
    if (name == "scale") return WpsAut::scaling(parse_f121(args));
    if (name == "unitary") {
        const auto parts = split_trim(args, ",");
        if (parts.size() != 4) throw std::invalid_argument("unitary takes four entries");
        const auto& k = f121_context();
        Matrix M = Matrix::from_rows(k, {{parse_f121(parts[0]), parse_f121(parts[1])},
                                         {parse_f121(parts[2]), parse_f121(parts[3])}});
        return WpsAut::linear(M);
    }
    if (name == "tri") {
        const auto groups = split_trim(args, ";");
        if (groups.size() != 4) throw std::invalid_argument("tri takes L;c;q;d");
        const auto l = split_trim(groups[0], ",");
        if (l.size() != 4) throw std::invalid_argument("tri needs four matrix entries");
        const auto& k = f121_context();
        Matrix L = Matrix::from_rows(k, {{parse_f121(l[0]), parse_f121(l[1])}, {parse_f121(l[2]), parse_f121(l[3])}});
        return WpsAut(L, parse_f121(groups[1]), parse_form(groups[2], k, 4), parse_f121(groups[3]));
    }
    throw std::invalid_argument("unknown map \"" + text + "\"");
}

}  // namespace k3w
