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

#include "k3w/ffield.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "k3w/upoly.hpp"

namespace k3w {

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

namespace {

bool is_small_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Factors of a small integer (trial division), distinct primes only.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldContext

ContextPtr FieldContext::prime(std::uint32_t p) {
    if (p < 5 || p >= (1u << 15) || !is_small_prime(p))
        throw std::invalid_argument("prime field requires a prime 5 <= p < 32768, got " + std::to_string(p));
    auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
    ctx->p_ = p;
    ctx->degree_ = 1;
    ctx->layers_ = 0;
    ctx->size_ = p;
    return ctx;
}

ContextPtr FieldContext::extension(const ContextPtr& base, const std::vector<FieldValue>& modulus) {
    if (!base) throw std::invalid_argument("extension of a null context");
    if (modulus.size() < 3) throw std::invalid_argument("extension modulus must have degree >= 2");
    for (const auto& c : modulus)
        if (!c.has_context() || !c.context()->same_as(*base))
            throw ContextMismatch("extension modulus coefficients must lie in the base context");
    if (!modulus.back().is_one()) throw std::invalid_argument("extension modulus must be monic");
    const std::size_t m = modulus.size() - 1;
    if (base->layers_ >= 2) throw std::invalid_argument("towers are limited to two extension layers");
    if (base->layers_ == 1 && m != 2)
        throw std::invalid_argument("the second layer of a tower must be quadratic");

    // p^(n*m) must fit the element-count type.
    u128 size = 1;
    for (std::size_t i = 0; i < base->degree_ * m; ++i) {
        if (size > (~u128(0)) / base->p_) throw std::invalid_argument("extension too large");
        size *= base->p_;
    }

    auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
    ctx->p_ = base->p_;
    ctx->degree_ = base->degree_ * m;
    ctx->layers_ = base->layers_ + 1;
    ctx->size_ = size;
    ctx->base_ = base;
    ctx->modulus_ = modulus;
    ctx->modulus_raw_.reserve(m * base->degree_);
    for (std::size_t i = 0; i < m; ++i)
        for (auto c : modulus[i].coefficients()) ctx->modulus_raw_.push_back(c);

    // x^p - x + c over F_p with c != 0 is irreducible (Artin-Schreier). The
    // flag is informational; the gcd test below still runs and must agree.
    if (base->is_prime_field() && m == base->p_) {
        bool shape = !modulus[0].is_zero() && modulus[1] == -base->one();
        for (std::size_t i = 2; i < m && shape; ++i) shape = modulus[i].is_zero();
        ctx->artin_schreier_ = shape;
    }

    Poly f(base, modulus);
    if (!is_irreducible(f)) {
        std::ostringstream os;
        os << "reducible modulus of degree " << m << " over " << base->describe();
        throw ReducibleModulus(os.str());
    }
    return ctx;
}

bool FieldContext::same_as(const FieldContext& other) const noexcept {
    if (this == &other) return true;
    if (p_ != other.p_ || degree_ != other.degree_ || layers_ != other.layers_) return false;
    if (is_prime_field()) return true;
    if (!base_->same_as(*other.base_)) return false;
    return modulus_raw_ == other.modulus_raw_ && modulus_.size() == other.modulus_.size();
}

bool FieldContext::contains(const FieldContext& sub) const noexcept {
    for (const FieldContext* c = this; c != nullptr; c = c->base_.get())
        if (c->same_as(sub)) return true;
    return false;
}

FieldValue FieldContext::zero() const { return FieldValue(shared_from_this(), 0); }
FieldValue FieldContext::one() const { return FieldValue(shared_from_this(), 1); }
FieldValue FieldContext::from_int(long long v) const { return FieldValue(shared_from_this(), v); }

FieldValue FieldContext::generator() const {
    if (is_prime_field()) return one();
    std::vector<std::uint32_t> c(degree_, 0);
    c[base_->degree_] = 1;
    return FieldValue(shared_from_this(), std::move(c));
}

FieldValue FieldContext::element(std::uint64_t index) const {
    if (u128(index) >= size_) throw std::out_of_range("element index out of range");
    std::vector<std::uint32_t> c(degree_);
    for (auto& x : c) {
        x = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return FieldValue(shared_from_this(), std::move(c));
}

std::string FieldContext::describe() const {
    std::ostringstream os;
    if (is_prime_field()) {
        os << "F_" << p_;
        return os.str();
    }
    os << "F_" << p_ << "^" << degree_ << " = (" << base_->describe() << ")[x]/(";
    bool first = true;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
        if (modulus_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || !modulus_[i].is_one()) os << modulus_[i].to_string();
        if (i > 0) os << (modulus_[i].is_one() ? "" : "*") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    os << ")";
    return os.str();
}

void FieldContext::raw_add(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                           std::span<std::uint32_t> out) const {
    for (std::size_t i = 0; i < degree_; ++i) {
        std::uint32_t s = a[i] + b[i];
        out[i] = s >= p_ ? s - p_ : s;
    }
}

void FieldContext::raw_sub(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                           std::span<std::uint32_t> out) const {
    for (std::size_t i = 0; i < degree_; ++i) out[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p_ - b[i];
}

void FieldContext::raw_mul(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                           std::span<std::uint32_t> out) const {
    if (is_prime_field()) {
        out[0] = static_cast<std::uint32_t>((std::uint64_t(a[0]) * b[0]) % p_);
        return;
    }
    const std::size_t n = base_->degree_;
    const std::size_t m = layer_degree();

    if (base_->is_prime_field()) {
        // Scalar convolution followed by reduction by the monic modulus.
        std::vector<std::uint64_t> prod(2 * m - 1, 0);
        for (std::size_t i = 0; i < m; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) prod[i + j] += std::uint64_t(a[i]) * b[j];
        }
        for (auto& x : prod) x %= p_;
        for (std::size_t k = 2 * m - 1; k-- > m;) {
            const std::uint64_t lead = prod[k];
            if (lead == 0) continue;
            for (std::size_t t = 0; t < m; ++t)
                prod[k - m + t] = (prod[k - m + t] + (p_ - lead) * modulus_raw_[t]) % p_;
        }
        for (std::size_t i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
        return;
    }

    std::vector<std::uint32_t> prod((2 * m - 1) * n, 0);
    std::vector<std::uint32_t> tmp(n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            base_->raw_mul(a.subspan(i * n, n), b.subspan(j * n, n), tmp);
            std::span<std::uint32_t> dst(prod.data() + (i + j) * n, n);
            base_->raw_add(dst, tmp, dst);
        }
    }
    for (std::size_t k = 2 * m - 1; k-- > m;) {
        std::span<const std::uint32_t> lead(prod.data() + k * n, n);
        if (std::all_of(lead.begin(), lead.end(), [](std::uint32_t x) { return x == 0; })) continue;
        std::vector<std::uint32_t> lead_copy(lead.begin(), lead.end());
        for (std::size_t t = 0; t < m; ++t) {
            base_->raw_mul(lead_copy, std::span<const std::uint32_t>(modulus_raw_.data() + t * n, n), tmp);
            std::span<std::uint32_t> dst(prod.data() + (k - m + t) * n, n);
            base_->raw_sub(dst, tmp, dst);
        }
    }
    std::copy(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(m * n), out.begin());
}

// ---------------------------------------------------------------------------
// FieldValue

FieldValue::FieldValue(ContextPtr ctx, long long v) : ctx_(std::move(ctx)) {
    if (!ctx_) throw ContextMismatch("null field context");
    c_.assign(ctx_->degree(), 0);
    const long long p = ctx_->characteristic();
    long long r = v % p;
    if (r < 0) r += p;
    c_[0] = static_cast<std::uint32_t>(r);
}

FieldValue::FieldValue(ContextPtr ctx, std::vector<std::uint32_t> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    if (!ctx_) throw ContextMismatch("null field context");
    if (c_.size() > ctx_->degree()) throw std::invalid_argument("too many coefficients for context");
    c_.resize(ctx_->degree(), 0);
    for (auto& x : c_) x %= ctx_->characteristic();
}

void FieldValue::require_same(const FieldValue& rhs) const {
    if (!ctx_ || !rhs.ctx_) throw ContextMismatch("arithmetic on an unset field value");
    if (ctx_ != rhs.ctx_ && !ctx_->same_as(*rhs.ctx_)) throw ContextMismatch();
}

bool FieldValue::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](std::uint32_t x) { return x == 0; });
}

bool FieldValue::is_one() const noexcept {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t x) { return x == 0; });
}

std::optional<std::uint32_t> FieldValue::prime_value() const noexcept {
    if (c_.empty()) return std::nullopt;
    if (!std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t x) { return x == 0; })) return std::nullopt;
    return c_[0];
}

std::uint64_t FieldValue::index() const {
    if (ctx_->size() > u128(~std::uint64_t(0))) throw std::out_of_range("field too large for 64-bit indices");
    std::uint64_t idx = 0;
    for (std::size_t i = c_.size(); i-- > 0;) idx = idx * ctx_->characteristic() + c_[i];
    return idx;
}

FieldValue FieldValue::operator-() const {
    if (!ctx_) throw ContextMismatch("negation of an unset field value");
    FieldValue r = *this;
    const auto p = ctx_->characteristic();
    for (auto& x : r.c_) x = x == 0 ? 0 : p - x;
    return r;
}

FieldValue& FieldValue::operator+=(const FieldValue& rhs) {
    require_same(rhs);
    ctx_->raw_add(c_, rhs.c_, c_);
    return *this;
}

FieldValue& FieldValue::operator-=(const FieldValue& rhs) {
    require_same(rhs);
    ctx_->raw_sub(c_, rhs.c_, c_);
    return *this;
}

FieldValue& FieldValue::operator*=(const FieldValue& rhs) {
    require_same(rhs);
    std::vector<std::uint32_t> out(c_.size());
    ctx_->raw_mul(c_, rhs.c_, out);
    c_ = std::move(out);
    return *this;
}

FieldValue& FieldValue::operator/=(const FieldValue& rhs) {
    require_same(rhs);
    return *this *= rhs.inverse();
}

FieldValue FieldValue::pow(u128 n) const {
    if (!ctx_) throw ContextMismatch("power of an unset field value");
    FieldValue result = ctx_->one();
    FieldValue base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

FieldValue FieldValue::pow_signed(long long n) const {
    if (n >= 0) return pow(static_cast<u128>(n));
    return inverse().pow(static_cast<u128>(-(n + 1)) + 1);
}

FieldValue FieldValue::inverse() const {
    if (!ctx_) throw ContextMismatch("inverse of an unset field value");
    if (is_zero()) throw DivisionByZero();
    return pow(ctx_->size() - 2);
}

FieldValue FieldValue::frobenius() const { return pow(ctx_->characteristic()); }

FieldValue FieldValue::pth_root() const {
    FieldValue r = *this;
    for (std::size_t i = 1; i < ctx_->degree(); ++i) r = r.frobenius();
    return r;
}

std::string FieldValue::to_string() const {
    if (!ctx_) return "<unset>";
    if (auto v = prime_value()) return std::to_string(*v);
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    os << "]";
    return os.str();
}

bool operator==(const FieldValue& a, const FieldValue& b) noexcept {
    if (a.ctx_ != b.ctx_) {
        if (!a.ctx_ || !b.ctx_ || !a.ctx_->same_as(*b.ctx_)) return false;
    }
    return a.c_ == b.c_;
}

// ---------------------------------------------------------------------------

FieldValue lift(const FieldValue& v, const ContextPtr& target) {
    if (!v.has_context() || !target) throw ContextMismatch("lift of an unset value");
    if (v.context()->same_as(*target)) return FieldValue(target, std::vector<std::uint32_t>(v.coefficients().begin(), v.coefficients().end()));
    if (target->is_prime_field()) throw ContextMismatch("cannot lift " + v.context()->describe() + " into " + target->describe());
    FieldValue below = lift(v, target->base());
    std::vector<std::uint32_t> c(target->degree(), 0);
    std::copy(below.coefficients().begin(), below.coefficients().end(), c.begin());
    return FieldValue(target, std::move(c));
}

ContextPtr common_context(const ContextPtr& a, const ContextPtr& b) {
    if (a->contains(*b)) return a;
    if (b->contains(*a)) return b;
    throw ContextMismatch("no common context for " + a->describe() + " and " + b->describe());
}

FieldValue root_of_unity(const ContextPtr& ctx, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("root_of_unity: n must be >= 1");
    const u128 group = ctx->size() - 1;
    if (group % n != 0)
        throw std::invalid_argument("root_of_unity: " + std::to_string(n) + " does not divide " + to_string(group));
    const auto primes = prime_divisors(n);
    const u128 cofactor = group / n;
    const std::uint64_t limit = ctx->size() > u128(1) << 62 ? std::uint64_t(1) << 62 : static_cast<std::uint64_t>(ctx->size());
    for (std::uint64_t i = 1; i < limit; ++i) {
        FieldValue h = ctx->element(i).pow(cofactor);
        bool exact = true;
        for (auto r : primes) {
            if (h.pow(n / r).is_one()) {
                exact = false;
                break;
            }
        }
        if (exact) return h;
    }
    throw std::logic_error("root_of_unity: multiplicative group is not cyclic");
}

u128 multiplicative_order(const FieldValue& v) {
    if (v.is_zero()) throw DivisionByZero();
    u128 order = v.context()->size() - 1;
    // Strip prime factors of the group order while the power stays 1.
    std::vector<u128> primes;
    u128 rest = order;
    for (u128 d = 2; d * d <= rest && d < (u128(1) << 40); ++d) {
        if (rest % d == 0) {
            primes.push_back(d);
            while (rest % d == 0) rest /= d;
        }
    }
    if (rest > 1) primes.push_back(rest);
    for (auto r : primes)
        while (order % r == 0 && v.pow(order / r).is_one()) order /= r;
    return order;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(ContextPtr ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), e_(rows * cols, ctx_->zero()) {}

Matrix Matrix::identity(ContextPtr ctx, std::size_t n) {
    Matrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ctx->one();
    return m;
}

Matrix Matrix::from_rows(ContextPtr ctx, const std::vector<std::vector<FieldValue>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    Matrix m(ctx, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("matrix rows must have equal length");
        for (std::size_t j = 0; j < c; ++j) {
            if (!rows[i][j].has_context() || !rows[i][j].context()->same_as(*ctx)) throw ContextMismatch();
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

Matrix Matrix::from_ints(ContextPtr ctx, const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<FieldValue>> v;
    for (const auto& row : rows) {
        v.emplace_back();
        for (auto x : row) v.back().push_back(ctx->from_int(x));
    }
    return from_rows(ctx, v);
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix out(ctx_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if ((*this)(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += (*this)(i, k) * rhs(k, j);
        }
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] -= rhs.e_[i];
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] += rhs.e_[i];
    return out;
}

Matrix Matrix::scaled(const FieldValue& s) const {
    Matrix out = *this;
    for (auto& x : out.e_) x *= s;
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && e_ == rhs.e_;
}

Matrix Matrix::transpose() const {
    Matrix out(ctx_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Matrix Matrix::frobenius() const {
    Matrix out = *this;
    for (auto& x : out.e_) x = x.frobenius();
    return out;
}

FieldValue Matrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
    Matrix a = *this;
    FieldValue det = ctx_->one();
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t piv = col;
        while (piv < rows_ && a(piv, col).is_zero()) ++piv;
        if (piv == rows_) return ctx_->zero();
        if (piv != col) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(a(piv, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        const FieldValue inv = a(col, col).inverse();
        for (std::size_t i = col + 1; i < rows_; ++i) {
            if (a(i, col).is_zero()) continue;
            const FieldValue f = a(i, col) * inv;
            for (std::size_t j = col; j < cols_; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = rows_;
    Matrix aug(ctx_, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
        aug(i, n + i) = ctx_->one();
    }
    auto pivots = row_reduce(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw DivisionByZero();
    Matrix out(ctx_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

Matrix Matrix::lifted(const ContextPtr& target) const {
    Matrix out(target, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = lift(e_[i], target);
    return out;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        const FieldValue inv = m(row, col).inverse();
        for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const FieldValue f = m(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(const Matrix& m) {
    Matrix a = m;
    return row_reduce(a).size();
}

std::vector<std::vector<FieldValue>> kernel(const Matrix& m) {
    Matrix a = m;
    const auto pivots = row_reduce(a);
    const auto& ctx = m.context();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldValue>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldValue> v(m.cols(), ctx->zero());
        v[free] = ctx->one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace k3w
