#pragma once

#include "picard/qfield.hpp"

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace picard {

/// Context for F_{p^2} = F_p[x]/(x^2 - d), p an odd prime inert in Q(sqrt(d)).
///
/// This is the residue field O_K/p with no choice of embedding: the identity
/// embedding is Sigma and the p-power Frobenius is Sigma-bar.
class FqCtx {
public:
    FqCtx(long p, long d) : p_(p), d_(((d % p) + p) % p), d_int_(d) {
        if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
        if (d_ == 0) throw std::invalid_argument("p divides d");
        // inert <=> d is a quadratic non-residue mod p
        if (pow_mod(d_, (p - 1) / 2, p) != p - 1)
            throw std::invalid_argument("p is not inert (d is a residue mod p)");
    }

    long p() const { return p_; }
    long d_mod_p() const { return d_; }
    long d() const { return d_int_; }
    long q() const { return p_ * p_; }

    bool operator==(const FqCtx& o) const { return p_ == o.p_ && d_int_ == o.d_int_; }
    bool operator!=(const FqCtx& o) const { return !(*this == o); }

    static bool is_prime(long n) {
        if (n < 2) return false;
        for (long f = 2; f * f <= n; ++f)
            if (n % f == 0) return false;
        return true;
    }
    static long pow_mod(long base, long e, long m) {
        long r = 1 % m;
        base = ((base % m) + m) % m;
        while (e > 0) {
            if (e & 1) r = r * base % m;
            base = base * base % m;
            e >>= 1;
        }
        return r;
    }

private:
    long p_, d_, d_int_;
};

/// Element c0 + c1*s of F_{p^2}, with s^2 = d.
class FqElem {
public:
    FqElem() : ctx_(nullptr), c0_(0), c1_(0) {}
    FqElem(const FqCtx& ctx, long c0, long c1 = 0)
        : ctx_(&ctx), c0_(mod(c0, ctx.p())), c1_(mod(c1, ctx.p())) {}

    static FqElem zero(const FqCtx& ctx) { return FqElem(ctx, 0); }
    static FqElem one(const FqCtx& ctx) { return FqElem(ctx, 1); }
    static FqElem gen_s(const FqCtx& ctx) { return FqElem(ctx, 0, 1); }

    const FqCtx& ctx() const {
        if (!ctx_) throw std::logic_error("FqElem without context");
        return *ctx_;
    }
    long c0() const { return c0_; }
    long c1() const { return c1_; }
    bool is_zero() const { return c0_ == 0 && c1_ == 0; }
    bool in_prime_field() const { return c1_ == 0; }

    FqElem operator+(const FqElem& o) const { chk(o); return FqElem(*ctx_, c0_ + o.c0_, c1_ + o.c1_); }
    FqElem operator-(const FqElem& o) const { chk(o); return FqElem(*ctx_, c0_ - o.c0_ + ctx_->p(), c1_ - o.c1_ + ctx_->p()); }
    FqElem operator-() const { return FqElem(*ctx_, ctx_->p() - c0_, ctx_->p() - c1_); }
    FqElem operator*(const FqElem& o) const {
        chk(o);
        long p = ctx_->p(), d = ctx_->d_mod_p();
        return FqElem(*ctx_, (c0_ * o.c0_ + c1_ * o.c1_ % p * d) % p, (c0_ * o.c1_ + c1_ * o.c0_) % p);
    }

    FqElem pow(long e) const {
        if (e < 0) return inv().pow(-e);
        FqElem r = one(*ctx_), x = *this;
        while (e > 0) {
            if (e & 1) r = r * x;
            x = x * x;
            e >>= 1;
        }
        return r;
    }

    /// Norm to F_p: x * x^p = c0^2 - d*c1^2.
    long norm() const {
        long p = ctx_->p(), d = ctx_->d_mod_p();
        return mod(c0_ * c0_ - c1_ * c1_ % p * d, p);
    }

    FqElem inv() const {
        if (is_zero()) throw std::domain_error("division by zero in F_q");
        long n_inv = FqCtx::pow_mod(norm(), ctx_->p() - 2, ctx_->p());
        return conj() * FqElem(*ctx_, n_inv);
    }
    FqElem operator/(const FqElem& o) const { return *this * o.inv(); }

    /// Conjugation c0 + c1*s -> c0 - c1*s; equals the p-power Frobenius.
    FqElem conj() const { return FqElem(*ctx_, c0_, ctx_->p() - c1_); }
    /// The p-power Frobenius x -> x^p (Sigma-bar).
    FqElem frobenius() const { return conj(); }

    bool operator==(const FqElem& o) const { return c0_ == o.c0_ && c1_ == o.c1_ && ctx_->p() == o.ctx_->p(); }
    bool operator!=(const FqElem& o) const { return !(*this == o); }

    friend std::ostream& operator<<(std::ostream& os, const FqElem& x) {
        os << x.c0_;
        if (x.c1_ != 0) os << "+" << x.c1_ << "s";
        return os;
    }

    /// All q elements, in a fixed order.
    static std::vector<FqElem> all(const FqCtx& ctx) {
        std::vector<FqElem> out;
        out.reserve(ctx.q());
        for (long a = 0; a < ctx.p(); ++a)
            for (long b = 0; b < ctx.p(); ++b) out.push_back(FqElem(ctx, a, b));
        return out;
    }

private:
    static long mod(long v, long p) { return ((v % p) + p) % p; }
    void chk(const FqElem& o) const {
        if (ctx_->p() != o.ctx_->p() || ctx_->d_mod_p() != o.ctx_->d_mod_p())
            throw std::invalid_argument("FqElem context mismatch");
    }
    const FqCtx* ctx_;
    long c0_, c1_;
};

/// Sigma-bar on the residue field: x -> x^p. Fixes exactly F_p, order 2.
inline FqElem sigma_bar(const FqElem& x) { return x.frobenius(); }

/// Reduction O_K -> F_{p^2} = F_p[x]/(x^2-d). Requires x integral and p inert.
inline FqElem fq_reduce(const KElem& x, const FqCtx& ctx) {
    if (x.ctx().d() != ctx.d()) throw std::invalid_argument("field context mismatch");
    if (!x.is_integral()) throw std::invalid_argument("element is not integral");
    long p = ctx.p();
    auto red = [&](const Rational& r) {
        Int den = rat_den(r);
        if (den % p == 0) throw std::invalid_argument("denominator divisible by p");
        long num = static_cast<long>(rat_num(r) % p);
        long dn = static_cast<long>(den % p);
        return (num % p + p) % p * FqCtx::pow_mod(dn, p - 2, p) % p;
    };
    return FqElem(ctx, red(x.a()), red(x.b()));
}

/// Univariate polynomial over F_{p^2}, dense coefficients c[0] + c[1] t + ...
class FqPoly {
public:
    explicit FqPoly(const FqCtx& ctx) : ctx_(&ctx) {}
    FqPoly(const FqCtx& ctx, std::vector<FqElem> coeffs) : ctx_(&ctx), c_(std::move(coeffs)) { trim(); }
    static FqPoly constant(const FqElem& x) {
        FqPoly f(x.ctx());
        if (!x.is_zero()) f.c_ = {x};
        return f;
    }

    const FqCtx& ctx() const { return *ctx_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<FqElem>& coeffs() const { return c_; }
    FqElem coeff(size_t i) const { return i < c_.size() ? c_[i] : FqElem::zero(*ctx_); }
    bool is_constant() const { return c_.size() <= 1; }
    FqElem constant_term() const { return coeff(0); }

    FqPoly operator+(const FqPoly& o) const {
        std::vector<FqElem> r(std::max(c_.size(), o.c_.size()), FqElem::zero(*ctx_));
        for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return FqPoly(*ctx_, std::move(r));
    }
    FqPoly operator-(const FqPoly& o) const {
        std::vector<FqElem> r(std::max(c_.size(), o.c_.size()), FqElem::zero(*ctx_));
        for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
        return FqPoly(*ctx_, std::move(r));
    }
    FqPoly operator*(const FqPoly& o) const {
        if (is_zero() || o.is_zero()) return FqPoly(*ctx_);
        std::vector<FqElem> r(c_.size() + o.c_.size() - 1, FqElem::zero(*ctx_));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        return FqPoly(*ctx_, std::move(r));
    }
    FqPoly operator*(const FqElem& s) const {
        std::vector<FqElem> r = c_;
        for (auto& x : r) x = x * s;
        return FqPoly(*ctx_, std::move(r));
    }

    /// Formal derivative (coefficient l reduced mod p).
    FqPoly derivative() const {
        if (c_.size() <= 1) return FqPoly(*ctx_);
        std::vector<FqElem> r(c_.size() - 1, FqElem::zero(*ctx_));
        for (size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * FqElem(*ctx_, static_cast<long>(i % ctx_->p()));
        return FqPoly(*ctx_, std::move(r));
    }

    bool operator==(const FqPoly& o) const { return c_ == o.c_; }
    bool operator!=(const FqPoly& o) const { return !(*this == o); }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    const FqCtx* ctx_;
    std::vector<FqElem> c_;
};

} // namespace picard
