#pragma once

#include "picard/rational.hpp"

#include <memory>
#include <ostream>
#include <stdexcept>

namespace picard {

/// Context for the imaginary quadratic field Q(sqrt(d)), d < 0 squarefree.
///
/// D is the field discriminant (d when d = 1 mod 4, else 4d), delta = sqrt(D)
/// normalized by delta^2 = D, and omega generates the ring of integers:
/// omega = (1+sqrt(d))/2 when d = 1 mod 4, omega = sqrt(d) otherwise.
class FieldCtx {
public:
    explicit FieldCtx(long d) : d_(d) {
        if (d >= 0) throw std::invalid_argument("d must be negative");
        long m = -d;
        for (long f = 2; f * f <= m; ++f)
            if (m % (f * f) == 0) throw std::invalid_argument("d must be squarefree");
        d_mod4_is_1_ = ((d % 4 + 4) % 4) == 1;
        D_ = d_mod4_is_1_ ? d : 4 * d;
    }

    long d() const { return d_; }
    long D() const { return D_; }
    bool d_is_1_mod_4() const { return d_mod4_is_1_; }

    bool operator==(const FieldCtx& o) const { return d_ == o.d_; }
    bool operator!=(const FieldCtx& o) const { return d_ != o.d_; }

private:
    long d_;
    long D_;
    bool d_mod4_is_1_;
};

/// Exact element a + b*sqrt(d) of Q(sqrt(d)).
class KElem {
public:
    KElem() : ctx_(nullptr) {}
    KElem(const FieldCtx& ctx, Rational a, Rational b)
        : ctx_(&ctx), a_(std::move(a)), b_(std::move(b)) {}
    KElem(const FieldCtx& ctx, long a) : ctx_(&ctx), a_(a), b_(0) {}

    static KElem zero(const FieldCtx& ctx) { return KElem(ctx, 0); }
    static KElem one(const FieldCtx& ctx) { return KElem(ctx, 1); }
    /// sqrt(D): the generator of the different, delta^2 = D.
    static KElem delta(const FieldCtx& ctx) {
        return KElem(ctx, Rational(0), ctx.d_is_1_mod_4() ? Rational(1) : Rational(2));
    }
    /// omega, with {1, omega} a Z-basis of O_K.
    static KElem omega(const FieldCtx& ctx) {
        if (ctx.d_is_1_mod_4()) return KElem(ctx, Rational(1, 2), Rational(1, 2));
        return KElem(ctx, Rational(0), Rational(1));
    }
    static KElem sqrt_d(const FieldCtx& ctx) { return KElem(ctx, Rational(0), Rational(1)); }

    const FieldCtx& ctx() const {
        if (!ctx_) throw std::logic_error("KElem without context");
        return *ctx_;
    }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    KElem operator+(const KElem& o) const { check(o); return KElem(*ctx_, a_ + o.a_, b_ + o.b_); }
    KElem operator-(const KElem& o) const { check(o); return KElem(*ctx_, a_ - o.a_, b_ - o.b_); }
    KElem operator-() const { return KElem(*ctx_, -a_, -b_); }
    KElem operator*(const KElem& o) const {
        check(o);
        return KElem(*ctx_, a_ * o.a_ + b_ * o.b_ * ctx_->d(), a_ * o.b_ + b_ * o.a_);
    }
    KElem operator*(const Rational& c) const { return KElem(*ctx_, a_ * c, b_ * c); }

    KElem conj() const { return KElem(*ctx_, a_, -b_); }

    /// x * conj(x), a nonnegative rational, zero iff x = 0.
    Rational norm() const { return a_ * a_ - b_ * b_ * ctx_->d(); }
    Rational trace() const { return 2 * a_; }

    KElem inv() const {
        if (is_zero()) throw std::domain_error("division by zero in K");
        Rational n = norm();
        return KElem(*ctx_, a_ / n, -b_ / n);
    }
    KElem operator/(const KElem& o) const { return *this * o.inv(); }

    bool operator==(const KElem& o) const { return a_ == o.a_ && b_ == o.b_ && ctx_->d() == o.ctx_->d(); }
    bool operator!=(const KElem& o) const { return !(*this == o); }

    /// Membership in O_K = Z + Z*omega.
    bool is_integral() const {
        if (ctx_->d_is_1_mod_4())
            return is_integer(2 * b_) && is_integer(a_ - b_);
        return is_integer(a_) && is_integer(b_);
    }

    /// Coordinates (x, y) with value = x + y*omega.
    std::pair<Rational, Rational> omega_coords() const {
        if (ctx_->d_is_1_mod_4()) return {a_ - b_, 2 * b_};
        return {a_, b_};
    }
    static KElem from_omega_coords(const FieldCtx& ctx, const Rational& x, const Rational& y) {
        return KElem(ctx, x, Rational(0)) + omega(ctx) * y;
    }

    friend std::ostream& operator<<(std::ostream& os, const KElem& x) {
        os << rat_to_string(x.a_);
        if (x.b_ != 0) os << (x.b_ > 0 ? "+" : "") << rat_to_string(x.b_) << "*sqrt(" << x.ctx_->d() << ")";
        return os;
    }

private:
    void check(const KElem& o) const {
        if (!ctx_ || !o.ctx_ || ctx_->d() != o.ctx_->d())
            throw std::invalid_argument("KElem context mismatch");
    }
    const FieldCtx* ctx_;
    Rational a_, b_;
};

inline KElem k_conj(const KElem& x) { return x.conj(); }

/// Im_delta(x) = (x - conj(x)) / delta, an exact rational; zero iff x is rational.
inline Rational im_delta(const KElem& x) {
    KElem num = x - x.conj();
    KElem q = num / KElem::delta(x.ctx());
    if (!q.is_rational()) throw std::logic_error("im_delta produced irrational value");
    return q.a();
}

} // namespace picard
