#pragma once

#include "picard/fq.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace picard {

/// Weight-graded truncated Fourier-Jacobi expansion. Coefficients c_0..c_T
/// are univariate polynomials over F_{p^2} (standing in for theta sections);
/// multiplication is graded convolution, weights add, the truncation order
/// of a product is the minimum of the operands'.
class QExpansion {
public:
    QExpansion(const FqCtx& ctx, long N, long M, long weight, std::vector<FqPoly> coeffs)
        : ctx_(&ctx), N_(N), M_(M), weight_(weight), c_(std::move(coeffs)) {
        if (M_ % ctx.p() == 0) throw std::invalid_argument("p divides the cusp width M");
        if (c_.empty()) throw std::invalid_argument("empty coefficient list");
    }

    static QExpansion zero(const FqCtx& ctx, long N, long M, long weight, long trunc) {
        return QExpansion(ctx, N, M, weight, std::vector<FqPoly>(trunc + 1, FqPoly(ctx)));
    }

    const FqCtx& ctx() const { return *ctx_; }
    long N() const { return N_; }
    long M() const { return M_; }
    long weight() const { return weight_; }
    long trunc() const { return static_cast<long>(c_.size()) - 1; }
    const FqPoly& coeff(long m) const { return c_.at(m); }
    const std::vector<FqPoly>& coeffs() const { return c_; }

    bool same_parameters(const QExpansion& o) const {
        return ctx_->p() == o.ctx_->p() && ctx_->d() == o.ctx_->d() && N_ == o.N_ && M_ == o.M_;
    }

    QExpansion operator+(const QExpansion& o) const {
        require_compatible(o);
        if (weight_ != o.weight_) throw std::invalid_argument("adding different weights");
        long T = std::min(trunc(), o.trunc());
        std::vector<FqPoly> r;
        for (long m = 0; m <= T; ++m) r.push_back(c_[m] + o.c_[m]);
        return QExpansion(*ctx_, N_, M_, weight_, std::move(r));
    }

    QExpansion operator*(const QExpansion& o) const {
        require_compatible(o);
        long T = std::min(trunc(), o.trunc());
        std::vector<FqPoly> r(T + 1, FqPoly(*ctx_));
        for (long m = 0; m <= T; ++m)
            for (long i = 0; i <= m; ++i) r[m] = r[m] + c_[i] * o.c_[m - i];
        return QExpansion(*ctx_, N_, M_, weight_ + o.weight_, std::move(r));
    }

    QExpansion scale(const FqElem& s) const {
        std::vector<FqPoly> r = c_;
        for (auto& x : r) x = x * s;
        return QExpansion(*ctx_, N_, M_, weight_, std::move(r));
    }

    bool coefficients_equal(const QExpansion& o) const {
        if (trunc() != o.trunc()) return false;
        for (long m = 0; m <= trunc(); ++m)
            if (!(c_[m] == o.c_[m])) return false;
        return true;
    }

    bool is_zero() const {
        for (auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

private:
    void require_compatible(const QExpansion& o) const {
        if (!same_parameters(o)) throw std::invalid_argument("expansion parameter mismatch");
    }
    const FqCtx* ctx_;
    long N_, M_, weight_;
    std::vector<FqPoly> c_;
};

/// Theta operator on expansions: weight k -> k + p + 1 and
/// c_m -> M^{-1} * (m mod p) * c_m. The constant term dies: the image is a
/// cusp form.
inline QExpansion theta(const QExpansion& f) {
    const FqCtx& ctx = f.ctx();
    long p = ctx.p();
    long Minv = FqCtx::pow_mod(((f.M() % p) + p) % p, p - 2, p);
    std::vector<FqPoly> r;
    for (long m = 0; m <= f.trunc(); ++m)
        r.push_back(f.coeff(m) * FqElem(ctx, Minv * (m % p)));
    return QExpansion(ctx, f.N(), f.M(), f.weight() + p + 1, std::move(r));
}

inline QExpansion theta_iter(const QExpansion& f, long t) {
    if (t < 0) throw std::invalid_argument("iteration count must be >= 0");
    QExpansion g = f;
    for (long i = 0; i < t; ++i) g = theta(g);
    return g;
}

/// Whether every coefficient in a degree divisible by p vanishes (the
/// expansion-side signature of the theta image).
inline bool is_theta_image(const QExpansion& f) {
    for (long m = 0; m <= f.trunc(); m += f.ctx().p())
        if (!f.coeff(m).is_zero()) return false;
    return true;
}

/// Exact Leibniz identity theta(fg) = f theta(g) + theta(f) g up to the
/// common truncation.
inline bool derivation_check(const QExpansion& f, const QExpansion& g) {
    if (!f.same_parameters(g)) throw std::invalid_argument("expansion parameter mismatch");
    QExpansion lhs = theta(f * g);
    QExpansion rhs = (f * theta(g)) + (theta(f) * g);
    return lhs.coefficients_equal(rhs) && lhs.weight() == rhs.weight();
}

/// Expansion together with its order of vanishing along the supersingular
/// locus (supplied as data; the engine validates consistency).
struct MockForm {
    QExpansion expansion;
    long ss_order; // n >= 0

    MockForm(QExpansion e, long n) : expansion(std::move(e)), ss_order(n) {
        if (n < 0) throw std::invalid_argument("ss_order must be >= 0");
    }
};

/// Filtration omega = k - n (p^2 - 1); errors on inconsistent mock data.
inline long filtration(const MockForm& mf) {
    long p = mf.expansion.ctx().p();
    long omega = mf.expansion.weight() - mf.ss_order * (p * p - 1);
    if (omega < 0) throw std::invalid_argument("negative filtration (inconsistent ss_order)");
    return omega;
}

/// The m-th power MockForm and its filtration m * omega(f).
inline MockForm mock_power(const MockForm& mf, long m) {
    if (m < 1) throw std::invalid_argument("power must be >= 1");
    QExpansion e = mf.expansion;
    for (long i = 1; i < m; ++i) e = e * mf.expansion;
    return MockForm(e, m * mf.ss_order);
}
inline long filtration_power(const MockForm& mf, long m) { return filtration(mock_power(mf, m)); }

/// The Hasse element: weight p^2 - 1, expansion identically 1, vanishing
/// order 1 along the supersingular locus. Its filtration is 0 and theta
/// kills it.
inline MockForm hasse_element(const FqCtx& ctx, long N, long M, long trunc) {
    std::vector<FqPoly> c(trunc + 1, FqPoly(ctx));
    c[0] = FqPoly::constant(FqElem::one(ctx));
    return MockForm(QExpansion(ctx, N, M, ctx.p() * ctx.p() - 1, std::move(c)), 1);
}

/// Weight sequence of one theta cycle: p-1 filtration values starting at
/// omega_low, incremented by p+1 except for a single drop of p+1-(p^2-1) at
/// the given index; the increments sum to zero, closing the cycle.
struct CycleSpec {
    long p;
    long omega_low;
    long drop_index; // in [0, p-2]
};

inline std::vector<long> theta_cycle(const CycleSpec& spec) {
    long p = spec.p;
    if (spec.drop_index < 0 || spec.drop_index > p - 2)
        throw std::invalid_argument("drop index out of range");
    std::vector<long> w{spec.omega_low};
    for (long i = 0; i + 1 <= p - 2; ++i) {
        long inc = p + 1 - (i == spec.drop_index ? p * p - 1 : 0);
        long next = w.back() + inc;
        if (next < 0) throw std::invalid_argument("cycle leaves nonnegative weights");
        w.push_back(next);
    }
    // closure: the final increment returns to omega_low
    long last_inc = p + 1 - (p - 2 == spec.drop_index ? p * p - 1 : 0);
    if (w.back() + last_inc != spec.omega_low) throw std::logic_error("theta cycle fails to close");
    return w;
}

/// For k < p+1 the drop sits at the last step i = p-2, and the pre-drop
/// weight k + (p-2)(p+1) is congruent to k-2 mod p.
inline long low_weight_drop(long k, long p) {
    if (k < 0 || k >= p + 1) throw std::invalid_argument("requires 0 <= k < p+1");
    long i = p - 2;
    long pre_drop = k + (p - 2) * (p + 1);
    if (((pre_drop - (k - 2)) % p + p) % p != 0) throw std::logic_error("pre-drop congruence failed");
    return i;
}

struct CycleViolation {
    long index;
    std::string what;
};

/// Validate an observed cycle of (filtration weight, ss_order) pairs of
/// length p-1: successive steps gain p+1, except exactly one step (counting
/// the wrap-around) where the ss_order jumps by one and the weight drops by
/// p^2-1-(p+1) ... i.e. gains p+1-(p^2-1). Violations are data, not errors.
inline std::vector<CycleViolation> cycle_validate(long p, const std::vector<std::pair<long, long>>& observed) {
    std::vector<CycleViolation> bad;
    if (static_cast<long>(observed.size()) != p - 1) {
        bad.push_back({-1, "expected p-1 entries"});
        return bad;
    }
    long n = p - 1;
    std::vector<long> drop_at;
    for (long i = 0; i < n; ++i) {
        long w = observed[i].first, ord = observed[i].second;
        // wrap: theta^{p-1} has the same expansion, one more Hasse factor
        long w_next = (i + 1 < n) ? observed[i + 1].first : observed[0].first;
        long ord_next = (i + 1 < n) ? observed[i + 1].second : observed[0].second + 1;
        long jump = ord_next - ord;
        if (jump != 0 && jump != 1) {
            bad.push_back({i, "ss_order jump must be 0 or 1"});
            continue;
        }
        long expect = w + (p + 1) - jump * (p * p - 1);
        if (w_next != expect)
            bad.push_back({i, "weight step " + std::to_string(w_next - w) + " inconsistent with ss_order jump"});
        if (jump == 1) drop_at.push_back(i);
    }
    if (drop_at.empty())
        bad.push_back({-1, "no drop: the weights cannot close"});
    else if (drop_at.size() > 1)
        for (long i : drop_at) bad.push_back({i, "one of " + std::to_string(drop_at.size()) + " drops (must be unique)"});
    return bad;
}

/// Classical operator on plain q-series: a_n -> n a_n.
inline std::vector<FqElem> classical_theta(const std::vector<FqElem>& series) {
    std::vector<FqElem> out;
    for (size_t n = 0; n < series.size(); ++n)
        out.push_back(series[n] * FqElem(series[n].ctx(), static_cast<long>(n % series[n].ctx().p())));
    return out;
}

/// On the elliptic side a drop is possible only when omega = 0 mod p.
inline bool elliptic_drop_rule(long omega, long p) { return ((omega % p) + p) % p == 0; }

/// Restriction compatibility: taking constant terms of the theta-section
/// coefficients commutes with the M^{-1}-normalized operators. Requires all
/// coefficients constant.
inline bool compat_check(const QExpansion& f) {
    const FqCtx& ctx = f.ctx();
    long p = ctx.p();
    for (long m = 0; m <= f.trunc(); ++m)
        if (!f.coeff(m).is_constant())
            throw std::invalid_argument("compat_check requires constant coefficients");
    std::vector<FqElem> restricted;
    for (long m = 0; m <= f.trunc(); ++m) restricted.push_back(f.coeff(m).constant_term());
    std::vector<FqElem> rhs = classical_theta(restricted);
    FqElem Minv = FqElem(ctx, FqCtx::pow_mod(((f.M() % p) + p) % p, p - 2, p));
    QExpansion tf = theta(f);
    for (long m = 0; m <= f.trunc(); ++m)
        if (!(tf.coeff(m).constant_term() == Minv * rhs[m])) return false;
    return true;
}

/// The factor Sigma-bar(gamma)^k = gamma^{pk} by which Delta(p) moves f/a^k;
/// trivial exactly when p^2-1 divides k.
inline FqElem weight_char(long k, const FqElem& gamma) {
    if (gamma.is_zero()) throw std::domain_error("character argument must be a unit");
    long p = gamma.ctx().p();
    long m = p * p - 1;
    long e = static_cast<long>(((static_cast<long long>(p) * k) % m + m) % m);
    return gamma.pow(e);
}

} // namespace picard
