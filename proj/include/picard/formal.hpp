#pragma once

#include "picard/qfield.hpp"

#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace picard {

/// Polynomial in the formal variables z, u with K-coefficients, carrying an
/// integer grade g that stands for an overall factor (2 pi i)^g. No relation
/// is ever imposed on the symbol. Grades add under multiplication; addition
/// requires equal grades (zero adapts to anything).
class FormalScalar {
public:
    explicit FormalScalar(const FieldCtx& ctx) : ctx_(&ctx), grade_(0) {}
    FormalScalar(const FieldCtx& ctx, const KElem& c, int grade = 0) : ctx_(&ctx), grade_(grade) {
        if (!c.is_zero()) terms_[{0, 0}] = c;
        normalize();
    }
    static FormalScalar variable_z(const FieldCtx& ctx) {
        FormalScalar f(ctx);
        f.terms_[{1, 0}] = KElem::one(ctx);
        return f;
    }
    static FormalScalar variable_u(const FieldCtx& ctx) {
        FormalScalar f(ctx);
        f.terms_[{0, 1}] = KElem::one(ctx);
        return f;
    }
    static FormalScalar constant(const KElem& c, int grade = 0) { return FormalScalar(c.ctx(), c, grade); }
    static FormalScalar two_pi_i(const FieldCtx& ctx, int power) {
        return FormalScalar(ctx, KElem::one(ctx), power);
    }

    const FieldCtx& ctx() const { return *ctx_; }
    int grade() const { return grade_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant_in_zu() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == std::make_pair(0, 0)); }

    KElem coeff(int dz, int du) const {
        auto it = terms_.find({dz, du});
        return it == terms_.end() ? KElem::zero(*ctx_) : it->second;
    }

    FormalScalar operator+(const FormalScalar& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (grade_ != o.grade_) throw std::logic_error("adding formal scalars of different 2*pi*i grades");
        FormalScalar r = *this;
        for (auto& [k, v] : o.terms_) {
            auto it = r.terms_.find(k);
            if (it == r.terms_.end()) r.terms_[k] = v;
            else it->second = it->second + v;
        }
        r.normalize();
        return r;
    }
    FormalScalar operator-() const {
        FormalScalar r = *this;
        for (auto& [k, v] : r.terms_) v = -v;
        return r;
    }
    FormalScalar operator-(const FormalScalar& o) const { return *this + (-o); }
    FormalScalar operator*(const FormalScalar& o) const {
        FormalScalar r(*ctx_);
        r.grade_ = grade_ + o.grade_;
        for (auto& [k1, v1] : terms_)
            for (auto& [k2, v2] : o.terms_) {
                std::pair<int, int> k{k1.first + k2.first, k1.second + k2.second};
                auto it = r.terms_.find(k);
                if (it == r.terms_.end()) r.terms_[k] = v1 * v2;
                else it->second = it->second + v1 * v2;
            }
        r.normalize();
        return r;
    }
    FormalScalar operator*(const KElem& c) const { return *this * FormalScalar(*ctx_, c); }
    FormalScalar operator*(const Rational& c) const {
        return *this * FormalScalar(*ctx_, KElem(*ctx_, c, Rational(0)));
    }

    FormalScalar d_dz() const {
        FormalScalar r(*ctx_);
        r.grade_ = grade_;
        for (auto& [k, v] : terms_)
            if (k.first > 0) r.terms_[{k.first - 1, k.second}] = v * Rational(k.first);
        r.normalize();
        return r;
    }
    FormalScalar d_du() const {
        FormalScalar r(*ctx_);
        r.grade_ = grade_;
        for (auto& [k, v] : terms_)
            if (k.second > 0) r.terms_[{k.first, k.second - 1}] = v * Rational(k.second);
        r.normalize();
        return r;
    }

    /// Exact evaluation at a K-point; only meaningful for grade 0.
    KElem eval(const KElem& z0, const KElem& u0) const {
        if (grade_ != 0 && !is_zero()) throw std::logic_error("evaluating a graded formal scalar");
        KElem s = KElem::zero(*ctx_);
        for (auto& [k, v] : terms_) {
            KElem t = v;
            for (int i = 0; i < k.first; ++i) t = t * z0;
            for (int i = 0; i < k.second; ++i) t = t * u0;
            s = s + t;
        }
        return s;
    }

    bool operator==(const FormalScalar& o) const {
        if (is_zero() && o.is_zero()) return true;
        return grade_ == o.grade_ && terms_ == o.terms_;
    }
    bool operator!=(const FormalScalar& o) const { return !(*this == o); }

    friend std::ostream& operator<<(std::ostream& os, const FormalScalar& f) {
        if (f.is_zero()) { os << "0"; return os; }
        bool first = true;
        for (auto& [k, v] : f.terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << v << ")";
            if (k.first) os << "*z^" << k.first;
            if (k.second) os << "*u^" << k.second;
        }
        if (f.grade_ != 0) os << " * (2pi*i)^" << f.grade_;
        return os;
    }

private:
    void normalize() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
        if (terms_.empty()) grade_ = 0;
    }
    const FieldCtx* ctx_;
    int grade_;
    std::map<std::pair<int, int>, KElem> terms_;
};

/// A dz + B du with formal-scalar coefficients.
struct OneForm {
    FormalScalar dz_coef, du_coef;

    OneForm(FormalScalar dz, FormalScalar du) : dz_coef(std::move(dz)), du_coef(std::move(du)) {}
    static OneForm dz(const FieldCtx& ctx) {
        return OneForm(FormalScalar(ctx, KElem::one(ctx)), FormalScalar(ctx));
    }
    static OneForm du(const FieldCtx& ctx) {
        return OneForm(FormalScalar(ctx), FormalScalar(ctx, KElem::one(ctx)));
    }
    OneForm operator+(const OneForm& o) const { return OneForm(dz_coef + o.dz_coef, du_coef + o.du_coef); }
    OneForm operator*(const FormalScalar& s) const { return OneForm(dz_coef * s, du_coef * s); }
    bool operator==(const OneForm& o) const { return dz_coef == o.dz_coef && du_coef == o.du_coef; }
};

/// Exterior derivative of a formal scalar.
inline OneForm exterior_d(const FormalScalar& f) { return OneForm(f.d_dz(), f.d_du()); }

} // namespace picard
