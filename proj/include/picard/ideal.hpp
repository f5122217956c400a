#pragma once

#include "picard/qfield.hpp"

#include <array>
#include <optional>
#include <vector>

namespace picard {

/// Fractional ideal of O_K, stored as a rank-2 Z-module in canonical
/// Hermite-reduced form with respect to the basis (1, omega).
///
/// Internal form: (1/den) * ( Z*(g1, 0) + Z*(x0, g2) ) in (1,omega)
/// coordinates, with g1, g2 > 0, 0 <= x0 < g1 and gcd(den, g1, g2, x0)
/// content-reduced. O_K-stability is enforced at construction.
class FracIdeal {
public:
    /// Z-span of the given elements (must be O_K-stable and of full rank 2).
    static FracIdeal from_zbasis(const FieldCtx& ctx, const std::vector<KElem>& gens) {
        FracIdeal I = reduce(ctx, gens);
        KElem w = KElem::omega(ctx);
        for (const KElem& v : I.zbasis())
            if (!I.contains(w * v))
                throw std::invalid_argument("Z-module is not O_K-stable");
        return I;
    }

    /// Principal ideal g*O_K.
    static FracIdeal principal(const KElem& g) {
        if (g.is_zero()) throw std::invalid_argument("zero ideal");
        return from_zbasis(g.ctx(), {g, KElem::omega(g.ctx()) * g});
    }

    static FracIdeal ring_of_integers(const FieldCtx& ctx) {
        return principal(KElem::one(ctx));
    }

    const FieldCtx& ctx() const { return *ctx_; }

    std::array<KElem, 2> zbasis() const {
        Rational d(den_);
        return {KElem::from_omega_coords(*ctx_, Rational(g1_) / d, Rational(0)),
                KElem::from_omega_coords(*ctx_, Rational(x0_) / d, Rational(g2_) / d)};
    }

    /// Exact membership test by rational linear solve against the basis.
    bool contains(const KElem& x) const {
        if (x.ctx() != *ctx_) throw std::invalid_argument("context mismatch");
        auto [cx, cy] = x.omega_coords();
        // x = s*(g1,0)/den + t*(x0,g2)/den
        Rational t = cy * den_ / g2_;
        if (!is_integer(t)) return false;
        Rational s = (cx * den_ - t * x0_) / g1_;
        return is_integer(s);
    }

    FracIdeal conj() const {
        auto b = zbasis();
        return from_zbasis(*ctx_, {b[0].conj(), b[1].conj()});
    }

    FracIdeal mul(const FracIdeal& J) const {
        if (*ctx_ != J.ctx()) throw std::invalid_argument("context mismatch");
        auto a = zbasis();
        auto b = J.zbasis();
        std::vector<KElem> prods;
        for (const KElem& x : a)
            for (const KElem& y : b) prods.push_back(x * y);
        return from_zbasis(*ctx_, prods);
    }

    /// Covolume relative to O_K; for a fractional ideal this is its norm.
    Rational ideal_norm() const {
        return Rational(Int(g1_) * Int(g2_)) / (Rational(den_) * den_);
    }

    /// Inverse, via I * conj(I) = N(I) O_K; the identity I * inv(I) = O_K
    /// is re-verified and failure reported as an error.
    FracIdeal inv() const {
        Rational n = ideal_norm();
        auto cb = conj().zbasis();
        FracIdeal result = from_zbasis(*ctx_, {cb[0] * (1 / n), cb[1] * (1 / n)});
        if (!(mul(result) == ring_of_integers(*ctx_)))
            throw std::logic_error("ideal inverse verification failed");
        return result;
    }

    bool operator==(const FracIdeal& o) const {
        return ctx_->d() == o.ctx_->d() && den_ == o.den_ && g1_ == o.g1_ && g2_ == o.g2_ && x0_ == o.x0_;
    }

private:
    FracIdeal(const FieldCtx& ctx, Int den, Int g1, Int g2, Int x0)
        : ctx_(&ctx), den_(std::move(den)), g1_(std::move(g1)), g2_(std::move(g2)), x0_(std::move(x0)) {}

    /// Hermite reduction of the Z-span of arbitrary generators.
    static FracIdeal reduce(const FieldCtx& ctx, const std::vector<KElem>& gens) {
        // Scale all (1,omega)-coordinates to a common denominator.
        Int den = 1;
        std::vector<std::pair<Rational, Rational>> co;
        for (const KElem& g : gens) {
            auto c = g.omega_coords();
            co.push_back(c);
            den = den / int_gcd(den, rat_den(c.first)) * rat_den(c.first);
            den = den / int_gcd(den, rat_den(c.second)) * rat_den(c.second);
        }
        std::vector<std::pair<Int, Int>> rows;
        for (auto& c : co) {
            Int x = rat_num(c.first) * (den / rat_den(c.first));
            Int y = rat_num(c.second) * (den / rat_den(c.second));
            if (x != 0 || y != 0) rows.push_back({x, y});
        }
        if (rows.empty()) throw std::invalid_argument("zero ideal");
        // Eliminate the omega-coordinate: bring to rows (g1,0) and (x0,g2).
        Int g2 = 0, x0 = 0;
        for (auto& [x, y] : rows) {
            while (y != 0) {
                if (g2 == 0) { std::swap(x0, x); std::swap(g2, y); continue; }
                Int q = y / g2;
                x -= q * x0; y -= q * g2;
                if (y != 0) { std::swap(x0, x); std::swap(g2, y); }
            }
        }
        Int g1 = 0;
        for (auto& [x, y] : rows) g1 = int_gcd(g1, x);
        if (g1 == 0 || g2 == 0) throw std::invalid_argument("ideal not of full rank 2");
        if (g1 < 0) g1 = -g1;
        if (g2 < 0) { g2 = -g2; x0 = -x0; }
        x0 %= g1;
        if (x0 < 0) x0 += g1;
        Int content = int_gcd(int_gcd(den, g1), int_gcd(g2, x0));
        return FracIdeal(ctx, den / content, g1 / content, g2 / content, x0 / content);
    }

    const FieldCtx* ctx_;
    Int den_, g1_, g2_, x0_;
};

inline bool ideal_member(const KElem& x, const FracIdeal& I) { return I.contains(x); }
inline FracIdeal ideal_conj(const FracIdeal& I) { return I.conj(); }
inline FracIdeal ideal_mul(const FracIdeal& I, const FracIdeal& J) { return I.mul(J); }
inline FracIdeal ideal_inv(const FracIdeal& I) { return I.inv(); }

} // namespace picard
