#pragma once

#include "picard/fq.hpp"

#include <limits>
#include <optional>
#include <vector>

namespace picard {

/// Laurent polynomial in w whose coefficients are polynomials in v over
/// F_{p^2}, with exact degree bookkeeping. w^{p^2-1} stands for u.
class WLaurent {
public:
    WLaurent(const FqCtx& ctx, long min_deg, std::vector<FqPoly> coeffs)
        : ctx_(&ctx), min_deg_(min_deg), c_(std::move(coeffs)) {
        trim();
    }
    static WLaurent zero(const FqCtx& ctx) { return WLaurent(ctx, 0, {}); }
    static WLaurent monomial(const FqCtx& ctx, long deg, FqPoly coeff) {
        return WLaurent(ctx, deg, {std::move(coeff)});
    }

    const FqCtx& ctx() const { return *ctx_; }
    bool is_zero() const { return c_.empty(); }
    /// Minimum w-degree carrying a nonzero coefficient.
    std::optional<long> min_degree() const {
        if (is_zero()) return std::nullopt;
        return min_deg_;
    }
    long term_count() const { return static_cast<long>(c_.size()); }
    /// Coefficient of w^l.
    FqPoly coeff(long l) const {
        if (l < min_deg_ || l >= min_deg_ + static_cast<long>(c_.size())) return FqPoly(*ctx_);
        return c_[l - min_deg_];
    }
    WLaurent operator+(const WLaurent& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        long lo = std::min(min_deg_, o.min_deg_);
        long hi = std::max(min_deg_ + static_cast<long>(c_.size()), o.min_deg_ + static_cast<long>(o.c_.size()));
        std::vector<FqPoly> r;
        for (long l = lo; l < hi; ++l) r.push_back(coeff(l) + o.coeff(l));
        return WLaurent(*ctx_, lo, std::move(r));
    }

    /// All (degree, coefficient) pairs with nonzero coefficient.
    std::vector<std::pair<long, FqPoly>> terms() const {
        std::vector<std::pair<long, FqPoly>> out;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) out.push_back({min_deg_ + static_cast<long>(i), c_[i]});
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.front().is_zero()) { c_.erase(c_.begin()); ++min_deg_; }
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
        if (c_.empty()) min_deg_ = 0;
    }
    const FqCtx* ctx_;
    long min_deg_;
    std::vector<FqPoly> c_;
};

/// Named symbolic w-valuations used by the holomorphy argument:
/// val(a) = 1, val(psi(du)) = p^2 - 1, val(psi(dv)) = 0. Valuations add on
/// products; on sums the ledger takes the minimum (a lower bound: possible
/// cancellation can only raise it).
struct ValuationLedger {
    long p;
    long val_a() const { return 1; }
    long val_psi_du() const { return p * p - 1; }
    long val_psi_dv() const { return 0; }
};

struct ThetaValuation {
    bool vanishes;   // psi(dg) = 0 identically
    long value;      // ledger valuation of a^k psi(dg) when not vanishing
};

/// Ledger valuation of a^k psi(dg) for g = sum_l g_l(v) w^l with
/// min degree >= -k. In characteristic p,
///   dg = -sum_l (l mod p) g_l w^{l-(p^2-1)} du + sum_l g_l'(v) w^l dv,
/// so applying val(psi(du)) = p^2-1 and val(psi(dv)) = 0 each surviving term
/// of psi(dg) has w-valuation l, and the result is k + min l >= 0.
inline ThetaValuation theta_valuation(long k, const WLaurent& g, const ValuationLedger& led) {
    if (k < 0) throw std::invalid_argument("weight must be nonnegative");
    auto md = g.min_degree();
    if (md && *md < -k) throw std::invalid_argument("pole order exceeds the weight");
    long best = std::numeric_limits<long>::max();
    for (auto& [l, coeff] : g.terms()) {
        long l_mod_p = ((l % led.p) + led.p) % led.p;
        if (l_mod_p != 0) // du-terms: w^{l-(p^2-1)} * psi(du)
            best = std::min(best, l - (led.p * led.p - 1) + led.val_psi_du());
        if (!coeff.derivative().is_zero()) // dv-terms: w^l * psi(dv)
            best = std::min(best, l + led.val_psi_dv());
    }
    if (best == std::numeric_limits<long>::max()) return {true, 0};
    return {false, k * led.val_a() + best};
}

} // namespace picard
