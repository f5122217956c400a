#pragma once

#include "picard/fq.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace picard {

/// Element of (O_K/p^n O_K)^x, coordinates a + b*omega mod p^n.
struct DeltaUnit {
    long a, b;
};

/// The unit group Delta(p^n) = (O_K/p^n)^x with exact modular arithmetic.
/// Enumeration is guarded: p^{2n} must stay small.
class DeltaGroup {
public:
    DeltaGroup(long p, long d, long n) : p_(p), d_(d), n_(n), fq_(p, d) {
        if (n < 1) throw std::invalid_argument("n must be >= 1");
        pn_ = 1;
        for (long i = 0; i < n; ++i) {
            pn_ *= p;
            if (pn_ > 2'000'000L) throw std::invalid_argument("group too large for enumeration");
        }
        if (pn_ * pn_ > 4'000'000L) throw std::invalid_argument("group too large for enumeration");
        half_d_shift_ = ((d % 4 + 4) % 4) == 1;
        // omega^2 = (d-1)/4 + omega  when d = 1 mod 4, else omega^2 = d.
        om_sq_const_ = half_d_shift_ ? mod((d - 1) / 4) : mod(d);
        for (long a = 0; a < pn_; ++a)
            for (long b = 0; b < pn_; ++b)
                if (is_unit({a, b})) units_.push_back({a, b});
        orders_.reserve(units_.size());
        for (const auto& u : units_) orders_.push_back(order(u));
    }

    long p() const { return p_; }
    long n() const { return n_; }
    long modulus() const { return pn_; }

    bool is_unit(const DeltaUnit& x) const {
        // unit iff nonzero in O_K/p = F_{p^2}, iff norm is a unit mod p
        long a = x.a % p_, b = x.b % p_;
        long norm;
        if (half_d_shift_) {
            // N(a + b*omega) = a^2 + ab*Tr(omega) ... compute via conj(omega) = 1 - omega
            // (a+b w)(a+b (1-w)) = a^2 + ab + b^2 w(1-w) = a^2 + ab - b^2 * (d-1)/4
            norm = mod2(a * a + a * b - b * b % p_ * ((d_ - 1) / 4), p_);
        } else {
            norm = mod2(a * a - b * b % p_ * d_, p_);
        }
        return norm % p_ != 0;
    }

    DeltaUnit mul(const DeltaUnit& x, const DeltaUnit& y) const {
        // (a + b w)(c + e w) = ac + (ae + bc) w + be w^2
        long a = x.a, b = x.b, c = y.a, e = y.b;
        long w2c = om_sq_const_;
        long const_part = (a * c + b * e % pn_ * w2c) % pn_;
        long om_part = (a * e + b * c) % pn_;
        if (half_d_shift_) om_part = (om_part + b * e) % pn_;
        return {const_part, om_part};
    }

    DeltaUnit one() const { return {1 % pn_, 0}; }
    DeltaUnit conj(const DeltaUnit& x) const {
        // conj(omega) = 1 - omega (d = 1 mod 4) or -omega
        if (half_d_shift_) return {mod(x.a + x.b), mod(-x.b)};
        return {x.a, mod(-x.b)};
    }
    DeltaUnit pow(DeltaUnit x, long e) const {
        DeltaUnit r = one();
        while (e > 0) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }
    static bool eq(const DeltaUnit& x, const DeltaUnit& y) { return x.a == y.a && x.b == y.b; }

    const std::vector<DeltaUnit>& units() const { return units_; }

    /// Multiplicative order of x, by explicit powering.
    long order(const DeltaUnit& x) const {
        DeltaUnit y = x;
        long o = 1;
        while (!eq(y, one())) {
            y = mul(y, x);
            ++o;
            if (o > pn_ * pn_) throw std::logic_error("order search overflow (non-unit?)");
        }
        return o;
    }

    const std::vector<long>& order_table() const { return orders_; }

private:
    long mod(long v) const { return ((v % pn_) + pn_) % pn_; }
    static long mod2(long v, long m) { return ((v % m) + m) % m; }
    long p_, d_, n_, pn_;
    FqCtx fq_;
    bool half_d_shift_;
    long om_sq_const_;
    std::vector<DeltaUnit> units_;
    std::vector<long> orders_;
};

/// Exponent of (O_K/p^n)^x by brute force over all elements.
inline long delta_group_exponent(long p, long d, long n) {
    DeltaGroup G(p, d, n);
    long e = 1;
    for (long o : G.order_table()) e = std::lcm(e, o);
    return e;
}

/// Whether Sigma-bar^{k1} = Sigma-bar^{k2} on Delta(p^n), decided two ways:
/// by the congruence k1 = k2 mod (p^2-1)p^{n-1} and by agreement on every
/// group element (through the table of element orders). The two decisions
/// must coincide; a mismatch is an internal error.
inline bool char_equal_with_group(const DeltaGroup& G, long k1, long k2) {
    long p = G.p(), n = G.n();
    long modulus = p * p - 1;
    for (long i = 1; i < n; ++i) modulus *= p;
    long diff = k1 - k2;
    bool by_congruence = (((diff % modulus) + modulus) % modulus) == 0;

    long delta = diff < 0 ? -diff : diff;
    bool by_group = true;
    for (long o : G.order_table())
        if (delta % o != 0) { by_group = false; break; }

    if (by_congruence != by_group)
        throw std::logic_error("char_equal: congruence and group decisions disagree");
    return by_congruence;
}

inline bool char_equal(long k1, long k2, long p, long d, long n) {
    DeltaGroup G(p, d, n);
    return char_equal_with_group(G, k1, k2);
}

/// p-adic weight (w, j): w mod p^2-1 together with p-adic digits of j to
/// precision m (finite level, caller-supplied).
struct PadicWeight {
    long w = 0;                 // residue mod p^2 - 1
    std::vector<long> j_digits; // base-p digits, least significant first

    static PadicWeight make(long p, long w, std::vector<long> digits) {
        PadicWeight k;
        long m = p * p - 1;
        k.w = ((w % m) + m) % m;
        for (auto& t : digits) t = ((t % p) + p) % p;
        k.j_digits = std::move(digits);
        return k;
    }
    bool operator==(const PadicWeight& o) const { return w == o.w && j_digits == o.j_digits; }
};

/// Ordered pair of p-adic weights modulo the identification
/// ((w1,j1),(w2,j2)) ~ ((0,j1),(p*w1+w2,j2)) ~ ((p*w2+w1,j1),(0,j2)).
struct BiWeight {
    PadicWeight k1, k2;
    bool operator==(const BiWeight& o) const { return k1 == o.k1 && k2 == o.k2; }
};

/// Canonical form with first finite component w1 = 0. Idempotent, and the
/// alternative reduction path lands on the same value.
inline BiWeight biweight_canonical(const BiWeight& bw, long p) {
    long m = p * p - 1;
    BiWeight out = bw;
    out.k2.w = ((p * bw.k1.w + bw.k2.w) % m + m) % m;
    out.k1.w = 0;
    return out;
}

/// The character Sigma-bar^{k1} Sigma^{k2} evaluated on gamma in Delta(p):
/// gamma^(p*k1 + k2). Invariant under biweight_canonical.
inline FqElem biweight_char(const BiWeight& bw, const FqElem& gamma, long p) {
    if (gamma.is_zero()) throw std::domain_error("character argument must be a unit");
    long m = p * p - 1;
    long e = ((p * bw.k1.w + bw.k2.w) % m + m) % m;
    return gamma.pow(e);
}

} // namespace picard
