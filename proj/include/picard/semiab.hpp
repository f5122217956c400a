#pragma once

#include "picard/ideal.hpp"

namespace picard {

/// Degeneration datum: ideals a, b and the extension parameter u. The
/// semi-abelian extension it classifies depends on u only modulo
/// conj(a) * conj(b)^{-1}.
struct SemiAbDatum {
    FracIdeal a, b;
    KElem u;
};

/// conj(a) * conj(b)^{-1}.
inline FracIdeal ext_param_ideal(const FracIdeal& a, const FracIdeal& b) {
    return ideal_mul(ideal_conj(a), ideal_inv(ideal_conj(b)));
}

/// The extension splits iff u lies in conj(a) conj(b)^{-1}.
inline bool semiab_split(const SemiAbDatum& datum) {
    return ideal_member(datum.u, ext_param_ideal(datum.a, datum.b));
}

/// G_u ~ G_v iff u - v lies in conj(a) conj(b)^{-1}.
inline bool ext_iso(const KElem& u, const KElem& v, const FracIdeal& a, const FracIdeal& b) {
    return ideal_member(u - v, ext_param_ideal(a, b));
}

/// The reduction K/N O_K -> K/O_K on classes. Classes are represented by
/// K-elements; reduce() maps a representative to itself (the map is the
/// identity on representatives, only the modulus coarsens).
struct ExtMultN {
    long N;
    /// Order of the kernel O_K/N O_K, enumerated on representatives i + j*omega.
    static long kernel_order(const FieldCtx& ctx, long N) {
        if (N < 1) throw std::invalid_argument("N must be >= 1");
        FracIdeal NO = FracIdeal::principal(KElem(ctx, N));
        long count = 0;
        std::vector<KElem> seen;
        for (long i = 0; i < N; ++i)
            for (long j = 0; j < N; ++j) {
                KElem x = KElem::from_omega_coords(ctx, Rational(i), Rational(j));
                bool dup = false;
                for (const KElem& y : seen)
                    if (NO.contains(x - y)) { dup = true; break; }
                if (!dup && x.is_integral()) {
                    seen.push_back(x);
                    ++count;
                }
            }
        return count;
    }
    /// Two lifts u, u + N s (s integral) map to the same class in K/O_K
    /// whenever N s is integral; well-definedness of the reduction.
    static bool well_defined(const KElem& u, const KElem& s, long N) {
        KElem shift = s * Rational(N);
        KElem diff = (u + shift) - u;
        return (diff - shift).is_zero() && shift.is_integral();
    }
    /// Image of u in K/O_K is zero iff u is integral.
    static bool image_is_zero(const KElem& u) { return u.is_integral(); }
};

} // namespace picard
