#pragma once

#include "picard/dieudonne.hpp"

#include <array>
#include <optional>

namespace picard {

/// Element c + cu*u + cv*v of R = F_{p^2}[u,v]/(u^2, uv, v^2).
struct TruncElem {
    FqElem c, cu, cv;

    static TruncElem zero(const FqCtx& ctx) {
        return {FqElem::zero(ctx), FqElem::zero(ctx), FqElem::zero(ctx)};
    }
    static TruncElem constant(const FqElem& x) { return {x, FqElem::zero(x.ctx()), FqElem::zero(x.ctx())}; }
    static TruncElem var_u(const FqCtx& ctx) {
        return {FqElem::zero(ctx), FqElem::one(ctx), FqElem::zero(ctx)};
    }
    static TruncElem var_v(const FqCtx& ctx) {
        return {FqElem::zero(ctx), FqElem::zero(ctx), FqElem::one(ctx)};
    }

    bool is_zero() const { return c.is_zero() && cu.is_zero() && cv.is_zero(); }
    /// Unit iff the constant term is nonzero.
    bool is_unit() const { return !c.is_zero(); }
    TruncElem at_origin() const { return constant(c); }

    TruncElem operator+(const TruncElem& o) const { return {c + o.c, cu + o.cu, cv + o.cv}; }
    TruncElem operator-(const TruncElem& o) const { return {c - o.c, cu - o.cu, cv - o.cv}; }
    TruncElem operator-() const { return {-c, -cu, -cv}; }
    TruncElem operator*(const TruncElem& o) const {
        // squares and the mixed product of u, v vanish
        return {c * o.c, c * o.cu + cu * o.c, c * o.cv + cv * o.c};
    }
    bool operator==(const TruncElem& o) const { return c == o.c && cu == o.cu && cv == o.cv; }
};

/// Element of Omega_R = (R du + R dv) / <u du, v dv, u dv + v du>, kept in
/// the normal form  du_c * du + du_v * (v du) + dv_c * dv  (a 3-dimensional
/// space: u dv folds to -v du and u du, v dv die).
struct OmegaR {
    FqElem du_c, du_v, dv_c;

    static OmegaR zero(const FqCtx& ctx) {
        return {FqElem::zero(ctx), FqElem::zero(ctx), FqElem::zero(ctx)};
    }
    /// A du + B dv with A, B in R, reduced to normal form.
    static OmegaR make(const TruncElem& A, const TruncElem& B) {
        // A du: the u-part dies; B dv: the v-part dies, the u-part folds.
        return {A.c, A.cv - B.cu, B.c};
    }
    bool is_zero() const { return du_c.is_zero() && du_v.is_zero() && dv_c.is_zero(); }
    OmegaR operator+(const OmegaR& o) const { return {du_c + o.du_c, du_v + o.du_v, dv_c + o.dv_c}; }
    /// Module action of R.
    OmegaR scale(const TruncElem& s) const {
        // s * du = s.c du + s.cv (v du); s * dv = s.c dv - s.cu (v du);
        // s * (v du) = s.c (v du).
        return {s.c * du_c, s.c * du_v + s.cv * du_c - s.cu * dv_c, s.c * dv_c};
    }
    bool operator==(const OmegaR& o) const { return du_c == o.du_c && du_v == o.du_v && dv_c == o.dv_c; }
};

/// d: R -> Omega_R.
inline OmegaR trunc_d(const TruncElem& g) {
    return OmegaR::make(TruncElem::constant(g.cu), TruncElem::constant(g.cv));
}

/// Vector in R (x) D_0 over the fixed 6-element basis.
using TruncVec = std::array<TruncElem, 6>;

inline TruncVec trunc_vec_zero(const FqCtx& ctx) {
    TruncElem z = TruncElem::zero(ctx);
    return {z, z, z, z, z, z};
}

/// Symplectic pairing over R.
inline TruncElem trunc_pair(const FqCtx& ctx, const TruncVec& x, const TruncVec& y) {
    FqMat J = symplectic_J6(ctx);
    TruncElem s = TruncElem::zero(ctx);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (!J.at(i, j).is_zero()) s = s + x[i] * y[j] * TruncElem::constant(J.at(i, j));
    return s;
}

/// R-linear extension of a matrix (V or F) to R (x) D_0.
inline TruncVec trunc_apply(const FqMat& M, const TruncVec& x) {
    TruncVec r = trunc_vec_zero(M.ctx());
    for (int i = 0; i < 6; ++i)
        for (int k = 0; k < 6; ++k)
            if (!M.at(i, k).is_zero()) r[i] = r[i] + x[k] * TruncElem::constant(M.at(i, k));
    return r;
}

/// The first-order universal Hodge family over R at a gss point:
/// P = span{e1 + u e3, e2 + v e3}, L = span{f3 - u f1 - v f2}.
struct HodgeFamily {
    FqCtx ctx;
    TruncVec p1, p2, ell;
};

/// Build the family over the given base module and verify isotropy of
/// omega = P + L over R. Throws when isotropy fails.
inline HodgeFamily universal_hodge(const UnitaryDModule& D) {
    using namespace dbasis;
    const FqCtx& ctx = D.ctx;
    TruncElem one = TruncElem::constant(FqElem::one(ctx));
    TruncElem u = TruncElem::var_u(ctx), v = TruncElem::var_v(ctx);
    HodgeFamily fam{ctx, trunc_vec_zero(ctx), trunc_vec_zero(ctx), trunc_vec_zero(ctx)};
    fam.p1[E1] = one;  fam.p1[E3] = u;
    fam.p2[E2] = one;  fam.p2[E3] = v;
    fam.ell[F3] = one; fam.ell[F1] = -u; fam.ell[F2] = -v;
    const TruncVec* gens[3] = {&fam.p1, &fam.p2, &fam.ell};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!trunc_pair(ctx, *gens[i], *gens[j]).is_zero())
                throw std::invalid_argument("Hodge family is not isotropic over R");
    return fam;
}

/// Local equation of the supersingular divisor at the braid point: the
/// obstruction to V(L) lying in R * e1^(p). Computes V(f3 - u f1 - v f2)
/// = e1^(p) - u e2^(p), checks the e1^(p) coefficient is a unit and the
/// f-coordinates vanish, and returns the e2^(p) coefficient negated (= u).
/// Throws when the base module does not satisfy the gss-equation contract.
inline TruncElem gss_equation(const HodgeFamily& fam, const UnitaryDModule& D) {
    using namespace dbasis;
    TruncVec img = trunc_apply(D.V, fam.ell);
    for (int i : {F1, F2, F3, E3})
        if (!img[i].is_zero())
            throw std::invalid_argument("V(L-family) has unexpected coordinates");
    if (!img[E1].is_unit())
        throw std::invalid_argument("V(L-family) has no leading e1^(p) term (not a gss base)");
    return -img[E2];
}

/// nabla(g * (e1 + u e3)) = dg (x) (e1 + u e3) + g du (x) e3, reduced by the
/// Omega_R relations. Returned as six Omega_R coordinates on D_0.
inline std::array<OmegaR, 6> nabla_first_order(const TruncElem& g, const HodgeFamily& fam) {
    using namespace dbasis;
    const FqCtx& ctx = fam.ctx;
    OmegaR dg = trunc_d(g);
    std::array<OmegaR, 6> out = {OmegaR::zero(ctx), OmegaR::zero(ctx), OmegaR::zero(ctx),
                                 OmegaR::zero(ctx), OmegaR::zero(ctx), OmegaR::zero(ctx)};
    // dg (x) section, coordinatewise
    for (int i = 0; i < 6; ++i) out[i] = dg.scale(fam.p1[i]);
    // + g du (x) e3
    out[E3] = out[E3] + OmegaR::make(g, TruncElem::zero(ctx));
    return out;
}

/// The du-line check along the gss locus: the module invariants hold, the
/// section e1 + u e3 generates P_0 = P meet ker V over R, and the
/// du-component of nabla(e1 + u e3), paired against the L-family generator,
/// is a unit at the origin while the dv-component pairs to zero there.
inline bool ks_restriction_check(const UnitaryDModule& D) {
    using namespace dbasis;
    const FqCtx& ctx = D.ctx;
    if (!check_module(D).all_pass()) return false;
    HodgeFamily fam = universal_hodge(D);
    for (const TruncElem& t : trunc_apply(D.V, fam.p1))
        if (!t.is_zero()) return false; // section must lie in ker V over R
    auto nab = nabla_first_order(TruncElem::constant(FqElem::one(ctx)), fam);
    // split into du- and dv-components (v du contributes to du with v-factor)
    TruncVec du_comp = trunc_vec_zero(ctx), dv_comp = trunc_vec_zero(ctx);
    for (int i = 0; i < 6; ++i) {
        du_comp[i] = TruncElem{nab[i].du_c, FqElem::zero(ctx), nab[i].du_v};
        dv_comp[i] = TruncElem::constant(nab[i].dv_c);
    }
    TruncElem du_pair = trunc_pair(ctx, du_comp, fam.ell);
    TruncElem dv_pair = trunc_pair(ctx, dv_comp, fam.ell);
    return du_pair.at_origin().is_unit() && dv_pair.at_origin().is_zero();
}

} // namespace picard
