#pragma once

#include "picard/formal.hpp"
#include "picard/unitary.hpp"

#include <array>
#include <optional>

namespace picard {

/// The moving Z-basis alpha_1, alpha_2, alpha_3, alpha_1', alpha_2', alpha_3'
/// of the varying lattice, as formal vectors in z, u:
///   alpha_1 = (0, 1, 1),  alpha_2 = (1, 0, u),  alpha_3 = (u, -z/delta, z/delta),
///   alpha_i' = iota'(omega) alpha_i with iota'(a) = diag(a, a, conj(a)).
struct MovingBasis {
    std::array<std::array<FormalScalar, 3>, 6> alpha;
};

inline MovingBasis moving_basis(const FieldCtx& ctx) {
    FormalScalar zero(ctx), one(ctx, KElem::one(ctx));
    FormalScalar z = FormalScalar::variable_z(ctx), u = FormalScalar::variable_u(ctx);
    KElem dinv = KElem::delta(ctx).inv();
    KElem w = KElem::omega(ctx), wbar = w.conj();

    std::array<std::array<FormalScalar, 3>, 3> a = {{{zero, one, one},
                                                     {one, zero, u},
                                                     {u, -(z * dinv), z * dinv}}};
    MovingBasis mb{{a[0], a[1], a[2], a[0], a[1], a[2]}};
    for (int i = 0; i < 3; ++i) {
        mb.alpha[3 + i][0] = a[i][0] * w;
        mb.alpha[3 + i][1] = a[i][1] * w;
        mb.alpha[3 + i][2] = a[i][2] * wbar;
    }
    return mb;
}

inline Vec3K eval_formal_vec(const std::array<FormalScalar, 3>& v, const PointZU& x) {
    return {v[0].eval(x.z, x.u), v[1].eval(x.z, x.u), v[2].eval(x.z, x.u)};
}

/// The linear map T_x identifying the moving model with the fixed one:
/// T(zeta) = lambda^{-1} ( -zeta_1 A - zeta_2 B + conj(zeta_3) C ) with
///   A = (conj(u) z, (z - conj(z))/delta, conj(u)),
///   B = (conj(z) + delta u conj(u), u, 1),  C = (z, u, 1).
/// The third coordinate enters conjugated; pass conj_third = false to
/// suppress that (diagnostics only).
inline Vec3K t_map(const PointZU& x, const Vec3K& zeta, bool conj_third = true) {
    const FieldCtx& ctx = x.z.ctx();
    Rational lam = lambda(x);
    if (lam == 0) throw std::domain_error("t_map undefined where lambda vanishes");
    KElem delta = KElem::delta(ctx);
    KElem zbar = x.z.conj(), ubar = x.u.conj();
    Vec3K A = {ubar * x.z, (x.z - zbar) / delta, ubar};
    Vec3K B = {zbar + delta * x.u * ubar, x.u, KElem::one(ctx)};
    Vec3K C = {x.z, x.u, KElem::one(ctx)};
    KElem z3 = conj_third ? zeta[2].conj() : zeta[2];
    Vec3K s = vec3_add(vec3_add(vec3_scale(-zeta[0], A), vec3_scale(-zeta[1], B)), vec3_scale(z3, C));
    return vec3_scale(KElem(ctx, Rational(1) / lam, 0), s);
}

/// Riemann form of the polarization on the moving basis at x, presented with
/// the row index in the second pairing slot: G[i][j] = <T alpha_j, T alpha_i>.
/// Constant in x; the constant value is the matrix J with
/// J[0][5] = 1, J[1][4] = -1, J[2][3] = 1 and antisymmetry.
inline std::array<std::array<Rational, 6>, 6> riemann_matrix(const PointZU& x) {
    if (lambda(x) <= 0) throw std::domain_error("riemann_matrix needs an interior point");
    MovingBasis mb = moving_basis(x.z.ctx());
    std::array<Vec3K, 6> tv;
    for (int i = 0; i < 6; ++i) tv[i] = t_map(x, eval_formal_vec(mb.alpha[i], x));
    std::array<std::array<Rational, 6>, 6> G;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) G[i][j] = polar(tv[j], tv[i]);
    return G;
}

/// The constant matrix J (integer entries) of the Riemann form.
inline std::array<std::array<int, 6>, 6> riemann_J() {
    std::array<std::array<int, 6>, 6> J{};
    J[0][5] = 1;  J[1][4] = -1; J[2][3] = 1;
    J[3][2] = -1; J[4][1] = 1;  J[5][0] = -1;
    return J;
}

/// det [[conj(u) z, conj(z) + delta u conj(u), z],
///      [(z-conj(z))/delta, u, u],
///      [conj(u), 1, 1]]  =  delta * lambda(z,u)^2, exactly at K-points.
inline bool det_identity(const PointZU& x) {
    const FieldCtx& ctx = x.z.ctx();
    KElem delta = KElem::delta(ctx);
    KElem zbar = x.z.conj(), ubar = x.u.conj();
    GMat m(ctx);
    m.at(0, 0) = ubar * x.z;            m.at(0, 1) = zbar + delta * x.u * ubar; m.at(0, 2) = x.z;
    m.at(1, 0) = (x.z - zbar) / delta;  m.at(1, 1) = x.u;                       m.at(1, 2) = x.u;
    m.at(2, 0) = ubar;                  m.at(2, 1) = KElem::one(ctx);           m.at(2, 2) = KElem::one(ctx);
    Rational lam = lambda(x);
    return m.det() == delta * (lam * lam);
}

/// de Rham class in the horizontal basis beta_1..beta_3'.
struct DeRhamClass {
    std::array<FormalScalar, 6> c;

    DeRhamClass operator+(const DeRhamClass& o) const {
        DeRhamClass r = *this;
        for (int i = 0; i < 6; ++i) r.c[i] = r.c[i] + o.c[i];
        return r;
    }
    DeRhamClass operator*(const FormalScalar& s) const {
        DeRhamClass r = *this;
        for (int i = 0; i < 6; ++i) r.c[i] = r.c[i] * s;
        return r;
    }
    bool operator==(const DeRhamClass& o) const { return c == o.c; }
};

inline DeRhamClass derham_zero(const FieldCtx& ctx) {
    FormalScalar z(ctx);
    return DeRhamClass{{z, z, z, z, z, z}};
}

inline DeRhamClass beta_unit(const FieldCtx& ctx, int i) {
    DeRhamClass r = derham_zero(ctx);
    r.c[i] = FormalScalar(ctx, KElem::one(ctx));
    return r;
}

/// Coordinates of d zeta_i (i = 1,2,3) in the beta-basis: the i-th
/// coordinates of the six moving-basis vectors.
inline DeRhamClass dzeta_in_beta(const FieldCtx& ctx, int i) {
    if (i < 1 || i > 3) throw std::invalid_argument("index must be 1, 2 or 3");
    MovingBasis mb = moving_basis(ctx);
    DeRhamClass r = derham_zero(ctx);
    for (int k = 0; k < 6; ++k) r.c[k] = mb.alpha[k][i - 1];
    return r;
}

/// One-form with de Rham class coefficients (the shape of nabla output).
struct DeRhamOneForm {
    DeRhamClass dz_coef, du_coef;
    bool operator==(const DeRhamOneForm& o) const { return dz_coef == o.dz_coef && du_coef == o.du_coef; }
};

/// Gauss-Manin connection on d zeta_i: coordinatewise exterior derivative in
/// the horizontal beta-basis.
inline DeRhamOneForm gauss_manin(const FieldCtx& ctx, int i) {
    DeRhamClass v = dzeta_in_beta(ctx, i);
    DeRhamOneForm r{derham_zero(ctx), derham_zero(ctx)};
    for (int k = 0; k < 6; ++k) {
        r.dz_coef.c[k] = v.c[k].d_dz();
        r.du_coef.c[k] = v.c[k].d_du();
    }
    return r;
}

/// de Rham pairing in the beta-basis: a^t ((2 pi i)^{-1} J) b.
inline FormalScalar derham_pairing(const DeRhamClass& a, const DeRhamClass& b) {
    const FieldCtx& ctx = a.c[0].ctx();
    auto J = riemann_J();
    FormalScalar s(ctx);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (J[i][j] != 0) s = s + a.c[i] * b.c[j] * KElem(ctx, J[i][j]);
    return s * FormalScalar::two_pi_i(ctx, -1);
}

/// KS(d zeta_i (x) d zeta_3): pair the Gauss-Manin coefficients of d zeta_i
/// against d zeta_3. All z,u dependence cancels; the closed forms are
///   KS(d zeta_1 (x) d zeta_3) = -delta (2 pi i)^{-1} du,
///   KS(d zeta_2 (x) d zeta_3) = (2 pi i)^{-1} dz.
inline OneForm ks(const FieldCtx& ctx, int i) {
    if (i < 1 || i > 2) throw std::invalid_argument("index must be 1 or 2");
    DeRhamOneForm gm = gauss_manin(ctx, i);
    DeRhamClass d3 = dzeta_in_beta(ctx, 3);
    return OneForm(derham_pairing(gm.dz_coef, d3), derham_pairing(gm.du_coef, d3));
}

/// The closed forms above, for the independent-route comparison.
inline OneForm ks_closed_form(const FieldCtx& ctx, int i) {
    FormalScalar zero(ctx);
    if (i == 1)
        return OneForm(zero, FormalScalar(ctx, -KElem::delta(ctx), -1));
    if (i == 2)
        return OneForm(FormalScalar(ctx, KElem::one(ctx), -1), zero);
    throw std::invalid_argument("index must be 1 or 2");
}

/// psi kills du and maps dz to 2 pi i * (d zeta_2 (x) d zeta_3); the result
/// is the formal coefficient of d zeta_2 (x) d zeta_3.
inline FormalScalar psi(const OneForm& form) {
    const FieldCtx& ctx = form.dz_coef.ctx();
    return form.dz_coef * FormalScalar::two_pi_i(ctx, 1);
}

/// psi applied to dq, via dq/q = (2 pi i / M) dz: the coefficient of
/// q * (d zeta_2 (x) d zeta_3) is (2 pi i)^2 / M. The returned q-power 1
/// witnesses the simple zero at the cusp.
struct PsiDqResult {
    FormalScalar coefficient; // of q^{q_power} * (d zeta_2 (x) d zeta_3)
    int q_power;
};

inline PsiDqResult psi_dq(const FieldCtx& ctx, long M) {
    if (M == 0) throw std::invalid_argument("zero cusp width");
    FormalScalar c(ctx, KElem(ctx, Rational(1, M), 0), 2);
    return {c, 1};
}

} // namespace picard
