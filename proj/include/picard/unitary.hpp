#pragma once

#include "picard/qfield.hpp"

#include <array>
#include <optional>
#include <vector>

namespace picard {

using Vec3K = std::array<KElem, 3>;

inline Vec3K vec3(const KElem& x, const KElem& y, const KElem& z) { return {x, y, z}; }
inline Vec3K vec3_conj(const Vec3K& v) { return {v[0].conj(), v[1].conj(), v[2].conj()}; }
inline Vec3K vec3_scale(const KElem& c, const Vec3K& v) { return {c * v[0], c * v[1], c * v[2]}; }
inline Vec3K vec3_add(const Vec3K& a, const Vec3K& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3K vec3_sub(const Vec3K& a, const Vec3K& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

inline Vec3K std_basis(const FieldCtx& ctx, int i) {
    Vec3K e = {KElem::zero(ctx), KElem::zero(ctx), KElem::zero(ctx)};
    e[i] = KElem::one(ctx);
    return e;
}

/// Hermitian pairing (u,v) = conj(u)^t M v with
/// M = [[0,0,1/delta],[0,1,0],[-1/delta,0,0]]; conjugate-linear in the first
/// argument, (v,u) = conj (u,v), signature (2,1) over R.
inline KElem herm(const Vec3K& u, const Vec3K& v) {
    const FieldCtx& ctx = u[0].ctx();
    KElem dinv = KElem::delta(ctx).inv();
    KElem s = u[0].conj() * dinv * v[2];
    s = s + u[1].conj() * v[1];
    s = s - u[2].conj() * dinv * v[0];
    return s;
}

/// Polarization form <u,v> = Im_delta (u,v): alternating, Q-valued, and
/// 2(u,v) = <u, delta v> + delta <u,v>.
inline Rational polar(const Vec3K& u, const Vec3K& v) { return im_delta(herm(u, v)); }

/// K-rational point (z,u) of the ball model (or its boundary).
struct PointZU {
    KElem z, u;
};

/// lambda(z,u) = Im_delta(z) - u*conj(u); positive exactly on the interior.
inline Rational lambda(const PointZU& pt) { return im_delta(pt.z) - pt.u.norm(); }

/// The center x0 = (delta/2, 0).
inline PointZU center_point(const FieldCtx& ctx) {
    return {KElem::delta(ctx) * Rational(1, 2), KElem::zero(ctx)};
}

/// 3x3 matrix over K, acting projectively on the ball model.
class GMat {
public:
    explicit GMat(const FieldCtx& ctx) : ctx_(&ctx) {
        for (auto& row : m_)
            for (auto& x : row) x = KElem::zero(ctx);
    }
    static GMat identity(const FieldCtx& ctx) {
        GMat g(ctx);
        for (int i = 0; i < 3; ++i) g.m_[i][i] = KElem::one(ctx);
        return g;
    }

    const FieldCtx& ctx() const { return *ctx_; }
    KElem& at(int i, int j) { return m_[i][j]; }
    const KElem& at(int i, int j) const { return m_[i][j]; }

    GMat operator*(const GMat& o) const {
        GMat r(*ctx_);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                KElem s = KElem::zero(*ctx_);
                for (int k = 0; k < 3; ++k) s = s + m_[i][k] * o.m_[k][j];
                r.m_[i][j] = s;
            }
        return r;
    }

    Vec3K apply(const Vec3K& v) const {
        Vec3K r = {KElem::zero(*ctx_), KElem::zero(*ctx_), KElem::zero(*ctx_)};
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) r[i] = r[i] + m_[i][k] * v[k];
        return r;
    }

    KElem det() const {
        return m_[0][0] * (m_[1][1] * m_[2][2] - m_[1][2] * m_[2][1])
             - m_[0][1] * (m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0])
             + m_[0][2] * (m_[1][0] * m_[2][1] - m_[1][1] * m_[2][0]);
    }

    bool operator==(const GMat& o) const {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (m_[i][j] != o.m_[i][j]) return false;
        return true;
    }

private:
    const FieldCtx* ctx_;
    std::array<std::array<KElem, 3>, 3> m_;
};

/// Similitude factor: mu in Q^x with conj(g)^t M g = mu M exactly, if any.
inline std::optional<Rational> similitude(const GMat& g) {
    const FieldCtx& ctx = g.ctx();
    // H = conj(g)^t M g; compare against mu * M with mu = H[1][1].
    auto col = [&](int j) { return vec3(g.at(0, j), g.at(1, j), g.at(2, j)); };
    std::array<std::array<KElem, 3>, 3> H;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) H[i][j] = herm(col(i), col(j));
    KElem mu = H[1][1];
    if (!mu.is_rational() || mu.is_zero()) return std::nullopt;
    KElem dinv = KElem::delta(ctx).inv();
    std::array<std::array<KElem, 3>, 3> M = {
        {{KElem::zero(ctx), KElem::zero(ctx), dinv},
         {KElem::zero(ctx), KElem::one(ctx), KElem::zero(ctx)},
         {-dinv, KElem::zero(ctx), KElem::zero(ctx)}}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (H[i][j] != mu * M[i][j]) return std::nullopt;
    return mu.a();
}

inline bool is_unitary(const GMat& g) {
    auto mu = similitude(g);
    return mu && *mu == 1;
}
inline bool is_special_unitary(const GMat& g) {
    return is_unitary(g) && g.det() == KElem::one(g.ctx());
}

/// Automorphy factor j(g; z,u) = a3 z + b3 u + c3 (third row against (z,u,1)).
inline KElem j_factor(const GMat& g, const PointZU& pt) {
    return g.at(2, 0) * pt.z + g.at(2, 1) * pt.u + g.at(2, 2);
}

/// Fractional-linear action: g(z,u,1)^t = j * (z',u',1)^t. Throws when the
/// image lies at infinity (j = 0).
inline PointZU act(const GMat& g, const PointZU& pt) {
    KElem j = j_factor(g, pt);
    if (j.is_zero()) throw std::domain_error("point maps to infinity (j = 0)");
    KElem zp = g.at(0, 0) * pt.z + g.at(0, 1) * pt.u + g.at(0, 2);
    KElem up = g.at(1, 0) * pt.z + g.at(1, 1) * pt.u + g.at(1, 2);
    return {zp / j, up / j};
}

/// lambda(z,u) = lambda(g(z,u)) * j * conj(j), exactly. Requires g unitary.
inline bool lambda_transform_check(const GMat& g, const PointZU& pt) {
    if (!is_unitary(g)) throw std::invalid_argument("g is not unitary");
    KElem j = j_factor(g, pt);
    if (j.is_zero()) throw std::domain_error("point maps to infinity (j = 0)");
    Rational lhs = lambda(pt);
    Rational rhs = lambda(act(g, pt)) * (j * j.conj()).a();
    return lhs == rhs;
}

/// Unipotent n(s,r) = [[1, delta conj(s), r + delta s conj(s)/2],[0,1,s],[0,0,1]].
inline GMat n_of(const KElem& s, const Rational& r) {
    const FieldCtx& ctx = s.ctx();
    KElem delta = KElem::delta(ctx);
    GMat g = GMat::identity(ctx);
    g.at(0, 1) = delta * s.conj();
    g.at(0, 2) = KElem(ctx, r, 0) + delta * Rational(s.norm() / 2);
    g.at(1, 2) = s;
    return g;
}

/// Diagonal t * m(alpha, beta) = t * diag(alpha, beta, conj(alpha)^-1).
inline GMat m_of(const Rational& t, const KElem& alpha, const KElem& beta) {
    const FieldCtx& ctx = alpha.ctx();
    GMat g(ctx);
    g.at(0, 0) = alpha * t;
    g.at(1, 1) = beta * t;
    g.at(2, 2) = alpha.conj().inv() * t;
    return g;
}

/// Stabilizer-of-the-cusp membership: n(s,r) lies in Gamma_cusp iff
/// s in N O_K and r in N|D|Z (d = 1 mod 4) resp. r in (N|D|/2) Z (else).
/// Only even N is supported.
inline bool gamma_cusp_member(const KElem& s, const Rational& r, long N, const FieldCtx& ctx) {
    if (N % 2 != 0 || N <= 0) throw std::invalid_argument("odd N is unsupported");
    KElem sN = s * Rational(1, N);
    if (!sN.is_integral()) return false;
    Rational step = ctx.d_is_1_mod_4() ? Rational(N * -ctx.D()) : Rational(N * -ctx.D(), 2);
    return is_integer(r / step);
}

/// Width of the cusp at infinity: M = N|D| (d = 1 mod 4) or N|D|/2 (else).
inline long cusp_width(long N, const FieldCtx& ctx) {
    if (N % 2 != 0 || N <= 0) throw std::invalid_argument("odd N is unsupported");
    long absD = -ctx.D();
    return ctx.d_is_1_mod_4() ? N * absD : N * absD / 2;
}

/// Point n(u,r) m(t,1) x0 = (r + delta(u conj(u) + t^2)/2, u) on the geodesic
/// to the cusp at infinity; lambda of the result is t^2.
inline PointZU geodesic_point(const KElem& u, const Rational& r, const Rational& t) {
    if (t <= 0) throw std::invalid_argument("geodesic parameter must be positive");
    const FieldCtx& ctx = u.ctx();
    KElem z = KElem(ctx, r, 0) + KElem::delta(ctx) * Rational((u.norm() + t * t) / 2);
    return {z, u};
}

/// Z-basis of a lattice in V = K^3 (six vectors).
using LatticeZBasis = std::array<Vec3K, 6>;

/// L0 = O_K-span of {delta e1, e2, e3}, as a Z-basis.
inline LatticeZBasis lattice_L0(const FieldCtx& ctx) {
    KElem delta = KElem::delta(ctx), w = KElem::omega(ctx);
    Vec3K v1 = vec3_scale(delta, std_basis(ctx, 0));
    Vec3K v2 = std_basis(ctx, 1);
    Vec3K v3 = std_basis(ctx, 2);
    return {v1, vec3_scale(w, v1), v2, vec3_scale(w, v2), v3, vec3_scale(w, v3)};
}

/// L1 = O_K-span of {delta/2 e1 + e3, e2, delta/2 e1 - e3}.
inline LatticeZBasis lattice_L1(const FieldCtx& ctx) {
    KElem hd = KElem::delta(ctx) * Rational(1, 2);
    KElem w = KElem::omega(ctx);
    Vec3K v1 = vec3_add(vec3_scale(hd, std_basis(ctx, 0)), std_basis(ctx, 2));
    Vec3K v2 = std_basis(ctx, 1);
    Vec3K v3 = vec3_sub(vec3_scale(hd, std_basis(ctx, 0)), std_basis(ctx, 2));
    return {v1, vec3_scale(w, v1), v2, vec3_scale(w, v2), v3, vec3_scale(w, v3)};
}

/// Gram matrix of the polarization form on a Z-basis. Throws if any pairing
/// is non-integral (the basis does not span a candidate lattice).
inline std::array<std::array<Int, 6>, 6> lattice_gram(const LatticeZBasis& L) {
    std::array<std::array<Int, 6>, 6> G;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            Rational v = polar(L[i], L[j]);
            if (!is_integer(v)) throw std::invalid_argument("polarization form is not Z-valued on basis");
            G[i][j] = rat_num(v);
        }
    return G;
}

inline Int int_det6(const std::array<std::array<Int, 6>, 6>& G) {
    // exact fraction-free elimination via rationals
    std::array<std::array<Rational, 6>, 6> A;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) A[i][j] = Rational(G[i][j]);
    Rational det = 1;
    for (int c = 0; c < 6; ++c) {
        int piv = -1;
        for (int r = c; r < 6; ++r)
            if (A[r][c] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != c) { std::swap(A[piv], A[c]); det = -det; }
        det *= A[c][c];
        for (int r = c + 1; r < 6; ++r) {
            Rational f = A[r][c] / A[c][c];
            for (int j = c; j < 6; ++j) A[r][j] -= f * A[c][j];
        }
    }
    return rat_num(det);
}

/// Self-dual iff the Gram matrix lies in GL_6(Z), i.e. det = +-1.
inline bool self_dual(const LatticeZBasis& L) {
    Int det = int_det6(lattice_gram(L));
    return det == 1 || det == -1;
}

/// Embed SL_2 via [[a,b],[c,d]] -> [[a,0,b],[0,1,0],[c,0,d]]. Requires det 1.
inline GMat su2_embed(const FieldCtx& ctx, long a, long b, long c, long d) {
    if (a * d - b * c != 1) throw std::invalid_argument("matrix must have determinant 1");
    GMat g = GMat::identity(ctx);
    g.at(0, 0) = KElem(ctx, a);
    g.at(0, 2) = KElem(ctx, b);
    g.at(2, 0) = KElem(ctx, c);
    g.at(2, 2) = KElem(ctx, d);
    return g;
}

/// Membership in Gamma^0(D): integral, det 1, and D | b.
inline bool gamma0D_member(const FieldCtx& ctx, long a, long b, long c, long d) {
    if (a * d - b * c != 1) throw std::invalid_argument("matrix must have determinant 1");
    long absD = -ctx.D();
    return b % absD == 0;
}

} // namespace picard
