#include "picard/suites.hpp"
#include "picard/unitary.hpp"

#include <sstream>
#include <vector>

namespace picard {

namespace {

KElem random_k(const FieldCtx& ctx, SweepRng& rng, long num = 5, long den = 3) {
    return KElem(ctx, Rational(rng.next(-num, num), rng.next(1, den)),
                 Rational(rng.next(-num, num), rng.next(1, den)));
}

Vec3K random_vec(const FieldCtx& ctx, SweepRng& rng) {
    return {random_k(ctx, rng), random_k(ctx, rng), random_k(ctx, rng)};
}

KElem random_integral(const FieldCtx& ctx, SweepRng& rng, long lim = 4) {
    return KElem::from_omega_coords(ctx, Rational(rng.next(-lim, lim)), Rational(rng.next(-lim, lim)));
}

/// Unit-norm elements for m(alpha, beta): roots of unity in O_K plus
/// quotients conj(t)/t of nonzero integral t (norm 1 by construction).
KElem random_norm_one(const FieldCtx& ctx, SweepRng& rng) {
    while (true) {
        KElem t = random_integral(ctx, rng, 3);
        if (t.is_zero()) continue;
        return t.conj() / t;
    }
}

GMat random_generated_unitary(const FieldCtx& ctx, SweepRng& rng, int factors = 3) {
    GMat g = GMat::identity(ctx);
    for (int i = 0; i < factors; ++i) {
        switch (rng.next(0, 2)) {
            case 0:
                g = g * n_of(random_integral(ctx, rng, 3), Rational(rng.next(-6, 6), rng.next(1, 3)));
                break;
            case 1:
                g = g * m_of(Rational(1), random_norm_one(ctx, rng), random_norm_one(ctx, rng));
                break;
            default: {
                long absD = -ctx.D();
                long c = rng.next(-2, 2), k = rng.next(-2, 2);
                // [[1, D b],[0,1]] * [[1,0],[c,1]] stays in SL_2(Z) with D | upper right
                long b = absD * k;
                long a = 1 + b * c;
                g = g * su2_embed(ctx, a, b, c, 1);
                break;
            }
        }
    }
    return g;
}

/// Interior sample points: geodesic points have lambda = t^2 > 0.
std::vector<PointZU> sample_points(const FieldCtx& ctx, SweepRng& rng, int n) {
    std::vector<PointZU> pts = {center_point(ctx)};
    while (static_cast<int>(pts.size()) < n) {
        KElem u = random_integral(ctx, rng, 2);
        pts.push_back(geodesic_point(u, Rational(rng.next(-4, 4), rng.next(1, 2)),
                                     Rational(rng.next(1, 3), rng.next(1, 2))));
    }
    return pts;
}

} // namespace

SuiteReport run_unitary_suite(const SuiteParams& params) {
    SuiteReport rep;
    rep.suite = "unitary";
    rep.seed = params.seed;
    rep.trials = params.trials;
    SweepRng rng(params.seed);
    auto add = [&rep](const std::string& id, const std::string& anchor, bool pass,
                      const std::string& detail = "") {
        rep.checks.push_back({id, anchor, pass, detail});
    };

    FieldCtx ctx(params.d);
    KElem delta = KElem::delta(ctx);
    Vec3K e1 = std_basis(ctx, 0), e2 = std_basis(ctx, 1), e3 = std_basis(ctx, 2);

    // hermitian pairing
    {
        bool ok = herm(e2, e2) == KElem::one(ctx);
        ok = ok && herm(e1, e3) == delta.inv();
        for (int i = 0; i < 30 && ok; ++i) {
            Vec3K u = random_vec(ctx, rng), v = random_vec(ctx, rng);
            ok = herm(v, u) == k_conj(herm(u, v));
        }
        add("unitary.herm", "(u,v) = conj(u)^t M v with M antidiagonal(1/delta, 1, -1/delta)", ok);
    }
    // polarization form
    {
        bool ok = true;
        for (int i = 0; i < 30 && ok; ++i) {
            Vec3K u = random_vec(ctx, rng), v = random_vec(ctx, rng);
            ok = polar(u, u) == 0;
            KElem two_h = herm(u, v) * Rational(2);
            KElem rhs = KElem(ctx, polar(u, vec3_scale(delta, v)), Rational(0)) +
                        delta * Rational(polar(u, v));
            ok = ok && two_h == rhs;
        }
        add("unitary.polar", "<u,v> = Im_delta (u,v) is alternating; 2(u,v) = <u,delta v> + delta<u,v>", ok);
    }
    // lambda
    {
        bool ok = lambda(center_point(ctx)) == 1;
        ok = ok && lambda({delta, KElem::zero(ctx)}) == 2;
        ok = ok && lambda({KElem::zero(ctx), KElem::zero(ctx)}) == 0;
        add("unitary.lambda", "lambda(z,u) = Im_delta(z) - u conj(u); positive on the interior", ok);
    }
    // similitude
    {
        bool ok = similitude(GMat::identity(ctx)) == Rational(1);
        for (int i = 0; i < 10 && ok; ++i)
            ok = similitude(n_of(random_integral(ctx, rng), Rational(rng.next(-5, 5)))) == Rational(1);
        Rational t(rng.next(1, 7), rng.next(1, 3));
        GMat tid = GMat::identity(ctx);
        for (int i = 0; i < 3; ++i) tid.at(i, i) = KElem(ctx, t, Rational(0));
        ok = ok && similitude(tid) == t * t;
        GMat bad = GMat::identity(ctx);
        bad.at(0, 1) = KElem::one(ctx);
        ok = ok && !similitude(bad).has_value();
        add("unitary.similitude", "(gu,gv) = mu (u,v) with mu rational; unipotents give mu = 1", ok);
    }
    // action and automorphy factor
    {
        PointZU x0 = center_point(ctx);
        bool ok = act(GMat::identity(ctx), x0).z == x0.z && j_factor(GMat::identity(ctx), x0) == KElem::one(ctx);
        for (int i = 0; i < params.count(20) && ok; ++i) {
            KElem s = random_integral(ctx, rng, 3);
            Rational r(rng.next(-6, 6), rng.next(1, 3));
            PointZU pt = sample_points(ctx, rng, 2)[1];
            PointZU got = act(n_of(s, r), pt);
            KElem zexp = pt.z + delta * k_conj(s) * (pt.u + s * Rational(1, 2)) + KElem(ctx, r, Rational(0));
            ok = got.z == zexp && got.u == pt.u + s && j_factor(n_of(s, r), pt) == KElem::one(ctx);
        }
        GMat m = m_of(Rational(1), -KElem::one(ctx), KElem::one(ctx));
        PointZU pt = sample_points(ctx, rng, 2)[1];
        PointZU got = act(m, pt);
        ok = ok && got.z == pt.z && got.u == -pt.u && j_factor(m, pt) == -KElem::one(ctx);
        add("unitary.act", "g(z,u,1)^t = j (z',u',1)^t; n(s,r)(z,u) = (z + delta conj(s)(u+s/2) + r, u+s)", ok);
    }
    // n/m constructors and the group law
    {
        bool ok = n_of(KElem::zero(ctx), Rational(0)) == GMat::identity(ctx);
        ok = ok && m_of(Rational(1), KElem::one(ctx), KElem::one(ctx)) == GMat::identity(ctx);
        for (int i = 0; i < params.count(20) && ok; ++i) {
            KElem s = random_integral(ctx, rng, 3), s2 = random_integral(ctx, rng, 3);
            Rational r(rng.next(-5, 5)), r2(rng.next(-5, 5));
            // product is n(s+s2, r+r2+corr) with corr = delta^2 Im_delta(conj(s) s2)/2
            Rational corr = Rational(ctx.D()) * im_delta(k_conj(s) * s2) / 2;
            ok = n_of(s, r) * n_of(s2, r2) == n_of(s + s2, r + r2 + corr);
            // inverse: n(-s, -r + corr') with corr' for the pair (s, -s)
            Rational corr_inv = Rational(ctx.D()) * im_delta(k_conj(s) * (-s)) / 2;
            ok = ok && n_of(s, r) * n_of(-s, -r + corr_inv) == GMat::identity(ctx);
        }
        add("unitary.nm.group", "n(s,r) n(s',r') = n(s+s', r+r'+c) with the pairing correction c", ok);
    }
    // cocycle identity
    {
        bool ok = true;
        auto pts = sample_points(ctx, rng, 5);
        for (int i = 0; i < params.count(50) && ok; ++i) {
            GMat g = random_generated_unitary(ctx, rng), h = random_generated_unitary(ctx, rng);
            for (const PointZU& x : pts) {
                try {
                    KElem lhs = j_factor(g * h, x);
                    KElem rhs = j_factor(g, act(h, x)) * j_factor(h, x);
                    if (!(lhs == rhs)) { ok = false; break; }
                } catch (const std::domain_error&) {
                    continue; // point maps to infinity; identity vacuous there
                }
            }
        }
        add("unitary.cocycle", "j(gh, x) = j(g, hx) j(h, x) on the generated subgroup", ok);
    }
    // lambda invariance
    {
        bool ok = true;
        auto pts = sample_points(ctx, rng, 5);
        for (int i = 0; i < params.count(50) && ok; ++i) {
            GMat g = random_generated_unitary(ctx, rng);
            for (const PointZU& x : pts) {
                try {
                    if (!lambda_transform_check(g, x)) { ok = false; break; }
                } catch (const std::domain_error&) {
                    continue;
                }
            }
        }
        ok = ok && lambda_transform_check(GMat::identity(ctx), center_point(ctx));
        add("unitary.lambda_invariance", "lambda(x) = lambda(gx) |j(g,x)|^2 exactly for unitary g", ok);
    }
    // Gamma_cusp membership and width
    {
        FieldCtx c3(-3);
        bool ok = gamma_cusp_member(KElem(c3, 4), Rational(12), 4, c3);
        ok = ok && !gamma_cusp_member(KElem(c3, 4), Rational(6), 4, c3);
        ok = ok && !gamma_cusp_member(KElem(c3, 2), Rational(12), 4, c3);
        // members act with automorphy factor identically 1
        auto pts = sample_points(ctx, rng, 3);
        for (int i = 0; i < 10 && ok; ++i) {
            KElem s = KElem(ctx, params.N) * random_integral(ctx, rng, 2);
            // r ranges over the membership lattice: N|D| Z, or (N|D|/2) Z
            Rational step = ctx.d_is_1_mod_4() ? Rational(params.N * -ctx.D())
                                               : Rational(params.N * -ctx.D(), 2);
            Rational r = step * rng.next(-3, 3);
            if (!gamma_cusp_member(s, r, params.N, ctx)) { ok = false; break; }
            for (const PointZU& x : pts)
                if (!(j_factor(n_of(s, r), x) == KElem::one(ctx))) { ok = false; break; }
        }
        add("unitary.gamma_cusp", "n(s,r) stabilizes the cusp iff s in N O_K, r in N|D|Z (or half)", ok);
    }
    {
        FieldCtx c3(-3), c1(-1), c7(-7);
        bool ok = cusp_width(4, c3) == 12 && cusp_width(4, c1) == 8 && cusp_width(2, c7) == 14;
        bool odd_rejected = false;
        try { cusp_width(3, c3); } catch (const std::invalid_argument&) { odd_rejected = true; }
        add("unitary.width", "M = N|D| for d = 1 mod 4, else N|D|/2; odd N unsupported", ok && odd_rejected);
    }
    // geodesics
    {
        bool ok = geodesic_point(KElem::zero(ctx), Rational(0), Rational(1)).z == center_point(ctx).z;
        for (int i = 0; i < params.count(20) && ok; ++i) {
            KElem u = random_integral(ctx, rng, 3);
            Rational t(rng.next(1, 9), rng.next(1, 4));
            ok = lambda(geodesic_point(u, Rational(rng.next(-5, 5)), t)) == t * t;
        }
        PointZU g1 = geodesic_point(KElem::one(ctx), Rational(0), Rational(1));
        ok = ok && g1.u == KElem::one(ctx) && lambda(g1) == 1;
        add("unitary.geodesic", "n(u,r) m(t,1) x0 = (r + delta(u conj u + t^2)/2, u); lambda = t^2", ok);
    }
    // lattices
    {
        bool ok = true;
        std::ostringstream det;
        for (long d : {-1L, -3L, -7L}) {
            FieldCtx c(d);
            ok = ok && self_dual(lattice_L0(c)) && self_dual(lattice_L1(c));
            det << "d=" << d << " ok ";
        }
        bool rejected = false;
        try {
            LatticeZBasis bad = {e1, vec3_scale(KElem::omega(ctx), e1), e2,
                                 vec3_scale(KElem::omega(ctx), e2), e3,
                                 vec3_scale(KElem::omega(ctx), e3)};
            lattice_gram(bad);
        } catch (const std::invalid_argument&) {
            rejected = true;
        }
        add("unitary.lattice.self_dual",
            "Gram matrices of L0 and L1 lie in GL_6(Z); non-integral pairings rejected", ok && rejected,
            det.str());
    }
    // embedded modular curve
    {
        long absD = -ctx.D();
        bool ok = gamma0D_member(ctx, 1, 0, 0, 1);
        ok = ok && similitude(su2_embed(ctx, 1, 0, 0, 1)) == Rational(1);
        ok = ok && gamma0D_member(ctx, 1, absD, 0, 1);
        ok = ok && similitude(su2_embed(ctx, 1, absD, 0, 1)) == Rational(1);
        if (absD > 1) ok = ok && !gamma0D_member(ctx, 1, 1, 0, 1);
        add("unitary.su2", "[[a,b],[c,d]] embeds through the middle; member of the D-level group iff D | b", ok);
    }

    rep.sort_canonical();
    return rep;
}

} // namespace picard
