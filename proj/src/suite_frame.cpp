#include "picard/frame.hpp"
#include "picard/semiab.hpp"
#include "picard/suites.hpp"

#include <sstream>

namespace picard {

namespace {

KElem random_integral(const FieldCtx& ctx, SweepRng& rng, long lim = 4) {
    return KElem::from_omega_coords(ctx, Rational(rng.next(-lim, lim)), Rational(rng.next(-lim, lim)));
}

KElem random_integral_nonzero(const FieldCtx& ctx, SweepRng& rng, long lim = 4) {
    while (true) {
        KElem x = random_integral(ctx, rng, lim);
        if (!x.is_zero()) return x;
    }
}

PointZU random_interior(const FieldCtx& ctx, SweepRng& rng) {
    KElem u = random_integral(ctx, rng, 2);
    return geodesic_point(u, Rational(rng.next(-4, 4), rng.next(1, 2)),
                          Rational(rng.next(1, 3), rng.next(1, 2)));
}

} // namespace

SuiteReport run_frame_suite(const SuiteParams& params) {
    SuiteReport rep;
    rep.suite = "frame";
    rep.seed = params.seed;
    rep.trials = params.trials;
    SweepRng rng(params.seed);
    auto add = [&rep](const std::string& id, const std::string& anchor, bool pass,
                      const std::string& detail = "") {
        rep.checks.push_back({id, anchor, pass, detail});
    };

    FieldCtx ctx(params.d);
    KElem delta = KElem::delta(ctx), omega = KElem::omega(ctx);

    // moving basis
    {
        MovingBasis mb = moving_basis(ctx);
        Vec3K a3 = eval_formal_vec(mb.alpha[2], {delta, KElem::zero(ctx)});
        bool ok = a3[0].is_zero() && a3[1] == -KElem::one(ctx) && a3[2] == KElem::one(ctx);
        Vec3K a1p = eval_formal_vec(mb.alpha[3], {delta, KElem::zero(ctx)});
        ok = ok && a1p[0].is_zero() && a1p[1] == omega && a1p[2] == k_conj(omega);
        // iota'(omega) consistency on all six
        PointZU x = random_interior(ctx, rng);
        for (int i = 0; i < 3 && ok; ++i) {
            Vec3K base = eval_formal_vec(mb.alpha[i], x);
            Vec3K primed = eval_formal_vec(mb.alpha[3 + i], x);
            ok = primed[0] == omega * base[0] && primed[1] == omega * base[1] &&
                 primed[2] == k_conj(omega) * base[2];
        }
        add("frame.moving_basis",
            "alpha_1 = (0,1,1), alpha_2 = (1,0,u), alpha_3 = (u,-z/delta,z/delta); primes via diag(w,w,conj w)",
            ok);
    }
    // T-map on the generators
    {
        bool ok = true;
        MovingBasis mb = moving_basis(ctx);
        for (int i = 0; i < 5 && ok; ++i) {
            PointZU x = (i == 0) ? center_point(ctx) : random_interior(ctx, rng);
            Vec3K a1 = eval_formal_vec(mb.alpha[0], x);
            Vec3K a2_124 = vec3_scale(-KElem::one(ctx), eval_formal_vec(mb.alpha[1], x));
            Vec3K a3 = eval_formal_vec(mb.alpha[2], x);
            Vec3K t1 = t_map(x, a1), t2 = t_map(x, a2_124), t3 = t_map(x, a3);
            ok = t1 == vec3_scale(delta, std_basis(ctx, 0)) && t2 == std_basis(ctx, 1) &&
                 t3 == std_basis(ctx, 2);
        }
        add("frame.t_map", "T sends the three lattice generators to delta e1, e2, e3", ok);
    }
    // Riemann matrix
    {
        bool ok = true;
        std::ostringstream det;
        auto J = riemann_J();
        for (long d : {-1L, -3L, -7L}) {
            FieldCtx c(d);
            SweepRng local(params.seed + d);
            for (int i = 0; i < 5 && ok; ++i) {
                PointZU x = (i == 0) ? center_point(c)
                                     : geodesic_point(random_integral(c, local, 2),
                                                      Rational(local.next(-4, 4), local.next(1, 2)),
                                                      Rational(local.next(1, 3), local.next(1, 2)));
                auto G = riemann_matrix(x);
                for (int r = 0; r < 6; ++r)
                    for (int s = 0; s < 6; ++s) {
                        if (G[r][s] != J[r][s]) ok = false;
                        if (G[r][s] != -G[s][r]) ok = false;
                    }
            }
            det << "d=" << d << (ok ? " ok " : " FAIL ");
        }
        add("frame.riemann_matrix",
            "pullback Riemann form on the moving basis is the constant antidiagonal J (1,-1,1,-1,1,-1)", ok,
            det.str());
    }
    // determinant identity
    {
        bool ok = det_identity(center_point(ctx));
        ok = ok && det_identity({delta, KElem::zero(ctx)});
        for (int i = 0; i < params.count(20) && ok; ++i) ok = det_identity(random_interior(ctx, rng));
        add("frame.det_identity", "det of the T-frame matrix equals delta lambda(z,u)^2", ok);
    }
    // d zeta in the beta basis
    {
        FormalScalar z = FormalScalar::variable_z(ctx), u = FormalScalar::variable_u(ctx);
        FormalScalar zero(ctx), one(ctx, KElem::one(ctx));
        KElem dinv = delta.inv(), wbar = k_conj(omega);
        DeRhamClass d1 = dzeta_in_beta(ctx, 1), d2 = dzeta_in_beta(ctx, 2), d3 = dzeta_in_beta(ctx, 3);
        bool ok = d1.c[0] == zero && d1.c[1] == one && d1.c[2] == u && d1.c[3] == zero &&
                  d1.c[4] == FormalScalar(ctx, omega) && d1.c[5] == u * omega;
        ok = ok && d2.c[0] == one && d2.c[1] == zero && d2.c[2] == -(z * dinv) &&
             d2.c[3] == FormalScalar(ctx, omega) && d2.c[4] == zero && d2.c[5] == -(z * (omega * dinv));
        ok = ok && d3.c[0] == one && d3.c[1] == u && d3.c[2] == z * dinv &&
             d3.c[3] == FormalScalar(ctx, wbar) && d3.c[4] == u * wbar && d3.c[5] == z * (wbar * dinv);
        add("frame.dzeta", "d zeta_i has beta-coordinates the i-th coordinates of the six alphas", ok);
    }
    // Gauss-Manin
    {
        KElem dinv = delta.inv(), wbar = k_conj(omega);
        DeRhamOneForm g1 = gauss_manin(ctx, 1), g2 = gauss_manin(ctx, 2), g3 = gauss_manin(ctx, 3);
        DeRhamClass b3w = beta_unit(ctx, 2) + beta_unit(ctx, 5) * FormalScalar(ctx, omega);
        DeRhamClass b3wbar = beta_unit(ctx, 2) + beta_unit(ctx, 5) * FormalScalar(ctx, wbar);
        DeRhamClass b2wbar = beta_unit(ctx, 1) + beta_unit(ctx, 4) * FormalScalar(ctx, wbar);
        bool ok = g1.du_coef == b3w && g1.dz_coef == derham_zero(ctx);
        ok = ok && g2.dz_coef == b3w * FormalScalar(ctx, -dinv) && g2.du_coef == derham_zero(ctx);
        ok = ok && g3.du_coef == b2wbar && g3.dz_coef == b3wbar * FormalScalar(ctx, dinv);
        add("frame.gauss_manin",
            "nabla d zeta_1 = (b3 + w b3') du; nabla d zeta_2 = -1/delta (b3 + w b3') dz; "
            "nabla d zeta_3 = (b2 + conj(w) b2') du + 1/delta (b3 + conj(w) b3') dz",
            ok);
    }
    // de Rham pairing
    {
        bool ok = derham_pairing(beta_unit(ctx, 0), beta_unit(ctx, 5)) == FormalScalar::two_pi_i(ctx, -1);
        ok = ok && derham_pairing(beta_unit(ctx, 1), beta_unit(ctx, 4)) ==
                       FormalScalar(ctx, -KElem::one(ctx), -1);
        for (int i = 0; i < 6 && ok; ++i)
            ok = derham_pairing(beta_unit(ctx, i), beta_unit(ctx, i)).is_zero();
        add("frame.derham_pairing", "pairing matrix on the beta basis is (2 pi i)^{-1} J", ok);
    }
    // Kodaira-Spencer: symbolic pipeline vs closed forms
    {
        bool ok = true;
        std::ostringstream det;
        for (long d : {-1L, -3L, -7L}) {
            FieldCtx c(d);
            OneForm k1 = ks(c, 1), k2 = ks(c, 2);
            bool this_ok = k1 == ks_closed_form(c, 1) && k2 == ks_closed_form(c, 2);
            this_ok = this_ok && k1.du_coef.is_constant_in_zu() && k2.dz_coef.is_constant_in_zu();
            this_ok = this_ok && k1.du_coef.grade() == -1 && k2.dz_coef.grade() == -1;
            ok = ok && this_ok;
            det << "d=" << d << (this_ok ? " ok " : " FAIL ");
        }
        // linearity
        FormalScalar c5(ctx, KElem(ctx, 5));
        DeRhamOneForm g1 = gauss_manin(ctx, 1);
        DeRhamClass d3 = dzeta_in_beta(ctx, 3);
        ok = ok && derham_pairing(g1.du_coef * c5, d3) == ks(ctx, 1).du_coef * c5;
        add("frame.ks",
            "KS(dzeta1 x dzeta3) = -delta (2 pi i)^{-1} du and KS(dzeta2 x dzeta3) = (2 pi i)^{-1} dz, "
            "all z,u dependence cancelling",
            ok, det.str());
    }
    // psi
    {
        bool ok = psi(OneForm::du(ctx)).is_zero();
        FormalScalar A(ctx, KElem(ctx, 3)), B(ctx, KElem(ctx, 7));
        OneForm form = OneForm::dz(ctx) * A + OneForm::du(ctx) * B;
        ok = ok && psi(form) == A * FormalScalar::two_pi_i(ctx, 1);
        long M = cusp_width(params.N, ctx);
        PsiDqResult pd = psi_dq(ctx, M);
        // dq = (2 pi i / M) q dz, so psi(dq) = (2 pi i / M) q psi(dz)
        FormalScalar expect =
            psi(OneForm::dz(ctx)) * FormalScalar(ctx, KElem(ctx, Rational(1, M), Rational(0)), 1);
        ok = ok && pd.q_power == 1 && pd.coefficient == expect;
        add("frame.psi", "psi kills du, sends dz to 2 pi i dzeta2 x dzeta3; psi(dq) vanishes at q = 0", ok);
    }
    // semi-abelian splitting
    {
        FracIdeal OK = FracIdeal::ring_of_integers(ctx);
        bool ok = semiab_split({OK, OK, KElem::one(ctx)});
        ok = ok && !semiab_split({OK, OK, KElem(ctx, Rational(1, 2), Rational(0))});
        FieldCtx gauss(-1);
        FracIdeal gOK = FracIdeal::ring_of_integers(gauss);
        FracIdeal b = FracIdeal::principal(KElem(gauss, Rational(1), Rational(1)));
        ok = ok && semiab_split({gOK, b, KElem(gauss, Rational(1, 2), Rational(-1, 2))});
        ok = ok && !semiab_split({gOK, b, KElem(gauss, Rational(1, 2), Rational(0))});
        add("frame.semiab.split", "the degenerate fiber splits iff u lies in conj(a) conj(b)^{-1}", ok);
    }
    {
        // invariance under translation by ideal elements, and additivity
        FracIdeal A = FracIdeal::principal(random_integral_nonzero(ctx, rng, 3));
        FracIdeal B = FracIdeal::principal(random_integral_nonzero(ctx, rng, 3));
        FracIdeal I = ext_param_ideal(A, B);
        auto basis = I.zbasis();
        bool ok = true;
        for (int i = 0; i < params.count(20) && ok; ++i) {
            KElem u = KElem(ctx, Rational(rng.next(-5, 5), rng.next(1, 3)), Rational(rng.next(-5, 5), rng.next(1, 3)));
            KElem shift = basis[0] * Rational(rng.next(-4, 4)) + basis[1] * Rational(rng.next(-4, 4));
            ok = semiab_split({A, B, u}) == semiab_split({A, B, u + shift});
            ok = ok && ext_iso(u, u + shift, A, B);
        }
        // additivity on the split locus
        KElem u1 = basis[0] * Rational(2), u2 = basis[1] * Rational(-3);
        ok = ok && semiab_split({A, B, u1}) && semiab_split({A, B, u2}) && semiab_split({A, B, u1 + u2});
        add("frame.semiab.invariance", "splitting depends on u only modulo conj(a) conj(b)^{-1}; additive", ok);
    }
    {
        FieldCtx gauss(-1);
        bool ok = ExtMultN::kernel_order(gauss, 4) == 16;
        ok = ok && ExtMultN::image_is_zero(KElem(gauss, 5));
        ok = ok && !ExtMultN::image_is_zero(KElem(gauss, Rational(1, 2), Rational(0)));
        for (int i = 0; i < params.count(20) && ok; ++i) {
            KElem s = random_integral(gauss, rng, 5);
            ok = ExtMultN::well_defined(KElem(gauss, Rational(1, 3), Rational(0)), s, 4);
        }
        add("frame.semiab.mult_n", "K/N O_K -> K/O_K has kernel of order N^2 (enumerated)", ok);
    }
    // the seeded split-vs-oracle sweep
    {
        bool ok = true;
        long n = params.count(50);
        for (long i = 0; i < n && ok; ++i) {
            KElem x = random_integral_nonzero(ctx, rng, 4);
            KElem y = random_integral_nonzero(ctx, rng, 4);
            FracIdeal A = FracIdeal::principal(x), B = FracIdeal::principal(y);
            KElem u = KElem(ctx, Rational(rng.next(-6, 6), rng.next(1, 4)),
                            Rational(rng.next(-6, 6), rng.next(1, 4)));
            // direct oracle: u in (conj x / conj y) O_K iff u conj(y)/conj(x) is integral
            bool oracle = (u * k_conj(y) / k_conj(x)).is_integral();
            ok = semiab_split({A, B, u}) == oracle;
        }
        add("frame.semiab.oracle",
            "splitting agrees with the principal-ideal membership oracle u conj(b)/conj(a) integral", ok,
            std::to_string(n) + " triples");
    }

    rep.sort_canonical();
    return rep;
}

} // namespace picard
