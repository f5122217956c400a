#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "picard/frame.hpp"
#include "picard/semiab.hpp"

using namespace picard;

TEST_CASE("formal scalars") {
    FieldCtx ctx(-1);
    FormalScalar z = FormalScalar::variable_z(ctx), u = FormalScalar::variable_u(ctx);
    FormalScalar f = z * z + u * KElem(ctx, 3);
    CHECK(f.d_dz() == z * Rational(2));
    CHECK(f.d_du() == FormalScalar(ctx, KElem(ctx, 3)));
    CHECK(f.eval(KElem(ctx, 2), KElem(ctx, 1)) == KElem(ctx, 7));
    CHECK((f - f).is_zero());
    // grades add under multiplication and block mixed addition
    FormalScalar g = FormalScalar::two_pi_i(ctx, -1) * z;
    CHECK((g * g).grade() == -2);
    CHECK_THROWS_AS(g + z, std::logic_error);
    CHECK((FormalScalar(ctx) + g) == g);
}

TEST_CASE("moving basis vectors") {
    FieldCtx ctx(-1);
    MovingBasis mb = moving_basis(ctx);
    PointZU x{KElem::delta(ctx), KElem::zero(ctx)};
    Vec3K a3 = eval_formal_vec(mb.alpha[2], x);
    CHECK(a3[0].is_zero());
    CHECK(a3[1] == -KElem::one(ctx));
    CHECK(a3[2] == KElem::one(ctx));
    Vec3K a1p = eval_formal_vec(mb.alpha[3], x);
    CHECK(a1p[0].is_zero());
    CHECK(a1p[1] == KElem::omega(ctx));
    CHECK(a1p[2] == k_conj(KElem::omega(ctx)));
}

TEST_CASE("t_map carries the lattice generators to the fixed frame") {
    FieldCtx ctx(-1);
    MovingBasis mb = moving_basis(ctx);
    PointZU x = center_point(ctx);
    CHECK(t_map(x, eval_formal_vec(mb.alpha[0], x)) == vec3_scale(KElem::delta(ctx), std_basis(ctx, 0)));
    Vec3K a2_124 = vec3_scale(-KElem::one(ctx), eval_formal_vec(mb.alpha[1], x));
    CHECK(t_map(x, a2_124) == std_basis(ctx, 1));
    CHECK(t_map(x, eval_formal_vec(mb.alpha[2], x)) == std_basis(ctx, 2));

    CHECK_THROWS_AS(t_map({KElem::zero(ctx), KElem::zero(ctx)}, std_basis(ctx, 0)), std::domain_error);
}

TEST_CASE("Riemann matrix is the constant J") {
    auto J = riemann_J();
    for (long d : {-1L, -3L}) {
        FieldCtx ctx(d);
        for (const PointZU& x : {center_point(ctx), geodesic_point(KElem::one(ctx), Rational(1), Rational(2)),
                                 geodesic_point(KElem(ctx, 1, 1), Rational(-1, 2), Rational(1, 2))}) {
            auto G = riemann_matrix(x);
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) CHECK(G[i][j] == Rational(J[i][j]));
        }
    }
    CHECK(J[0][5] == 1);
    CHECK(J[1][4] == -1);
    CHECK(J[2][3] == 1);
}

TEST_CASE("frame determinant identity") {
    FieldCtx ctx(-3);
    CHECK(det_identity(center_point(ctx)));
    CHECK(det_identity({KElem::delta(ctx), KElem::zero(ctx)}));
    CHECK(det_identity(geodesic_point(KElem(ctx, 0, 1), Rational(5, 3), Rational(3, 2))));
}

TEST_CASE("Gauss-Manin and Kodaira-Spencer closed forms") {
    for (long d : {-1L, -3L, -7L}) {
        FieldCtx ctx(d);
        CHECK(ks(ctx, 1) == ks_closed_form(ctx, 1));
        CHECK(ks(ctx, 2) == ks_closed_form(ctx, 2));
        CHECK(ks(ctx, 1).du_coef.grade() == -1);
        CHECK(ks(ctx, 1).dz_coef.is_zero());
        CHECK(ks(ctx, 2).du_coef.is_zero());
    }
    FieldCtx ctx(-1);
    DeRhamOneForm g1 = gauss_manin(ctx, 1);
    DeRhamClass want = beta_unit(ctx, 2) + beta_unit(ctx, 5) * FormalScalar(ctx, KElem::omega(ctx));
    CHECK(g1.du_coef == want);
    CHECK(g1.dz_coef == derham_zero(ctx));
}

TEST_CASE("psi kills du and vanishes at the cusp") {
    FieldCtx ctx(-1);
    CHECK(psi(OneForm::du(ctx)).is_zero());
    FormalScalar A(ctx, KElem(ctx, 5));
    OneForm w = OneForm::dz(ctx) * A;
    CHECK(psi(w) == A * FormalScalar::two_pi_i(ctx, 1));
    PsiDqResult r = psi_dq(ctx, 8);
    CHECK(r.q_power == 1);
    CHECK(r.coefficient.grade() == 2);
}

TEST_CASE("semi-abelian splitting criterion") {
    FieldCtx gauss(-1);
    FracIdeal OK = FracIdeal::ring_of_integers(gauss);
    CHECK(semiab_split({OK, OK, KElem::one(gauss)}));
    CHECK(!semiab_split({OK, OK, KElem(gauss, Rational(1, 2), Rational(0))}));

    FracIdeal b = FracIdeal::principal(KElem(gauss, 1, 1));
    CHECK(semiab_split({OK, b, KElem(gauss, Rational(1, 2), Rational(-1, 2))}));
    CHECK(!semiab_split({OK, b, KElem(gauss, Rational(1, 2), Rational(0))}));

    CHECK(ext_iso(KElem(gauss, Rational(1, 2), Rational(0)), KElem(gauss, Rational(1, 2), Rational(0)) + KElem::one(gauss),
                  OK, OK));
}

TEST_CASE("multiplication by N on extension classes") {
    FieldCtx gauss(-1);
    CHECK(ExtMultN::kernel_order(gauss, 4) == 16);
    CHECK(ExtMultN::kernel_order(gauss, 3) == 9);
    CHECK(ExtMultN::image_is_zero(KElem(gauss, 2, -5)));
    CHECK(!ExtMultN::image_is_zero(KElem(gauss, Rational(1, 3), Rational(0))));
    CHECK(ExtMultN::well_defined(KElem(gauss, Rational(2, 7), Rational(0)), KElem(gauss, 1, 1), 4));
}
