#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "picard/unitary.hpp"

using namespace picard;

TEST_CASE("hermitian form on the standard basis") {
    FieldCtx ctx(-3);
    Vec3K e1 = std_basis(ctx, 0), e2 = std_basis(ctx, 1), e3 = std_basis(ctx, 2);
    CHECK(herm(e2, e2) == KElem::one(ctx));
    CHECK(herm(e1, e3) == KElem::delta(ctx).inv());
    CHECK(herm(e3, e1) == -KElem::delta(ctx).inv());
    CHECK(herm(e1, e1).is_zero());
}

TEST_CASE("lambda values") {
    FieldCtx ctx(-1);
    CHECK(lambda(center_point(ctx)) == 1);
    CHECK(lambda({KElem::delta(ctx), KElem::zero(ctx)}) == 2);
    CHECK(lambda({KElem::zero(ctx), KElem::zero(ctx)}) == 0);
}

TEST_CASE("similitude factors") {
    FieldCtx ctx(-1);
    CHECK(similitude(GMat::identity(ctx)) == Rational(1));
    GMat two = GMat::identity(ctx);
    for (int i = 0; i < 3; ++i) two.at(i, i) = KElem(ctx, 2);
    CHECK(similitude(two) == Rational(4));
    GMat bad = GMat::identity(ctx);
    bad.at(0, 1) = KElem::one(ctx);
    CHECK(!similitude(bad).has_value());
    CHECK(is_unitary(n_of(KElem(ctx, 1, 2) * KElem::omega(ctx), Rational(5, 3))));
}

TEST_CASE("unipotent action closed form") {
    FieldCtx ctx(-1);
    KElem s = KElem(ctx, Rational(2), Rational(1));
    Rational r(3, 2);
    PointZU x = geodesic_point(KElem::one(ctx), Rational(1, 2), Rational(2));
    PointZU y = act(n_of(s, r), x);
    KElem delta = KElem::delta(ctx);
    CHECK(y.z == x.z + delta * k_conj(s) * (x.u + s * Rational(1, 2)) + KElem(ctx, r, Rational(0)));
    CHECK(y.u == x.u + s);
    CHECK(j_factor(n_of(s, r), x) == KElem::one(ctx));
    CHECK(lambda(y) == lambda(x)); // the unipotent group preserves lambda

    // diag(-1, 1, -1) flips u and has automorphy factor -1
    GMat m = m_of(Rational(1), -KElem::one(ctx), KElem::one(ctx));
    PointZU z = act(m, x);
    CHECK(z.z == x.z);
    CHECK(z.u == -x.u);
    CHECK(j_factor(m, x) == -KElem::one(ctx));
}

TEST_CASE("action throws at infinity") {
    FieldCtx ctx(-1);
    GMat w = su2_embed(ctx, 0, -1, 1, 0);
    CHECK_THROWS_AS(act(w, PointZU{KElem::zero(ctx), KElem::zero(ctx)}), std::domain_error);
}

TEST_CASE("lambda invariance for an embedded SL2 element") {
    FieldCtx ctx(-1);
    GMat g = su2_embed(ctx, 1, -4, 1, -3); // det = -3 + 4 = 1
    PointZU x = center_point(ctx);
    CHECK(lambda_transform_check(g, x));
    GMat h = su2_embed(ctx, 0, -1, 1, 0);
    CHECK(lambda_transform_check(h, x));
}

TEST_CASE("cusp stabilizer membership and width") {
    FieldCtx c3(-3);
    CHECK(gamma_cusp_member(KElem(c3, 4), Rational(12), 4, c3));
    CHECK(!gamma_cusp_member(KElem(c3, 4), Rational(6), 4, c3));
    CHECK(!gamma_cusp_member(KElem(c3, 2), Rational(12), 4, c3));
    CHECK_THROWS_AS(gamma_cusp_member(KElem(c3, 4), Rational(12), 3, c3), std::invalid_argument);

    CHECK(cusp_width(4, c3) == 12);
    CHECK(cusp_width(4, FieldCtx(-1)) == 8);
    CHECK(cusp_width(2, FieldCtx(-7)) == 14);
    CHECK_THROWS_AS(cusp_width(5, c3), std::invalid_argument);
}

TEST_CASE("geodesic points") {
    FieldCtx ctx(-2);
    PointZU x0 = geodesic_point(KElem::zero(ctx), Rational(0), Rational(1));
    CHECK(x0.z == center_point(ctx).z);
    CHECK(x0.u.is_zero());
    PointZU g = geodesic_point(KElem::one(ctx), Rational(0), Rational(1));
    CHECK(g.u == KElem::one(ctx));
    CHECK(lambda(g) == 1);
    CHECK(lambda(geodesic_point(KElem(ctx, 1, 1), Rational(-2, 3), Rational(5, 4))) == Rational(25, 16));
    CHECK_THROWS_AS(geodesic_point(KElem::one(ctx), Rational(0), Rational(0)), std::invalid_argument);
}

TEST_CASE("self-dual lattices") {
    for (long d : {-1L, -3L, -7L}) {
        FieldCtx ctx(d);
        CHECK(self_dual(lattice_L0(ctx)));
        CHECK(self_dual(lattice_L1(ctx)));
    }
    // the plain standard basis has delta^{-1} pairings: rejected
    FieldCtx ctx(-3);
    LatticeZBasis bad = {std_basis(ctx, 0),
                         vec3_scale(KElem::omega(ctx), std_basis(ctx, 0)),
                         std_basis(ctx, 1),
                         vec3_scale(KElem::omega(ctx), std_basis(ctx, 1)),
                         std_basis(ctx, 2),
                         vec3_scale(KElem::omega(ctx), std_basis(ctx, 2))};
    CHECK_THROWS_AS(lattice_gram(bad), std::invalid_argument);
}

TEST_CASE("embedded modular group") {
    FieldCtx c7(-7);
    long absD = 7;
    CHECK(gamma0D_member(c7, 1, 0, 0, 1));
    CHECK(gamma0D_member(c7, 1, absD, 0, 1));
    CHECK(!gamma0D_member(c7, 1, 1, 0, 1));
    CHECK(similitude(su2_embed(c7, 1, absD, 0, 1)) == Rational(1));
    CHECK(similitude(su2_embed(c7, 2, 7, 1, 4)) == Rational(1));
    CHECK_THROWS_AS(su2_embed(c7, 1, 1, 1, 1), std::invalid_argument);
}
