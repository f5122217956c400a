#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "picard/deform.hpp"
#include "picard/locus.hpp"
#include "picard/wlaurent.hpp"

using namespace picard;
using namespace picard::dbasis;

TEST_CASE("truncated ring arithmetic") {
    FqCtx ctx(3, -1);
    TruncElem u = TruncElem::var_u(ctx), v = TruncElem::var_v(ctx);
    CHECK((u * u).is_zero());
    CHECK((u * v).is_zero());
    TruncElem x = TruncElem::constant(FqElem(ctx, 2)) + u;
    TruncElem y = TruncElem::constant(FqElem(ctx, 1)) + v;
    TruncElem xy = x * y;
    CHECK(xy.c == FqElem(ctx, 2));
    CHECK(xy.cu == FqElem(ctx, 1));
    CHECK(xy.cv == FqElem(ctx, 2));
}

TEST_CASE("Omega_R relations") {
    FqCtx ctx(3, -1);
    FqElem one = FqElem::one(ctx), zero = FqElem::zero(ctx);
    // u du = 0
    OmegaR udu = OmegaR::make(TruncElem::var_u(ctx), TruncElem::zero(ctx));
    CHECK(udu.is_zero());
    // v dv = 0
    OmegaR vdv = OmegaR::make(TruncElem::zero(ctx), TruncElem::var_v(ctx));
    CHECK(vdv.is_zero());
    // u dv = -v du
    OmegaR udv = OmegaR::make(TruncElem::zero(ctx), TruncElem::var_u(ctx));
    CHECK(udv == OmegaR{zero, -one, zero});
    // d on R
    TruncElem g = TruncElem::constant(FqElem(ctx, 2)) + TruncElem::var_u(ctx) +
                  TruncElem::var_v(ctx) * TruncElem::constant(FqElem(ctx, 2));
    CHECK(trunc_d(g) == OmegaR{one, zero, FqElem(ctx, 2)});
}

TEST_CASE("universal Hodge family and the gss equation") {
    for (long p : {3L, 5L}) {
        FqCtx ctx(p, p == 5 ? -3 : -1);
        UnitaryDModule B = braid3(ctx);
        HodgeFamily fam = universal_hodge(B);
        CHECK(trunc_pair(ctx, fam.p1, fam.ell).is_zero());
        CHECK(trunc_pair(ctx, fam.p2, fam.ell).is_zero());
        CHECK(trunc_pair(ctx, fam.p1, fam.p2).is_zero());
        CHECK(gss_equation(fam, B) == TruncElem::var_u(ctx));
        TruncVec img = trunc_apply(B.V, fam.ell);
        CHECK(img[E1] == TruncElem::constant(FqElem::one(ctx)));
        CHECK(img[E2] == -TruncElem::var_u(ctx));
        for (int i : {F1, F2, F3}) CHECK(img[i].is_zero());

        UnitaryDModule S = model_superspecial(ctx);
        CHECK_THROWS_AS(gss_equation(universal_hodge(S), S), std::invalid_argument);
    }
}

TEST_CASE("first-order Gauss-Manin formula") {
    FqCtx ctx(3, -1);
    UnitaryDModule B = braid3(ctx);
    HodgeFamily fam = universal_hodge(B);
    FqElem one = FqElem::one(ctx), zero = FqElem::zero(ctx);

    auto n1 = nabla_first_order(TruncElem::constant(one), fam);
    CHECK(n1[E3] == OmegaR{one, zero, zero});
    for (int i = 0; i < 6; ++i)
        if (i != E3) CHECK(n1[i].is_zero());

    auto n2 = nabla_first_order(TruncElem::var_u(ctx), fam);
    CHECK(n2[E1] == OmegaR{one, zero, zero});
    CHECK(n2[E3].is_zero());

    auto n3 = nabla_first_order(TruncElem::var_v(ctx), fam);
    CHECK(n3[E1] == OmegaR{zero, zero, one});
    CHECK(n3[E3].is_zero());
}

TEST_CASE("KS restriction check and its mutation") {
    FqCtx ctx(3, -1);
    CHECK(ks_restriction_check(braid3(ctx)));

    UnitaryDModule B = braid3(ctx);
    FqMat Vm(ctx, 6, 6), Fm(ctx, 6, 6);
    auto perm = [](int i) { return i == E3 ? F2 : (i == F2 ? E3 : i); };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            Vm.at(perm(i), perm(j)) = B.V.at(i, j);
            Fm.at(perm(i), perm(j)) = B.F.at(i, j);
        }
    CHECK(!ks_restriction_check(UnitaryDModule(ctx, Vm, Fm)));
}

TEST_CASE("theta valuation ledger") {
    FqCtx ctx(3, -1);
    ValuationLedger led{3};
    FqPoly one = FqPoly::constant(FqElem::one(ctx));

    auto tv = theta_valuation(4, WLaurent::monomial(ctx, -4, one), led);
    CHECK(!tv.vanishes);
    CHECK(tv.value == 0);

    CHECK(theta_valuation(5, WLaurent::monomial(ctx, 0, one), led).vanishes);
    CHECK(theta_valuation(6, WLaurent::monomial(ctx, -6, one), led).vanishes); // p | 6, constant in v

    // g = w^{-k} + v w^{1-k}: du-term at -k, dv-term at 1-k
    FqPoly v_lin(ctx, {FqElem::zero(ctx), FqElem::one(ctx)});
    WLaurent g = WLaurent::monomial(ctx, -4, one) + WLaurent::monomial(ctx, -3, v_lin);
    auto tv2 = theta_valuation(4, g, led);
    CHECK(!tv2.vanishes);
    CHECK(tv2.value == 0); // min(l = -4 du-term, l = -3 dv-term) + 4

    CHECK_THROWS_AS(theta_valuation(1, WLaurent::monomial(ctx, -2, one), led), std::invalid_argument);
}

TEST_CASE("branch factorization") {
    FqCtx c3(3, -1);
    auto roots3 = branch_factorization(c3); // certifies count 4, distinct, product
    CHECK(roots3.size() == 4);
    FqCtx c5(5, -3);
    CHECK(branch_factorization(c5).size() == 6);
    // independent check: each root has zeta^{p+1} = -1
    for (const FqElem& z : roots3) CHECK(z.pow(4) == -FqElem::one(c3));
}

TEST_CASE("Fermat point counts") {
    CHECK(fermat_count(FqCtx(3, -1)) == 28);
    CHECK(fermat_count(FqCtx(5, -3)) == 126);
    CHECK(fermat_count(FqCtx(7, -1)) == 344);
    for (long p : {3L, 5L, 7L}) {
        FqCtx ctx(p, p == 5 ? -3 : -1);
        CHECK(fermat_count(ctx) == p * p * p + 1);
    }
    CHECK_THROWS_AS(fermat_count(FqCtx(13, -2)), std::invalid_argument); // enumeration guard
}

TEST_CASE("Igusa local record") {
    IgusaLocal rec = igusa_local(FqCtx(3, -1));
    CHECK(rec.degree == 8);
    CHECK(rec.ramification_index == 8);
    CHECK(rec.gss_relation_degree == 8);
    CHECK(rec.ssp_branch_count == 4);
    CHECK(rec.branch_degree_divides);
}
