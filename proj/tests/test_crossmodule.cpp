#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "picard/fj.hpp"
#include "picard/frame.hpp"
#include "picard/locus.hpp"
#include "picard/weights.hpp"

using namespace picard;

TEST_CASE("expansions with the geometric cusp width") {
    // d = -1, N = 4 gives M = 8, a unit mod 3
    FieldCtx field(-1);
    FqCtx ctx(3, -1);
    long M = cusp_width(4, field);
    CHECK(M == 8);
    std::vector<FqPoly> c;
    for (int i = 0; i < 6; ++i) c.push_back(FqPoly::constant(FqElem(ctx, i)));
    QExpansion f(ctx, 4, M, 2, std::move(c));
    QExpansion tf = theta(f);
    // M = 8 = 2 mod 3, so M^{-1} = 2
    CHECK(tf.coeff(1) == FqPoly::constant(FqElem(ctx, 2)));
    CHECK(tf.coeff(2) == FqPoly::constant(FqElem(ctx, 2 * 2 * 2)));
    CHECK(tf.coeff(3).is_zero());

    // a width divisible by p is rejected; the in-scope geometric widths
    // never are, since p is prime to 2ND
    CHECK(cusp_width(4, FieldCtx(-3)) == 12);
    std::vector<FqPoly> c2(3, FqPoly(ctx));
    CHECK_THROWS_AS(QExpansion(ctx, 4, 12, 0, std::move(c2)), std::invalid_argument);
}

TEST_CASE("the Hasse weight matches the unit group order at level one") {
    for (long p : {3L, 5L}) {
        long d = (p == 5) ? -3 : -1;
        FqCtx ctx(p, d);
        MockForm h = hasse_element(ctx, 4, p + 2, 8);
        // weight p^2-1 is the exponent of Delta(p), so h/a^{p^2-1} is
        // Galois-invariant and the weight character is trivial
        CHECK(h.expansion.weight() == delta_group_exponent(p, d, 1));
        for (const FqElem& g : FqElem::all(ctx)) {
            if (g.is_zero()) continue;
            CHECK(weight_char(h.expansion.weight(), g) == FqElem::one(ctx));
        }
    }
}

TEST_CASE("the drop size equals the Hasse weight") {
    // one theta-cycle drop subtracts exactly the weight of the Hasse element
    for (long p : {3L, 5L, 7L}) {
        long d = (p == 5) ? -3 : -1;
        FqCtx ctx(p, d);
        MockForm h = hasse_element(ctx, 4, p + 2, 4);
        std::vector<long> w = theta_cycle({p, p * p, 0});
        long drop_size = (w[0] + p + 1) - w[1];
        CHECK(drop_size == h.expansion.weight());
    }
}

TEST_CASE("Igusa cover degree ties the strata to the weight lattice") {
    FqCtx ctx(3, -1);
    IgusaLocal rec = igusa_local(ctx);
    // the cover degree is the Hasse weight and the level-one exponent
    CHECK(rec.degree == delta_group_exponent(3, -1, 1));
    CHECK(rec.degree == hasse_element(ctx, 4, 5, 4).expansion.weight());
    // branch count at a superspecial point divides the cover degree
    CHECK(rec.degree % rec.ssp_branch_count == 0);
}
