#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "picard/json_io.hpp"

#include <random>

using namespace picard;

TEST_CASE("KElem JSON round trip") {
    const FieldCtx& ctx = field_ctx_of(-7);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i) {
        KElem x(ctx, Rational(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 6)),
                Rational(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 6)));
        json j = kelem_to_json(x);
        CHECK(kelem_from_json(j) == x);
        CHECK(j.at("d") == -7);
    }
    json j = kelem_to_json(KElem(ctx, Rational(1, 2), Rational(-3, 4)));
    CHECK(j.at("a") == "1/2");
    CHECK(j.at("b") == "-3/4");
}

TEST_CASE("FqElem JSON round trip") {
    const FqCtx& ctx = fq_ctx_of(5, -3);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 20; ++i) {
        FqElem x(ctx, static_cast<long>(rng() % 5), static_cast<long>(rng() % 5));
        CHECK(fqelem_from_json(fqelem_to_json(x)) == x);
    }
}

TEST_CASE("GMat JSON round trip") {
    const FieldCtx& ctx = field_ctx_of(-1);
    GMat g = n_of(KElem(ctx, 2, 1), Rational(5, 3)) * m_of(Rational(1), -KElem::one(ctx), KElem::one(ctx));
    CHECK(gmat_from_json(gmat_to_json(g)) == g);
}

TEST_CASE("module JSON round trip and fixed basis order") {
    const FqCtx& ctx = fq_ctx_of(3, -1);
    UnitaryDModule B = braid3(ctx);
    json j = module_to_json(B);
    UnitaryDModule B2 = module_from_json(j);
    CHECK(B2.V == B.V);
    CHECK(B2.F == B.F);
    CHECK(stratify(B2) == Stratum::GeneralSupersingular);
    // basis order e1,e2,f3,f1,f2,e3: V e2 = f3^(p) sits at row 2, column 1
    CHECK(j.at("V").at(2).at(1).at("c").at(0) == 1);
}

TEST_CASE("expansion JSON round trip") {
    const FqCtx& ctx = fq_ctx_of(3, -1);
    std::mt19937_64 rng(3);
    std::vector<FqPoly> c;
    for (int m = 0; m < 9; ++m) {
        std::vector<FqElem> poly;
        for (unsigned k = 0; k <= rng() % 3; ++k)
            poly.push_back(FqElem(ctx, static_cast<long>(rng() % 3), static_cast<long>(rng() % 3)));
        c.push_back(FqPoly(ctx, std::move(poly)));
    }
    QExpansion f(ctx, 4, 2, 7, std::move(c));
    QExpansion f2 = qexp_from_json(qexp_to_json(f));
    CHECK(f2.coefficients_equal(f));
    CHECK(f2.weight() == 7);
    CHECK(f2.M() == 2);
    CHECK(f2.N() == 4);
    // theta commutes with the round trip
    CHECK(qexp_from_json(qexp_to_json(theta(f))).coefficients_equal(theta(f2)));
}

TEST_CASE("WLaurent JSON round trip") {
    const FqCtx& ctx = fq_ctx_of(3, -1);
    FqPoly one = FqPoly::constant(FqElem::one(ctx));
    FqPoly vlin(ctx, {FqElem(ctx, 2), FqElem(ctx, 1)});
    WLaurent g = WLaurent::monomial(ctx, -4, one) + WLaurent::monomial(ctx, -2, vlin);
    WLaurent g2 = wlaurent_from_json(wlaurent_to_json(g));
    CHECK(g2.min_degree() == g.min_degree());
    CHECK(g2.coeff(-4) == one);
    CHECK(g2.coeff(-2) == vlin);
    CHECK(g2.coeff(-3).is_zero());
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS(kelem_from_json(json{{"d", -1}, {"a", "x"}, {"b", "0"}}));
    CHECK_THROWS(fqelem_from_json(json{{"p", 4}, {"d", -1}, {"c", {0, 0}}}));
    CHECK_THROWS(qexp_from_json(json{{"p", 3}, {"d", -1}}));
}
