#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "picard/ideal.hpp"
#include "picard/weights.hpp"

#include <random>

using namespace picard;

TEST_CASE("conjugation is the nontrivial involution") {
    FieldCtx c7(-7);
    CHECK(k_conj(KElem::sqrt_d(c7)) == -KElem::sqrt_d(c7));
    // d = 1 mod 4: conj(omega) = (1 - sqrt d)/2
    CHECK(k_conj(KElem::omega(c7)) == KElem(c7, Rational(1, 2), Rational(-1, 2)));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        KElem x(c7, Rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 4)),
                Rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 4)));
        CHECK(k_conj(k_conj(x)) == x);
        CHECK(x.norm() >= 0);
        CHECK((x * k_conj(x)).is_rational());
    }
}

TEST_CASE("im_delta evaluates exactly") {
    FieldCtx c7(-7);
    CHECK(im_delta(KElem::delta(c7) * Rational(1, 2)) == Rational(1));
    CHECK(im_delta(KElem(c7, Rational(7, 3), Rational(0))) == 0);

    FieldCtx c1(-1);
    CHECK(im_delta(KElem::sqrt_d(c1)) == Rational(1)); // delta = 2 sqrt(-1)
}

TEST_CASE("integrality against the omega basis") {
    FieldCtx c3(-3);
    CHECK(KElem::omega(c3).is_integral());
    CHECK(!KElem(c3, Rational(1, 2), Rational(0)).is_integral());
    CHECK(KElem(c3, Rational(1, 2), Rational(1, 2)).is_integral());
    FieldCtx c2(-2);
    CHECK(!KElem(c2, Rational(1, 2), Rational(1, 2)).is_integral());
    CHECK(KElem(c2, Rational(4), Rational(-3)).is_integral());
}

TEST_CASE("ideal membership") {
    FieldCtx c5(-5);
    FracIdeal OK = FracIdeal::ring_of_integers(c5);
    CHECK(!ideal_member(KElem(c5, Rational(1, 2), Rational(0)), OK));
    CHECK(ideal_member(KElem::omega(c5), OK));

    FieldCtx c1(-1);
    KElem g(c1, Rational(1, 2), Rational(1, 2));
    CHECK(ideal_member(g, FracIdeal::principal(g)));
}

TEST_CASE("ideal arithmetic") {
    FieldCtx ctx(-3);
    FracIdeal OK = FracIdeal::ring_of_integers(ctx);
    CHECK(ideal_mul(FracIdeal::principal(KElem(ctx, 2)),
                    FracIdeal::principal(KElem(ctx, Rational(1, 2), Rational(0)))) == OK);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        KElem x = KElem::from_omega_coords(ctx, Rational(static_cast<long>(rng() % 9) - 4),
                                           Rational(static_cast<long>(rng() % 9) - 4));
        if (x.is_zero()) continue;
        CHECK(ideal_conj(FracIdeal::principal(x)) == FracIdeal::principal(k_conj(x)));
        FracIdeal A = FracIdeal::principal(x);
        CHECK(ideal_mul(ideal_conj(A), ideal_inv(ideal_conj(A))) == OK);
    }

    CHECK_THROWS_AS(FracIdeal::principal(KElem::zero(ctx)), std::invalid_argument);
    // a Z-module that is not O_K-stable is rejected
    CHECK_THROWS_AS(FracIdeal::from_zbasis(ctx, {KElem::one(ctx), KElem(ctx, 5)}), std::invalid_argument);
}

TEST_CASE("ideal norms and canonical forms") {
    std::mt19937_64 rng(17);
    for (long d : {-1L, -2L, -3L, -7L}) {
        FieldCtx ctx(d);
        for (int i = 0; i < 15; ++i) {
            KElem x = KElem::from_omega_coords(ctx, Rational(static_cast<long>(rng() % 11) - 5),
                                               Rational(static_cast<long>(rng() % 11) - 5));
            KElem y = KElem::from_omega_coords(ctx, Rational(static_cast<long>(rng() % 11) - 5),
                                               Rational(static_cast<long>(rng() % 11) - 5));
            if (x.is_zero() || y.is_zero()) continue;
            // the field norm is the module index of a principal ideal
            FracIdeal X = FracIdeal::principal(x);
            CHECK(X.ideal_norm() == x.norm());
            CHECK(ideal_mul(X, FracIdeal::principal(y)).ideal_norm() == x.norm() * y.norm());
            // the reduced form does not depend on the generating set handed in
            auto b = X.zbasis();
            FracIdeal shuffled = FracIdeal::from_zbasis(
                ctx, {b[1], b[0] + b[1] * Rational(static_cast<long>(rng() % 7) - 3), b[0]});
            CHECK(shuffled == X);
        }
    }
}

TEST_CASE("residue field and Frobenius") {
    FieldCtx c1(-1);
    FqCtx f9(3, -1);
    FqElem s = fq_reduce(KElem::sqrt_d(c1), f9);
    CHECK(s * s == FqElem(f9, -1));
    CHECK(fq_reduce(KElem(c1, 3), f9).is_zero());

    // half-integers reduce through the inverse of 2 when d = 1 mod 4
    FieldCtx c7(-7);
    FqCtx f9b(3, -7);
    CHECK(fq_reduce(KElem::omega(c7), f9b) ==
          (FqElem::one(f9b) + FqElem::gen_s(f9b)) * FqElem(f9b, 2).inv());

    // sigma_bar(s) = s^3 = -s
    CHECK(sigma_bar(FqElem::gen_s(f9)) == FqElem::gen_s(f9).pow(3));
    CHECK(sigma_bar(FqElem::gen_s(f9)) == -FqElem::gen_s(f9));
    for (const FqElem& x : FqElem::all(f9)) {
        CHECK(sigma_bar(sigma_bar(x)) == x);
        if (x.in_prime_field()) CHECK(sigma_bar(x) == x);
    }

    CHECK_THROWS_AS(FqCtx(5, -1), std::invalid_argument);  // -1 is a square mod 5
    CHECK_THROWS_AS(FqCtx(4, -1), std::invalid_argument);  // not prime
    CHECK_THROWS_AS(fq_reduce(KElem(c1, Rational(1, 2), Rational(0)), f9), std::invalid_argument);
}

TEST_CASE("unit group exponents, brute force") {
    CHECK(delta_group_exponent(3, -1, 1) == 8);
    CHECK(delta_group_exponent(3, -1, 2) == 24);
    CHECK(delta_group_exponent(5, -3, 1) == 24);
    CHECK(delta_group_exponent(7, -1, 2) == 336);
    CHECK_THROWS_AS(delta_group_exponent(3, -1, 12), std::invalid_argument);
}

TEST_CASE("character equality, two routes") {
    CHECK(char_equal(2, 10, 3, -1, 1));
    CHECK(!char_equal(2, 3, 3, -1, 1));
    CHECK(!char_equal(2, 10, 3, -1, 2));
    CHECK(char_equal(2, 2 + 24, 3, -1, 2));
}

TEST_CASE("bi-weight canonicalization and characters") {
    BiWeight bw{PadicWeight::make(3, 2, {1, 2}), PadicWeight::make(3, 5, {0, 1})};
    BiWeight c = biweight_canonical(bw, 3);
    CHECK(c.k1.w == 0);
    CHECK(c.k2.w == 3); // 3*2+5 = 11 = 3 mod 8
    CHECK(c.k1.j_digits == bw.k1.j_digits);
    CHECK(biweight_canonical(c, 3) == c);

    // alternative path ((p w2 + w1, j1), (0, j2)) reaches the same class
    BiWeight alt{PadicWeight::make(3, 3 * 5 + 2, {1, 2}), PadicWeight::make(3, 0, {0, 1})};
    CHECK(biweight_canonical(alt, 3) == c);

    FqCtx f9(3, -1);
    FqElem s = FqElem::gen_s(f9);
    BiWeight e10{PadicWeight::make(3, 1, {}), PadicWeight::make(3, 0, {})};
    CHECK(biweight_char(e10, s, 3) == -s); // s^3 = -s
    BiWeight e00{PadicWeight::make(3, 0, {}), PadicWeight::make(3, 0, {})};
    CHECK(biweight_char(e00, s, 3) == FqElem::one(f9));
    CHECK_THROWS_AS(biweight_char(e00, FqElem::zero(f9), 3), std::domain_error);

    for (const FqElem& g : FqElem::all(f9)) {
        if (g.is_zero()) continue;
        CHECK(biweight_char(bw, g, 3) == biweight_char(c, g, 3));
    }
}

TEST_CASE("rational string format") {
    CHECK(rat_to_string(Rational(3, 6)) == "1/2");
    CHECK(rat_to_string(Rational(-4, 2)) == "-2");
    CHECK(rat_from_string("7/3") == Rational(7, 3));
    CHECK(rat_from_string("-9") == Rational(-9));
    CHECK_THROWS_AS(rat_from_string("x/y"), std::invalid_argument);
}
