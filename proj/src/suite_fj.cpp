#include "picard/fj.hpp"
#include "picard/suites.hpp"
#include "picard/weights.hpp"

#include <sstream>

namespace picard {

namespace {

long inert_d_for(long p, long preferred) {
    try {
        FqCtx probe(p, preferred);
        return preferred;
    } catch (...) {
        for (long d : {-1L, -2L, -3L, -5L, -7L, -11L}) {
            try {
                FqCtx probe(p, d);
                return d;
            } catch (...) {
            }
        }
        throw std::invalid_argument("no inert d found");
    }
}

FqPoly random_poly(const FqCtx& ctx, SweepRng& rng, int maxdeg) {
    std::vector<FqElem> c;
    int deg = static_cast<int>(rng.next(0, maxdeg));
    for (int i = 0; i <= deg; ++i) c.push_back(FqElem(ctx, rng.next(0, ctx.p() - 1), rng.next(0, ctx.p() - 1)));
    return FqPoly(ctx, std::move(c));
}

QExpansion random_expansion(const FqCtx& ctx, long N, long M, SweepRng& rng, long trunc, long weight,
                            int maxdeg = 3) {
    std::vector<FqPoly> c;
    for (long m = 0; m <= trunc; ++m) c.push_back(random_poly(ctx, rng, maxdeg));
    return QExpansion(ctx, N, M, weight, std::move(c));
}

/// A unit cusp width mod p for formal tests.
long formal_width(long p) { return p + 2; }

} // namespace

SuiteReport run_fj_suite(const SuiteParams& params) {
    SuiteReport rep;
    rep.suite = "fj";
    rep.seed = params.seed;
    rep.trials = params.trials;
    SweepRng rng(params.seed);
    auto add = [&rep](const std::string& id, const std::string& anchor, bool pass,
                      const std::string& detail = "") {
        rep.checks.push_back({id, anchor, pass, detail});
    };

    long trunc = params.trunc;

    // the pinned example: p = 3, M such that M^{-1} = 2
    {
        FqCtx ctx(3, inert_d_for(3, params.d));
        std::vector<FqPoly> c;
        for (int i = 0; i < 4; ++i) c.push_back(FqPoly::constant(FqElem::one(ctx)));
        QExpansion f(ctx, params.N, 2, 1, std::move(c));
        QExpansion tf = theta(f);
        bool ok = tf.weight() == 1 + 4;
        long expect[4] = {0, 2, 1, 0};
        for (long m = 0; m < 4; ++m)
            ok = ok && tf.coeff(m) == FqPoly::constant(FqElem(ctx, expect[m]));
        add("fj.theta.example", "c_m -> M^{-1} m c_m with the weight raised by p+1", ok);
    }
    // Hasse element
    {
        bool ok = true;
        for (long p : {3L, 5L}) {
            FqCtx ctx(p, inert_d_for(p, params.d));
            MockForm h = hasse_element(ctx, params.N, formal_width(p), trunc);
            ok = ok && h.expansion.weight() == p * p - 1;
            ok = ok && theta(h.expansion).is_zero();
            ok = ok && filtration(h) == 0;
        }
        add("fj.hasse", "the Hasse element has weight p^2-1, expansion 1, filtration 0, and theta kills it", ok);
    }
    // p-supported expansions die; the constant term of any image vanishes
    {
        bool ok = true;
        for (long p : {3L, 5L}) {
            FqCtx ctx(p, inert_d_for(p, params.d));
            std::vector<FqPoly> c(trunc + 1, FqPoly(ctx));
            for (long m = 0; m <= trunc; m += p) c[m] = FqPoly::constant(FqElem(ctx, 1 + (m % (p - 1))));
            QExpansion f(ctx, params.N, formal_width(p), 4, std::move(c));
            ok = ok && theta(f).is_zero();
            QExpansion g = random_expansion(ctx, params.N, formal_width(p), rng, trunc, 3);
            ok = ok && theta(g).coeff(0).is_zero() && is_theta_image(theta(g));
        }
        add("fj.theta.cusp", "expansions supported on p | m die; every theta image is a cusp form", ok);
    }
    // iteration: theta^p = theta, theta^{p-1} fixes images, t = 0 identity
    {
        bool ok = true;
        for (long p : {3L, 5L}) {
            FqCtx ctx(p, inert_d_for(p, params.d));
            for (int i = 0; i < params.count(50) && ok; ++i) {
                QExpansion f = random_expansion(ctx, params.N, formal_width(p), rng, 16, rng.next(0, 6));
                ok = theta_iter(f, p).coefficients_equal(theta(f));
                QExpansion im = theta(f);
                ok = ok && theta_iter(im, p - 1).coefficients_equal(im);
                ok = ok && theta_iter(f, 0).coefficients_equal(f);
            }
        }
        add("fj.theta.iterate", "theta^p = theta on expansions; theta^{p-1} fixes theta images", ok);
    }
    // theta-image predicate
    {
        FqCtx ctx(3, inert_d_for(3, params.d));
        QExpansion f = random_expansion(ctx, params.N, formal_width(3), rng, 12, 2);
        bool ok = is_theta_image(theta(f));
        std::vector<FqPoly> c(5, FqPoly(ctx));
        c[0] = FqPoly::constant(FqElem::one(ctx));
        ok = ok && !is_theta_image(QExpansion(ctx, params.N, formal_width(3), 0, std::move(c)));
        std::vector<FqPoly> c2(7, FqPoly(ctx));
        c2[1] = FqPoly::constant(FqElem::one(ctx));
        c2[3] = FqPoly::constant(FqElem::one(ctx)); // degree 3 coefficient alive: p | 3
        ok = ok && !is_theta_image(QExpansion(ctx, params.N, formal_width(3), 0, std::move(c2)));
        add("fj.theta.image", "image membership on expansions: all coefficients in degrees p | m vanish", ok);
    }
    // Leibniz
    {
        bool ok = true;
        for (long p : {3L, 5L}) {
            FqCtx ctx(p, inert_d_for(p, params.d));
            for (int i = 0; i < params.count(100) && ok; ++i) {
                QExpansion f = random_expansion(ctx, params.N, formal_width(p), rng, 12, rng.next(0, 5));
                QExpansion g = random_expansion(ctx, params.N, formal_width(p), rng, 12, rng.next(0, 5));
                ok = derivation_check(f, g);
            }
            // f = g: theta(f^2) = 2 f theta(f)
            QExpansion f = random_expansion(ctx, params.N, formal_width(p), rng, 12, 2);
            QExpansion lhs = theta(f * f);
            QExpansion rhs = (f * theta(f)).scale(FqElem(ctx, 2));
            ok = ok && lhs.coefficients_equal(rhs);
            // multiplication by the Hasse expansion commutes with theta
            MockForm h = hasse_element(ctx, params.N, formal_width(p), 12);
            ok = ok && theta(h.expansion * f).coefficients_equal(h.expansion * theta(f));
        }
        add("fj.leibniz", "theta(fg) = f theta(g) + theta(f) g exactly up to the common truncation", ok);
    }
    // linearity and weight bookkeeping
    {
        bool ok = true;
        for (long p : {3L, 5L}) {
            FqCtx ctx(p, inert_d_for(p, params.d));
            for (int i = 0; i < params.count(25) && ok; ++i) {
                long w = rng.next(0, 9);
                QExpansion f = random_expansion(ctx, params.N, formal_width(p), rng, 10, w);
                QExpansion g = random_expansion(ctx, params.N, formal_width(p), rng, 10, w);
                FqElem s(ctx, rng.next(0, p - 1), rng.next(0, p - 1));
                ok = theta(f + g).coefficients_equal(theta(f) + theta(g));
                ok = ok && theta(f.scale(s)).coefficients_equal(theta(f).scale(s));
                ok = ok && theta(f).weight() - f.weight() == p + 1;
            }
        }
        add("fj.weight", "theta is F_{p^2}-linear and always raises the weight by exactly p+1", ok);
    }
    // filtration bookkeeping
    {
        bool ok = true;
        for (long p : {3L, 5L}) {
            FqCtx ctx(p, inert_d_for(p, params.d));
            QExpansion f = random_expansion(ctx, params.N, formal_width(p), rng, 10, p + 1);
            MockForm m0(f, 0);
            ok = ok && filtration(m0) == f.weight();
            ok = ok && filtration_power(m0, 2) == 2 * (p + 1);
            // congruence omega = k mod p^2-1 for assorted mock data
            for (long n = 0; n < 3 && ok; ++n) {
                QExpansion g = random_expansion(ctx, params.N, formal_width(p), rng, 8,
                                                n * (p * p - 1) + rng.next(0, 4));
                MockForm m(g, n);
                long om = filtration(m);
                ok = (om - g.weight()) % (p * p - 1) == 0 && om >= 0;
            }
            // inconsistent data rejected
            bool rejected = false;
            try {
                filtration(MockForm(random_expansion(ctx, params.N, formal_width(p), rng, 8, 1), 1));
            } catch (const std::invalid_argument&) {
                rejected = true;
            }
            ok = ok && rejected;
        }
        add("fj.filtration", "omega(f) = k - n(p^2-1) >= 0, omega = k mod p^2-1, omega(f^m) = m omega(f)", ok);
    }
    // theta cycles
    {
        bool ok = true;
        std::ostringstream det;
        std::vector<long> spec_expected = {3, 9, 15, 21};
        ok = ok && theta_cycle({5, 3, 3}) == spec_expected;
        ok = ok && theta_cycle({3, 2, 1}) == std::vector<long>({2, 6});
        long cycles = 0;
        for (long p : {3L, 5L, 7L, 11L, 13L}) {
            for (long i = 0; i + 1 <= p - 1; ++i) {
                // closure is asserted inside theta_cycle; use a base high
                // enough to keep all intermediate filtrations nonnegative
                for (long base : {(p - 2) * (p + 1), (p - 2) * (p + 1) + 1, p * p}) {
                    theta_cycle({p, base, i});
                    ++cycles;
                }
            }
        }
        det << cycles << " cycles closed";
        add("fj.cycle.closure", "p-1 increments of p+1 with one drop of p+1-(p^2-1) always sum to zero", ok,
            det.str());
    }
    {
        bool ok = true;
        for (long p : {3L, 5L}) {
            for (long k = 0; k < p + 1 && ok; ++k) {
                long i = low_weight_drop(k, p); // asserts the pre-drop congruence internally
                ok = (i == p - 2);
            }
        }
        ok = ok && low_weight_drop(2, 3) == 1 && low_weight_drop(3, 5) == 3 && low_weight_drop(0, 5) == 3;
        add("fj.cycle.low_weight", "k < p+1 puts the drop at the last step; pre-drop weight = k-2 mod p", ok);
    }
    {
        // validate: round trips, two drops injected, a no-drop attempt
        long p = 5;
        std::vector<long> w_last = theta_cycle({p, 3, 3});
        std::vector<std::pair<long, long>> obs;
        for (long wi : w_last) obs.push_back({wi, 0}); // the drop sits on the wrap step
        bool ok = cycle_validate(p, obs).empty();
        std::vector<long> w_mid = theta_cycle({p, 30, 1});
        std::vector<std::pair<long, long>> obs2;
        long acc = 0;
        for (size_t i = 0; i < w_mid.size(); ++i) {
            if (i > 0 && w_mid[i] < w_mid[i - 1]) ++acc;
            obs2.push_back({w_mid[i], acc});
        }
        ok = ok && cycle_validate(p, obs2).empty();
        // two drops (at steps 0 and 2): both indices must be flagged
        std::vector<std::pair<long, long>> two = {{30, 0}, {12, 1}, {18, 1}, {0, 2}};
        auto viol = cycle_validate(p, two);
        bool saw0 = false, saw2 = false;
        for (auto& v : viol) {
            if (v.index == 0) saw0 = true;
            if (v.index == 2) saw2 = true;
        }
        ok = ok && saw0 && saw2;
        // ladder with the drop suppressed: the weights cannot close
        std::vector<std::pair<long, long>> nodrop = {{3, 0}, {9, 0}, {15, 0}, {21, 1}};
        ok = ok && cycle_validate(p, nodrop).size() >= 2;
        add("fj.cycle.validate", "exactly one ss_order jump with the matching weight drop closes a cycle", ok);
    }
    // classical side
    {
        FqCtx ctx(3, inert_d_for(3, params.d));
        std::vector<FqElem> s = {FqElem(ctx, 2, 1), FqElem(ctx, 1, 0), FqElem(ctx, 0, 2)};
        auto ts = classical_theta(s);
        bool ok = ts[0].is_zero() && ts[1] == s[1] && ts[2] == s[2] * FqElem(ctx, 2);
        ok = ok && elliptic_drop_rule(3 * 4, 3) && !elliptic_drop_rule(1, 3);
        add("fj.classical", "q d/dq sends a_n to n a_n; an elliptic drop needs omega = 0 mod p", ok);
    }
    // restriction compatibility
    {
        bool ok = true;
        for (long p : {3L, 5L}) {
            FqCtx ctx(p, inert_d_for(p, params.d));
            for (int i = 0; i < params.count(50) && ok; ++i) {
                QExpansion f = random_expansion(ctx, params.N, formal_width(p), rng, 10, rng.next(0, 5), 0);
                ok = compat_check(f);
            }
            bool rejected = false;
            try {
                std::vector<FqPoly> c(3, FqPoly(ctx));
                c[1] = FqPoly(ctx, {FqElem::zero(ctx), FqElem::one(ctx)});
                compat_check(QExpansion(ctx, params.N, formal_width(p), 0, std::move(c)));
            } catch (const std::invalid_argument&) {
                rejected = true;
            }
            ok = ok && rejected;
        }
        add("fj.compat", "taking constant terms intertwines theta with the M^{-1}-normalized classical operator",
            ok);
    }
    // weight characters
    {
        bool ok = true;
        for (long p : {3L, 5L}) {
            long d = inert_d_for(p, params.d);
            FqCtx ctx(p, d);
            for (const FqElem& g : FqElem::all(ctx)) {
                if (g.is_zero()) continue;
                ok = ok && weight_char(p * p - 1, g) == FqElem::one(ctx);
                ok = ok && weight_char(0, g) == FqElem::one(ctx);
                if (g.in_prime_field()) ok = ok && weight_char(1, g) == g;
            }
            // bridge: the character is trivial exactly when p^2-1 | k,
            // matching the level-1 congruence test
            for (long k = 0; k <= 2 * (p * p - 1) && ok; ++k) {
                bool trivial = true;
                for (const FqElem& g : FqElem::all(ctx)) {
                    if (g.is_zero()) continue;
                    if (!(weight_char(k, g) == FqElem::one(ctx))) { trivial = false; break; }
                }
                ok = trivial == char_equal(k, 0, p, d, 1);
            }
        }
        add("fj.weight_char", "Delta(p) scales f/a^k by gamma^{pk}; trivial exactly when p^2-1 divides k", ok);
    }

    rep.sort_canonical();
    return rep;
}

std::vector<SuiteReport> run_all_suites(const SuiteParams& params) {
    return {run_qfield_suite(params),   run_unitary_suite(params), run_frame_suite(params),
            run_dieudonne_suite(params), run_deform_suite(params),  run_fj_suite(params)};
}

} // namespace picard
