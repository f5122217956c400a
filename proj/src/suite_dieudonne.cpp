#include "picard/dieudonne.hpp"
#include "picard/suites.hpp"

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

bool kernel_is_span(const FqMat& M, const std::vector<int>& idx) {
    // ker M = span of the given coordinate axes
    auto basis = M.kernel_basis();
    if (basis.size() != idx.size()) return false;
    for (int j : idx) {
        // unit vector e_j must be in the kernel: column j of M vanishes
        for (int r = 0; r < M.rows(); ++r)
            if (!M.at(r, j).is_zero()) return false;
    }
    return true;
}

} // namespace

SuiteReport run_dieudonne_suite(const SuiteParams& params) {
    SuiteReport rep;
    rep.suite = "dieudonne";
    rep.seed = params.seed;
    rep.trials = params.trials;
    SweepRng rng(params.seed);
    auto add = [&rep](const std::string& id, const std::string& anchor, bool pass,
                      const std::string& detail = "") {
        rep.checks.push_back({id, anchor, pass, detail});
    };
    using namespace dbasis;

    std::vector<long> primes = {3, 5};

    // braid module structure
    {
        bool ok = true;
        std::ostringstream det;
        for (long p : primes) {
            FqCtx ctx(p, inert_d_for(p, params.d));
            UnitaryDModule B = braid3(ctx);
            ok = ok && check_module(B).all_pass();
            ok = ok && kernel_is_span(B.V, {E1, F2, E3});
            // F-signs of the forced duality solution
            FqElem one = FqElem::one(ctx);
            ok = ok && B.F.at(E3, F1) == -one && B.F.at(E1, F2) == -one && B.F.at(F2, E3) == -one;
            det << "p=" << p << (ok ? " ok " : " FAIL ");
        }
        add("dieudonne.braid", "V: e2 -> f3, f3 -> e1, f1 -> e2; duality forces F f1 = -e3, F f2 = -e1, F e3 = -f2",
            ok, det.str());
    }
    // duality worked pairs
    {
        FqCtx ctx(3, inert_d_for(3, params.d));
        UnitaryDModule B = braid3(ctx);
        FqMat J = symplectic_J6(ctx);
        // <F f2^(p), f1> = -<e1, f1> = -1 equals <f2, V f1>^(p) = <f2, e2^(p)>^p = (-1)^p
        FqElem lhs = (B.F.transpose() * J).at(F2, F1);
        FqElem rhs = (J.frobenius() * B.V).at(F2, F1);
        bool ok = lhs == rhs && lhs == -FqElem::one(ctx);
        add("dieudonne.duality_pair", "<F x, y> = <x, V y>^(p) pinned on the f2/f1 pair with value -1", ok);
    }
    // mutation tests
    {
        FqCtx ctx(3, inert_d_for(3, params.d));
        UnitaryDModule B = braid3(ctx);
        UnitaryDModule flipped(ctx, B.V, B.F);
        flipped.F.at(E1, F2) = -flipped.F.at(E1, F2); // flip one F-sign
        CheckReport r = check_module(flipped);
        bool duality_failed = false, other_failed = false;
        for (auto& item : r.items) {
            if (!item.pass && item.id == "duality.pairs") duality_failed = true;
            else if (!item.pass) other_failed = true;
        }
        // exactly the touched pair (f2, f1) breaks
        FqMat J = symplectic_J6(ctx);
        FqMat lhs = flipped.F.transpose() * J, rhs = J.frobenius() * flipped.V;
        int mismatches = 0;
        int where_i = -1, where_j = -1;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                if (!(lhs.at(i, j) == rhs.at(i, j))) { ++mismatches; where_i = i; where_j = j; }
        bool ok = duality_failed && !other_failed && mismatches == 1 && where_i == F2 && where_j == F1;
        UnitaryDModule ident(ctx, FqMat::identity(ctx, 6), B.F);
        ok = ok && !check_module(ident).all_pass();
        add("dieudonne.mutation", "a flipped F-sign breaks exactly the duality pairs; V = id breaks exactness", ok);
    }
    // the three models and their strata
    {
        bool ok = true;
        std::ostringstream det;
        for (long p : primes) {
            FqCtx ctx(p, inert_d_for(p, params.d));
            UnitaryDModule B = braid3(ctx), MU = model_mu_ordinary(ctx), SSP = model_superspecial(ctx);
            ok = ok && check_module(MU).all_pass() && check_module(SSP).all_pass();
            ok = ok && kernel_is_span(MU.V, {E1, F2, E3});
            ok = ok && kernel_is_span(SSP.V, {E1, E2, F3});
            ok = ok && stratify(B) == Stratum::GeneralSupersingular;
            ok = ok && stratify(MU) == Stratum::MuOrdinary;
            ok = ok && stratify(SSP) == Stratum::Superspecial;
            // superspecial F-sign pinned by duality: <F f1^(p), f1> = <f1, e1>^p = -1
            FqMat J = symplectic_J6(ctx);
            ok = ok && (SSP.F.transpose() * J).at(F1, F1) == -FqElem::one(ctx);
            det << "p=" << p << (ok ? " ok " : " FAIL ");
        }
        add("dieudonne.models", "mu-ordinary, braid and superspecial models satisfy the invariants and classify",
            ok, det.str());
    }
    // Hasse ranks and the gss signature
    {
        bool ok = true;
        for (long p : primes) {
            FqCtx ctx(p, inert_d_for(p, params.d));
            UnitaryDModule B = braid3(ctx);
            ok = ok && hasse(B) == 0 && v_P(B).rank() == 1 && v_L(B).rank() == 1;
            ok = ok && hasse(model_mu_ordinary(ctx)) == 1;
            UnitaryDModule SSP = model_superspecial(ctx);
            ok = ok && v_P(SSP).is_zero() && v_L(SSP).is_zero();
        }
        add("dieudonne.hasse", "h = V_P^(p) o V_L has rank 1 generically, rank 0 with V_P, V_L of rank 1 at braid points",
            ok);
    }
    // P_0
    {
        bool ok = true;
        for (long p : primes) {
            FqCtx ctx(p, inert_d_for(p, params.d));
            auto is_e1_line = [&](const std::vector<std::vector<FqElem>>& basis) {
                return basis.size() == 1 && !basis[0][0].is_zero() && basis[0][1].is_zero();
            };
            ok = ok && is_e1_line(p0_of(braid3(ctx)));
            ok = ok && is_e1_line(p0_of(model_mu_ordinary(ctx)));
            ok = ok && p0_of(model_superspecial(ctx)).size() == 2;
        }
        add("dieudonne.p0", "ker V_P is the e1-line off the superspecial points, the whole plane there", ok);
    }
    // FV = VF = 0
    {
        bool ok = true;
        for (long p : primes) {
            FqCtx ctx(p, inert_d_for(p, params.d));
            for (auto model : {braid3(ctx), model_mu_ordinary(ctx), model_superspecial(ctx)})
                ok = ok && (model.F * model.V).is_zero() && (model.V * model.F).is_zero();
        }
        add("dieudonne.fv", "F o V and V o F vanish on every model", ok);
    }
    // stratify invariance under typed symplectic flag-preserving base change
    {
        bool ok = true;
        long per_model = params.count(100);
        std::ostringstream det;
        for (long p : primes) {
            FqCtx ctx(p, inert_d_for(p, params.d));
            struct Named {
                UnitaryDModule mod;
                Stratum want;
            };
            std::vector<Named> models = {{braid3(ctx), Stratum::GeneralSupersingular},
                                         {model_mu_ordinary(ctx), Stratum::MuOrdinary},
                                         {model_superspecial(ctx), Stratum::Superspecial}};
            for (auto& nm : models) {
                for (long i = 0; i < per_model && ok; ++i) {
                    FqMat g = random_flag_symplectic(ctx, rng.engine());
                    UnitaryDModule moved = basis_change(nm.mod, g);
                    ok = check_module(moved).all_pass() && stratify(moved) == nm.want;
                }
            }
            det << "p=" << p << " x" << per_model << " ";
        }
        add("dieudonne.stratify.invariance",
            "stratum is invariant under typed symplectic basis changes preserving the Hodge flag", ok,
            det.str());
    }
    // scaled braid: exercises the Frobenius twist with entries outside F_p
    {
        bool ok = true;
        for (long p : primes) {
            FqCtx ctx(p, inert_d_for(p, params.d));
            for (int i = 0; i < 5 && ok; ++i) {
                FqElem c(ctx, rng.next(0, p - 1), rng.next(0, p - 1));
                if (c.is_zero()) c = FqElem::gen_s(ctx);
                UnitaryDModule B = braid3(ctx);
                UnitaryDModule scaled(ctx, B.V * c, force_f_from_duality(B.V * c));
                ok = check_module(scaled).all_pass() && stratify(scaled) == Stratum::GeneralSupersingular;
            }
        }
        add("dieudonne.scaled", "rescaling V by a unit (F adjusted by duality) keeps the braid stratum", ok);
    }
    // p = 3 and p = 5 classifications agree
    {
        FqCtx c3(3, inert_d_for(3, params.d)), c5(5, inert_d_for(5, params.d));
        bool ok = stratify(braid3(c3)) == stratify(braid3(c5));
        ok = ok && stratify(model_mu_ordinary(c3)) == stratify(model_mu_ordinary(c5));
        ok = ok && stratify(model_superspecial(c3)) == stratify(model_superspecial(c5));
        add("dieudonne.p_consistency", "corresponding models classify identically for p = 3 and p = 5", ok);
    }

    rep.sort_canonical();
    return rep;
}

} // namespace picard
