#pragma once

#include "picard/fqmat.hpp"

#include <random>
#include <string>
#include <vector>

namespace picard {

/// Basis labels of the 6-dimensional symplectic space, in the fixed order
/// e1, e2, f3, f1, f2, e3. The e's carry type Sigma, the f's type Sigma-bar;
/// under base change by Frobenius the type of x^(p) is the conjugate of the
/// type of x. The Hodge flag is omega = span{e1, e2, f3} with P = {e1, e2}
/// and L = {f3}.
namespace dbasis {
constexpr int E1 = 0, E2 = 1, F3 = 2, F1 = 3, F2 = 4, E3 = 5;
constexpr bool SIGMA[6] = {true, true, false, false, false, true};
inline const char* name(int i) {
    static const char* names[6] = {"e1", "e2", "f3", "f1", "f2", "e3"};
    return names[i];
}
} // namespace dbasis

/// <e_i, f_j> = delta_ij = -<f_j, e_i>, <e,e> = <f,f> = 0, in the fixed order.
inline FqMat symplectic_J6(const FqCtx& ctx) {
    using namespace dbasis;
    FqMat J(ctx, 6, 6);
    FqElem one = FqElem::one(ctx);
    auto set_pair = [&](int e, int f) { J.at(e, f) = one; J.at(f, e) = -one; };
    set_pair(E1, F1);
    set_pair(E2, F2);
    set_pair(E3, F3);
    return J;
}

/// Unitary Dieudonne module: V: D -> D^(p) and F: D^(p) -> D as plain
/// matrices in the fixed bases; the Frobenius twist enters only when
/// composing across the ^(p) boundary (entrywise p-power of the outer
/// factor's matrix).
struct UnitaryDModule {
    FqCtx ctx;
    FqMat V, F;

    UnitaryDModule(const FqCtx& c, FqMat v, FqMat f) : ctx(c), V(std::move(v)), F(std::move(f)) {}
};

/// F forced from V by the duality F^t J = J^(p) V (J has prime-field entries,
/// so J^(p) = J and F = -J V^t J using J^2 = -1).
inline FqMat force_f_from_duality(const FqMat& V) {
    const FqCtx& ctx = V.ctx();
    FqMat J = symplectic_J6(ctx);
    FqMat JVJ = J * V.transpose() * J;
    return JVJ * (-FqElem::one(ctx));
}

/// The braid module: V per Ve2 = f3^(p), Vf3 = e1^(p), Vf1 = e2^(p) and the
/// duality-forced F (Ff1^(p) = -e3, Ff2^(p) = -e1, Fe3^(p) = -f2).
inline UnitaryDModule braid3(const FqCtx& ctx) {
    using namespace dbasis;
    FqMat V(ctx, 6, 6);
    FqElem one = FqElem::one(ctx);
    V.at(F3, E2) = one;
    V.at(E1, F3) = one;
    V.at(E2, F1) = one;
    return UnitaryDModule(ctx, V, force_f_from_duality(V));
}

/// mu-ordinary model: multiplicative pair {e2, f3} swapped by V, local-local
/// pair {e1, f1} with Vf1 = e1^(p), etale pair {f2, e3} killed by V. The
/// symplectic form couples the multiplicative and etale blocks and the
/// local-local block with itself; any other block allocation makes ker V
/// non-isotropic and the duality-forced F breaks exactness.
inline UnitaryDModule model_mu_ordinary(const FqCtx& ctx) {
    using namespace dbasis;
    FqMat V(ctx, 6, 6);
    FqElem one = FqElem::one(ctx);
    V.at(F3, E2) = one;
    V.at(E2, F3) = one;
    V.at(E1, F1) = one;
    return UnitaryDModule(ctx, V, force_f_from_duality(V));
}

/// Superspecial model: V kills omega and maps f1, f2, e3 to e1^(p), e2^(p),
/// f3^(p).
inline UnitaryDModule model_superspecial(const FqCtx& ctx) {
    using namespace dbasis;
    FqMat V(ctx, 6, 6);
    FqElem one = FqElem::one(ctx);
    V.at(E1, F1) = one;
    V.at(E2, F2) = one;
    V.at(F3, E3) = one;
    return UnitaryDModule(ctx, V, force_f_from_duality(V));
}

struct CheckItem {
    std::string id;
    bool pass;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckItem> items;
    bool all_pass() const {
        for (auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (auto& it : items)
            if (!it.pass) out.push_back(it.id);
        return out;
    }
};

/// Verify every structural invariant; failures are reported, not thrown.
inline CheckReport check_module(const UnitaryDModule& D) {
    using namespace dbasis;
    CheckReport rep;
    const FqCtx& ctx = D.ctx;
    FqMat J = symplectic_J6(ctx);
    auto add = [&rep](const std::string& id, bool ok, const std::string& detail = "") {
        rep.items.push_back({id, ok, detail});
    };

    add("rank.V", D.V.rank() == 3, "rank V = 3");
    add("rank.F", D.F.rank() == 3, "rank F = 3");
    add("exact.FV", (D.F * D.V).is_zero(), "F o V = 0");
    add("exact.VF", (D.V * D.F).is_zero(), "V o F = 0");

    // ker F = omega^(p) = span{e1,e2,f3}^(p): columns E1,E2,F3 of F vanish,
    // and rank F = 3 pins the kernel.
    bool kerF_omega = true;
    for (int r = 0; r < 6; ++r)
        for (int c : {E1, E2, F3})
            if (!D.F.at(r, c).is_zero()) kerF_omega = false;
    add("kernel.F=omega^(p)", kerF_omega && D.F.rank() == 3, "ker F = omega^(p)");

    // Im V = omega^(p): rows of V outside {E1,E2,F3} vanish and rank V = 3.
    bool imV_omega = true;
    for (int r : {F1, F2, E3})
        for (int c = 0; c < 6; ++c)
            if (!D.V.at(r, c).is_zero()) imV_omega = false;
    add("image.V=omega^(p)", imV_omega && D.V.rank() == 3, "Im V = omega^(p)");

    // Im F = ker V: F V = 0 gives containment; ranks force equality.
    add("image.F=kernel.V", (D.V * D.F).is_zero() && D.V.rank() + D.F.rank() == 6, "Im F = ker V");

    // duality <F x, y> = <x, V y>^(p) on all 36 basis pairs:
    // (F^t J)_{ij} = (J^(p) V)_{ij}.
    FqMat lhs = D.F.transpose() * J;
    FqMat rhs = J.frobenius() * D.V;
    int bad = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (!(lhs.at(i, j) == rhs.at(i, j))) ++bad;
    add("duality.pairs", bad == 0, bad ? std::to_string(bad) + " basis pairs fail" : "all 36 pairs");

    // type preservation: V and F may only connect basis vectors of opposite
    // tag (the target lives one Frobenius twist up, which conjugates types).
    bool types_ok = true;
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) {
            if (!D.V.at(r, c).is_zero() && SIGMA[r] == SIGMA[c]) types_ok = false;
            if (!D.F.at(r, c).is_zero() && SIGMA[r] == SIGMA[c]) types_ok = false;
        }
    add("types", types_ok, "V, F preserve types across the twist");

    // omega isotropy
    bool iso = true;
    for (int i : {E1, E2, F3})
        for (int j : {E1, E2, F3})
            if (!J.at(i, j).is_zero()) iso = false;
    add("omega.isotropic", iso, "omega is isotropic");

    return rep;
}

/// V restricted to P = span{e1,e2}, landing in L^(p) = span{f3^(p)}: a 1x2 block.
inline FqMat v_P(const UnitaryDModule& D) {
    using namespace dbasis;
    FqMat m(D.ctx, 1, 2);
    m.at(0, 0) = D.V.at(F3, E1);
    m.at(0, 1) = D.V.at(F3, E2);
    return m;
}

/// V restricted to L = span{f3}, landing in P^(p) = span{e1,e2}^(p): a 2x1 block.
inline FqMat v_L(const UnitaryDModule& D) {
    using namespace dbasis;
    FqMat m(D.ctx, 2, 1);
    m.at(0, 0) = D.V.at(E1, F3);
    m.at(1, 0) = D.V.at(E2, F3);
    return m;
}

/// Hasse invariant h = V_P^(p) o V_L: L -> L^(p^2); rank 0 or 1. The outer
/// factor is composed across the twist boundary, so its matrix is entrywise
/// p-powered.
inline int hasse(const UnitaryDModule& D) {
    FqMat h = v_P(D).frobenius() * v_L(D);
    return h.rank();
}

/// P_0 = ker(V_P) inside P, returned as coefficient vectors on {e1, e2}.
inline std::vector<std::vector<FqElem>> p0_of(const UnitaryDModule& D) {
    return v_P(D).kernel_basis();
}

enum class Stratum { MuOrdinary, GeneralSupersingular, Superspecial };

inline const char* stratum_name(Stratum s) {
    switch (s) {
        case Stratum::MuOrdinary: return "mu-ordinary";
        case Stratum::GeneralSupersingular: return "gss";
        case Stratum::Superspecial: return "superspecial";
    }
    return "?";
}

/// Classify an admissible module by the ranks of h, V_P and V_L. Throws
/// std::invalid_argument on an inadmissible module (first failed invariant
/// in the message).
inline Stratum stratify(const UnitaryDModule& D) {
    CheckReport rep = check_module(D);
    if (!rep.all_pass())
        throw std::invalid_argument("inadmissible: " + rep.failures().front());
    int h = hasse(D);
    int rp = v_P(D).rank(), rl = v_L(D).rank();
    if (h == 1) return Stratum::MuOrdinary;
    if (rp == 1 && rl == 1) return Stratum::GeneralSupersingular;
    if (rp == 0 && rl == 0) return Stratum::Superspecial;
    throw std::invalid_argument("inadmissible: rank signature (h,V_P,V_L) = (" + std::to_string(h) + "," +
                                std::to_string(rp) + "," + std::to_string(rl) + ")");
}

/// Base change by g (typed, symplectic, flag-preserving):
/// V' = (g^(p))^{-1} V g and F' = g^{-1} F g^(p).
inline UnitaryDModule basis_change(const UnitaryDModule& D, const FqMat& g) {
    auto gp_inv = g.frobenius().inverse();
    auto g_inv = g.inverse();
    if (!gp_inv || !g_inv) throw std::invalid_argument("singular basis change");
    return UnitaryDModule(D.ctx, (*gp_inv) * D.V * g, (*g_inv) * D.F * g.frobenius());
}

/// Random change of typed symplectic basis fixing the Hodge flag. Built from
/// A on (e1,e2,e3) with A(span{e1,e2}) = span{e1,e2}, and B = (A^t)^{-1} on
/// (f1,f2,f3); then <e_i, f_j> = delta_ij and the flag are preserved. With
/// fix_p0_line set, A additionally fixes the e1-line (the refined flag).
template <typename Rng>
FqMat random_flag_symplectic(const FqCtx& ctx, Rng& rng, bool fix_p0_line = false) {
    using namespace dbasis;
    auto rnd = [&]() {
        std::uniform_int_distribution<long> dist(0, ctx.p() - 1);
        return FqElem(ctx, dist(rng), dist(rng));
    };
    FqMat A(ctx, 3, 3);
    while (true) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) A.at(i, j) = rnd();
        A.at(2, 0) = FqElem::zero(ctx); // keep A * span{e1,e2} inside span{e1,e2}
        A.at(2, 1) = FqElem::zero(ctx);
        if (fix_p0_line) A.at(1, 0) = FqElem::zero(ctx);
        if (A.inverse()) break;
    }
    FqMat B = *A.transpose().inverse();
    // Assemble on indices: e-order (E1,E2,E3), f-order (F1,F2,F3).
    const int epos[3] = {E1, E2, E3}, fpos[3] = {F1, F2, F3};
    FqMat g(ctx, 6, 6);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            g.at(epos[i], epos[j]) = A.at(i, j);
            g.at(fpos[i], fpos[j]) = B.at(i, j);
        }
    return g;
}

} // namespace picard
