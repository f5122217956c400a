#pragma once

#include "picard/fq.hpp"

#include <stdexcept>
#include <vector>

namespace picard {

/// The p+1 distinct roots zeta of zeta^{p+1} = -1 in F_{p^2}, so that
/// u^{p+1} + v^{p+1} factors into the linear forms u - zeta v. Distinctness
/// and completeness are certified by exhaustive search and re-expansion.
inline std::vector<FqElem> branch_factorization(const FqCtx& ctx) {
    long p = ctx.p();
    FqElem minus_one = -FqElem::one(ctx);
    std::vector<FqElem> roots;
    for (const FqElem& x : FqElem::all(ctx))
        if (!x.is_zero() && x.pow(p + 1) == minus_one) roots.push_back(x);
    if (static_cast<long>(roots.size()) != p + 1)
        throw std::logic_error("branch factorization incomplete");
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i] == roots[j]) throw std::logic_error("repeated branch root");
    // re-expansion: prod (X - zeta) must equal X^{p+1} + 1
    FqPoly prod = FqPoly::constant(FqElem::one(ctx));
    for (const FqElem& z : roots)
        prod = prod * FqPoly(ctx, {-z, FqElem::one(ctx)});
    std::vector<FqElem> expect(p + 2, FqElem::zero(ctx));
    expect[0] = FqElem::one(ctx);
    expect[p + 1] = FqElem::one(ctx);
    if (!(prod == FqPoly(ctx, expect))) throw std::logic_error("branch product mismatch");
    return roots;
}

/// Number of projective F_{p^2}-points of x^{p+1} + y^{p+1} + z^{p+1} = 0,
/// by brute force; equals p^3 + 1. Guarded to small p.
inline long fermat_count(const FqCtx& ctx) {
    long p = ctx.p();
    if (p > 11) throw std::invalid_argument("enumeration guard: p must be <= 11");
    auto all = FqElem::all(ctx);
    FqElem one = FqElem::one(ctx);
    long count = 0;
    // representatives: (x, y, 1); (x, 1, 0); (1, 0, 0)
    for (const FqElem& x : all) {
        FqElem xn = x.pow(p + 1);
        for (const FqElem& y : all)
            if ((xn + y.pow(p + 1) + one).is_zero()) ++count;
    }
    for (const FqElem& x : all)
        if ((x.pow(p + 1) + one).is_zero()) ++count;
    // (1,0,0): 1 != 0
    return count;
}

/// Local data of the degree p^2-1 cyclic cover trivializing L.
struct IgusaLocal {
    long degree;              // p^2 - 1
    long ramification_index;  // p^2 - 1 along the supersingular divisor
    long gss_relation_degree; // w^{p^2-1} = u at a gss point
    long ssp_branch_count;    // p+1 branches through a superspecial point
    bool branch_degree_divides; // (p+1) | (p^2-1)
};

inline IgusaLocal igusa_local(const FqCtx& ctx) {
    long p = ctx.p();
    IgusaLocal rec;
    rec.degree = p * p - 1;
    rec.ramification_index = p * p - 1;
    rec.gss_relation_degree = p * p - 1;
    rec.ssp_branch_count = static_cast<long>(branch_factorization(ctx).size());
    rec.branch_degree_divides = ((p * p - 1) % (p + 1)) == 0;
    return rec;
}

} // namespace picard
