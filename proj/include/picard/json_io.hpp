#pragma once

#include "picard/dieudonne.hpp"
#include "picard/fj.hpp"
#include "picard/unitary.hpp"
#include "picard/wlaurent.hpp"

#include <json.hpp>

#include <memory>

namespace picard {

using nlohmann::json;

// Shared contexts for deserialized values. Deserialization hands out
// references into these registries so element lifetimes are unbounded.
const FieldCtx& field_ctx_of(long d);
const FqCtx& fq_ctx_of(long p, long d);

inline json kelem_to_json(const KElem& x) {
    return json{{"d", x.ctx().d()}, {"a", rat_to_string(x.a())}, {"b", rat_to_string(x.b())}};
}

inline KElem kelem_from_json(const json& j) {
    const FieldCtx& ctx = field_ctx_of(j.at("d").get<long>());
    return KElem(ctx, rat_from_string(j.at("a").get<std::string>()),
                 rat_from_string(j.at("b").get<std::string>()));
}

inline json fqelem_to_json(const FqElem& x) {
    return json{{"p", x.ctx().p()}, {"d", x.ctx().d()}, {"c", {x.c0(), x.c1()}}};
}

inline FqElem fqelem_from_json(const json& j) {
    const FqCtx& ctx = fq_ctx_of(j.at("p").get<long>(), j.at("d").get<long>());
    auto c = j.at("c");
    return FqElem(ctx, c.at(0).get<long>(), c.at(1).get<long>());
}

inline json gmat_to_json(const GMat& g) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int j = 0; j < 3; ++j) row.push_back(kelem_to_json(g.at(i, j)));
        rows.push_back(row);
    }
    return json{{"d", g.ctx().d()}, {"rows", rows}};
}

inline GMat gmat_from_json(const json& j) {
    const FieldCtx& ctx = field_ctx_of(j.at("d").get<long>());
    GMat g(ctx);
    auto rows = j.at("rows");
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) g.at(i, k) = kelem_from_json(rows.at(i).at(k));
    return g;
}

inline json module_to_json(const UnitaryDModule& D) {
    auto mat = [&](const FqMat& m) {
        json rows = json::array();
        for (int i = 0; i < 6; ++i) {
            json row = json::array();
            for (int j = 0; j < 6; ++j) row.push_back(fqelem_to_json(m.at(i, j)));
            rows.push_back(row);
        }
        return rows;
    };
    return json{{"p", D.ctx.p()}, {"d", D.ctx.d()}, {"V", mat(D.V)}, {"F", mat(D.F)}};
}

inline UnitaryDModule module_from_json(const json& j) {
    const FqCtx& ctx = fq_ctx_of(j.at("p").get<long>(), j.at("d").get<long>());
    auto mat = [&](const json& rows) {
        FqMat m(ctx, 6, 6);
        for (int i = 0; i < 6; ++i)
            for (int k = 0; k < 6; ++k) m.at(i, k) = fqelem_from_json(rows.at(i).at(k));
        return m;
    };
    return UnitaryDModule(ctx, mat(j.at("V")), mat(j.at("F")));
}

inline json qexp_to_json(const QExpansion& f) {
    json coeffs = json::array();
    for (long m = 0; m <= f.trunc(); ++m) {
        json poly = json::array();
        for (const FqElem& c : f.coeff(m).coeffs()) poly.push_back(fqelem_to_json(c));
        coeffs.push_back(poly);
    }
    return json{{"p", f.ctx().p()}, {"d", f.ctx().d()},    {"N", f.N()},
                {"M", f.M()},       {"weight", f.weight()}, {"trunc", f.trunc()},
                {"coeffs", coeffs}};
}

inline QExpansion qexp_from_json(const json& j) {
    const FqCtx& ctx = fq_ctx_of(j.at("p").get<long>(), j.at("d").get<long>());
    std::vector<FqPoly> coeffs;
    for (const auto& poly : j.at("coeffs")) {
        std::vector<FqElem> c;
        for (const auto& e : poly) c.push_back(fqelem_from_json(e));
        coeffs.push_back(FqPoly(ctx, std::move(c)));
    }
    long trunc = j.at("trunc").get<long>();
    while (static_cast<long>(coeffs.size()) <= trunc) coeffs.push_back(FqPoly(ctx));
    return QExpansion(ctx, j.at("N").get<long>(), j.at("M").get<long>(), j.at("weight").get<long>(),
                      std::move(coeffs));
}

inline json wlaurent_to_json(const WLaurent& g) {
    json coeffs = json::array();
    long lo = g.min_degree().value_or(0);
    for (long l = lo; l < lo + g.term_count(); ++l) {
        json poly = json::array();
        FqPoly cl = g.coeff(l);
        for (const FqElem& c : cl.coeffs()) poly.push_back(fqelem_to_json(c));
        coeffs.push_back(poly);
    }
    return json{{"p", g.ctx().p()}, {"d", g.ctx().d()}, {"min_deg", lo}, {"coeffs", coeffs}};
}

inline WLaurent wlaurent_from_json(const json& j) {
    const FqCtx& ctx = fq_ctx_of(j.at("p").get<long>(), j.at("d").get<long>());
    std::vector<FqPoly> coeffs;
    for (const auto& poly : j.at("coeffs")) {
        std::vector<FqElem> c;
        for (const auto& e : poly) c.push_back(fqelem_from_json(e));
        coeffs.push_back(FqPoly(ctx, std::move(c)));
    }
    return WLaurent(ctx, j.at("min_deg").get<long>(), std::move(coeffs));
}

} // namespace picard
