#pragma once

/* JSON formats: algebras, modules, workspaces, oracle specs and all report
 * types.  ordered_json keeps key order deterministic, which the CLI's
 * byte-identical-reports contract relies on. */

#include <json.hpp>

#include <map>
#include <string>

#include "homdim/fdim.hpp"
#include "homdim/gorenstein.hpp"

namespace homdim {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NameError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline FieldSpec fieldFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError("field: expected an object with a 'kind'");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q")
        return FieldSpec::rationals();
    if (kind == "Fp") {
        if (!j.contains("p"))
            throw ParseError("field: Fp needs a characteristic 'p'");
        long long p = j.at("p").get<long long>();
        try {
            return FieldSpec::prime(p);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("field: unknown kind '" + kind + "'");
}

inline Json fieldToJson(const FieldSpec& f) {
    if (f.kind == FieldSpec::Kind::Rationals)
        return Json{{"kind", "Q"}};
    return Json{{"kind", "Fp"}, {"p", f.p}};
}

inline Quiver quiverFromJson(const Json& j) {
    try {
        std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
        std::vector<std::tuple<std::string, std::string, std::string>> arrows;
        for (const auto& a : j.at("arrows"))
            arrows.push_back({a.at("name").get<std::string>(), a.at("from").get<std::string>(),
                              a.at("to").get<std::string>()});
        return makeQuiver(std::move(vertices), std::move(arrows));
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("quiver: ") + e.what());
    }
}

inline Json quiverToJson(const Quiver& q) {
    Json arrows = Json::array();
    for (const auto& a : q.arrows)
        arrows.push_back({{"name", a.name}, {"from", q.vertices[a.from]}, {"to", q.vertices[a.to]}});
    return Json{{"vertices", q.vertices}, {"arrows", arrows}};
}

template <class K>
std::shared_ptr<const PresentedAlgebra<K>> algebraFromJson(const Json& j) {
    try {
        FieldSpec field = fieldFromJson(j.at("field"));
        Quiver q = quiverFromJson(j.at("quiver"));
        std::vector<Relation<K>> rels;
        if (j.contains("relations"))
            for (const auto& rj : j.at("relations")) {
                Relation<K> rel;
                for (const auto& tj : rj.at("terms")) {
                    K coef = parseScalar<K>(field, tj.at("coef").get<std::string>());
                    Path p = pathFromArrowNames(q, tj.at("path").get<std::vector<std::string>>());
                    rel.terms.push_back({std::move(coef), std::move(p)});
                }
                rels.push_back(std::move(rel));
            }
        int bound = j.at("lengthBound").get<int>();
        return buildPresentedAlgebra<K>(field, std::move(q), std::move(rels), bound);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("algebra: ") + e.what());
    }
}

template <class K>
Json algebraToJson(const PresentedAlgebra<K>& a) {
    Json rels = Json::array();
    for (const auto& rel : a.relations) {
        Json terms = Json::array();
        for (const auto& t : rel.terms) {
            std::vector<std::string> names;
            for (int idx : t.path.comp)
                names.push_back(a.quiver.arrows[idx].name);
            terms.push_back({{"coef", formatScalar(t.coef)}, {"path", names}});
        }
        rels.push_back({{"terms", terms}});
    }
    return Json{{"field", fieldToJson(a.field)},
                {"quiver", quiverToJson(a.quiver)},
                {"relations", rels},
                {"lengthBound", a.lengthBound}};
}

template <class K>
Representation<K> moduleFromJson(std::shared_ptr<const PresentedAlgebra<K>> alg, const Json& j) {
    try {
        Representation<K> r = zeroRepresentation(alg);
        const Json& dims = j.at("dims");
        for (auto it = dims.begin(); it != dims.end(); ++it)
            r.dims[alg->quiver.vertexIndex(it.key())] = it.value().get<Index>();
        for (int a = 0; a < alg->arrowCount(); ++a) {
            const auto& ar = alg->quiver.arrows[a];
            r.arrowMaps[a] = Mat<K>::Zero(r.dims[ar.to], r.dims[ar.from]);
        }
        if (j.contains("maps"))
            for (auto it = j.at("maps").begin(); it != j.at("maps").end(); ++it) {
                int a = alg->quiver.arrowIndex(it.key());
                const auto& ar = alg->quiver.arrows[a];
                Mat<K> m(r.dims[ar.to], r.dims[ar.from]);
                const Json& rows = it.value();
                if (static_cast<Index>(rows.size()) != m.rows())
                    throw ParseError("module: map '" + it.key() + "' has wrong row count");
                for (Index i = 0; i < m.rows(); ++i) {
                    const Json& row = rows[i];
                    if (static_cast<Index>(row.size()) != m.cols())
                        throw ParseError("module: map '" + it.key() + "' has wrong column count");
                    for (Index jj = 0; jj < m.cols(); ++jj)
                        m(i, jj) = parseScalar<K>(alg->field, row[jj].get<std::string>());
                }
                r.arrowMaps[a] = std::move(m);
            }
        validateRepresentation(r);
        return r;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("module: ") + e.what());
    }
}

template <class K>
Json moduleToJson(const Representation<K>& r) {
    const auto& q = r.algebra->quiver;
    Json dims = Json::object();
    for (int v = 0; v < r.algebra->vertexCount(); ++v)
        dims[q.vertices[v]] = r.dims[v];
    Json maps = Json::object();
    for (int a = 0; a < r.algebra->arrowCount(); ++a) {
        Json rows = Json::array();
        for (Index i = 0; i < r.arrowMaps[a].rows(); ++i) {
            Json row = Json::array();
            for (Index j = 0; j < r.arrowMaps[a].cols(); ++j)
                row.push_back(formatScalar(r.arrowMaps[a](i, j)));
            rows.push_back(row);
        }
        maps[q.arrows[a].name] = rows;
    }
    return Json{{"dims", dims}, {"maps", maps}};
}

inline Json verdictToJson(const Verdict& v) {
    Json j = Json::object();
    switch (v.state) {
        case Verdict::State::Yes:
            j["verdict"] = "yes";
            if (v.value)
                j["value"] = *v.value;
            break;
        case Verdict::State::No:
            j["verdict"] = "no";
            if (v.witnessDegree)
                j["witnessDegree"] = *v.witnessDegree;
            if (!v.witness.empty())
                j["witness"] = v.witness;
            break;
        case Verdict::State::UnknownAtHorizon:
            j["verdict"] = "unknown_at_horizon";
            break;
    }
    return j;
}

inline Json extReportToJson(const ExtReport& e) {
    Json dims = Json::object();
    for (size_t i = 0; i < e.dims.size(); ++i)
        dims[std::to_string(i)] = e.dims[i];
    return Json{{"dims", dims}, {"horizon", e.horizon}, {"truncated", e.truncated}};
}

inline Json gClassReportToJson(const GClassReport& r) {
    return Json{{"phiAcyclic", verdictToJson(r.phiAcyclic)},
                {"psiAcyclicOfPhi", verdictToJson(r.psiAcyclicOfPhi)},
                {"etaIso", r.etaIso},
                {"member", verdictToJson(r.member)}};
}

inline Json fdimReportToJson(const FdimReport& r) {
    Json evidence = Json::array();
    for (const auto& v : r.oracleEvidence)
        evidence.push_back(verdictToJson(v));
    return Json{{"value", verdictToJson(r.value)},
                {"syzygyChecked", r.syzygyChecked},
                {"oracleEvidence", evidence},
                {"oracleContainsProjectives", verdictToJson(r.oracleContainsProjectives)},
                {"oracleKernelClosed", verdictToJson(r.oracleKernelClosed)}};
}

template <class K>
Json resolutionToJson(const Resolution<K>& res) {
    const auto& q = res.module.algebra->quiver;
    Json terms = Json::array();
    for (const auto& t : res.terms) {
        Json dims = Json::object();
        for (int v = 0; v < res.module.algebra->vertexCount(); ++v)
            dims[q.vertices[v]] = t.dims[v];
        terms.push_back({{"dims", dims}, {"total", t.totalDim()}});
    }
    Json ranks = Json::array();
    for (const auto& d : res.differentials) {
        Index r = 0;
        for (const auto& mv : d.vertexMaps)
            r += rankOf(mv);
        ranks.push_back(r);
    }
    return Json{{"length", res.length()},
                {"terms", terms},
                {"differentialRanks", ranks},
                {"truncated", res.truncated}};
}

/* ------------------------------- workspace -------------------------------- */

template <class K>
struct Workspace {
    FieldSpec field;
    std::shared_ptr<const PresentedAlgebra<K>> algebra;
    std::map<std::string, Representation<K>> modules;
    std::map<std::string, std::string> contexts;  // context name -> module name

    const Representation<K>& module(const std::string& name) const {
        auto it = modules.find(name);
        if (it == modules.end())
            throw NameError("unknown module '" + name + "'");
        return it->second;
    }
    AdjointContext<K> context(const std::string& name, Index horizon) const {
        auto it = contexts.find(name);
        if (it == contexts.end())
            throw NameError("unknown context '" + name + "'");
        return makeAdjointContext(algebra, module(it->second), horizon);
    }
};

template <class K>
Workspace<K> workspaceFromJson(const Json& j) {
    Workspace<K> ws;
    ws.algebra = algebraFromJson<K>(j);
    ws.field = ws.algebra->field;
    if (j.contains("modules"))
        for (auto it = j.at("modules").begin(); it != j.at("modules").end(); ++it) {
            if (ws.modules.count(it.key()))
                throw ParseError("duplicate module name '" + it.key() + "'");
            ws.modules.emplace(it.key(), moduleFromJson(ws.algebra, it.value()));
        }
    if (j.contains("contexts"))
        for (auto it = j.at("contexts").begin(); it != j.at("contexts").end(); ++it) {
            std::string moduleName = it.value().at("module").get<std::string>();
            if (!ws.modules.count(moduleName))
                throw NameError("context '" + it.key() + "' names unknown module '" + moduleName + "'");
            ws.contexts[it.key()] = moduleName;
        }
    return ws;
}

template <class K>
Json workspaceToJson(const Workspace<K>& ws) {
    Json j = algebraToJson(*ws.algebra);
    Json mods = Json::object();
    for (const auto& [name, m] : ws.modules)
        mods[name] = moduleToJson(m);
    j["modules"] = mods;
    Json ctxs = Json::object();
    for (const auto& [name, mod] : ws.contexts)
        ctxs[name] = Json{{"module", mod}};
    j["contexts"] = ctxs;
    return j;
}

/* Oracle specs: "projectives", "add:NAME", "perp:N1,N2:m" with m a number or
 * "inf". */
template <class K>
ClassOracle<K> oracleFromSpec(const Workspace<K>& ws, const std::string& spec, Index horizon) {
    if (spec == "projectives")
        return ClassOracle<K>::projectives(ws.algebra, horizon);
    if (spec.rfind("add:", 0) == 0) {
        std::string name = spec.substr(4);
        return ClassOracle<K>::addOf(ws.module(name), horizon, spec);
    }
    if (spec.rfind("perp:", 0) == 0) {
        std::string rest = spec.substr(5);
        auto colon = rest.rfind(':');
        std::string names = colon == std::string::npos ? rest : rest.substr(0, colon);
        std::string boundTxt = colon == std::string::npos ? "inf" : rest.substr(colon + 1);
        std::vector<Representation<K>> targets;
        size_t at = 0;
        while (at <= names.size()) {
            auto comma = names.find(',', at);
            std::string name = names.substr(at, comma == std::string::npos ? std::string::npos : comma - at);
            if (name.empty())
                throw ParseError("oracle spec: empty module name in '" + spec + "'");
            targets.push_back(ws.module(name));
            if (comma == std::string::npos)
                break;
            at = comma + 1;
        }
        std::optional<Index> bound;
        if (boundTxt != "inf") {
            try {
                size_t pos = 0;
                long b = std::stol(boundTxt, &pos);
                if (pos != boundTxt.size() || b < 1)
                    throw std::invalid_argument("bad bound");
                bound = static_cast<Index>(b);
            } catch (const std::exception&) {
                throw ParseError("oracle spec: bad bound '" + boundTxt + "' in '" + spec + "'");
            }
        }
        return ClassOracle<K>::leftPerp(std::move(targets), bound, horizon, spec);
    }
    throw ParseError("unknown oracle spec '" + spec + "'");
}

}  // namespace homdim
