/* Command-line front end: parse workspace files, dispatch computations, emit
 * machine-readable JSON reports on stdout.
 *
 * Exit codes: 0 determinate, 1 parse error, 2 name resolution error,
 * 3 indeterminate at the horizon. */

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "homdim/laws.hpp"

using namespace homdim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitName = 2;
constexpr int kExitHorizon = 3;

Json loadJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

void prettyPrint(const Json& j, const std::string& prefix = "") {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || it.value().is_array()) {
                std::cout << prefix << it.key() << ":\n";
                prettyPrint(it.value(), prefix + "  ");
            } else {
                std::cout << prefix << it.key() << ": " << it.value().dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i) {
            if (j[i].is_object() || j[i].is_array()) {
                std::cout << prefix << "- [" << i << "]\n";
                prettyPrint(j[i], prefix + "  ");
            } else {
                std::cout << prefix << "- " << j[i].dump() << "\n";
            }
        }
    } else {
        std::cout << prefix << j.dump() << "\n";
    }
}

void emit(const Json& report, bool pretty) {
    if (pretty)
        prettyPrint(report);
    else
        std::cout << report.dump() << "\n";
}

int verdictExit(const Verdict& v) {
    return v.isUnknown() ? kExitHorizon : kExitOk;
}

FieldSpec parseFieldFlag(const std::string& text) {
    if (text == "q" || text == "Q")
        return FieldSpec::rationals();
    if (text.rfind("fp:", 0) == 0) {
        try {
            return FieldSpec::prime(std::stoll(text.substr(3)));
        } catch (const std::exception&) {
            throw ParseError("bad field flag '" + text + "'");
        }
    }
    throw ParseError("bad field flag '" + text + "' (expected q or fp:<p>)");
}

struct CommandIO {
    std::string file;
    Index horizon = 10;
    bool pretty = false;
};

template <class Fn>
int withWorkspace(const CommandIO& io, Fn&& fn) {
    Json wj = loadJsonFile(io.file);
    FieldSpec field = fieldFromJson(wj.contains("field") ? wj.at("field") : Json{{"kind", "Q"}});
    if (field.kind == FieldSpec::Kind::Rationals) {
        Workspace<Rat> ws = workspaceFromJson<Rat>(wj);
        return fn(ws);
    }
    Workspace<Fp> ws = workspaceFromJson<Fp>(wj);
    return fn(ws);
}

template <class K>
int cmdAlgebraCheck(const Workspace<K>& ws, const CommandIO& io) {
    Json basis = Json::array();
    for (const auto& p : ws.algebra->pathBasis)
        basis.push_back(pathLabel(ws.algebra->quiver, p));
    Json modules = Json::object();
    for (const auto& [name, m] : ws.modules) {
        Json dims = Json::object();
        for (int v = 0; v < ws.algebra->vertexCount(); ++v)
            dims[ws.algebra->quiver.vertices[v]] = m.dims[v];
        modules[name] = Json{{"valid", true}, {"dims", dims}, {"total", m.totalDim()}};
    }
    Json report{{"dim", ws.algebra->dim()},
                {"pathBasis", basis},
                {"vertices", ws.algebra->vertexCount()},
                {"arrows", ws.algebra->arrowCount()},
                {"relations", ws.algebra->relations.size()},
                {"modules", modules},
                {"contexts", Json::object()}};
    for (const auto& [name, mod] : ws.contexts)
        report["contexts"][name] = Json{{"module", mod}};
    emit(report, io.pretty);
    return kExitOk;
}

template <class K>
int cmdResolve(const Workspace<K>& ws, const CommandIO& io, const std::string& moduleName) {
    Resolution<K> res = minimalResolution(ws.module(moduleName), io.horizon);
    Json report = resolutionToJson(res);
    report["module"] = moduleName;
    emit(report, io.pretty);
    return res.truncated ? kExitHorizon : kExitOk;
}

template <class K>
int cmdExt(const Workspace<K>& ws, const CommandIO& io, const std::string& from, const std::string& to) {
    ExtReport e = extDim(ws.module(from), ws.module(to), io.horizon);
    Json report = extReportToJson(e);
    report["from"] = from;
    report["to"] = to;
    emit(report, io.pretty);
    return kExitOk;
}

template <class K>
int cmdPdim(const Workspace<K>& ws, const CommandIO& io, const std::string& moduleName) {
    Verdict v = pdim(ws.module(moduleName), io.horizon);
    Json report{{"module", moduleName}, {"pdim", verdictToJson(v)}};
    emit(report, io.pretty);
    return verdictExit(v);
}

template <class K>
int cmdFdim(const Workspace<K>& ws, const CommandIO& io, const std::string& oracleSpec,
            const std::string& moduleName) {
    ClassOracle<K> oracle = oracleFromSpec(ws, oracleSpec, io.horizon);
    FdimReport rep = fDim(oracle, ws.module(moduleName), io.horizon);
    Json report = fdimReportToJson(rep);
    report["module"] = moduleName;
    report["oracle"] = oracleSpec;
    emit(report, io.pretty);
    return verdictExit(rep.value);
}

template <class K>
int cmdGclass(const Workspace<K>& ws, const CommandIO& io, const std::string& ctxName,
              const std::string& moduleName) {
    AdjointContext<K> ctx = ws.context(ctxName, io.horizon);
    GClassReport rep = gClass(ctx, ws.module(moduleName));
    Json report = gClassReportToJson(rep);
    report["module"] = moduleName;
    report["context"] = ctxName;
    emit(report, io.pretty);
    return verdictExit(rep.member);
}

template <class K>
int cmdGdim(const Workspace<K>& ws, const CommandIO& io, const std::string& ctxName,
            const std::string& moduleName) {
    AdjointContext<K> ctx = ws.context(ctxName, io.horizon);
    GClassReport rep = gClass(ctx, ws.module(moduleName));
    Verdict g = gDim(ctx, ws.module(moduleName));
    Json report{{"module", moduleName},
                {"context", ctxName},
                {"generatorsInG", verdictToJson(ctx.generatorsInG)},
                {"gclass", gClassReportToJson(rep)},
                {"gdim", verdictToJson(g)}};
    emit(report, io.pretty);
    return verdictExit(g);
}

template <class K>
int cmdDreflexive(const Workspace<K>& ws, const CommandIO& io, const std::string& ctxName,
                  const std::string& moduleName, Index n) {
    AdjointContext<K> ctx = ws.context(ctxName, io.horizon);
    DReflexiveReport rep = dReflexiveReport(ctx, ws.module(moduleName), n);
    Json report{{"module", moduleName},
                {"context", ctxName},
                {"n", n},
                {"verdict", verdictToJson(rep.verdict)},
                {"characterization", rep.characterization},
                {"cohomologicalBoundAssumed", rep.cohomologicalBoundAssumed}};
    emit(report, io.pretty);
    return verdictExit(rep.verdict);
}

int cmdLawsRun(const std::string& configPath, const std::string& reportPath,
               std::optional<uint64_t> seed, const std::string& fieldFlag, std::optional<Index> horizon,
               bool pretty) {
    LawSuiteConfig cfg;
    if (!configPath.empty())
        cfg = lawConfigFromJson(loadJsonFile(configPath));
    if (seed)
        cfg.seed = *seed;
    if (!fieldFlag.empty())
        cfg.field = parseFieldFlag(fieldFlag);
    if (horizon)
        cfg.horizon = *horizon;
    Json suite = cfg.field.kind == FieldSpec::Kind::Rationals
                     ? lawSuiteToJson(runDefaultLawSuite<Rat>(cfg))
                     : lawSuiteToJson(runDefaultLawSuite<Fp>(cfg));
    suite["config"] = Json{{"seed", cfg.seed},
                           {"instances", cfg.instances},
                           {"maxDim", cfg.maxDim},
                           {"field", fieldToJson(cfg.field)},
                           {"horizon", cfg.horizon}};
    if (!reportPath.empty()) {
        std::ofstream out(reportPath);
        if (!out)
            throw ParseError("cannot write report '" + reportPath + "'");
        out << suite.dump(2) << "\n";
    }
    emit(suite, pretty);
    return suite["anyVacuous"].get<bool>() ? kExitHorizon : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homological invariants of modules over quiver-presented algebras"};
    app.require_subcommand(1);

    CommandIO io;
    std::string moduleName, secondName, ctxName, oracleSpec;
    Index reflexiveBound = 0;

    auto addCommon = [&](CLI::App* cmd, bool needsFile = true) {
        if (needsFile)
            cmd->add_option("file", io.file, "workspace JSON file")->required();
        cmd->add_option("--max", io.horizon, "horizon: maximal Ext degree / resolution length")
            ->default_val(10);
        cmd->add_flag("--pretty", io.pretty, "human-readable output instead of compact JSON");
    };

    CLI::App* algebra = app.add_subcommand("algebra", "algebra file operations");
    algebra->require_subcommand(1);
    CLI::App* check = algebra->add_subcommand("check", "validate an algebra/workspace file");
    addCommon(check);

    CLI::App* resolve = app.add_subcommand("resolve", "minimal projective resolution summary");
    addCommon(resolve);
    resolve->add_option("module", moduleName, "module name")->required();

    CLI::App* ext = app.add_subcommand("ext", "Ext dimensions between two modules");
    addCommon(ext);
    ext->add_option("from", moduleName, "first argument of Ext")->required();
    ext->add_option("to", secondName, "second argument of Ext")->required();

    CLI::App* pd = app.add_subcommand("pdim", "projective dimension");
    addCommon(pd);
    pd->add_option("module", moduleName, "module name")->required();

    CLI::App* fd = app.add_subcommand("fdim", "relative dimension against a class oracle");
    addCommon(fd);
    fd->add_option("oracle", oracleSpec, "oracle spec: projectives | add:NAME | perp:N1,N2:m")
        ->required();
    fd->add_option("module", moduleName, "module name")->required();

    CLI::App* gc = app.add_subcommand("gclass", "G-class membership report");
    addCommon(gc);
    gc->add_option("module", moduleName, "module name")->required();
    gc->add_option("--ctx", ctxName, "adjoint context name")->required();

    CLI::App* gd = app.add_subcommand("gdim", "G-dimension with the membership report");
    addCommon(gd);
    gd->add_option("module", moduleName, "module name")->required();
    gd->add_option("--ctx", ctxName, "adjoint context name")->required();

    CLI::App* dr = app.add_subcommand("dreflexive", "D-reflexivity verdict");
    addCommon(dr);
    dr->add_option("module", moduleName, "module name")->required();
    dr->add_option("--ctx", ctxName, "adjoint context name")->required();
    dr->add_option("--n", reflexiveBound, "finite-presentation degree bound")->default_val(0);

    CLI::App* laws = app.add_subcommand("laws", "property-test harness");
    laws->require_subcommand(1);
    CLI::App* run = laws->add_subcommand("run", "run the law suite");
    std::string configPath, reportPath, fieldFlag;
    uint64_t seedFlag = 0;
    bool seedSet = false;
    run->add_option("--config", configPath, "law suite config JSON");
    run->add_option("--report", reportPath, "write the suite report to a file");
    run->add_option("--seed", seedFlag, "suite seed")->each([&](const std::string&) { seedSet = true; });
    run->add_option("--field", fieldFlag, "q | fp:<p>");
    std::optional<Index> lawHorizon;
    run->add_option("--max", [&lawHorizon](auto& vals) {
        lawHorizon = static_cast<Index>(std::stol(vals.at(0)));
        return true;
    }, "horizon override");
    bool lawsPretty = false;
    run->add_flag("--pretty", lawsPretty, "human-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << e.what() << "\n";
        return kExitParse;
    }

    try {
        if (check->parsed())
            return withWorkspace(io, [&](auto& ws) { return cmdAlgebraCheck(ws, io); });
        if (resolve->parsed())
            return withWorkspace(io, [&](auto& ws) { return cmdResolve(ws, io, moduleName); });
        if (ext->parsed())
            return withWorkspace(io, [&](auto& ws) { return cmdExt(ws, io, moduleName, secondName); });
        if (pd->parsed())
            return withWorkspace(io, [&](auto& ws) { return cmdPdim(ws, io, moduleName); });
        if (fd->parsed())
            return withWorkspace(io, [&](auto& ws) { return cmdFdim(ws, io, oracleSpec, moduleName); });
        if (gc->parsed())
            return withWorkspace(io, [&](auto& ws) { return cmdGclass(ws, io, ctxName, moduleName); });
        if (gd->parsed())
            return withWorkspace(io, [&](auto& ws) { return cmdGdim(ws, io, ctxName, moduleName); });
        if (dr->parsed())
            return withWorkspace(
                io, [&](auto& ws) { return cmdDreflexive(ws, io, ctxName, moduleName, reflexiveBound); });
        if (run->parsed())
            return cmdLawsRun(configPath, reportPath,
                              seedSet ? std::optional<uint64_t>(seedFlag) : std::nullopt, fieldFlag,
                              lawHorizon, lawsPretty);
    } catch (const NameError& e) {
        std::cerr << e.what() << "\n";
        return kExitName;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
