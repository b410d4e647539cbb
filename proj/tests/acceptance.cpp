/* Acceptance suite: one pass/fail line per criterion, nonzero exit on any
 * failure.  Usage: acceptance <path-to-cli> <data-dir>. */

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "homdim/laws.hpp"

using namespace homdim;
using Clock = std::chrono::steady_clock;

namespace {

std::string cliPath;
std::string dataDir;
int failures = 0;

void report(int number, const std::string& what, bool pass, double seconds, double budget) {
    bool inBudget = seconds < budget;
    std::printf("%s  criterion %d  %-58s (%.2fs, budget %.0fs)\n",
                pass && inBudget ? "PASS" : "FAIL", number, what.c_str(), seconds, budget);
    if (!pass || !inBudget)
        ++failures;
}

void run(int number, const std::string& what, double budgetSeconds, const std::function<bool()>& body) {
    auto t0 = Clock::now();
    bool pass = false;
    try {
        pass = body();
    } catch (const std::exception& e) {
        std::printf("      exception: %s\n", e.what());
        pass = false;
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    report(number, what, pass, secs, budgetSeconds);
}

struct CliResult {
    std::string out;
    int exitCode = -1;
};

CliResult runCli(const std::string& args) {
    CliResult r;
    std::string cmd = cliPath + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), n);
    r.exitCode = pclose(p);
    return r;
}

Workspace<Rat> loadTiltingWorkspace() {
    std::ifstream in(dataDir + "/a3-tilting.json");
    Json j;
    in >> j;
    return workspaceFromJson<Rat>(j);
}

template <class K>
std::shared_ptr<const PresentedAlgebra<K>> a3Algebra(FieldSpec f) {
    Quiver q = makeQuiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
    return buildPresentedAlgebra<K>(f, q, {}, 3);
}

template <class K>
std::shared_ptr<const PresentedAlgebra<K>> a3RelAlgebra(FieldSpec f) {
    Quiver q = makeQuiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
    Relation<K> rel{{{K(1), pathFromArrowNames(q, {"b", "a"})}}};
    return buildPresentedAlgebra<K>(f, q, {rel}, 3);
}

template <class K>
std::shared_ptr<const PresentedAlgebra<K>> fourVertexAlgebra(FieldSpec f) {
    Quiver q = makeQuiver({"1", "2", "3", "4"},
                          {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "2", "4"}});
    return buildPresentedAlgebra<K>(f, q, {}, 4);
}

/* Independent count for criterion 2: the six indecomposables over the linear
 * A3 orientation are interval modules, and dim Hom([a,b],[c,d]) is 1 exactly
 * when c <= a <= d <= b.  The algebra dimension is the path count. */
int intervalHom(std::pair<int, int> x, std::pair<int, int> y) {
    return (y.first <= x.first && x.first <= y.second && y.second <= x.second) ? 1 : 0;
}

bool criterion1() {
    Workspace<Rat> ws = loadTiltingWorkspace();
    const auto& u = ws.module("U");
    AdjointContext<Rat> ctx = ws.context("U", 10);
    ExtReport e = extDim(u, u, 10);
    bool extOk = e.dims[1] == 0 && !e.truncated;
    bool pdOk = pdim(u, 10).value == 1;
    bool etaOk = eta(ctx, u).isIso();
    GClassReport gc = gClass(ctx, u);
    Verdict gd = gDim(ctx, u);
    return extOk && pdOk && etaOk && gc.member.isYes() && gd.isYes() && *gd.value == 0;
}

bool criterion2() {
    Workspace<Rat> ws = loadTiltingWorkspace();
    // by-hand oracle: intervals for U = [1,3] + [2,3] + [2,2]
    std::vector<std::pair<int, int>> summands{{1, 3}, {2, 3}, {2, 2}};
    int endDim = 0;
    for (auto x : summands)
        for (auto y : summands)
            endDim += intervalHom(x, y);
    int pathCount = 0;
    for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j)
            ++pathCount;  // one path i -> j for each i <= j
    bool oracleOk = endDim == 5 && pathCount == 6;
    bool engineEnd = endomorphismAlgebra(ws.module("U")).algebra->dim() == endDim;
    bool engineAlg = ws.algebra->dim() == pathCount;
    return oracleOk && engineEnd && engineAlg;
}

bool criterion3() {
    FieldSpec f = FieldSpec::prime(5);
    auto a3 = a3Algebra<Fp>(f);
    auto y4 = fourVertexAlgebra<Fp>(f);
    Rng rng(0xeu13);
    int checked = 0;
    for (int t = 0; t < 520; ++t) {
        bool useA3 = t % 2 == 0;
        int nv = useA3 ? 3 : 4;
        std::vector<Index> dm, dn;
        for (int v = 0; v < nv; ++v) {
            dm.push_back(static_cast<Index>(rng.intIn(0, 4)));
            dn.push_back(static_cast<Index>(rng.intIn(0, 4)));
        }
        if (useA3) {
            auto m = randomRepresentation(a3, dm, rng.next());
            auto n = randomRepresentation(a3, dn, rng.next());
            if (!eulerFormCheck(*m, *n))
                return false;
        } else {
            auto m = randomRepresentation(y4, dm, rng.next());
            auto n = randomRepresentation(y4, dn, rng.next());
            if (!eulerFormCheck(*m, *n))
                return false;
        }
        ++checked;
    }
    return checked >= 500;
}

bool criterion4() {
    FieldSpec f = FieldSpec::prime(5);
    auto plain = a3Algebra<Fp>(f);
    auto rel = a3RelAlgebra<Fp>(f);
    Rng rng(0xd1f7);
    int checked = 0;
    for (int t = 0; t < 400 && checked < 220; ++t) {
        auto alg = t % 2 == 0 ? plain : rel;
        std::vector<Index> dm, dn;
        for (int v = 0; v < 3; ++v) {
            dm.push_back(static_cast<Index>(rng.intIn(0, 4)));
            dn.push_back(static_cast<Index>(rng.intIn(0, 4)));
        }
        auto m = randomRepresentation(alg, dm, rng.next());
        auto n = randomRepresentation(alg, dn, rng.next());
        if (!m || !n)
            continue;
        Index i = static_cast<Index>(rng.intIn(1, 4));
        Index sh = static_cast<Index>(rng.intIn(0, 3));
        ExtReport lhs = extDim(*m, *n, i + sh);
        ExtReport rhs = extDim(syzygy(*m, sh), *n, i);
        if (lhs.dims[i + sh] != rhs.dims[i])
            return false;
        ++checked;
    }
    return checked >= 200;
}

std::vector<LawResult> lawSuiteResults;

bool criterion5() {
    LawSuiteConfig cfg;  // defaults: 200 instances, F5, maxDim 4, horizon 10
    lawSuiteResults = runDefaultLawSuite<Fp>(cfg);
    bool ok = !lawSuiteResults.empty();
    for (const auto& r : lawSuiteResults) {
        if (!r.violations.empty()) {
            std::printf("      violations in %s\n", r.lawName.c_str());
            ok = false;
        }
        if (r.skipRate() >= 0.9) {
            std::printf("      vacuous law %s (skip rate %.2f)\n", r.lawName.c_str(), r.skipRate());
            ok = false;
        }
    }
    return ok;
}

bool criterion6() {
    LawSuiteConfig cfg;
    cfg.seed = 2;
    LawEnv<Fp> env = makeA3Env<Fp>(cfg.field);
    AdjointContext<Fp> ctx = makeAdjointContext(env.algebra, env.named.at("U"), cfg.horizon);
    LawResult r = lawGClassResolutionTail(env, ctx, cfg, 60);
    return r.violations.empty() && r.checked >= 50;
}

template <class K>
bool fdimMatchesPdimEverywhere(std::shared_ptr<const PresentedAlgebra<K>> alg, uint64_t seed) {
    auto oracle = ClassOracle<K>::projectives(alg, 10);
    std::vector<Representation<K>> probes;
    for (int v = 0; v < alg->vertexCount(); ++v) {
        probes.push_back(simpleRep(alg, v));
        probes.push_back(indecProjective(alg, v));
    }
    Rng rng(seed);
    int randoms = 0;
    while (randoms < 100) {
        std::vector<Index> dims;
        for (int v = 0; v < alg->vertexCount(); ++v)
            dims.push_back(static_cast<Index>(rng.intIn(0, 4)));
        auto m = randomRepresentation(alg, dims, rng.next());
        if (!m)
            continue;
        probes.push_back(std::move(*m));
        ++randoms;
    }
    for (const auto& m : probes) {
        FdimReport f = fDim(oracle, m, 10);
        Verdict p = pdim(m, 10);
        if (!f.value.isYes() || !p.isYes() || *f.value.value != *p.value)
            return false;
    }
    return true;
}

bool criterion7() {
    FieldSpec q = FieldSpec::rationals();
    auto plain = a3Algebra<Rat>(q);
    auto rel = a3RelAlgebra<Rat>(q);
    if (!fdimMatchesPdimEverywhere<Rat>(plain, 11) || !fdimMatchesPdimEverywhere<Rat>(rel, 12))
        return false;
    // by-hand check over ba = 0: the minimal resolution of S(1) is
    // P(3) -> P(2) -> P(1) -> S(1), so pdim S(1) = 2
    auto s1 = simpleRep(rel, 0);
    if (!(pdim(s1, 10).value == 2))
        return false;
    Resolution<Rat> res = minimalResolution(s1, 10);
    if (res.length() != 2)
        return false;
    for (int i = 0; i < 3; ++i)
        if (res.terms[i].dims != indecProjective(rel, i).dims)
            return false;
    return true;
}

bool criterion8() {
    std::string ws = dataDir + "/a3-tilting.json";
    std::vector<std::string> commands = {
        "ext " + ws + " U U",
        "gdim " + ws + " U --ctx U",
        "fdim " + ws + " projectives S1",
        "resolve " + ws + " S2",
        "laws run --seed 31ped",  // fixed seed; see below
    };
    commands.back() = "laws run --seed 31";
    for (const auto& c : commands) {
        CliResult a = runCli(c);
        CliResult b = runCli(c);
        if (a.out.empty() || a.out != b.out || a.exitCode != b.exitCode) {
            std::printf("      not byte-identical: %s\n", c.c_str());
            return false;
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: acceptance <cli-path> <data-dir>\n");
        return 2;
    }
    cliPath = argv[1];
    dataDir = argv[2];

    run(1, "running-example reproduction (Ext, pdim, eta, gClass, gDim)", 1.0, criterion1);
    run(2, "dim End(U) = 5 and dim Lambda = 6 against the by-hand count", 1.0, criterion2);
    run(3, "Euler-form oracle on 500+ random pairs over two quivers", 30.0, criterion3);
    run(4, "dimension-shift identity on 200+ seeded probes", 30.0, criterion4);
    run(5, "law suite at default config: no violations, no vacuous law", 180.0, criterion5);
    run(6, "G-class resolution tails over 50+ sampled resolutions", 60.0, criterion6);
    run(7, "fdim(projectives) = pdim on simples/projectives/randoms", 30.0, criterion7);
    run(8, "byte-identical reports on repeated seeded commands", 60.0, criterion8);

    if (failures == 0) {
        std::printf("ACCEPTANCE: all 8 criteria passed\n");
        return 0;
    }
    std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
    return 1;
}
