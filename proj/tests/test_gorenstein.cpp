#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homdim/gorenstein.hpp"

using namespace homdim;

namespace {

struct Ctx {
    std::shared_ptr<const PresentedAlgebra<Rat>> alg;
    std::vector<Representation<Rat>> P, S;
    Representation<Rat> U;
    AdjointContext<Rat> ctx;

    Ctx() {
        Quiver q = makeQuiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
        alg = buildPresentedAlgebra<Rat>(FieldSpec::rationals(), q, {}, 3);
        for (int v = 0; v < 3; ++v) {
            P.push_back(indecProjective(alg, v));
            S.push_back(simpleRep(alg, v));
        }
        U = directSum(alg, {P[0], P[1], S[1]});
        ctx = makeAdjointContext(alg, U, 10);
    }
};

Ctx& fixture() {
    static Ctx fx;
    return fx;
}

bool mapsEqual(const RepMap<Rat>& f, const RepMap<Rat>& g) {
    for (size_t v = 0; v < f.vertexMaps.size(); ++v)
        if (!matEq(f.vertexMaps[v], g.vertexMaps[v]))
            return false;
    return true;
}

}  // namespace

TEST_CASE("context construction certifies the generators") {
    auto& fx = fixture();
    CHECK(fx.ctx.S->dim() == 5);
    CHECK(fx.ctx.uAsS.dimension == 6);
    CHECK(fx.ctx.generatorsInG.isYes());
    REQUIRE(fx.ctx.generatorReports.size() == 3);
    for (const auto& r : fx.ctx.generatorReports) {
        CHECK(r.member.isYes());
        CHECK(r.etaIso);
    }
    CHECK(fx.ctx.maxExtDegreeObserved == 1);  // gl.dim 1 and Ext^1(S1,U) != 0
}

TEST_CASE("phi on pinned modules") {
    auto& fx = fixture();
    auto phiU = phi(fx.ctx, fx.U);
    CHECK(phiU.module.dimension == 5);  // Hom(U,U) = S, the regular module
    validateSCModule(phiU.module);
    auto res = scFreeResolution(phiU.module, 12);
    CHECK(res.termination == SCResolution<Rat>::Termination::ZeroKernel);
    CHECK(res.freeRanks == std::vector<Index>{1});  // free of rank one

    CHECK(phi(fx.ctx, zeroRepresentation(fx.alg)).module.dimension == 0);
    CHECK(phi(fx.ctx, fx.P[0]).module.dimension == 1);  // dim U at vertex 1
    CHECK(phi(fx.ctx, fx.P[1]).module.dimension == 3);
    CHECK(phi(fx.ctx, fx.P[2]).module.dimension == 2);
}

TEST_CASE("psi on pinned modules") {
    auto& fx = fixture();
    auto reg = regularSCModule(fx.ctx.S);
    auto psiS = psi(fx.ctx, reg);
    CHECK(psiS.rep.dims == fx.U.dims);  // Hom_S(S, U) = U
    validateRepresentation(psiS.rep);

    SCModule<Rat> zero{fx.ctx.S, 0, std::vector<Mat<Rat>>(5, Mat<Rat>::Zero(0, 0))};
    CHECK(psi(fx.ctx, zero).rep.isZero());

    // Psi(Phi(U)) = U with eta_U the canonical identification
    auto ed = etaData(fx.ctx, fx.U);
    CHECK(ed.psiPhiM.rep.dims == fx.U.dims);
    CHECK(ed.eta.isIso());
    CHECK(ed.eta.commutes());
}

TEST_CASE("eta on pinned modules") {
    auto& fx = fixture();
    auto z = eta(fx.ctx, zeroRepresentation(fx.alg));
    CHECK(z.source.isZero());
    CHECK(z.target.isZero());

    // Phi(S(1)) = 0, so eta_{S(1)} cannot be injective
    auto ed = etaData(fx.ctx, fx.S[0]);
    CHECK(ed.phiM.module.dimension == 0);
    CHECK(ed.psiPhiM.rep.isZero());
    CHECK(!ed.eta.isIso());
    CHECK(!ed.eta.isInjective());
}

TEST_CASE("eta is natural on sampled maps") {
    auto& fx = fixture();
    // maps P(2) -> U and U -> U from the hom bases
    std::vector<std::pair<Representation<Rat>, Representation<Rat>>> pairs = {
        {fx.P[1], fx.U}, {fx.U, fx.U}, {fx.P[2], fx.P[0]}};
    for (auto& [m, mp] : pairs) {
        auto edM = etaData(fx.ctx, m);
        auto edMp = etaData(fx.ctx, mp);
        for (const auto& u : homSpace(m, mp)) {
            Mat<Rat> t = phiOfMap(edM.phiM, edMp.phiM, u);
            RepMap<Rat> psiPhiU = psiOfMap(edM.psiPhiM, edMp.psiPhiM, t);
            CHECK(mapsEqual(composeMaps(psiPhiU, edM.eta), composeMaps(edMp.eta, u)));
        }
    }
}

TEST_CASE("adjunction dimension identity on sampled pairs") {
    auto& fx = fixture();
    std::vector<Representation<Rat>> ms = {fx.P[0], fx.S[1], fx.U, fx.P[2]};
    std::vector<SCModule<Rat>> xs = {regularSCModule(fx.ctx.S), phi(fx.ctx, fx.U).module,
                                     phi(fx.ctx, fx.S[1]).module};
    for (const auto& m : ms) {
        auto phiM = phi(fx.ctx, m);
        CHECK(phiM.module.dimension == static_cast<Index>(homSpace(m, fx.ctx.U).size()));
        for (const auto& x : xs) {
            auto psiX = psi(fx.ctx, x);
            Index lhs = static_cast<Index>(homSpace(m, psiX.rep).size());
            Index rhs = static_cast<Index>(scHom(x, phiM.module).size());
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("gClass membership") {
    auto& fx = fixture();
    auto ru = gClass(fx.ctx, fx.U);
    CHECK(ru.member.isYes());
    CHECK(ru.phiAcyclic.isYes());
    CHECK(ru.psiAcyclicOfPhi.isYes());
    CHECK(ru.etaIso);

    auto rs1 = gClass(fx.ctx, fx.S[0]);
    CHECK(rs1.member.isNo());
    CHECK(!rs1.etaIso);
    CHECK(rs1.phiAcyclic.isNo());  // Ext^1(S1, U) is 2-dimensional

    CHECK(gClass(fx.ctx, zeroRepresentation(fx.alg)).member.isYes());

    // S(2) is in the G-class: Phi(S2) is the simple projective at the sink
    auto rs2 = gClass(fx.ctx, fx.S[1]);
    CHECK(rs2.member.isYes());
}

TEST_CASE("gDim on pinned modules") {
    auto& fx = fixture();
    CHECK(gDim(fx.ctx, fx.U).value == 0);
    for (int v = 0; v < 3; ++v)
        CHECK(gDim(fx.ctx, fx.P[v]).value == 0);

    auto g1 = gDim(fx.ctx, fx.S[0]);
    REQUIRE(g1.isYes());
    CHECK(*g1.value == 1);

    auto g2 = gDim(fx.ctx, fx.S[1]);
    REQUIRE(g2.isYes());
    CHECK(*g2.value <= *pdim(fx.S[1], 10).value);
    CHECK(*g2.value == 0);

    CHECK(gDim(fx.ctx, zeroRepresentation(fx.alg)).value == 0);
}

TEST_CASE("gDim is bounded by pdim whenever both are determinate") {
    auto& fx = fixture();
    Rng rng(41);
    for (int t = 0; t < 15; ++t) {
        std::vector<Index> dims;
        for (int v = 0; v < 3; ++v)
            dims.push_back(static_cast<Index>(rng.intIn(0, 3)));
        auto m = randomRepresentation(fx.alg, dims, rng.next());
        REQUIRE(m.has_value());
        auto g = gDim(fx.ctx, *m);
        auto p = pdim(*m, 10);
        if (g.isYes() && p.isYes())
            CHECK(*g.value <= *p.value);
        if (g.isYes()) {
            // sup formula: the value matches the top nonvanishing Ext degree
            CHECK(*g.value == extDim(*m, fx.ctx.U, 10).supNonzero());
        }
    }
}

TEST_CASE("D-reflexivity reports") {
    auto& fx = fixture();
    auto ru = dReflexiveReport(fx.ctx, fx.U, 0);
    CHECK(ru.verdict.isYes());
    CHECK(ru.characterization == "phi-acyclic");

    auto rs0 = dReflexiveReport(fx.ctx, fx.S[0], 0);
    CHECK(rs0.verdict.isNo());
    CHECK(rs0.characterization == "gdim-bound");

    auto rs1 = dReflexiveReport(fx.ctx, fx.S[0], 1);
    CHECK(rs1.verdict.isYes());

    for (int v = 0; v < 3; ++v)
        CHECK(dReflexiveReport(fx.ctx, fx.P[v], 0).verdict.isYes());
}

TEST_CASE("homological-dimension law for the G-class on pinned resolutions") {
    auto& fx = fixture();
    // 0 -> K -> G_0 -> S(1) -> 0 with G_0 = P(1) + U a G-class cover
    auto g0 = directSum(fx.alg, {fx.P[0], fx.U});
    CHECK(gClass(fx.ctx, g0).member.isYes());
    auto cover = projectiveCover(fx.S[0]);
    RepMap<Rat> epi = zeroMap(g0, fx.S[0]);
    for (size_t v = 0; v < 3; ++v)
        epi.vertexMaps[v].leftCols(cover.epi.vertexMaps[v].cols()) = cover.epi.vertexMaps[v];
    REQUIRE(epi.commutes());
    REQUIRE(epi.isSurjective());
    auto k = kernel(epi);
    REQUIRE(gDim(fx.ctx, fx.S[0]).value == 1);
    CHECK(gClass(fx.ctx, k.rep).member.isYes());  // the tail of a length-1 G-resolution
}
