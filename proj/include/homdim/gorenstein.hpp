#pragma once

/* The contravariant adjoint pair Phi = Hom_L(-, U) and Psi = Hom_S(-, U)
 * with S = End(U): the unit eta, acyclicity tests, G-class membership,
 * G-dimension, and D-reflexivity reporting.
 *
 * Phi(M) carries the left S-action by post-composition; Psi(X) is the
 * intertwiner space Hom_S(X, U) made into a representation by slicing along
 * the vertex idempotents of the L-action on U.  The derived machinery is
 * realized degreewise: H^i(R Phi M) is Ext^i_L(M, U) from a projective
 * resolution, H^i on the S side is Ext^i_S from a free resolution. */

#include <string>
#include <vector>

#include "homdim/homology.hpp"

namespace homdim {

template <class K>
struct PhiImage {
    SCModule<K> module;
    std::vector<RepMap<K>> basis;  // basis of Hom(M, U)
};

template <class K>
struct PsiImage {
    Representation<K> rep;
    std::vector<Mat<K>> homBasis;      // basis of Hom_S(X, U), dimU x dimX
    std::vector<Mat<K>> vertexCoords;  // homBasis coordinates of each vertex slice
};

struct GClassReport {
    Verdict phiAcyclic;
    Verdict psiAcyclicOfPhi;
    bool etaIso = false;
    Verdict member;
};

template <class K>
struct AdjointContext {
    std::shared_ptr<const PresentedAlgebra<K>> lambda;
    Representation<K> U;
    std::shared_ptr<const SCAlgebra<K>> S;
    std::vector<RepMap<K>> endBasis;
    SCModule<K> uAsS;
    Index horizon = 10;

    Verdict generatorsInG;                  // gClass over every Lambda e_v
    std::vector<GClassReport> generatorReports;
    Index maxExtDegreeObserved = 0;         // cohomological bound seen on probes
};

template <class K>
Mat<K> globalArrowAction(const Representation<K>& u, int a) {
    const auto& ar = u.algebra->quiver.arrows[a];
    Mat<K> m = Mat<K>::Zero(u.totalDim(), u.totalDim());
    m.block(u.vertexOffset(ar.to), u.vertexOffset(ar.from), u.dims[ar.to], u.dims[ar.from]) =
        u.arrowMaps[a];
    return m;
}

template <class K>
PhiImage<K> phi(const AdjointContext<K>& ctx, const Representation<K>& m) {
    if (m.algebra != ctx.lambda)
        throw std::invalid_argument("phi: module not over the context algebra");
    PhiImage<K> out;
    out.basis = homSpace(m, ctx.U);
    Index d = static_cast<Index>(out.basis.size());
    out.module.algebra = ctx.S;
    out.module.dimension = d;
    for (Index s = 0; s < ctx.S->dim(); ++s) {
        Mat<K> act(d, d);
        for (Index k = 0; k < d; ++k)
            act.col(k) = coordsOverBasis(out.basis, composeMaps(ctx.endBasis[s], out.basis[k]));
        out.module.action.push_back(std::move(act));
    }
    return out;
}

template <class K>
PsiImage<K> psi(const AdjointContext<K>& ctx, const SCModule<K>& x) {
    if (x.algebra != ctx.S)
        throw std::invalid_argument("psi: module not over the context endomorphism algebra");
    PsiImage<K> out;
    out.homBasis = scHom(x, ctx.uAsS);
    Index n = static_cast<Index>(out.homBasis.size());
    Index du = ctx.U.totalDim();
    Mat<K> stacked(du * x.dimension, n);
    for (Index k = 0; k < n; ++k)
        stacked.col(k) = vectorize(out.homBasis[k]);

    const auto alg = ctx.lambda;
    int nv = alg->vertexCount();
    out.rep.algebra = alg;
    for (int v = 0; v < nv; ++v) {
        // coordinates c with rows of sum_k c_k h_k outside the v block zero
        Index lo = ctx.U.vertexOffset(v), hi = lo + ctx.U.dims[v];
        Mat<K> cond = Mat<K>::Zero((du - ctx.U.dims[v]) * x.dimension, n);
        Index row = 0;
        for (Index j = 0; j < x.dimension; ++j)
            for (Index r = 0; r < du; ++r) {
                if (r >= lo && r < hi)
                    continue;
                for (Index k = 0; k < n; ++k)
                    cond(row, k) = out.homBasis[k](r, j);
                ++row;
            }
        out.vertexCoords.push_back(kernelBasis(cond));
        out.rep.dims.push_back(out.vertexCoords.back().cols());
    }
    for (int a = 0; a < alg->arrowCount(); ++a) {
        const auto& ar = alg->quiver.arrows[a];
        Mat<K> ga = globalArrowAction(ctx.U, a);
        Mat<K> t(n, n);
        for (Index k = 0; k < n; ++k) {
            auto c = solve(stacked, vectorize(Mat<K>(ga * out.homBasis[k])));
            if (!c)
                throw std::logic_error("psi: arrow action leaves the intertwiner space");
            t.col(k) = *c;
        }
        auto mv = solveMany(out.vertexCoords[ar.to], Mat<K>(t * out.vertexCoords[ar.from]));
        if (!mv)
            throw std::logic_error("psi: arrow action not compatible with vertex slices");
        out.rep.arrowMaps.push_back(std::move(*mv));
    }
    return out;
}

/* Psi applied to an S-linear map tm: X -> Y (contravariant). */
template <class K>
RepMap<K> psiOfMap(const PsiImage<K>& psiY, const PsiImage<K>& psiX, const Mat<K>& tm) {
    Index nY = static_cast<Index>(psiY.homBasis.size());
    Index nX = static_cast<Index>(psiX.homBasis.size());
    Mat<K> stackedX(nX > 0 ? vectorize(psiX.homBasis[0]).size() : 0, nX);
    for (Index k = 0; k < nX; ++k)
        stackedX.col(k) = vectorize(psiX.homBasis[k]);
    Mat<K> coords(nX, nY);
    for (Index k = 0; k < nY; ++k) {
        auto c = solve(stackedX, vectorize(Mat<K>(psiY.homBasis[k] * tm)));
        if (!c)
            throw std::logic_error("psiOfMap: composed map not in the intertwiner span");
        coords.col(k) = *c;
    }
    RepMap<K> f{psiY.rep, psiX.rep, {}};
    for (size_t v = 0; v < psiY.vertexCoords.size(); ++v) {
        auto mv = solveMany(psiX.vertexCoords[v], Mat<K>(coords * psiY.vertexCoords[v]));
        if (!mv)
            throw std::logic_error("psiOfMap: vertex slice mismatch");
        f.vertexMaps.push_back(std::move(*mv));
    }
    return f;
}

/* Phi applied to u: M -> M' (contravariant): matrix of precomposition from
 * the basis of Hom(M', U) to the basis of Hom(M, U). */
template <class K>
Mat<K> phiOfMap(const PhiImage<K>& phiM, const PhiImage<K>& phiMPrime, const RepMap<K>& u) {
    Mat<K> t(static_cast<Index>(phiM.basis.size()), static_cast<Index>(phiMPrime.basis.size()));
    for (size_t k = 0; k < phiMPrime.basis.size(); ++k)
        t.col(static_cast<Index>(k)) = coordsOverBasis(phiM.basis, composeMaps(phiMPrime.basis[k], u));
    return t;
}

template <class K>
struct EtaData {
    PhiImage<K> phiM;
    PsiImage<K> psiPhiM;
    RepMap<K> eta;  // M -> Psi(Phi(M))
};

/* eta_M: the evaluation map m |-> (f |-> f(m)). */
template <class K>
EtaData<K> etaData(const AdjointContext<K>& ctx, const Representation<K>& m) {
    EtaData<K> out{phi(ctx, m), {}, {}};
    out.psiPhiM = psi(ctx, out.phiM.module);
    Index dPhi = out.phiM.module.dimension;
    Index du = ctx.U.totalDim();
    Index n = static_cast<Index>(out.psiPhiM.homBasis.size());
    Mat<K> stacked(du * dPhi, n);
    for (Index k = 0; k < n; ++k)
        stacked.col(k) = vectorize(out.psiPhiM.homBasis[k]);

    RepMap<K> e{m, out.psiPhiM.rep, {}};
    for (int v = 0; v < ctx.lambda->vertexCount(); ++v) {
        Mat<K> ev(out.psiPhiM.rep.dims[v], m.dims[v]);
        for (Index j = 0; j < m.dims[v]; ++j) {
            // the S-linear map Phi(M) -> U evaluating at the j-th basis vector of M_v
            Mat<K> w = Mat<K>::Zero(du, dPhi);
            for (Index k = 0; k < dPhi; ++k)
                w.block(ctx.U.vertexOffset(v), k, ctx.U.dims[v], 1) =
                    out.phiM.basis[k].vertexMaps[v].col(j);
            auto c = solve(stacked, vectorize(w));
            if (!c)
                throw std::logic_error("eta: evaluation map is not an intertwiner");
            auto gamma = solve(out.psiPhiM.vertexCoords[v], *c);
            if (!gamma)
                throw std::logic_error("eta: evaluation map misses its vertex slice");
            ev.col(j) = *gamma;
        }
        e.vertexMaps.push_back(std::move(ev));
    }
    out.eta = std::move(e);
    return out;
}

template <class K>
RepMap<K> eta(const AdjointContext<K>& ctx, const Representation<K>& m) {
    return etaData(ctx, m).eta;
}

inline Verdict acyclicityVerdict(const ExtReport& e) {
    Index bad = e.firstNonzeroPositive();
    if (bad >= 0)
        return Verdict::no(static_cast<long>(bad), "nonvanishing Ext in degree " + std::to_string(bad));
    if (e.truncated)
        return Verdict::unknown();
    return Verdict::yes();
}

template <class K>
GClassReport gClass(const AdjointContext<K>& ctx, const Representation<K>& m) {
    GClassReport rep;
    rep.phiAcyclic = acyclicityVerdict(extDim(m, ctx.U, ctx.horizon));
    EtaData<K> ed = etaData(ctx, m);
    rep.psiAcyclicOfPhi = acyclicityVerdict(scExtDim(ed.phiM.module, ctx.uAsS, ctx.horizon));
    rep.etaIso = ed.eta.isIso();
    if (rep.phiAcyclic.isNo() || rep.psiAcyclicOfPhi.isNo() || !rep.etaIso) {
        std::string why = !rep.etaIso ? "eta is not an isomorphism" : "an acyclicity condition fails";
        rep.member = Verdict::no(std::move(why));
    } else if (rep.phiAcyclic.isYes() && rep.psiAcyclicOfPhi.isYes()) {
        rep.member = Verdict::yes();
    } else {
        rep.member = Verdict::unknown();
    }
    return rep;
}

template <class K>
AdjointContext<K> makeAdjointContext(std::shared_ptr<const PresentedAlgebra<K>> lambda,
                                     Representation<K> u, Index horizon) {
    if (u.algebra != lambda)
        throw std::invalid_argument("makeAdjointContext: U not over the given algebra");
    validateRepresentation(u);
    AdjointContext<K> ctx;
    ctx.lambda = lambda;
    ctx.U = std::move(u);
    auto endo = endomorphismAlgebra(ctx.U);
    ctx.S = endo.algebra;
    ctx.endBasis = std::move(endo.basis);
    ctx.uAsS.algebra = ctx.S;
    ctx.uAsS.dimension = ctx.U.totalDim();
    for (const auto& f : ctx.endBasis)
        ctx.uAsS.action.push_back(f.globalMatrix());
    validateSCModule(ctx.uAsS);
    ctx.horizon = horizon;

    // the syzygy route below is only sound when every Lambda e_v lies in the
    // G-class; certify that now and record the Ext degrees seen on probes
    bool allYes = true, anyNo = false;
    for (int v = 0; v < lambda->vertexCount(); ++v) {
        GClassReport r = gClass(ctx, indecProjective(lambda, v));
        allYes = allYes && r.member.isYes();
        anyNo = anyNo || r.member.isNo();
        ctx.generatorReports.push_back(std::move(r));
    }
    ctx.generatorsInG = anyNo ? Verdict::no("some Lambda e_v fails gClass")
                              : (allYes ? Verdict::yes() : Verdict::unknown());
    std::vector<Representation<K>> probes;
    for (int v = 0; v < lambda->vertexCount(); ++v)
        probes.push_back(simpleRep(lambda, v));
    probes.push_back(ctx.U);
    for (const auto& p : probes)
        ctx.maxExtDegreeObserved = std::max(ctx.maxExtDegreeObserved,
                                            extDim(p, ctx.U, ctx.horizon).supNonzero());
    return ctx;
}

/* G-dimension by the sup-of-Ext formula, certified through the syzygy:
 * s = sup { i <= horizon : Ext^i(M, U) != 0 }, then syzygy(M, s) must pass
 * gClass.  A Yes certificate is sound even when the Ext report is truncated,
 * because the syzygy's own membership bounds all higher degrees. */
template <class K>
Verdict gDim(const AdjointContext<K>& ctx, const Representation<K>& m) {
    if (!ctx.generatorsInG.isYes())
        return Verdict::unknown();
    ExtReport ext = extDim(m, ctx.U, ctx.horizon);
    Index s = ext.supNonzero();
    GClassReport tail = gClass(ctx, syzygy(m, s));
    if (tail.member.isYes())
        return Verdict::yes(static_cast<long>(s));
    if (tail.member.isNo() && !ext.truncated)
        return Verdict::no(static_cast<long>(s), "syzygy at the Ext sup fails gClass");
    return Verdict::unknown();
}

struct DReflexiveReport {
    Verdict verdict;
    std::string characterization;  // which module-level criterion decided
    long cohomologicalBoundAssumed = 0;
};

/* D-reflexivity through the two module-level characterizations: for
 * Phi-acyclic modules, conditions 2-3 of the G-class; otherwise the
 * G-dimension bound gDim <= n. */
template <class K>
DReflexiveReport dReflexiveReport(const AdjointContext<K>& ctx, const Representation<K>& m, Index n) {
    DReflexiveReport out;
    out.cohomologicalBoundAssumed = static_cast<long>(ctx.maxExtDegreeObserved);
    Verdict phiAc = acyclicityVerdict(extDim(m, ctx.U, ctx.horizon));
    if (phiAc.isYes()) {
        out.characterization = "phi-acyclic";
        EtaData<K> ed = etaData(ctx, m);
        Verdict psiAc = acyclicityVerdict(scExtDim(ed.phiM.module, ctx.uAsS, ctx.horizon));
        if (!ed.eta.isIso())
            out.verdict = Verdict::no("eta is not an isomorphism");
        else if (psiAc.isNo())
            out.verdict = Verdict::no("Phi(M) is not Psi-acyclic");
        else if (psiAc.isYes())
            out.verdict = Verdict::yes();
        else
            out.verdict = Verdict::unknown();
        return out;
    }
    out.characterization = "gdim-bound";
    Verdict g = gDim(ctx, m);
    if (g.isYes())
        out.verdict = *g.value <= static_cast<long>(n)
                          ? Verdict::yes(*g.value)
                          : Verdict::no(*g.value, "G-dimension exceeds the bound");
    else
        out.verdict = g;
    return out;
}

}  // namespace homdim
