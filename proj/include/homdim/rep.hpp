#pragma once

/* Finite-dimensional modules in two presentations: quiver representations
 * over a PresentedAlgebra, and SCModules over an SCAlgebra.  Morphisms,
 * kernels/cokernels/images, short exact sequences, pullbacks, Hom-space
 * solvers and seeded random generation all live here. */

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homdim/algebra.hpp"
#include "homdim/linalg.hpp"
#include "homdim/rng.hpp"

namespace homdim {

template <class K>
struct Representation {
    std::shared_ptr<const PresentedAlgebra<K>> algebra;
    std::vector<Index> dims;        // per vertex
    std::vector<Mat<K>> arrowMaps;  // per arrow: dims[target] x dims[source]

    Index totalDim() const {
        Index t = 0;
        for (Index d : dims)
            t += d;
        return t;
    }
    bool isZero() const { return totalDim() == 0; }

    Index vertexOffset(int v) const {
        Index o = 0;
        for (int w = 0; w < v; ++w)
            o += dims[w];
        return o;
    }

    Mat<K> pathAction(const Path& p) const {
        if (p.isTrivial())
            return Mat<K>::Identity(dims[p.source], dims[p.source]);
        Mat<K> m = arrowMaps[p.comp.back()];
        for (size_t i = p.comp.size() - 1; i-- > 0;)
            m = (arrowMaps[p.comp[i]] * m).eval();
        return m;
    }

    /* action of a path-basis element on the total space */
    Mat<K> globalBasisAction(Index basisIdx) const {
        const Path& p = algebra->pathBasis[basisIdx];
        Mat<K> m = Mat<K>::Zero(totalDim(), totalDim());
        m.block(vertexOffset(p.target), vertexOffset(p.source), dims[p.target], dims[p.source]) = pathAction(p);
        return m;
    }
};

template <class K>
void validateRepresentation(const Representation<K>& m) {
    const auto& alg = *m.algebra;
    if (static_cast<int>(m.dims.size()) != alg.vertexCount())
        throw std::invalid_argument("representation: wrong number of vertex dimensions");
    if (static_cast<int>(m.arrowMaps.size()) != alg.arrowCount())
        throw std::invalid_argument("representation: wrong number of arrow maps");
    for (int a = 0; a < alg.arrowCount(); ++a) {
        const auto& ar = alg.quiver.arrows[a];
        if (m.arrowMaps[a].rows() != m.dims[ar.to] || m.arrowMaps[a].cols() != m.dims[ar.from])
            throw std::invalid_argument("representation: arrow map '" + ar.name + "' has wrong shape");
    }
    for (const auto& rel : alg.relations) {
        int s = rel.terms.front().path.source;
        int t = rel.terms.front().path.target;
        Mat<K> sum = Mat<K>::Zero(m.dims[t], m.dims[s]);
        for (const auto& term : rel.terms)
            sum += term.coef * m.pathAction(term.path);
        if (!isZeroMat(sum))
            throw std::invalid_argument("representation: relation does not vanish");
    }
}

template <class K>
Representation<K> zeroRepresentation(std::shared_ptr<const PresentedAlgebra<K>> alg) {
    Representation<K> r;
    r.algebra = alg;
    r.dims.assign(alg->vertexCount(), 0);
    for (int a = 0; a < alg->arrowCount(); ++a)
        r.arrowMaps.push_back(Mat<K>::Zero(0, 0));
    return r;
}

template <class K>
Representation<K> simpleRep(std::shared_ptr<const PresentedAlgebra<K>> alg, int v) {
    if (v < 0 || v >= alg->vertexCount())
        throw std::invalid_argument("simple: unknown vertex");
    Representation<K> r = zeroRepresentation(alg);
    r.dims[v] = 1;
    for (int a = 0; a < alg->arrowCount(); ++a) {
        const auto& ar = alg->quiver.arrows[a];
        r.arrowMaps[a] = Mat<K>::Zero(r.dims[ar.to], r.dims[ar.from]);
    }
    return r;
}

/* P(v) = Lambda e_v; the basis at vertex w is the set of residue paths
 * v -> w, in the algebra's canonical order. */
template <class K>
Representation<K> indecProjective(std::shared_ptr<const PresentedAlgebra<K>> alg, int v) {
    if (v < 0 || v >= alg->vertexCount())
        throw std::invalid_argument("indecProjective: unknown vertex");
    const auto& from = alg->basisPathsFrom(v);
    std::vector<std::vector<Index>> atVertex(alg->vertexCount());
    std::vector<Index> localOf(alg->dim(), -1);
    for (Index g : from) {
        int w = alg->pathBasis[g].target;
        localOf[g] = static_cast<Index>(atVertex[w].size());
        atVertex[w].push_back(g);
    }
    Representation<K> r;
    r.algebra = alg;
    r.dims.assign(alg->vertexCount(), 0);
    for (int w = 0; w < alg->vertexCount(); ++w)
        r.dims[w] = static_cast<Index>(atVertex[w].size());
    for (int a = 0; a < alg->arrowCount(); ++a) {
        const auto& ar = alg->quiver.arrows[a];
        Mat<K> m = Mat<K>::Zero(r.dims[ar.to], r.dims[ar.from]);
        for (Index col = 0; col < r.dims[ar.from]; ++col) {
            Vec<K> prod = alg->productCoords(alg->arrowBasisIndex(a), atVertex[ar.from][col]);
            for (Index g = 0; g < alg->dim(); ++g)
                if (prod(g) != K(0))
                    m(localOf[g], col) = prod(g);
        }
        r.arrowMaps.push_back(std::move(m));
    }
    return r;
}

template <class K>
Representation<K> directSum(std::shared_ptr<const PresentedAlgebra<K>> alg,
                            const std::vector<Representation<K>>& parts) {
    for (const auto& p : parts)
        if (p.algebra != alg)
            throw std::invalid_argument("directSum: mixed algebras");
    Representation<K> r = zeroRepresentation(alg);
    for (int v = 0; v < alg->vertexCount(); ++v)
        for (const auto& p : parts)
            r.dims[v] += p.dims[v];
    for (int a = 0; a < alg->arrowCount(); ++a) {
        const auto& ar = alg->quiver.arrows[a];
        Mat<K> m = Mat<K>::Zero(r.dims[ar.to], r.dims[ar.from]);
        Index ro = 0, co = 0;
        for (const auto& p : parts) {
            m.block(ro, co, p.dims[ar.to], p.dims[ar.from]) = p.arrowMaps[a];
            ro += p.dims[ar.to];
            co += p.dims[ar.from];
        }
        r.arrowMaps[a] = std::move(m);
    }
    return r;
}

template <class K>
struct RepMap {
    Representation<K> source;
    Representation<K> target;
    std::vector<Mat<K>> vertexMaps;

    bool commutes() const {
        const auto& alg = *source.algebra;
        for (int a = 0; a < alg.arrowCount(); ++a) {
            const auto& ar = alg.quiver.arrows[a];
            Mat<K> lhs = target.arrowMaps[a] * vertexMaps[ar.from];
            Mat<K> rhs = vertexMaps[ar.to] * source.arrowMaps[a];
            if (!matEq(lhs, rhs))
                return false;
        }
        return true;
    }

    Mat<K> globalMatrix() const {
        Mat<K> m = Mat<K>::Zero(target.totalDim(), source.totalDim());
        for (size_t v = 0; v < vertexMaps.size(); ++v)
            m.block(target.vertexOffset(static_cast<int>(v)), source.vertexOffset(static_cast<int>(v)),
                    target.dims[v], source.dims[v]) = vertexMaps[v];
        return m;
    }

    bool isInjective() const {
        for (size_t v = 0; v < vertexMaps.size(); ++v)
            if (rankOf(vertexMaps[v]) != source.dims[v])
                return false;
        return true;
    }
    bool isSurjective() const {
        for (size_t v = 0; v < vertexMaps.size(); ++v)
            if (rankOf(vertexMaps[v]) != target.dims[v])
                return false;
        return true;
    }
    bool isIso() const { return isInjective() && isSurjective(); }
};

template <class K>
RepMap<K> identityMap(const Representation<K>& m) {
    RepMap<K> f{m, m, {}};
    for (Index d : m.dims)
        f.vertexMaps.push_back(Mat<K>::Identity(d, d));
    return f;
}

template <class K>
RepMap<K> zeroMap(const Representation<K>& src, const Representation<K>& dst) {
    RepMap<K> f{src, dst, {}};
    for (size_t v = 0; v < src.dims.size(); ++v)
        f.vertexMaps.push_back(Mat<K>::Zero(dst.dims[v], src.dims[v]));
    return f;
}

template <class K>
RepMap<K> composeMaps(const RepMap<K>& g, const RepMap<K>& f) {
    RepMap<K> h{f.source, g.target, {}};
    for (size_t v = 0; v < f.vertexMaps.size(); ++v)
        h.vertexMaps.push_back(Mat<K>(g.vertexMaps[v] * f.vertexMaps[v]));
    return h;
}

template <class K>
RepMap<K> addMaps(const RepMap<K>& f, const RepMap<K>& g, const K& cf, const K& cg) {
    RepMap<K> h{f.source, f.target, {}};
    for (size_t v = 0; v < f.vertexMaps.size(); ++v)
        h.vertexMaps.push_back(Mat<K>(cf * f.vertexMaps[v] + cg * g.vertexMaps[v]));
    return h;
}

/* Basis of Hom(M, N): one exact kernel computation over all commuting-square
 * conditions.  Unknowns are the vertex maps stacked column-major. */
template <class K>
std::vector<RepMap<K>> homSpace(const Representation<K>& m, const Representation<K>& n) {
    if (m.algebra != n.algebra)
        throw std::invalid_argument("homSpace: algebra mismatch");
    const auto& alg = *m.algebra;
    std::vector<Index> off(alg.vertexCount() + 1, 0);
    for (int v = 0; v < alg.vertexCount(); ++v)
        off[v + 1] = off[v] + n.dims[v] * m.dims[v];
    Index unknowns = off[alg.vertexCount()];

    Index rows = 0;
    for (int a = 0; a < alg.arrowCount(); ++a) {
        const auto& ar = alg.quiver.arrows[a];
        rows += n.dims[ar.to] * m.dims[ar.from];
    }
    Mat<K> sys = Mat<K>::Zero(rows, unknowns);
    Index row = 0;
    for (int a = 0; a < alg.arrowCount(); ++a) {
        const auto& ar = alg.quiver.arrows[a];
        int s = ar.from, t = ar.to;
        // N_a f_s - f_t M_a = 0, entry (i, j)
        for (Index j = 0; j < m.dims[s]; ++j)
            for (Index i = 0; i < n.dims[t]; ++i) {
                for (Index k = 0; k < n.dims[s]; ++k)
                    sys(row, off[s] + j * n.dims[s] + k) += n.arrowMaps[a](i, k);
                for (Index l = 0; l < m.dims[t]; ++l)
                    sys(row, off[t] + l * n.dims[t] + i) -= m.arrowMaps[a](l, j);
                ++row;
            }
    }
    Mat<K> basis = kernelBasis(sys);
    std::vector<RepMap<K>> out;
    for (Index c = 0; c < basis.cols(); ++c) {
        RepMap<K> f{m, n, {}};
        for (int v = 0; v < alg.vertexCount(); ++v) {
            Mat<K> fv(n.dims[v], m.dims[v]);
            for (Index j = 0; j < m.dims[v]; ++j)
                for (Index i = 0; i < n.dims[v]; ++i)
                    fv(i, j) = basis(off[v] + j * n.dims[v] + i, c);
            f.vertexMaps.push_back(std::move(fv));
        }
        out.push_back(std::move(f));
    }
    return out;
}

template <class K>
Vec<K> vectorizeMap(const RepMap<K>& f) {
    Index total = 0;
    for (const auto& m : f.vertexMaps)
        total += m.rows() * m.cols();
    Vec<K> v(total);
    Index at = 0;
    for (const auto& m : f.vertexMaps)
        for (Index j = 0; j < m.cols(); ++j)
            for (Index i = 0; i < m.rows(); ++i)
                v(at++) = m(i, j);
    return v;
}

template <class K>
Mat<K> stackedBasis(const std::vector<RepMap<K>>& basis) {
    if (basis.empty())
        return Mat<K>::Zero(0, 0);
    Index rows = vectorizeMap(basis.front()).size();
    Mat<K> b(rows, static_cast<Index>(basis.size()));
    for (size_t k = 0; k < basis.size(); ++k)
        b.col(static_cast<Index>(k)) = vectorizeMap(basis[k]);
    return b;
}

/* coordinates of f over a hom-space basis; throws if f is not in the span */
template <class K>
Vec<K> coordsOverBasis(const std::vector<RepMap<K>>& basis, const RepMap<K>& f) {
    Vec<K> target = vectorizeMap(f);
    if (basis.empty()) {
        for (Index i = 0; i < target.size(); ++i)
            if (target(i) != K(0))
                throw std::logic_error("coordsOverBasis: nonzero map over empty basis");
        return Vec<K>(0);
    }
    auto x = solve(stackedBasis(basis), target);
    if (!x)
        throw std::logic_error("coordsOverBasis: map not in span");
    return *x;
}

template <class K>
struct SubObject {
    Representation<K> rep;
    RepMap<K> inclusion;
};

template <class K>
struct QuotientObject {
    Representation<K> rep;
    RepMap<K> projection;
};

template <class K>
SubObject<K> kernel(const RepMap<K>& f) {
    const auto alg = f.source.algebra;
    std::vector<Mat<K>> bases;
    Representation<K> ker;
    ker.algebra = alg;
    for (size_t v = 0; v < f.vertexMaps.size(); ++v) {
        bases.push_back(kernelBasis(f.vertexMaps[v]));
        ker.dims.push_back(bases.back().cols());
    }
    for (int a = 0; a < alg->arrowCount(); ++a) {
        const auto& ar = alg->quiver.arrows[a];
        auto x = solveMany(bases[ar.to], Mat<K>(f.source.arrowMaps[a] * bases[ar.from]));
        if (!x)
            throw std::logic_error("kernel: induced arrow map failed");
        ker.arrowMaps.push_back(std::move(*x));
    }
    RepMap<K> incl{ker, f.source, bases};
    return {std::move(ker), std::move(incl)};
}

template <class K>
SubObject<K> image(const RepMap<K>& f) {
    const auto alg = f.source.algebra;
    std::vector<Mat<K>> bases;
    Representation<K> im;
    im.algebra = alg;
    for (size_t v = 0; v < f.vertexMaps.size(); ++v) {
        bases.push_back(imageBasis(f.vertexMaps[v]));
        im.dims.push_back(bases.back().cols());
    }
    for (int a = 0; a < alg->arrowCount(); ++a) {
        const auto& ar = alg->quiver.arrows[a];
        auto x = solveMany(bases[ar.to], Mat<K>(f.target.arrowMaps[a] * bases[ar.from]));
        if (!x)
            throw std::logic_error("image: induced arrow map failed");
        im.arrowMaps.push_back(std::move(*x));
    }
    RepMap<K> incl{im, f.target, bases};
    return {std::move(im), std::move(incl)};
}

template <class K>
QuotientObject<K> cokernel(const RepMap<K>& f) {
    const auto alg = f.source.algebra;
    const auto& n = f.target;
    std::vector<Mat<K>> proj;  // coset coordinates
    std::vector<Mat<K>> reps;  // coset representatives (standard vectors)
    Representation<K> cok;
    cok.algebra = alg;
    for (size_t v = 0; v < f.vertexMaps.size(); ++v) {
        Mat<K> img = imageBasis(f.vertexMaps[v]);
        Mat<K> q = quotientBasis(n.dims[v], img);
        Mat<K> both(n.dims[v], img.cols() + q.cols());
        both.leftCols(img.cols()) = img;
        both.rightCols(q.cols()) = q;
        auto coords = solveMany(both, Mat<K>(Mat<K>::Identity(n.dims[v], n.dims[v])));
        if (!coords)
            throw std::logic_error("cokernel: coset coordinates failed");
        proj.push_back(Mat<K>(coords->bottomRows(q.cols())));
        reps.push_back(std::move(q));
        cok.dims.push_back(proj.back().rows());
    }
    for (int a = 0; a < alg->arrowCount(); ++a) {
        const auto& ar = alg->quiver.arrows[a];
        cok.arrowMaps.push_back(Mat<K>(proj[ar.to] * n.arrowMaps[a] * reps[ar.from]));
    }
    RepMap<K> pr{n, cok, proj};
    return {std::move(cok), std::move(pr)};
}

template <class K>
struct SES {
    RepMap<K> f;  // A -> B, monic
    RepMap<K> g;  // B -> C, epic
};

template <class K>
bool isExactSES(const SES<K>& s) {
    if (!s.f.isInjective() || !s.g.isSurjective())
        return false;
    for (size_t v = 0; v < s.f.vertexMaps.size(); ++v) {
        if (!isZeroMat(Mat<K>(s.g.vertexMaps[v] * s.f.vertexMaps[v])))
            return false;
        if (s.f.source.dims[v] + s.g.target.dims[v] != s.f.target.dims[v])
            return false;  // dim A + dim C = dim B vertexwise
    }
    return s.f.commutes() && s.g.commutes();
}

template <class K>
struct Pullback {
    Representation<K> rep;
    RepMap<K> toB;
    RepMap<K> toF;
};

/* Pullback of g: B -> C along h: F -> C, realized as the kernel of
 * (g, -h): B + F -> C with its two projections. */
template <class K>
Pullback<K> pullback(const RepMap<K>& g, const RepMap<K>& h) {
    if (g.source.algebra != h.source.algebra)
        throw std::invalid_argument("pullback: algebra mismatch");
    for (size_t v = 0; v < g.vertexMaps.size(); ++v)
        if (g.target.dims[v] != h.target.dims[v])
            throw std::invalid_argument("pullback: target mismatch");
    const auto alg = g.source.algebra;
    const auto& B = g.source;
    const auto& F = h.source;
    std::vector<Mat<K>> bases;
    Representation<K> p;
    p.algebra = alg;
    for (size_t v = 0; v < g.vertexMaps.size(); ++v) {
        Mat<K> stacked(g.target.dims[v], B.dims[v] + F.dims[v]);
        stacked.leftCols(B.dims[v]) = g.vertexMaps[v];
        stacked.rightCols(F.dims[v]) = -h.vertexMaps[v];
        bases.push_back(kernelBasis(stacked));
        p.dims.push_back(bases.back().cols());
    }
    for (int a = 0; a < alg->arrowCount(); ++a) {
        const auto& ar = alg->quiver.arrows[a];
        Mat<K> sum = Mat<K>::Zero(B.dims[ar.to] + F.dims[ar.to], B.dims[ar.from] + F.dims[ar.from]);
        sum.block(0, 0, B.dims[ar.to], B.dims[ar.from]) = B.arrowMaps[a];
        sum.block(B.dims[ar.to], B.dims[ar.from], F.dims[ar.to], F.dims[ar.from]) = F.arrowMaps[a];
        auto x = solveMany(bases[ar.to], Mat<K>(sum * bases[ar.from]));
        if (!x)
            throw std::logic_error("pullback: induced arrow map failed");
        p.arrowMaps.push_back(std::move(*x));
    }
    RepMap<K> toB{p, B, {}}, toF{p, F, {}};
    for (size_t v = 0; v < g.vertexMaps.size(); ++v) {
        toB.vertexMaps.push_back(Mat<K>(bases[v].topRows(B.dims[v])));
        toF.vertexMaps.push_back(Mat<K>(bases[v].bottomRows(F.dims[v])));
    }
    return {std::move(p), std::move(toB), std::move(toF)};
}

template <class K>
K randomScalar(const FieldSpec& field, Rng& rng) {
    if (field.kind == FieldSpec::Kind::PrimeField)
        return scalarFromInt<K>(field, rng.intIn(0, field.p - 1));
    return scalarFromInt<K>(field, rng.intIn(-2, 2));
}

/* Rejection sampling with a fixed retry budget; relations must vanish. */
template <class K>
std::optional<Representation<K>> randomRepresentation(std::shared_ptr<const PresentedAlgebra<K>> alg,
                                                      const std::vector<Index>& dims, uint64_t seed,
                                                      int retryBudget = 1000) {
    Rng rng(seed);
    for (int attempt = 0; attempt < retryBudget; ++attempt) {
        Representation<K> r;
        r.algebra = alg;
        r.dims = dims;
        for (int a = 0; a < alg->arrowCount(); ++a) {
            const auto& ar = alg->quiver.arrows[a];
            Mat<K> m(dims[ar.to], dims[ar.from]);
            for (Index j = 0; j < m.cols(); ++j)
                for (Index i = 0; i < m.rows(); ++i)
                    m(i, j) = randomScalar<K>(alg->field, rng);
            r.arrowMaps.push_back(std::move(m));
        }
        bool ok = true;
        for (const auto& rel : alg->relations) {
            int s = rel.terms.front().path.source;
            int t = rel.terms.front().path.target;
            Mat<K> sum = Mat<K>::Zero(r.dims[t], r.dims[s]);
            for (const auto& term : rel.terms)
                sum += term.coef * r.pathAction(term.path);
            if (!isZeroMat(sum)) {
                ok = false;
                break;
            }
        }
        if (ok)
            return r;
    }
    return std::nullopt;
}

/* Smallest subrepresentation containing the given per-vertex generators:
 * close under all arrow actions until stable. */
template <class K>
SubObject<K> subRepresentationSpanned(const Representation<K>& m, std::vector<Mat<K>> gens) {
    const auto alg = m.algebra;
    std::vector<Mat<K>> span;
    for (size_t v = 0; v < gens.size(); ++v)
        span.push_back(imageBasis(gens[v]));
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < alg->arrowCount(); ++a) {
            const auto& ar = alg->quiver.arrows[a];
            Mat<K> pushed = m.arrowMaps[a] * span[ar.from];
            for (Index c = 0; c < pushed.cols(); ++c) {
                Vec<K> col = pushed.col(c);
                if (!inSpan(span[ar.to], col)) {
                    Mat<K> wider(span[ar.to].rows(), span[ar.to].cols() + 1);
                    wider.leftCols(span[ar.to].cols()) = span[ar.to];
                    wider.col(span[ar.to].cols()) = col;
                    span[ar.to] = imageBasis(wider);
                    changed = true;
                }
            }
        }
    }
    Representation<K> sub;
    sub.algebra = alg;
    for (size_t v = 0; v < span.size(); ++v)
        sub.dims.push_back(span[v].cols());
    for (int a = 0; a < alg->arrowCount(); ++a) {
        const auto& ar = alg->quiver.arrows[a];
        auto x = solveMany(span[ar.to], Mat<K>(m.arrowMaps[a] * span[ar.from]));
        if (!x)
            throw std::logic_error("subRepresentationSpanned: closure not closed");
        sub.arrowMaps.push_back(std::move(*x));
    }
    RepMap<K> incl{sub, m, span};
    return {std::move(sub), std::move(incl)};
}

/* 0 -> A -> M -> C -> 0 with A generated by a random vector set. */
template <class K>
SES<K> randomSubSES(const Representation<K>& m, uint64_t seed) {
    Rng rng(seed);
    const auto alg = m.algebra;
    int nv = alg->vertexCount();
    std::vector<std::vector<Vec<K>>> chosen(nv);
    Index total = m.totalDim();
    int count = total == 0 ? 0 : static_cast<int>(rng.below(static_cast<uint64_t>(total) + 1));
    for (int i = 0; i < count; ++i) {
        int v = static_cast<int>(rng.below(static_cast<uint64_t>(nv)));
        if (m.dims[v] == 0)
            continue;
        Vec<K> x(m.dims[v]);
        for (Index k = 0; k < x.size(); ++k)
            x(k) = randomScalar<K>(alg->field, rng);
        chosen[v].push_back(std::move(x));
    }
    std::vector<Mat<K>> gens;
    for (int v = 0; v < nv; ++v) {
        Mat<K> g(m.dims[v], static_cast<Index>(chosen[v].size()));
        for (size_t c = 0; c < chosen[v].size(); ++c)
            g.col(static_cast<Index>(c)) = chosen[v][c];
        gens.push_back(std::move(g));
    }
    SubObject<K> sub = subRepresentationSpanned(m, std::move(gens));
    QuotientObject<K> quo = cokernel(sub.inclusion);
    return {sub.inclusion, quo.projection};
}

/* ------------------------- modules over SCAlgebras ------------------------ */

template <class K>
struct SCModule {
    std::shared_ptr<const SCAlgebra<K>> algebra;
    Index dimension = 0;
    std::vector<Mat<K>> action;  // per algebra basis element

    bool isZero() const { return dimension == 0; }
};

template <class K>
void validateSCModule(const SCModule<K>& x) {
    const auto& s = *x.algebra;
    if (static_cast<Index>(x.action.size()) != s.dim())
        throw std::invalid_argument("SCModule: one action matrix per basis element required");
    for (const auto& m : x.action)
        if (m.rows() != x.dimension || m.cols() != x.dimension)
            throw std::invalid_argument("SCModule: bad action shape");
    for (Index i = 0; i < s.dim(); ++i)
        for (Index j = 0; j < s.dim(); ++j) {
            Mat<K> lhs = Mat<K>::Zero(x.dimension, x.dimension);
            for (Index k = 0; k < s.dim(); ++k)
                if (s.leftMult[i](k, j) != K(0))
                    lhs += s.leftMult[i](k, j) * x.action[k];
            if (!matEq(lhs, Mat<K>(x.action[i] * x.action[j])))
                throw std::invalid_argument("SCModule: action does not respect multiplication");
        }
    Mat<K> u = Mat<K>::Zero(x.dimension, x.dimension);
    for (Index i = 0; i < s.dim(); ++i)
        if (s.unit(i) != K(0))
            u += s.unit(i) * x.action[i];
    if (!matEq(u, Mat<K>(Mat<K>::Identity(x.dimension, x.dimension))))
        throw std::invalid_argument("SCModule: unit does not act as identity");
}

template <class K>
SCModule<K> regularSCModule(std::shared_ptr<const SCAlgebra<K>> s) {
    return SCModule<K>{s, s->dim(), s->leftMult};
}

template <class K>
SCModule<K> freeSCModule(std::shared_ptr<const SCAlgebra<K>> s, Index rank) {
    SCModule<K> f;
    f.algebra = s;
    f.dimension = rank * s->dim();
    for (Index i = 0; i < s->dim(); ++i) {
        Mat<K> m = Mat<K>::Zero(f.dimension, f.dimension);
        for (Index r = 0; r < rank; ++r)
            m.block(r * s->dim(), r * s->dim(), s->dim(), s->dim()) = s->leftMult[i];
        f.action.push_back(std::move(m));
    }
    return f;
}

/* A representation as a module over its own algebra in structure-constant
 * form; S must be toSCAlgebra of the same presented algebra. */
template <class K>
SCModule<K> scModuleOf(const Representation<K>& m, std::shared_ptr<const SCAlgebra<K>> s) {
    if (s->dim() != m.algebra->dim())
        throw std::invalid_argument("scModuleOf: algebra mismatch");
    SCModule<K> x;
    x.algebra = s;
    x.dimension = m.totalDim();
    for (Index i = 0; i < s->dim(); ++i)
        x.action.push_back(m.globalBasisAction(i));
    return x;
}

/* Basis of the intertwiner space Hom_S(X, Y). */
template <class K>
std::vector<Mat<K>> scHom(const SCModule<K>& x, const SCModule<K>& y) {
    if (x.algebra != y.algebra)
        throw std::invalid_argument("scHom: algebra mismatch");
    Index dS = x.algebra->dim();
    Index unknowns = y.dimension * x.dimension;  // F(i, j), column-major
    Mat<K> sys = Mat<K>::Zero(dS * y.dimension * x.dimension, unknowns);
    Index row = 0;
    for (Index e = 0; e < dS; ++e) {
        // A^Y_e F - F A^X_e = 0
        for (Index j = 0; j < x.dimension; ++j)
            for (Index i = 0; i < y.dimension; ++i) {
                for (Index k = 0; k < y.dimension; ++k)
                    sys(row, j * y.dimension + k) += y.action[e](i, k);
                for (Index l = 0; l < x.dimension; ++l)
                    sys(row, l * y.dimension + i) -= x.action[e](l, j);
                ++row;
            }
    }
    Mat<K> basis = kernelBasis(sys);
    std::vector<Mat<K>> out;
    for (Index c = 0; c < basis.cols(); ++c)
        out.push_back(unvectorize<K>(basis.col(c), y.dimension, x.dimension));
    return out;
}

template <class K>
struct EndomorphismAlgebra {
    std::shared_ptr<const SCAlgebra<K>> algebra;
    std::vector<RepMap<K>> basis;
};

/* End(U) as a structure-constant algebra; the product is composition,
 * b_i * b_j = b_i after b_j. */
template <class K>
EndomorphismAlgebra<K> endomorphismAlgebra(const Representation<K>& u) {
    std::vector<RepMap<K>> basis = homSpace(u, u);
    Index d = static_cast<Index>(basis.size());
    std::vector<Mat<K>> lm(d, Mat<K>::Zero(d, d));
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) {
            Vec<K> coords = coordsOverBasis(basis, composeMaps(basis[i], basis[j]));
            lm[i].col(j) = coords;
        }
    Vec<K> unit(d);
    if (d > 0)
        unit = coordsOverBasis(basis, identityMap(u));
    std::vector<std::string> labels;
    for (Index i = 0; i < d; ++i)
        labels.push_back("f" + std::to_string(i));
    auto s = SCAlgebra<K>::create(u.algebra->field, std::move(labels), std::move(lm), std::move(unit));
    return {s, std::move(basis)};
}

}  // namespace homdim
