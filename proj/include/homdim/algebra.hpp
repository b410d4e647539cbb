#pragma once

/* Path algebras with admissible relations (PresentedAlgebra) and algebras
 * given by structure constants (SCAlgebra).  A presented algebra carries a
 * finite residue-path basis obtained by exact linear algebra on each
 * (source, target) path space, plus a closed multiplication table. */

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "homdim/fields.hpp"
#include "homdim/linalg.hpp"
#include "homdim/quiver.hpp"

namespace homdim {

template <class K>
struct RelationTerm {
    K coef;
    Path path;
};

template <class K>
struct Relation {
    std::vector<RelationTerm<K>> terms;
};

template <class K>
class PresentedAlgebra;

template <class K>
std::shared_ptr<const PresentedAlgebra<K>> buildPresentedAlgebra(
    FieldSpec field, Quiver quiver, std::vector<Relation<K>> relations, int lengthBound);

template <class K>
class PresentedAlgebra {
  public:
    FieldSpec field;
    Quiver quiver;
    std::vector<Relation<K>> relations;
    int lengthBound = 1;

    std::vector<Path> pathBasis;  // canonical order; vertices first, then arrows

    Index dim() const { return static_cast<Index>(pathBasis.size()); }
    int vertexCount() const { return quiver.vertexCount(); }
    int arrowCount() const { return quiver.arrowCount(); }

    Index idempotentIndex(int v) const { return idempotentIndex_[v]; }
    Index arrowBasisIndex(int a) const { return arrowBasisIndex_[a]; }
    const std::vector<Index>& basisPathsFrom(int v) const { return pathsFrom_[v]; }

    /* b_i * b_j (b_i applied after b_j), expanded in the path basis. */
    const Vec<K>& productCoords(Index i, Index j) const { return mult_[i][j]; }

    Vec<K> unitCoords() const {
        Vec<K> u = Vec<K>::Zero(dim());
        for (int v = 0; v < vertexCount(); ++v)
            u(idempotentIndex_[v]) = K(1);
        return u;
    }

    /* Residue of an arbitrary path: zero when length >= lengthBound, else its
     * normal form over the path basis. */
    Vec<K> pathCoords(const Path& p) const {
        Vec<K> out = Vec<K>::Zero(dim());
        if (p.length() >= lengthBound)
            return out;
        const Block& blk = blocks_.at({p.source, p.target});
        auto it = blk.position.find(p.comp);
        if (it == blk.position.end())
            throw std::logic_error("pathCoords: path not enumerated");
        Vec<K> local = Vec<K>::Zero(static_cast<Index>(blk.paths.size()));
        local(it->second) = K(1);
        reduceLocal(blk, local);
        for (size_t k = 0; k < blk.paths.size(); ++k)
            if (local(static_cast<Index>(k)) != K(0))
                out(blk.basisIndex[k]) += local(static_cast<Index>(k));
        return out;
    }

    friend std::shared_ptr<const PresentedAlgebra<K>> buildPresentedAlgebra<K>(
        FieldSpec field, Quiver quiver, std::vector<Relation<K>> relations, int lengthBound);

  private:
    struct Block {
        std::vector<Path> paths;                 // all enumerated paths s -> t, canonical order
        std::map<std::vector<int>, Index> position;
        Echelon<K> relationSpan;                 // RREF of the relation ideal inside this block
        std::vector<Index> basisIndex;           // global basis index of each block path (-1 if eliminated)
    };

    void reduceLocal(const Block& blk, Vec<K>& v) const {
        const auto& rr = blk.relationSpan.rref;
        const auto& piv = blk.relationSpan.pivots;
        for (size_t r = 0; r < piv.size(); ++r) {
            K c = v(piv[r]);
            if (c == K(0))
                continue;
            for (Index j = 0; j < rr.cols(); ++j)
                v(j) = v(j) - c * rr(static_cast<Index>(r), j);
        }
    }

    std::map<std::pair<int, int>, Block> blocks_;
    std::vector<Index> idempotentIndex_;
    std::vector<Index> arrowBasisIndex_;
    std::vector<std::vector<Index>> pathsFrom_;
    std::vector<std::vector<Vec<K>>> mult_;
};

/* Admissibility: every relation path has length >= 2 and uniform endpoints;
 * the length bound may only kill paths of length >= 2. */
template <class K>
std::shared_ptr<const PresentedAlgebra<K>> buildPresentedAlgebra(
    FieldSpec field, Quiver quiver, std::vector<Relation<K>> relations, int lengthBound) {
    if (lengthBound < 1)
        throw std::invalid_argument("lengthBound must be >= 1");
    if (lengthBound < 2 && quiver.arrowCount() > 0)
        throw std::invalid_argument("lengthBound < 2 would put arrows in the ideal (not admissible)");
    for (const auto& rel : relations) {
        if (rel.terms.empty())
            throw std::invalid_argument("empty relation");
        bool nonzero = false;
        for (const auto& t : rel.terms) {
            if (t.path.length() < 2)
                throw std::invalid_argument("relation contains a path of length < 2 (ideal not admissible)");
            if (t.path.source != rel.terms.front().path.source || t.path.target != rel.terms.front().path.target)
                throw std::invalid_argument("relation mixes endpoints");
            if (t.coef != K(0))
                nonzero = true;
        }
        if (!nonzero)
            throw std::invalid_argument("relation has no nonzero coefficient");
    }

    auto alg = std::make_shared<PresentedAlgebra<K>>();
    alg->field = field;
    alg->quiver = quiver;
    alg->relations = relations;
    alg->lengthBound = lengthBound;

    using Alg = PresentedAlgebra<K>;
    std::vector<Path> paths = enumeratePaths(quiver, lengthBound);
    std::map<std::pair<int, int>, typename Alg::Block> blocks;
    for (const auto& p : paths) {
        auto& blk = blocks[{p.source, p.target}];
        blk.position[p.comp] = static_cast<Index>(blk.paths.size());
        blk.paths.push_back(p);
    }

    // the ideal's image in each block: all truncations of alpha * r * beta
    std::map<std::pair<int, int>, std::vector<Vec<K>>> gens;
    for (const auto& rel : relations) {
        int rs = rel.terms.front().path.source;
        int rt = rel.terms.front().path.target;
        for (const auto& alpha : paths) {
            if (alpha.source != rt)
                continue;
            for (const auto& beta : paths) {
                if (beta.target != rs)
                    continue;
                auto& blk = blocks[{beta.source, alpha.target}];
                Vec<K> v = Vec<K>::Zero(static_cast<Index>(blk.paths.size()));
                bool any = false;
                for (const auto& term : rel.terms) {
                    Path full = *composePaths(alpha, *composePaths(term.path, beta));
                    if (full.length() >= lengthBound)
                        continue;  // already in the ideal via the length bound
                    v(blk.position.at(full.comp)) += term.coef;
                    any = true;
                }
                bool nonzero = false;
                for (Index k = 0; k < v.size(); ++k)
                    if (v(k) != K(0))
                        nonzero = true;
                if (any && nonzero)
                    gens[{beta.source, alpha.target}].push_back(std::move(v));
            }
        }
    }

    // row-reduce the ideal per block; non-pivot paths survive as the basis
    for (auto& [key, blk] : blocks) {
        auto it = gens.find(key);
        if (it == gens.end()) {
            blk.relationSpan.rref = Mat<K>::Zero(0, static_cast<Index>(blk.paths.size()));
        } else {
            Mat<K> rows(static_cast<Index>(it->second.size()), static_cast<Index>(blk.paths.size()));
            for (size_t r = 0; r < it->second.size(); ++r)
                rows.row(static_cast<Index>(r)) = it->second[r].transpose();
            blk.relationSpan = echelonize(std::move(rows));
        }
        blk.basisIndex.assign(blk.paths.size(), -1);
    }

    std::vector<Path> basis;
    for (const auto& p : paths) {
        const auto& blk = blocks.at({p.source, p.target});
        Index pos = blk.position.at(p.comp);
        bool eliminated = false;
        for (Index piv : blk.relationSpan.pivots)
            if (piv == pos)
                eliminated = true;
        if (!eliminated)
            basis.push_back(p);
    }
    alg->pathBasis = basis;
    for (size_t g = 0; g < basis.size(); ++g) {
        auto& blk = blocks.at({basis[g].source, basis[g].target});
        blk.basisIndex[blk.position.at(basis[g].comp)] = static_cast<Index>(g);
    }
    alg->blocks_ = std::move(blocks);

    alg->idempotentIndex_.assign(quiver.vertexCount(), -1);
    alg->arrowBasisIndex_.assign(quiver.arrowCount(), -1);
    alg->pathsFrom_.assign(quiver.vertexCount(), {});
    for (size_t g = 0; g < basis.size(); ++g) {
        const Path& p = basis[g];
        alg->pathsFrom_[p.source].push_back(static_cast<Index>(g));
        if (p.isTrivial())
            alg->idempotentIndex_[p.source] = static_cast<Index>(g);
        if (p.length() == 1)
            alg->arrowBasisIndex_[p.comp[0]] = static_cast<Index>(g);
    }

    alg->mult_.assign(basis.size(), {});
    for (size_t i = 0; i < basis.size(); ++i) {
        alg->mult_[i].resize(basis.size());
        for (size_t j = 0; j < basis.size(); ++j) {
            auto prod = composePaths(basis[i], basis[j]);
            alg->mult_[i][j] = prod && prod->length() < lengthBound
                                   ? alg->pathCoords(*prod)
                                   : Vec<K>::Zero(alg->dim());
        }
    }
    return alg;
}

/* Finite-dimensional algebra by structure constants.  leftMult[i].col(j) is
 * b_i * b_j in the basis; associativity and the unit laws are checked
 * exhaustively at construction. */
template <class K>
class SCAlgebra {
  public:
    FieldSpec field;
    std::vector<std::string> basisLabels;
    std::vector<Mat<K>> leftMult;
    Vec<K> unit;

    Index dim() const { return static_cast<Index>(basisLabels.size()); }

    Vec<K> product(const Vec<K>& x, const Vec<K>& y) const {
        Vec<K> out = Vec<K>::Zero(dim());
        for (Index i = 0; i < dim(); ++i)
            if (x(i) != K(0))
                out += x(i) * (leftMult[i] * y);
        return out;
    }

    /* left multiplication by an arbitrary element */
    Mat<K> leftMultBy(const Vec<K>& x) const {
        Mat<K> m = Mat<K>::Zero(dim(), dim());
        for (Index i = 0; i < dim(); ++i)
            if (x(i) != K(0))
                m += x(i) * leftMult[i];
        return m;
    }

    static std::shared_ptr<const SCAlgebra<K>> create(FieldSpec field,
                                                      std::vector<std::string> labels,
                                                      std::vector<Mat<K>> leftMult,
                                                      Vec<K> unit) {
        auto s = std::make_shared<SCAlgebra<K>>();
        s->field = field;
        s->basisLabels = std::move(labels);
        s->leftMult = std::move(leftMult);
        s->unit = std::move(unit);
        Index d = s->dim();
        if (static_cast<Index>(s->leftMult.size()) != d || s->unit.size() != d)
            throw std::invalid_argument("SCAlgebra: inconsistent sizes");
        for (const auto& m : s->leftMult)
            if (m.rows() != d || m.cols() != d)
                throw std::invalid_argument("SCAlgebra: bad multiplication tensor shape");
        // associativity: L_{b_i b_j} = L_{b_i} L_{b_j} on every basis pair
        for (Index i = 0; i < d; ++i)
            for (Index j = 0; j < d; ++j) {
                Mat<K> lhs = Mat<K>::Zero(d, d);
                for (Index m = 0; m < d; ++m)
                    if (s->leftMult[i](m, j) != K(0))
                        lhs += s->leftMult[i](m, j) * s->leftMult[m];
                Mat<K> rhs = s->leftMult[i] * s->leftMult[j];
                if (!matEq(lhs, rhs))
                    throw std::invalid_argument("SCAlgebra: associativity fails on basis pair (" +
                                                std::to_string(i) + "," + std::to_string(j) + ")");
            }
        // unit laws
        Mat<K> lu = s->leftMultBy(s->unit);
        if (!matEq(lu, Mat<K>(Mat<K>::Identity(d, d))))
            throw std::invalid_argument("SCAlgebra: left unit law fails");
        for (Index j = 0; j < d; ++j) {
            Vec<K> ej = Vec<K>::Zero(d);
            ej(j) = K(1);
            Vec<K> r = s->leftMult[j] * s->unit;
            for (Index m = 0; m < d; ++m)
                if (r(m) != (m == j ? K(1) : K(0)))
                    throw std::invalid_argument("SCAlgebra: right unit law fails");
        }
        return s;
    }
};

template <class K>
std::shared_ptr<const SCAlgebra<K>> oppositeAlgebra(const SCAlgebra<K>& a) {
    Index d = a.dim();
    std::vector<Mat<K>> lm(d, Mat<K>::Zero(d, d));
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j)
            lm[i].col(j) = a.leftMult[j].col(i);  // transpose the first two tensor indices
    return SCAlgebra<K>::create(a.field, a.basisLabels, std::move(lm), a.unit);
}

template <class K>
std::shared_ptr<const SCAlgebra<K>> toSCAlgebra(const PresentedAlgebra<K>& p) {
    Index d = p.dim();
    std::vector<std::string> labels;
    for (Index i = 0; i < d; ++i)
        labels.push_back(pathLabel(p.quiver, p.pathBasis[i]));
    std::vector<Mat<K>> lm(d, Mat<K>::Zero(d, d));
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j)
            lm[i].col(j) = p.productCoords(i, j);
    return SCAlgebra<K>::create(p.field, std::move(labels), std::move(lm), p.unitCoords());
}

}  // namespace homdim
