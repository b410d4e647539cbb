#pragma once

/* Class oracles (projectives, add(U), left orthogonals) with probed closure
 * flags, and the syzygy-based relative dimension computed along a minimal
 * projective resolution.  The dimension is only sound when the class defines
 * a homological dimension and contains the projectives; reports carry the
 * probed flags so a consumer can see when a number is heuristic. */

#include <optional>
#include <string>
#include <vector>

#include "homdim/homology.hpp"
#include "homdim/verdict.hpp"

namespace homdim {

template <class K>
class ClassOracle {
  public:
    enum class Kind { Projectives, AddOf, LeftPerp };

    static ClassOracle projectives(std::shared_ptr<const PresentedAlgebra<K>> alg, Index horizon,
                                   uint64_t probeSeed = 0xf0f0) {
        ClassOracle o;
        o.kind_ = Kind::Projectives;
        o.algebra_ = std::move(alg);
        o.horizon_ = horizon;
        o.label_ = "projectives";
        o.runProbes(probeSeed);
        return o;
    }

    static ClassOracle addOf(Representation<K> u, Index horizon, std::string label = "add:U",
                             uint64_t probeSeed = 0xf0f0) {
        ClassOracle o;
        o.kind_ = Kind::AddOf;
        o.algebra_ = u.algebra;
        o.addTarget_ = std::move(u);
        o.horizon_ = horizon;
        o.label_ = std::move(label);
        o.runProbes(probeSeed);
        return o;
    }

    /* m = nullopt means "all degrees"; realized as the horizon plus
     * truncation-aware verdicts. */
    static ClassOracle leftPerp(std::vector<Representation<K>> targets, std::optional<Index> m,
                                Index horizon, std::string label = "perp", uint64_t probeSeed = 0xf0f0) {
        if (targets.empty())
            throw std::invalid_argument("leftPerp: no targets");
        ClassOracle o;
        o.kind_ = Kind::LeftPerp;
        o.algebra_ = targets.front().algebra;
        for (const auto& t : targets)
            if (t.algebra != o.algebra_)
                throw std::invalid_argument("leftPerp: mixed algebras");
        o.perpTargets_ = std::move(targets);
        o.perpBound_ = m;
        o.horizon_ = horizon;
        o.label_ = std::move(label);
        o.runProbes(probeSeed);
        return o;
    }

    Kind kind() const { return kind_; }
    const std::string& label() const { return label_; }
    Index horizon() const { return horizon_; }
    const std::shared_ptr<const PresentedAlgebra<K>>& algebra() const { return algebra_; }
    const Verdict& containsProjectives() const { return containsProjectives_; }
    const Verdict& kernelClosed() const { return kernelClosed_; }
    const std::vector<Representation<K>>& perpTargets() const { return perpTargets_; }
    std::optional<Index> perpBound() const { return perpBound_; }

    Verdict membership(const Representation<K>& m) const {
        if (m.algebra != algebra_)
            throw std::invalid_argument("membership: module over a different algebra");
        switch (kind_) {
            case Kind::Projectives:
                // projective iff the first syzygy vanishes
                return syzygy(m, 1).isZero() ? Verdict::yes()
                                             : Verdict::no("first syzygy is nonzero");
            case Kind::AddOf:
                return addMembership(m);
            case Kind::LeftPerp:
                return perpMembership(m);
        }
        return Verdict::unknown();
    }

    /* A module likely to be a member, for harness generation; callers verify. */
    Representation<K> sampleMemberCandidate(Rng& rng) const {
        switch (kind_) {
            case Kind::AddOf: {
                int copies = static_cast<int>(rng.intIn(1, 2));
                std::vector<Representation<K>> parts(copies, addTarget_);
                return directSum(algebra_, parts);
            }
            default: {
                std::vector<Representation<K>> parts;
                for (int v = 0; v < algebra_->vertexCount(); ++v)
                    for (long c = rng.intIn(0, 2); c > 0; --c)
                        parts.push_back(indecProjective(algebra_, v));
                return directSum(algebra_, parts);
            }
        }
    }

  private:
    /* id_M must be a sum of maps factoring through the target: membership in
     * add(U) is exactly id_M lying in the span of { f o g }. */
    Verdict addMembership(const Representation<K>& m) const {
        if (m.isZero())
            return Verdict::yes();
        auto intoM = homSpace(addTarget_, m);
        auto fromM = homSpace(m, addTarget_);
        std::vector<RepMap<K>> products;
        for (const auto& f : intoM)
            for (const auto& g : fromM)
                products.push_back(composeMaps(f, g));
        Mat<K> span = stackedBasis(products);
        Vec<K> idv = vectorizeMap(identityMap(m));
        if (span.cols() == 0 || !inSpan(span, idv))
            return Verdict::no("identity does not factor through the target");
        return Verdict::yes();
    }

    Verdict perpMembership(const Representation<K>& m) const {
        Index bound = perpBound_ ? std::min(*perpBound_, horizon_) : horizon_;
        bool needBeyondHorizon = !perpBound_ || *perpBound_ > horizon_;
        bool truncated = false;
        for (size_t j = 0; j < perpTargets_.size(); ++j) {
            ExtReport e = extDim(m, perpTargets_[j], bound);
            for (Index i = 1; i <= bound; ++i)
                if (e.dims[i] != 0)
                    return Verdict::no(static_cast<long>(i),
                                       "Ext^" + std::to_string(i) + " into target " +
                                           std::to_string(j) + " is nonzero");
            truncated = truncated || e.truncated;
        }
        if (needBeyondHorizon && truncated)
            return Verdict::unknown();
        return Verdict::yes();
    }

    void runProbes(uint64_t seed) {
        // containsProjectives: exact membership of every Lambda e_v
        bool allYes = true, anyNo = false;
        for (int v = 0; v < algebra_->vertexCount(); ++v) {
            Verdict r = membership(indecProjective(algebra_, v));
            allYes = allYes && r.isYes();
            anyNo = anyNo || r.isNo();
        }
        containsProjectives_ = anyNo ? Verdict::no("some Lambda e_v is not a member")
                                     : (allYes ? Verdict::yes() : Verdict::unknown());

        // kernelClosed: kernels of sampled epimorphisms between members
        Rng rng(seed);
        int supporting = 0;
        for (int trial = 0; trial < 16 && supporting < 5; ++trial) {
            Representation<K> f = sampleMemberCandidate(rng);
            Representation<K> c = sampleMemberCandidate(rng);
            if (f.isZero() || c.isZero())
                continue;
            if (!membership(f).isYes() || !membership(c).isYes())
                continue;
            auto maps = homSpace(f, c);
            if (maps.empty())
                continue;
            RepMap<K> phi = zeroMap(f, c);
            bool epi = false;
            for (int attempt = 0; attempt < 4 && !epi; ++attempt) {
                for (const auto& g : maps)
                    phi = addMaps(phi, g, K(1), randomScalar<K>(algebra_->field, rng));
                epi = phi.isSurjective();
            }
            if (!epi)
                continue;
            Verdict ka = membership(kernel(phi).rep);
            if (ka.isNo()) {
                kernelClosed_ = Verdict::no("kernel of a sampled epi between members left the class");
                return;
            }
            if (ka.isYes())
                ++supporting;
        }
        kernelClosed_ = supporting >= 3 ? Verdict::yes() : Verdict::unknown();
    }

    Kind kind_ = Kind::Projectives;
    std::shared_ptr<const PresentedAlgebra<K>> algebra_;
    Representation<K> addTarget_;
    std::vector<Representation<K>> perpTargets_;
    std::optional<Index> perpBound_;
    Index horizon_ = 10;
    std::string label_;
    Verdict containsProjectives_;
    Verdict kernelClosed_;
};

struct FdimReport {
    Verdict value;
    Index syzygyChecked = 0;
    std::vector<Verdict> oracleEvidence;  // membership verdict per syzygy degree
    Verdict oracleContainsProjectives;    // heuristic unless Yes
    Verdict oracleKernelClosed;
};

/* Least n <= horizon with syzygy(M, n) a member; the whole syzygy chain
 * comes from one minimal resolution. */
template <class K>
FdimReport fDim(const ClassOracle<K>& oracle, const Representation<K>& m, Index horizon) {
    FdimReport rep;
    rep.oracleContainsProjectives = oracle.containsProjectives();
    rep.oracleKernelClosed = oracle.kernelClosed();
    Resolution<K> res = minimalResolution(m, horizon);
    for (Index n = 0; n <= horizon; ++n) {
        Representation<K> omega =
            n == 0 ? m
                   : (n <= static_cast<Index>(res.syzygies.size()) ? res.syzygies[n - 1]
                                                                   : zeroRepresentation(m.algebra));
        Verdict v = oracle.membership(omega);
        rep.oracleEvidence.push_back(v);
        rep.syzygyChecked = n;
        if (v.isYes()) {
            rep.value = Verdict::yes(static_cast<long>(n));
            return rep;
        }
    }
    rep.value = Verdict::unknown();
    return rep;
}

template <class K>
struct GlobalFdimReport {
    Verdict globalValue;  // max over simples, projectives and samples
    std::vector<std::pair<std::string, Verdict>> perModule;
    bool perpBoundApplicable = false;  // targets certified of bounded cohomological dim
    Index certifiedBound = 0;
    Index boundViolations = 0;
};

template <class K>
GlobalFdimReport<K> globalFdimProbe(const ClassOracle<K>& oracle,
                                    std::shared_ptr<const PresentedAlgebra<K>> alg, Index horizon,
                                    int sampleBudget, uint64_t seed = 0x60d) {
    GlobalFdimReport<K> rep;
    std::vector<std::pair<std::string, Representation<K>>> probes;
    for (int v = 0; v < alg->vertexCount(); ++v) {
        probes.push_back({"S_" + alg->quiver.vertices[v], simpleRep(alg, v)});
        probes.push_back({"P_" + alg->quiver.vertices[v], indecProjective(alg, v)});
    }
    Rng rng(seed);
    for (int i = 0; i < sampleBudget; ++i) {
        std::vector<Index> dims;
        for (int v = 0; v < alg->vertexCount(); ++v)
            dims.push_back(static_cast<Index>(rng.intIn(0, 3)));
        auto m = randomRepresentation(alg, dims, rng.next());
        if (m)
            probes.push_back({"sample_" + std::to_string(i), std::move(*m)});
    }
    long maxVal = 0;
    bool anyUnknown = false;
    for (auto& [name, m] : probes) {
        FdimReport f = fDim(oracle, m, horizon);
        if (f.value.isYes())
            maxVal = std::max(maxVal, *f.value.value);
        else
            anyUnknown = true;
        rep.perModule.push_back({name, f.value});
    }
    rep.globalValue = anyUnknown ? Verdict::unknown() : Verdict::yes(maxVal);

    if (oracle.kind() == ClassOracle<K>::Kind::LeftPerp) {
        // certify the targets' cohomological dimension empirically, then the
        // sampled dimensions must respect the bound
        bool ok = true;
        Index bound = 0;
        for (const auto& g : oracle.perpTargets())
            for (auto& [name, m] : probes) {
                ExtReport e = extDim(m, g, horizon);
                if (e.truncated)
                    ok = false;
                bound = std::max(bound, e.supNonzero());
            }
        rep.perpBoundApplicable = ok;
        rep.certifiedBound = bound;
        if (ok)
            for (auto& [name, v] : rep.perModule)
                if (v.isYes() && *v.value > static_cast<long>(bound))
                    ++rep.boundViolations;
    }
    return rep;
}

}  // namespace homdim
