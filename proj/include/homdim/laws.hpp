#pragma once

/* Property-test harness.  Each law samples seeded instances, evaluates one
 * structural statement with three-valued logic (indeterminate antecedents
 * skip, never falsify), and serializes violations with replay seeds.  The
 * statements are theorems, so a violation indicates an engine bug. */

#include <functional>
#include <string>
#include <vector>

#include "homdim/io.hpp"

namespace homdim {

struct LawSuiteConfig {
    uint64_t seed = 1;
    int instances = 200;
    Index maxDim = 4;
    FieldSpec field = FieldSpec::prime(5);
    Index horizon = 10;
    // optional overrides for the section-1 laws: (algebra tag, oracle spec)
    std::vector<std::pair<std::string, std::string>> oracleSpecs;
};

inline LawSuiteConfig lawConfigFromJson(const Json& j) {
    LawSuiteConfig cfg;
    if (j.contains("seed"))
        cfg.seed = j.at("seed").get<uint64_t>();
    if (j.contains("instances"))
        cfg.instances = j.at("instances").get<int>();
    if (j.contains("maxDim"))
        cfg.maxDim = j.at("maxDim").get<Index>();
    if (j.contains("field"))
        cfg.field = fieldFromJson(j.at("field"));
    if (j.contains("horizon"))
        cfg.horizon = j.at("horizon").get<Index>();
    if (j.contains("oracles"))
        for (const auto& o : j.at("oracles"))
            cfg.oracleSpecs.push_back({o.at("algebra").get<std::string>(), o.at("spec").get<std::string>()});
    if (cfg.instances < 1 || cfg.maxDim < 1)
        throw ParseError("law config: instances and maxDim must be >= 1");
    return cfg;
}

struct LawResult {
    std::string lawName;
    int instances = 0;
    int checked = 0;
    int skipped = 0;
    int generatorFailures = 0;
    Json violations = Json::array();
    std::string note;

    double skipRate() const { return instances > 0 ? double(skipped) / instances : 0.0; }
    bool vacuous() const { return skipRate() >= 0.9; }
};

inline Json lawResultToJson(const LawResult& r) {
    Json j{{"law", r.lawName},
           {"instances", r.instances},
           {"checked", r.checked},
           {"skipped", r.skipped},
           {"generatorFailures", r.generatorFailures},
           {"skipRate", r.skipRate()},
           {"violations", r.violations}};
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

inline uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline uint64_t instanceSeed(uint64_t suiteSeed, const std::string& unitName, int i) {
    return Rng::mix(Rng::mix(suiteSeed, fnv1a(unitName)), static_cast<uint64_t>(i));
}

/* A named algebra with its distinguished modules, plus instance generation.
 * Generation mixes plain random arrow matrices (rejection sampled when there
 * are relations) with cokernels of random maps between projective sums and
 * submodules thereof, so relation algebras still yield rich instances. */
template <class K>
struct LawEnv {
    std::string tag;
    std::shared_ptr<const PresentedAlgebra<K>> algebra;
    std::map<std::string, Representation<K>> named;

    Representation<K> projectiveSum(Rng& rng, long maxCopies = 2) const {
        std::vector<Representation<K>> parts;
        for (int v = 0; v < algebra->vertexCount(); ++v)
            for (long c = rng.intIn(0, maxCopies); c > 0; --c)
                parts.push_back(indecProjective(algebra, v));
        return directSum(algebra, parts);
    }

    Representation<K> presentedModule(Rng& rng) const {
        Representation<K> p0 = projectiveSum(rng);
        Representation<K> p1 = projectiveSum(rng, 1);
        auto maps = homSpace(p1, p0);
        RepMap<K> f = zeroMap(p1, p0);
        for (const auto& g : maps)
            f = addMaps(f, g, K(1), randomScalar<K>(algebra->field, rng));
        return cokernel(f).rep;
    }

    /* Never fails: a rejection-sampled draw that runs out of retries falls
     * back to a presentation cokernel, which is always relation-valid. */
    Representation<K> randomModule(Rng& rng, Index maxDim) const {
        uint64_t mode = rng.below(3);
        if (mode == 0) {
            std::vector<Index> dims;
            for (int v = 0; v < algebra->vertexCount(); ++v)
                dims.push_back(static_cast<Index>(rng.intIn(0, maxDim)));
            auto m = randomRepresentation(algebra, dims, rng.next(),
                                          algebra->relations.empty() ? 1 : 300);
            if (m)
                return *m;
        }
        if (mode == 2) {
            Representation<K> big = presentedModule(rng);
            return randomSubSES(big, rng.next()).f.source;
        }
        return presentedModule(rng);
    }
};

template <class K>
LawEnv<K> makeA3Env(const FieldSpec& field) {
    LawEnv<K> env;
    env.tag = "A3";
    Quiver q = makeQuiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
    env.algebra = buildPresentedAlgebra<K>(field, q, {}, 3);
    for (int v = 0; v < 3; ++v) {
        env.named["P" + std::to_string(v + 1)] = indecProjective(env.algebra, v);
        env.named["S" + std::to_string(v + 1)] = simpleRep(env.algebra, v);
    }
    env.named["U"] = directSum(env.algebra,
                               {env.named["P1"], env.named["P2"], env.named["S2"]});
    return env;
}

template <class K>
LawEnv<K> makeA3REnv(const FieldSpec& field) {
    LawEnv<K> env;
    env.tag = "A3R";
    Quiver q = makeQuiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
    Relation<K> rel{{{K(1), pathFromArrowNames(q, {"b", "a"})}}};
    env.algebra = buildPresentedAlgebra<K>(field, q, {rel}, 3);
    for (int v = 0; v < 3; ++v) {
        env.named["P" + std::to_string(v + 1)] = indecProjective(env.algebra, v);
        env.named["S" + std::to_string(v + 1)] = simpleRep(env.algebra, v);
    }
    return env;
}

namespace detail {

template <class K>
Json sesRecord(const SES<K>& s) {
    return Json{{"A", moduleToJson(s.f.source)},
                {"B", moduleToJson(s.f.target)},
                {"C", moduleToJson(s.g.target)}};
}

/* Greedy shrink: replace the middle term by proper submodules while the
 * predicate keeps failing. */
template <class K>
SES<K> shrinkSES(const SES<K>& ses, const std::function<bool(const SES<K>&)>& violates, Rng& rng) {
    SES<K> current = ses;
    for (int round = 0; round < 8; ++round) {
        Representation<K> b = current.f.target;
        if (b.totalDim() <= 1)
            break;
        SES<K> inner = randomSubSES(b, rng.next());
        const Representation<K>& smaller = inner.f.source;
        if (smaller.totalDim() == 0 || smaller.totalDim() >= b.totalDim())
            continue;
        SES<K> candidate = randomSubSES(smaller, rng.next());
        if (violates(candidate))
            current = candidate;
    }
    return current;
}

template <class K>
Representation<K> likelyMember(const LawEnv<K>& env, const ClassOracle<K>& oracle, Rng& rng,
                               Index maxDim) {
    for (int attempt = 0; attempt < 4; ++attempt) {
        Representation<K> m = rng.below(2) == 0 ? oracle.sampleMemberCandidate(rng)
                                                : env.randomModule(rng, maxDim);
        if (oracle.membership(m).isYes())
            return m;
    }
    return oracle.sampleMemberCandidate(rng);
}

inline bool fdimAtMost(const Verdict& v, long k) {
    return v.isYes() && *v.value <= k;
}
inline bool fdimAbove(const Verdict& v, long k) {
    return v.isYes() && *v.value > k;
}

}  // namespace detail

/* Kernel lemma: 0 -> A -> F -> C -> 0 with F a member and Fdim C = i forces
 * Fdim A <= max(i-1, 0). */
template <class K>
LawResult lawKernelClosure(const LawEnv<K>& env, const ClassOracle<K>& oracle,
                           const LawSuiteConfig& cfg) {
    LawResult res;
    res.lawName = "kernel_closure/" + env.tag + "/" + oracle.label();
    res.instances = cfg.instances;
    if (!oracle.containsProjectives().isYes()) {
        res.skipped = cfg.instances;
        res.note = "oracle does not contain the projectives; law not applicable";
        return res;
    }
    for (int i = 0; i < cfg.instances; ++i) {
        uint64_t seed = instanceSeed(cfg.seed, res.lawName, i);
        Rng rng(seed);
        Representation<K> f = detail::likelyMember(env, oracle, rng, cfg.maxDim);
        if (!oracle.membership(f).isYes() || f.isZero()) {
            ++res.skipped;
            continue;
        }
        SES<K> ses = randomSubSES(f, rng.next());
        FdimReport fc = fDim(oracle, ses.g.target, cfg.horizon);
        FdimReport fa = fDim(oracle, ses.f.source, cfg.horizon);
        if (!fc.value.isYes() || !fa.value.isYes()) {
            ++res.skipped;
            continue;
        }
        long bound = std::max(*fc.value.value - 1, 0l);
        if (*fa.value.value > bound) {
            auto violates = [&](const SES<K>& s) {
                if (!oracle.membership(s.f.target).isYes())
                    return false;
                FdimReport c = fDim(oracle, s.g.target, cfg.horizon);
                FdimReport a = fDim(oracle, s.f.source, cfg.horizon);
                return c.value.isYes() && a.value.isYes() &&
                       *a.value.value > std::max(*c.value.value - 1, 0l);
            };
            SES<K> small = detail::shrinkSES<K>(ses, violates, rng);
            Json v = detail::sesRecord(small);
            v["replaySeed"] = seed;
            v["fdimC"] = *fc.value.value;
            v["fdimA"] = *fa.value.value;
            res.violations.push_back(v);
        }
        ++res.checked;
    }
    res.skipped = res.instances - res.checked - res.generatorFailures;
    return res;
}

/* The four SES implications (1_i)-(4_i), on random sub-SESs and on
 * pullback-constructed instances mirroring the proof's diagrams. */
template <class K>
LawResult lawSESTheorem(const LawEnv<K>& env, const ClassOracle<K>& oracle,
                        const LawSuiteConfig& cfg) {
    LawResult res;
    res.lawName = "ses_theorem/" + env.tag + "/" + oracle.label();
    res.instances = cfg.instances;
    if (oracle.kernelClosed().isNo()) {
        res.skipped = cfg.instances;
        res.note = "kernel-closure probe failed; class does not define a homological dimension";
        return res;
    }
    {
        // finite-direct-sum closure probe
        Rng rng(instanceSeed(cfg.seed, res.lawName + "#sumprobe", 0));
        for (int t = 0; t < 3; ++t) {
            Representation<K> f1 = detail::likelyMember(env, oracle, rng, cfg.maxDim);
            Representation<K> f2 = detail::likelyMember(env, oracle, rng, cfg.maxDim);
            if (!oracle.membership(f1).isYes() || !oracle.membership(f2).isYes())
                continue;
            if (!oracle.membership(directSum(env.algebra, {f1, f2})).isYes()) {
                res.skipped = cfg.instances;
                res.note = "finite-direct-sum probe failed";
                return res;
            }
        }
    }
    bool quotientsExtensionClosed = oracle.containsProjectives().isYes();
    if (!quotientsExtensionClosed)
        res.note = "conclusions (3_i)/(4_i) skipped: epi-image class not known extension-closed";

    for (int i = 0; i < cfg.instances; ++i) {
        uint64_t seed = instanceSeed(cfg.seed, res.lawName, i);
        Rng rng(seed);
        Representation<K> b = env.randomModule(rng, cfg.maxDim);
        std::vector<SES<K>> cases;
        cases.push_back(randomSubSES(b, rng.next()));
        if (quotientsExtensionClosed && rng.below(2) == 0 && !b.isZero()) {
            // the proof's pullback diagram: a member epi onto B, pulled back along B ->> C
            const SES<K>& base = cases.front();
            Cover<K> cover = projectiveCover(b);
            RepMap<K> h = composeMaps(base.g, cover.epi);  // F_B ->> C
            Pullback<K> pb = pullback(base.g, h);
            cases.push_back(SES<K>{kernel(pb.toF).inclusion, pb.toF});  // 0 -> A -> P -> F_B -> 0
            cases.push_back(SES<K>{kernel(pb.toB).inclusion, pb.toB});  // 0 -> ker h -> P -> B -> 0
        }
        bool evaluated = false;
        bool violated = false;
        Json violation;
        for (const SES<K>& s : cases) {
            Verdict fa = fDim(oracle, s.f.source, cfg.horizon).value;
            Verdict fb = fDim(oracle, s.f.target, cfg.horizon).value;
            Verdict fc = fDim(oracle, s.g.target, cfg.horizon).value;
            auto leq = detail::fdimAtMost;
            auto gt = detail::fdimAbove;
            for (long k = 0; k <= static_cast<long>(cfg.horizon); ++k) {
                struct Impl {
                    const char* name;
                    bool antecedent;
                    const Verdict* conseq;
                    long bound;
                    bool active;
                };
                Impl impls[] = {
                    {"1_i", leq(fb, k) && leq(fc, k), &fa, k, true},
                    {"2_i", leq(fa, k) && leq(fb, k), &fc, k + 1, true},
                    {"3_i", leq(fa, k + 1) && leq(fc, k + 1), &fb, k + 1, quotientsExtensionClosed},
                    {"4_i", leq(fb, k) && leq(fc, k + 1), &fa, k, quotientsExtensionClosed},
                };
                for (const auto& im : impls) {
                    if (!im.active || !im.antecedent)
                        continue;
                    if (gt(*im.conseq, im.bound)) {
                        violated = true;
                        violation = detail::sesRecord(s);
                        violation["replaySeed"] = seed;
                        violation["implication"] = im.name;
                        violation["degree"] = k;
                    } else if (im.conseq->isYes()) {
                        evaluated = true;
                    }
                }
            }
        }
        if (violated) {
            res.violations.push_back(violation);
            ++res.checked;
        } else if (evaluated) {
            ++res.checked;
        } else {
            ++res.skipped;
        }
    }
    res.skipped = res.instances - res.checked - res.generatorFailures;
    return res;
}

/* Members built as explicit direct sums must not have non-member summands. */
template <class K>
LawResult lawSummandClosure(const LawEnv<K>& env, const ClassOracle<K>& oracle,
                            const LawSuiteConfig& cfg) {
    LawResult res;
    res.lawName = "summand_closure/" + env.tag + "/" + oracle.label();
    res.instances = cfg.instances;
    for (int i = 0; i < cfg.instances; ++i) {
        uint64_t seed = instanceSeed(cfg.seed, res.lawName, i);
        Rng rng(seed);
        Representation<K> l = rng.below(2) == 0 ? detail::likelyMember(env, oracle, rng, cfg.maxDim)
                                                : env.randomModule(rng, cfg.maxDim);
        Representation<K> m = rng.below(2) == 0 ? detail::likelyMember(env, oracle, rng, cfg.maxDim)
                                                : env.randomModule(rng, cfg.maxDim);
        Representation<K> f = directSum(env.algebra, {l, m});
        if (!oracle.membership(f).isYes()) {
            ++res.skipped;
            continue;
        }
        Verdict vl = oracle.membership(l);
        Verdict vm = oracle.membership(m);
        if (vl.isNo() || vm.isNo()) {
            Json v{{"replaySeed", seed},
                   {"L", moduleToJson(l)},
                   {"M", moduleToJson(m)},
                   {"failing", vl.isNo() ? "L" : "M"}};
            res.violations.push_back(v);
        }
        ++res.checked;
    }
    res.skipped = res.instances - res.checked - res.generatorFailures;
    return res;
}

/* Hereditarity of degree-1 orthogonals, in the form the closure arguments
 * actually license.  Left side: when every syzygy of a member is again a
 * member, dimension shifting forces all higher Ext into the targets to
 * vanish.  Right side: a module killed by Ext^1 against a syzygy-closed pool
 * of members is killed by every Ext^i against the pool. */
template <class K>
LawResult lawPerpHereditary(const LawEnv<K>& env, const ClassOracle<K>& oracle,
                            const LawSuiteConfig& cfg) {
    LawResult res;
    res.lawName = "perp_hereditary/" + env.tag + "/" + oracle.label();
    res.instances = cfg.instances;
    if (oracle.kind() != ClassOracle<K>::Kind::LeftPerp || oracle.perpBound() != Index(1) ||
        !oracle.kernelClosed().isYes()) {
        res.skipped = cfg.instances;
        res.note = "law needs a degree-1 orthogonal oracle with a passing kernel-closure probe";
        return res;
    }
    // member pool closed under syzygies (members by kernel closure, and each
    // membership is re-certified rather than assumed)
    std::vector<Representation<K>> pool, closedPool;
    {
        Rng rng(instanceSeed(cfg.seed, res.lawName + "#pool", 0));
        for (int t = 0; t < 10 && pool.size() < 4; ++t) {
            Representation<K> f = detail::likelyMember(env, oracle, rng, cfg.maxDim);
            if (f.isZero() || !oracle.membership(f).isYes())
                continue;
            std::vector<Representation<K>> chain{f};
            for (Index j = 1; j <= cfg.horizon; ++j) {
                Representation<K> om = syzygy(f, j);
                if (om.isZero())
                    break;
                if (!oracle.membership(om).isYes()) {
                    chain.clear();  // class not actually closed here; drop this member
                    break;
                }
                chain.push_back(std::move(om));
            }
            if (chain.empty())
                continue;
            pool.push_back(chain.front());
            for (auto& c : chain)
                closedPool.push_back(std::move(c));
        }
    }
    for (int i = 0; i < cfg.instances; ++i) {
        uint64_t seed = instanceSeed(cfg.seed, res.lawName, i);
        Rng rng(seed);
        bool evaluated = false;

        // left side: member M with all syzygies members
        Representation<K> m = rng.below(2) == 0 ? detail::likelyMember(env, oracle, rng, cfg.maxDim)
                                                : env.randomModule(rng, cfg.maxDim);
        if (oracle.membership(m).isYes()) {
            bool syzygiesMembers = true;
            for (Index j = 1; j <= cfg.horizon && syzygiesMembers; ++j) {
                Representation<K> om = syzygy(m, j);
                if (om.isZero())
                    break;
                syzygiesMembers = oracle.membership(om).isYes();
            }
            if (syzygiesMembers) {
                for (size_t j = 0; j < oracle.perpTargets().size(); ++j) {
                    ExtReport e = extDim(m, oracle.perpTargets()[j], cfg.horizon);
                    if (e.truncated)
                        continue;
                    evaluated = true;
                    for (Index d = 2; d <= cfg.horizon; ++d)
                        if (e.dims[d] != 0)
                            res.violations.push_back(Json{{"replaySeed", seed},
                                                          {"side", "left"},
                                                          {"module", moduleToJson(m)},
                                                          {"degree", d}});
                }
            }
        }

        // right side: N in the 1-orthogonal of the syzygy-closed pool
        Representation<K> n = env.randomModule(rng, cfg.maxDim);
        bool inFirstPerp = !pool.empty();
        for (const auto& f : closedPool) {
            ExtReport e = extDim(f, n, 1);
            if (e.dims[1] != 0 || e.truncated)
                inFirstPerp = false;
        }
        if (inFirstPerp) {
            evaluated = true;
            for (const auto& f : pool) {
                ExtReport e = extDim(f, n, cfg.horizon);
                for (Index d = 2; d <= cfg.horizon && !e.truncated; ++d)
                    if (e.dims[d] != 0)
                        res.violations.push_back(Json{{"replaySeed", seed},
                                                      {"side", "right"},
                                                      {"module", moduleToJson(n)},
                                                      {"degree", d}});
            }
        }
        evaluated ? ++res.checked : ++res.skipped;
    }
    res.skipped = res.instances - res.checked - res.generatorFailures;
    return res;
}

/* Sup formula and the pd bound: gDim = sup of nonvanishing Ext into U, and
 * gDim <= pdim whenever both are determinate. */
template <class K>
LawResult lawGdimSup(const LawEnv<K>& env, const AdjointContext<K>& ctx, const LawSuiteConfig& cfg) {
    LawResult res;
    res.lawName = "gdim_sup/" + env.tag;
    res.instances = cfg.instances;
    for (int i = 0; i < cfg.instances; ++i) {
        uint64_t seed = instanceSeed(cfg.seed, res.lawName, i);
        Rng rng(seed);
        Representation<K> m = env.randomModule(rng, cfg.maxDim);
        Verdict g = gDim(ctx, m);
        if (!g.isYes()) {
            ++res.skipped;
            continue;
        }
        ExtReport e = extDim(m, ctx.U, cfg.horizon);
        Verdict p = pdim(m, cfg.horizon);
        bool bad = *g.value != static_cast<long>(e.supNonzero());
        bool badPd = p.isYes() && *g.value > *p.value;
        if (bad || badPd) {
            Json v{{"replaySeed", seed},
                   {"module", moduleToJson(m)},
                   {"gdim", *g.value},
                   {"extSup", e.supNonzero()}};
            if (p.isYes())
                v["pdim"] = *p.value;
            res.violations.push_back(v);
        }
        ++res.checked;
    }
    res.skipped = res.instances - res.checked - res.generatorFailures;
    return res;
}

/* The G-class defines a homological dimension: the tail of any length-n
 * resolution by members, for a module of G-dimension <= n, is a member. */
template <class K>
LawResult lawGClassResolutionTail(const LawEnv<K>& env, const AdjointContext<K>& ctx,
                                  const LawSuiteConfig& cfg, int instances) {
    LawResult res;
    res.lawName = "gclass_resolution_tail/" + env.tag;
    res.instances = instances;
    const Representation<K>& u = ctx.U;
    for (int i = 0; i < instances; ++i) {
        uint64_t seed = instanceSeed(cfg.seed, res.lawName, i);
        Rng rng(seed);
        Representation<K> x = env.randomModule(rng, cfg.maxDim);
        Verdict g = gDim(ctx, x);
        if (!g.isYes()) {
            ++res.skipped;
            continue;
        }
        long n = *g.value;
        long length = n + static_cast<long>(rng.below(2));  // any length >= gdim qualifies
        if (length > static_cast<long>(cfg.horizon))
            length = n;
        Representation<K> current = x;
        bool skipInstance = false, violatedInstance = false;
        Json violation;
        for (long step = 0; step < length; ++step) {
            Cover<K> cover = projectiveCover(current);
            std::vector<Representation<K>> parts{cover.proj};
            if (rng.below(2) == 0)
                parts.push_back(u);  // pad the resolution with a non-projective member
            Representation<K> gterm = directSum(env.algebra, parts);
            RepMap<K> epi = zeroMap(gterm, current);
            for (size_t v = 0; v < epi.vertexMaps.size(); ++v)
                epi.vertexMaps[v].leftCols(cover.epi.vertexMaps[v].cols()) = cover.epi.vertexMaps[v];
            if (parts.size() > 1)
                for (const auto& h : homSpace(u, current)) {
                    RepMap<K> extra = zeroMap(gterm, current);
                    for (size_t v = 0; v < extra.vertexMaps.size(); ++v)
                        extra.vertexMaps[v].rightCols(h.vertexMaps[v].cols()) = h.vertexMaps[v];
                    epi = addMaps(epi, extra, K(1), randomScalar<K>(env.algebra->field, rng));
                }
            Verdict termMember = gClass(ctx, gterm).member;
            if (termMember.isNo()) {
                violatedInstance = true;
                violation = Json{{"replaySeed", seed}, {"failing", "resolution term"},
                                 {"step", step}, {"module", moduleToJson(gterm)}};
                break;
            }
            if (!termMember.isYes()) {
                skipInstance = true;
                break;
            }
            current = kernel(epi).rep;
        }
        if (violatedInstance) {
            res.violations.push_back(violation);
            ++res.checked;
            continue;
        }
        if (skipInstance) {
            ++res.skipped;
            continue;
        }
        Verdict tail = gClass(ctx, current).member;
        if (tail.isNo()) {
            Json v{{"replaySeed", seed},
                   {"failing", "tail"},
                   {"gdim", n},
                   {"length", length},
                   {"module", moduleToJson(current)}};
            res.violations.push_back(v);
            ++res.checked;
        } else if (tail.isYes()) {
            ++res.checked;
        } else {
            ++res.skipped;
        }
    }
    res.skipped = res.instances - res.checked - res.generatorFailures;
    return res;
}

/* The default battery: both algebras, the standard oracle set, and the A3
 * adjoint context. */
template <class K>
std::vector<LawResult> runDefaultLawSuite(const LawSuiteConfig& cfg) {
    std::vector<LawResult> out;
    LawEnv<K> a3 = makeA3Env<K>(cfg.field);
    LawEnv<K> a3r = makeA3REnv<K>(cfg.field);

    auto oracleFor = [&](const LawEnv<K>& env, const std::string& spec) {
        Workspace<K> ws;  // minimal adapter for oracleFromSpec
        ws.field = cfg.field;
        ws.algebra = env.algebra;
        for (const auto& [name, m] : env.named)
            ws.modules.emplace(name, m);
        return oracleFromSpec(ws, spec, cfg.horizon);
    };

    std::vector<std::pair<const LawEnv<K>*, std::string>> sumLawOracles, summandOracles, perpOracles;
    if (cfg.oracleSpecs.empty()) {
        sumLawOracles = {{&a3, "projectives"}, {&a3, "perp:U"}, {&a3r, "projectives"}, {&a3r, "perp:S3"}};
        summandOracles = {{&a3, "projectives"}, {&a3, "add:U"}, {&a3r, "projectives"}};
        perpOracles = {{&a3, "perp:S3:1"}, {&a3r, "perp:P1:1"}};
    } else {
        for (const auto& [tag, spec] : cfg.oracleSpecs) {
            const LawEnv<K>* env = tag == "A3R" ? &a3r : &a3;
            sumLawOracles.push_back({env, spec});
            summandOracles.push_back({env, spec});
            perpOracles.push_back({env, spec});
        }
    }

    for (const auto& [env, spec] : sumLawOracles) {
        auto oracle = oracleFor(*env, spec);
        out.push_back(lawKernelClosure(*env, oracle, cfg));
        out.push_back(lawSESTheorem(*env, oracle, cfg));
    }
    for (const auto& [env, spec] : summandOracles)
        out.push_back(lawSummandClosure(*env, oracleFor(*env, spec), cfg));
    for (const auto& [env, spec] : perpOracles)
        out.push_back(lawPerpHereditary(*env, oracleFor(*env, spec), cfg));

    AdjointContext<K> ctx = makeAdjointContext(a3.algebra, a3.named.at("U"), cfg.horizon);
    out.push_back(lawGdimSup(a3, ctx, cfg));
    out.push_back(lawGClassResolutionTail(a3, ctx, cfg, std::max(50, cfg.instances / 4)));
    return out;
}

inline Json lawSuiteToJson(const std::vector<LawResult>& results) {
    Json arr = Json::array();
    int violations = 0;
    bool vacuous = false;
    for (const auto& r : results) {
        arr.push_back(lawResultToJson(r));
        violations += static_cast<int>(r.violations.size());
        vacuous = vacuous || r.vacuous();
    }
    return Json{{"laws", arr}, {"totalViolations", violations}, {"anyVacuous", vacuous}};
}

}  // namespace homdim
