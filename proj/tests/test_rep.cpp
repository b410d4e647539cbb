#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homdim/rep.hpp"

using namespace homdim;

namespace {

struct A3Fixture {
    std::shared_ptr<const PresentedAlgebra<Rat>> alg;
    std::vector<Representation<Rat>> P;
    std::vector<Representation<Rat>> S;
    Representation<Rat> U;

    A3Fixture() {
        Quiver q = makeQuiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
        alg = buildPresentedAlgebra<Rat>(FieldSpec::rationals(), q, {}, 3);
        for (int v = 0; v < 3; ++v) {
            P.push_back(indecProjective(alg, v));
            S.push_back(simpleRep(alg, v));
        }
        U = directSum(alg, {P[0], P[1], S[1]});
    }
};

std::vector<Index> dimsOf(const Representation<Rat>& r) {
    return r.dims;
}

}  // namespace

TEST_CASE("indecomposable projectives over A3") {
    A3Fixture fx;
    CHECK(dimsOf(fx.P[0]) == std::vector<Index>{1, 1, 1});
    CHECK(dimsOf(fx.P[1]) == std::vector<Index>{0, 1, 1});
    CHECK(dimsOf(fx.P[2]) == std::vector<Index>{0, 0, 1});  // the simple S(3)
    for (const auto& p : fx.P)
        validateRepresentation(p);
    CHECK_THROWS_AS((void)indecProjective(fx.alg, 7), std::invalid_argument);

    auto one = buildPresentedAlgebra<Rat>(FieldSpec::rationals(), makeQuiver({"1"}, {}), {}, 1);
    CHECK(indecProjective(one, 0).dims == std::vector<Index>{1});
}

TEST_CASE("simples and direct sums") {
    A3Fixture fx;
    CHECK(dimsOf(fx.S[1]) == std::vector<Index>{0, 1, 0});
    // U = P(1) + P(2) + S(2), the module of the running tilting example
    CHECK(dimsOf(fx.U) == std::vector<Index>{1, 3, 2});
    CHECK(fx.U.totalDim() == 6);
    validateRepresentation(fx.U);
    CHECK(directSum<Rat>(fx.alg, {}).isZero());
}

TEST_CASE("hom space dimensions over A3") {
    A3Fixture fx;
    CHECK(homSpace(fx.P[0], fx.P[0]).size() == 1);
    CHECK(homSpace(fx.S[1], fx.P[0]).size() == 0);
    CHECK(homSpace(fx.P[1], fx.P[0]).size() == 1);
    CHECK(homSpace(fx.P[0], fx.P[1]).size() == 0);
    CHECK(homSpace(fx.P[1], fx.U).size() == 3);
    CHECK(homSpace(fx.U, fx.U).size() == 5);
    // identity always there
    CHECK(homSpace(fx.U, fx.U).size() >= 1);
    for (const auto& f : homSpace(fx.U, fx.U))
        CHECK(f.commutes());
}

TEST_CASE("kernel, image, cokernel bookkeeping") {
    A3Fixture fx;
    // canonical epi P(2) ->> S(2): kernel is P(3)
    auto epiBasis = homSpace(fx.P[1], fx.S[1]);
    REQUIRE(epiBasis.size() == 1);
    RepMap<Rat> epi = epiBasis[0];
    REQUIRE(epi.isSurjective());
    auto ker = kernel(epi);
    CHECK(dimsOf(ker.rep) == std::vector<Index>{0, 0, 1});
    CHECK(ker.inclusion.isInjective());
    CHECK(ker.inclusion.commutes());

    auto idU = identityMap(fx.U);
    CHECK(kernel(idU).rep.isZero());
    auto zc = cokernel(zeroMap(fx.P[0], fx.U));
    CHECK(dimsOf(zc.rep) == dimsOf(fx.U));

    // dim source = dim kernel + dim image, vertexwise
    for (const auto& f : homSpace(fx.U, fx.P[0])) {
        auto k = kernel(f);
        auto im = image(f);
        for (size_t v = 0; v < 3; ++v)
            CHECK(fx.U.dims[v] == k.rep.dims[v] + im.rep.dims[v]);
        auto cc = cokernel(f);
        for (size_t v = 0; v < 3; ++v)
            CHECK(cc.rep.dims[v] == fx.P[0].dims[v] - im.rep.dims[v]);
        CHECK(cc.projection.commutes());
    }
}

TEST_CASE("pullbacks") {
    A3Fixture fx;
    auto epi = homSpace(fx.P[1], fx.S[1])[0];

    SUBCASE("pullback along the identity is the other source") {
        auto pb = pullback(identityMap(fx.S[1]), epi);
        CHECK(pb.rep.totalDim() == fx.P[1].totalDim());
        CHECK(pb.toF.isIso());  // projection to F realizes the isomorphism
        CHECK(pb.toF.commutes());
    }

    SUBCASE("pullback of the twin epis P(2) ->> S(2)") {
        // dim P = dim B + dim F - dim im(g,-h) vertexwise: (0,1,2)
        auto pb = pullback(epi, epi);
        CHECK(dimsOf(pb.rep) == std::vector<Index>{0, 1, 2});
        CHECK(pb.toB.isSurjective());
        CHECK(pb.toF.isSurjective());
        // square commutes: epi . toB = epi . toF
        for (size_t v = 0; v < 3; ++v)
            CHECK(matEq(Mat<Rat>(epi.vertexMaps[v] * pb.toB.vertexMaps[v]),
                        Mat<Rat>(epi.vertexMaps[v] * pb.toF.vertexMaps[v])));
        CHECK(pb.rep.totalDim() ==
              fx.P[1].totalDim() + fx.P[1].totalDim() -
                  (image(epi).rep.totalDim()));
    }

    SUBCASE("target mismatch is rejected") {
        CHECK_THROWS_AS((void)pullback(epi, identityMap(fx.P[0])), std::invalid_argument);
    }
}

TEST_CASE("random representations satisfy the relations") {
    Quiver q = makeQuiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
    Relation<Fp> rel{{{Fp(1, 5), pathFromArrowNames(q, {"b", "a"})}}};
    auto spec = FieldSpec::prime(5);
    auto plain = buildPresentedAlgebra<Fp>(spec, q, {}, 3);
    auto bound = buildPresentedAlgebra<Fp>(spec, q, {rel}, 3);

    // no relations: first sample is always valid
    auto r1 = randomRepresentation(plain, {2, 2, 2}, 42, 1);
    REQUIRE(r1.has_value());
    validateRepresentation(*r1);

    auto r2 = randomRepresentation(bound, {2, 2, 2}, 42);
    REQUIRE(r2.has_value());
    validateRepresentation(*r2);
    CHECK(isZeroMat(Mat<Fp>(r2->arrowMaps[1] * r2->arrowMaps[0])));
}

TEST_CASE("random sub-SES passes the exactness suite") {
    A3Fixture fx;
    SES<Rat> whole = randomSubSES(fx.U, 7);
    CHECK(isExactSES(whole));
    for (uint64_t seed = 1; seed <= 12; ++seed) {
        SES<Rat> s = randomSubSES(fx.U, seed);
        CHECK(isExactSES(s));
        CHECK(s.f.target.totalDim() == fx.U.totalDim());
    }
    // determinism of the generator
    SES<Rat> s1 = randomSubSES(fx.U, 99), s2 = randomSubSES(fx.U, 99);
    for (size_t v = 0; v < 3; ++v)
        CHECK(matEq(s1.f.vertexMaps[v], s2.f.vertexMaps[v]));
}

TEST_CASE("hom dimensions are invariant under change of basis") {
    A3Fixture fx;
    Rng rng(5);
    // conjugate U by a random invertible vertexwise change of basis
    Representation<Rat> twisted = fx.U;
    std::vector<Mat<Rat>> g;
    for (size_t v = 0; v < 3; ++v) {
        Mat<Rat> gv;
        do {
            gv = Mat<Rat>(fx.U.dims[v], fx.U.dims[v]);
            for (Index j = 0; j < gv.cols(); ++j)
                for (Index i = 0; i < gv.rows(); ++i)
                    gv(i, j) = Rat(rng.intIn(-3, 3));
        } while (rankOf(gv) < fx.U.dims[v]);
        g.push_back(gv);
    }
    for (int a = 0; a < 2; ++a) {
        const auto& ar = fx.alg->quiver.arrows[a];
        auto inv = solveMany(g[ar.to], Mat<Rat>(Mat<Rat>::Identity(fx.U.dims[ar.to], fx.U.dims[ar.to])));
        twisted.arrowMaps[a] = *inv * fx.U.arrowMaps[a] * g[ar.from];
        twisted.arrowMaps[a] = Mat<Rat>(*solveMany(g[ar.to], Mat<Rat>(fx.U.arrowMaps[a] * g[ar.from])));
    }
    validateRepresentation(twisted);
    CHECK(homSpace(twisted, twisted).size() == homSpace(fx.U, fx.U).size());
    CHECK(homSpace(twisted, fx.P[0]).size() == homSpace(fx.U, fx.P[0]).size());
}

TEST_CASE("SC modules and intertwiners") {
    A3Fixture fx;
    auto sc = toSCAlgebra(*fx.alg);

    SUBCASE("scHom(S, X) has dimension dim X") {
        auto reg = regularSCModule(sc);
        validateSCModule(reg);
        auto x = scModuleOf(fx.U, sc);
        validateSCModule(x);
        CHECK(x.dimension == 6);
        CHECK(scHom(reg, x).size() == static_cast<size_t>(x.dimension));
        CHECK(scHom(x, x).size() >= 1);
        // conversion is functorial on Hom dimensions
        CHECK(scHom(x, x).size() == homSpace(fx.U, fx.U).size());
        CHECK(scHom(scModuleOf(fx.P[1], sc), x).size() == homSpace(fx.P[1], fx.U).size());
    }

    SUBCASE("free modules") {
        auto f2 = freeSCModule(sc, 2);
        validateSCModule(f2);
        CHECK(f2.dimension == 12);
    }

    SUBCASE("algebra mismatch rejected") {
        auto other = toSCAlgebra(*fx.alg);
        auto x = scModuleOf(fx.U, sc);
        auto y = scModuleOf(fx.U, other);
        CHECK_THROWS_AS((void)scHom(x, y), std::invalid_argument);
    }
}

TEST_CASE("endomorphism basis composes back into the algebra") {
    A3Fixture fx;
    auto endU = endomorphismAlgebra(fx.U);
    REQUIRE(endU.algebra->dim() == 5);
    // U as a left End(U)-module via evaluation
    SCModule<Rat> uAsS{endU.algebra, fx.U.totalDim(), {}};
    for (const auto& f : endU.basis)
        uAsS.action.push_back(f.globalMatrix());
    validateSCModule(uAsS);
}
