#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homdim/algebra.hpp"
#include "homdim/rep.hpp"

using namespace homdim;

namespace {

/* A3: 1 --a--> 2 --b--> 3 */
Quiver a3() {
    return makeQuiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
}

template <class K>
std::shared_ptr<const PresentedAlgebra<K>> a3Algebra(FieldSpec f) {
    return buildPresentedAlgebra<K>(f, a3(), {}, 3);
}

Relation<Rat> baZero(const Quiver& q) {
    return Relation<Rat>{{{Rat(1), pathFromArrowNames(q, {"b", "a"})}}};
}

}  // namespace

TEST_CASE("A3 path algebra has the 6-element path basis") {
    auto alg = a3Algebra<Rat>(FieldSpec::rationals());
    CHECK(alg->dim() == 6);
    std::vector<std::string> labels;
    for (const auto& p : alg->pathBasis)
        labels.push_back(pathLabel(alg->quiver, p));
    CHECK(labels == std::vector<std::string>{"e_1", "e_2", "e_3", "a", "b", "b*a"});
}

TEST_CASE("one-vertex algebra is the base field") {
    auto alg = buildPresentedAlgebra<Rat>(FieldSpec::rationals(), makeQuiver({"1"}, {}), {}, 1);
    CHECK(alg->dim() == 1);
    CHECK(alg->pathBasis[0].isTrivial());
}

TEST_CASE("A3 with ba = 0 has dimension 5") {
    Quiver q = a3();
    auto alg = buildPresentedAlgebra<Rat>(FieldSpec::rationals(), q, {baZero(q)}, 3);
    CHECK(alg->dim() == 5);
    for (const auto& p : alg->pathBasis)
        CHECK(p.length() < 2);
}

TEST_CASE("relations may mix scalar coefficients across parallel paths") {
    // commuting square: 1 -> 2 -> 4 and 1 -> 3 -> 4, relation db - ca
    Quiver q = makeQuiver({"1", "2", "3", "4"},
                          {{"a", "1", "2"}, {"b", "1", "3"}, {"c", "2", "4"}, {"d", "3", "4"}});
    Relation<Rat> rel{{{Rat(1), pathFromArrowNames(q, {"d", "b"})},
                       {Rat(-1), pathFromArrowNames(q, {"c", "a"})}}};
    auto alg = buildPresentedAlgebra<Rat>(FieldSpec::rationals(), q, {rel}, 3);
    // paths: 4 vertices + 4 arrows + 2 length-2 paths, one killed by the relation
    CHECK(alg->dim() == 9);
    Vec<Rat> db = alg->pathCoords(pathFromArrowNames(q, {"d", "b"}));
    Vec<Rat> ca = alg->pathCoords(pathFromArrowNames(q, {"c", "a"}));
    CHECK(matEq(Mat<Rat>(db), Mat<Rat>(ca)));  // the two squares agree in the quotient
}

TEST_CASE("admissibility violations are rejected") {
    Quiver q = a3();
    CHECK_THROWS_AS((void)buildPresentedAlgebra<Rat>(FieldSpec::rationals(), q, {}, 0), std::invalid_argument);
    // length bound 1 with arrows present would kill arrows
    CHECK_THROWS_AS((void)buildPresentedAlgebra<Rat>(FieldSpec::rationals(), q, {}, 1), std::invalid_argument);
    // length-1 path in a relation
    Relation<Rat> arrowRel{{{Rat(1), pathFromArrowNames(q, {"a"})}}};
    CHECK_THROWS_AS((void)buildPresentedAlgebra<Rat>(FieldSpec::rationals(), q, {arrowRel}, 3),
                    std::invalid_argument);
    // mixed endpoints in one relation
    Quiver q2 = makeQuiver({"1", "2", "3", "4"},
                           {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "2", "4"}});
    Relation<Rat> mixed{{{Rat(1), pathFromArrowNames(q2, {"b", "a"})},
                         {Rat(1), pathFromArrowNames(q2, {"c", "a"})}}};
    CHECK_THROWS_AS((void)buildPresentedAlgebra<Rat>(FieldSpec::rationals(), q2, {mixed}, 3),
                    std::invalid_argument);
    // non-composable path rejected already at path construction
    CHECK_THROWS_AS((void)pathFromArrowNames(q, {"a", "b"}), std::invalid_argument);
    CHECK_THROWS_AS((void)makeQuiver({"1", "1"}, {}), std::invalid_argument);
}

TEST_CASE("vertex idempotents satisfy e_i e_j = delta_ij e_i and sum to 1") {
    auto alg = a3Algebra<Rat>(FieldSpec::rationals());
    for (int v = 0; v < 3; ++v)
        for (int w = 0; w < 3; ++w) {
            Vec<Rat> prod = alg->productCoords(alg->idempotentIndex(v), alg->idempotentIndex(w));
            Vec<Rat> expect = Vec<Rat>::Zero(alg->dim());
            if (v == w)
                expect(alg->idempotentIndex(v)) = Rat(1);
            CHECK(matEq(Mat<Rat>(prod), Mat<Rat>(expect)));
        }
    Vec<Rat> unit = alg->unitCoords();
    Rat sum(0);
    for (Index i = 0; i < alg->dim(); ++i)
        sum += unit(i);
    CHECK(sum == Rat(3));
}

TEST_CASE("toSCAlgebra passes the exhaustive associativity and unit checks") {
    auto alg = a3Algebra<Rat>(FieldSpec::rationals());
    auto s = toSCAlgebra(*alg);  // create() would throw on any failure
    CHECK(s->dim() == 6);

    auto one = buildPresentedAlgebra<Rat>(FieldSpec::rationals(), makeQuiver({"1"}, {}), {}, 1);
    CHECK(toSCAlgebra(*one)->dim() == 1);

    Quiver q = a3();
    auto rel = buildPresentedAlgebra<Rat>(FieldSpec::rationals(), q, {baZero(q)}, 3);
    CHECK(toSCAlgebra(*rel)->dim() == 5);
}

TEST_CASE("opposite algebra is involutive and associative") {
    auto alg = a3Algebra<Rat>(FieldSpec::rationals());
    auto s = toSCAlgebra(*alg);
    auto op = oppositeAlgebra(*s);       // checks run inside create()
    auto opop = oppositeAlgebra(*op);
    for (Index i = 0; i < s->dim(); ++i)
        CHECK(matEq(s->leftMult[i], opop->leftMult[i]));

    auto comm = buildPresentedAlgebra<Rat>(FieldSpec::rationals(), makeQuiver({"1"}, {}), {}, 1);
    auto c = toSCAlgebra(*comm);
    auto cop = oppositeAlgebra(*c);
    for (Index i = 0; i < c->dim(); ++i)
        CHECK(matEq(c->leftMult[i], cop->leftMult[i]));
}

TEST_CASE("endomorphism algebra dimensions over A3") {
    auto alg = a3Algebra<Rat>(FieldSpec::rationals());
    std::vector<Representation<Rat>> projs;
    for (int v = 0; v < 3; ++v)
        projs.push_back(indecProjective(alg, v));

    // Lambda as a module over itself: P(1) + P(2) + P(3), End has dim 6
    auto lambdaMod = directSum(alg, projs);
    auto endLambda = endomorphismAlgebra(lambdaMod);
    CHECK(endLambda.algebra->dim() == 6);

    auto s1 = simpleRep(alg, 0);
    CHECK(endomorphismAlgebra(s1).algebra->dim() == 1);

    // U = P(1) + P(2) + S(2): the nine Hom-pair dimensions sum to 5
    auto u = directSum(alg, {projs[0], projs[1], simpleRep(alg, 1)});
    auto endU = endomorphismAlgebra(u);
    CHECK(endU.algebra->dim() == 5);
    CHECK(oppositeAlgebra(*endU.algebra)->dim() == 5);

    // additivity of End dims over a direct sum decomposition
    std::vector<Representation<Rat>> parts{projs[0], simpleRep(alg, 1)};
    Index cross = 0;
    for (const auto& x : parts)
        for (const auto& y : parts)
            cross += static_cast<Index>(homSpace(x, y).size());
    CHECK(static_cast<Index>(endomorphismAlgebra(directSum(alg, parts)).algebra->dim()) == cross);
}

TEST_CASE("opposite of End(U) transposes composition") {
    auto alg = a3Algebra<Rat>(FieldSpec::rationals());
    auto u = directSum(alg, {indecProjective(alg, 0), indecProjective(alg, 1), simpleRep(alg, 1)});
    auto endU = endomorphismAlgebra(u);
    auto op = oppositeAlgebra(*endU.algebra);
    for (Index i = 0; i < op->dim(); ++i)
        for (Index j = 0; j < op->dim(); ++j)
            CHECK(matEq(Mat<Rat>(op->leftMult[i].col(j)), Mat<Rat>(endU.algebra->leftMult[j].col(i))));
}
