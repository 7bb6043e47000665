#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "pinch/pullback.hpp"

using namespace pinch;
using namespace pinch::testing;

namespace {

AlgebraPresentation baseField() { return makeAlgebra(makeRing({}, FieldSpec::rationals()), {}); }

// B --canonical--> B/J <--constants-- K
PullbackDiagram conductorDiagram(const RingPtr& ring, const std::vector<std::string>& bRels,
                                 const std::vector<std::string>& jRels, bool assertDomain = false) {
    std::vector<Polynomial> brel, jrel;
    for (const auto& s : bRels) brel.push_back(P(s, ring));
    for (const auto& s : jRels) jrel.push_back(P(s, ring));
    const AlgebraPresentation B = makeAlgebra(ring, brel);
    const AlgebraPresentation A = makeAlgebra(ring, jrel);
    const AlgebraPresentation K = baseField();
    std::vector<Polynomial> identity;
    for (int i = 0; i < ring->arity(); ++i) identity.push_back(Polynomial::variable(ring, i));
    return makeDiagram(B, K, A, makeMap(B, A, identity), makeMap(K, A, {}), assertDomain);
}

PullbackDiagram monomialDiagram(const RingPtr& ring, const std::string& img1,
                                const std::string& img2) {
    const AlgebraPresentation R = makeAlgebra(ring, {});
    return makeDiagram(R, R, R, makeMap(R, R, {P(img1, ring)}), makeMap(R, R, {P(img2, ring)}));
}

}  // namespace

TEST_CASE("shape classification") {
    const RingPtr plane = qring({"x", "y"});
    const PullbackDiagram contractLine = conductorDiagram(plane, {}, {"y"});
    CHECK(validateDiagram(contractLine).shape == DiagramShape::QuotientGlue);

    const RingPtr line = qring({"x"});
    CHECK(validateDiagram(monomialDiagram(line, "x^2", "x^3")).shape == DiagramShape::MonomialMaps);

    const AlgebraPresentation R = makeAlgebra(line, {});
    const PullbackDiagram generic = makeDiagram(
        R, R, R, makeMap(R, R, {P("x^2 - 1", line)}), makeMap(R, R, {P("x^3", line)}));
    CHECK(validateDiagram(generic).shape == DiagramShape::General);

    // Swapped roles: psi is the canonical quotient.
    const AlgebraPresentation B = makeAlgebra(plane, {});
    const AlgebraPresentation A = makeAlgebra(plane, {P("y", plane)});
    const PullbackDiagram swapped =
        makeDiagram(baseField(), B, A, makeMap(baseField(), A, {}),
                    makeMap(B, A, {Polynomial::variable(plane, 0), Polynomial::variable(plane, 1)}));
    const ShapeDescriptor desc = validateDiagram(swapped);
    CHECK(desc.shape == DiagramShape::QuotientGlue);
    CHECK(desc.swapped);
}

TEST_CASE("ill-formed maps are rejected") {
    const RingPtr line = qring({"x"});
    const AlgebraPresentation quotient = makeAlgebra(line, {P("x^2", line)});
    const AlgebraPresentation R = makeAlgebra(line, {});
    CHECK_THROWS_AS(makeMap(quotient, R, {P("x", line)}), IllFormedMap);
}

TEST_CASE("pullback projections are described by shape") {
    const RingPtr plane = qring({"x", "y"});
    const auto [first, second] = pullbackProjections(conductorDiagram(plane, {}, {"y"}));
    CHECK(first.kind == SubalgebraDescription::Kind::LiftsPlusIdeal);
    CHECK(first.text.find("(y)") != std::string::npos);
    CHECK(second.kind == SubalgebraDescription::Kind::WholeAlgebra);

    const RingPtr line = qring({"x"});
    const auto [m1, m2] = pullbackProjections(monomialDiagram(line, "x^2", "x^3"));
    CHECK(m1.kind == SubalgebraDescription::Kind::MonomialIntersection);
    CHECK(m1.text == m2.text);
}

TEST_CASE("module-finiteness test") {
    const RingPtr line = qring({"x"});
    const AlgebraPresentation kx = makeAlgebra(line, {});
    const ModuleFiniteness overSquares = moduleFiniteTest(kx, {P("x^2", line), P("x^3", line)});
    CHECK(overSquares.finite);
    CHECK(overSquares.profile == std::vector<std::string>{"x: x^2"});

    CHECK_FALSE(moduleFiniteTest(kx, {}).finite);

    const RingPtr plane = qring({"x", "y"});
    const ModuleFiniteness missingY = moduleFiniteTest(makeAlgebra(plane, {}), {P("x", plane)});
    CHECK_FALSE(missingY.finite);
    CHECK(missingY.profile[1] == "y: none");
}

TEST_CASE("contract-line verdict is negative") {
    const RingPtr plane = qring({"x", "y"});
    const Verdict verdict = pullbackVerdict(conductorDiagram(plane, {}, {"y"}));
    CHECK(verdict.status == FgStatus::NotFinitelyGenerated);
    CHECK(verdict.certificate.find("no pure power of x") != std::string::npos);
    CHECK_FALSE(verdict.presentation.has_value());
    CHECK_THROWS_AS(pullbackPresentation(conductorDiagram(plane, {}, {"y"})), UnsupportedShape);

    // The negative verdict matches the infinite standard-monomial profile.
    const StandardMonomials sm = standardMonomials(buchberger(ideal(plane, {"y"})));
    CHECK_FALSE(sm.finite);
}

TEST_CASE("point gluings are positive with a presentation") {
    const RingPtr line = qring({"x"});
    const Verdict two = pullbackVerdict(conductorDiagram(line, {}, {"x^2 - 1"}));
    CHECK(two.status == FgStatus::FinitelyGenerated);
    REQUIRE(two.presentation.has_value());
    CHECK(idealEqual(two.presentation->relations,
                     ideal(two.presentation->relations.ring, {"x0^3 - x1^2 + x0^2"})));
    CHECK(two.certificate.find("dim_K B/J = 2") != std::string::npos);

    const Verdict single = pullbackVerdict(conductorDiagram(line, {}, {"x"}));
    CHECK(single.status == FgStatus::FinitelyGenerated);
    REQUIRE(single.presentation.has_value());
    CHECK(single.presentation->relations.generators.empty());

    // Coherence: the span certificate holds up to twice the largest weight.
    const GluingProblem problem = glueAtIdeal(makeIdeal(line, {}), ideal(line, {"x^2 - 1"}));
    const long maxWeight = *std::max_element(two.presentation->weights.begin(),
                                             two.presentation->weights.end());
    for (long d = 0; d <= 2 * maxWeight; ++d) {
        const SpanDims dims = spanDimCheck(problem, two.presentation->images, static_cast<int>(d));
        CHECK(dims.wordSpanDim == dims.closedFormDim);
    }
}

TEST_CASE("monomial diagram verdict") {
    const RingPtr line = qring({"x"});
    const Verdict verdict = pullbackVerdict(monomialDiagram(line, "x^2", "x^3"));
    CHECK(verdict.status == FgStatus::FinitelyGenerated);
    REQUIRE(verdict.presentation.has_value());
    REQUIRE(verdict.presentation->images.size() == 1);
    CHECK(verdict.presentation->images[0] == P("x^6", line));
    CHECK(verdict.presentation->relations.generators.empty());
}

TEST_CASE("unknown outcomes") {
    const RingPtr line = qring({"x"});
    // J = 0: the regular-ideal hypothesis is unavailable.
    const Verdict trivial = pullbackVerdict(conductorDiagram(line, {}, {"0"}));
    CHECK(trivial.status == FgStatus::Unknown);

    // B has relations and no domain assertion.
    const RingPtr plane = qring({"x", "y"});
    const Verdict unasserted =
        pullbackVerdict(conductorDiagram(plane, {"y - x^2"}, {"y - x^2", "x^2 - x"}));
    CHECK(unasserted.status == FgStatus::Unknown);
    const Verdict asserted =
        pullbackVerdict(conductorDiagram(plane, {"y - x^2"}, {"y - x^2", "x^2 - x"}, true));
    CHECK(asserted.status == FgStatus::FinitelyGenerated);

    // Generic polynomial images fall outside the decidable fragment.
    const AlgebraPresentation R = makeAlgebra(line, {});
    const Verdict generic = pullbackVerdict(makeDiagram(
        R, R, R, makeMap(R, R, {P("x^2 - 1", line)}), makeMap(R, R, {P("x^3", line)})));
    CHECK(generic.status == FgStatus::Unknown);
}

TEST_CASE("membership identity for K+I intersections") {
    // (K+I) ∩ (K+J) = K + (I∩J) whenever I + J is proper.
    const RingPtr plane = qring({"x", "y"});
    std::mt19937 rng(43);
    int checked = 0;
    for (int trial = 0; trial < 2; ++trial) {
        const IdealPresentation I = ideal(plane, {"x^2 - x", "y^2 - 1"});
        const IdealPresentation J = trial == 0 ? ideal(plane, {"x^2 - 1", "y^2 - y"})
                                               : ideal(plane, {"x^2 - 3x + 2", "y^2 - y"});
        // Both pairs share the zero (1, 1), so I + J is proper.
        std::vector<Polynomial> sum = I.generators;
        sum.insert(sum.end(), J.generators.begin(), J.generators.end());
        CHECK_FALSE(member(P("1", plane), makeIdeal(plane, sum)));
        const GroebnerBasis gi = buchberger(I), gj = buchberger(J);
        const GroebnerBasis gm = buchberger(intersectIdeals(I, J));
        for (int s = 0; s < 30; ++s) {
            const Polynomial f = randomPoly(rng, plane, 5, 4);
            CHECK((kplusjMember(f, gi) && kplusjMember(f, gj)) == kplusjMember(f, gm));
            ++checked;
        }
        // Elements built to lie in K + (I ∩ J) must pass on both sides.
        const Polynomial inBoth = I.generators[0] * J.generators[1] + P("7", plane);
        CHECK(kplusjMember(inBoth, gm));
        CHECK((kplusjMember(inBoth, gi) && kplusjMember(inBoth, gj)));
    }
    CHECK(checked == 60);
}

TEST_CASE("zero-dimensionality survives intersection") {
    const RingPtr plane = qring({"x", "y"});
    const IdealPresentation I = ideal(plane, {"x^2 - 1", "y"});
    const IdealPresentation J = ideal(plane, {"x", "y^2 - y"});
    CHECK(zeroDim(buchberger(I)));
    CHECK(zeroDim(buchberger(J)));
    CHECK(zeroDim(buchberger(intersectIdeals(I, J))));
}
