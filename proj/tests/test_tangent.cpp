#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "pinch/tangent.hpp"

using namespace pinch;
using namespace pinch::testing;

TEST_CASE("jacobian ranks at points") {
    const RingPtr plane = qring({"x", "y"});
    CHECK(jacobianRankAt({P("y - x^2", plane)}, qpoint({0, 0})) == 1);

    const RingPtr pair = qring({"x0", "x1"});
    CHECK(jacobianRankAt({P("x0^3 - x1^2 + x0^2", pair)}, qpoint({0, 0})) == 0);

    const RingPtr triple = qring({"x0", "x1", "x2"});
    const std::vector<Polynomial> v3 = {P("x0*x2 - x1^2", triple),
                                        P("x0^3 - x1*x2 + x0^2", triple),
                                        P("x0^2*x1 - x2^2 + x0*x1", triple)};
    CHECK(jacobianRankAt(v3, qpoint({0, 0, 0})) == 0);

    CHECK_THROWS_AS(jacobianRankAt({P("y - x^2", plane)}, qpoint({1, 2})), PointNotOnVariety);
}

TEST_CASE("tangent dimensions") {
    const RingPtr pair = qring({"x0", "x1"});
    CHECK(tangentDimAt(ideal(pair, {"x0^3 - x1^2 + x0^2"}), qpoint({0, 0})).tangentDim == 2);

    const RingPtr triple = qring({"x0", "x1", "x2"});
    const IdealPresentation v3 = ideal(
        triple, {"x0*x2 - x1^2", "x0^3 - x1*x2 + x0^2", "x0^2*x1 - x2^2 + x0*x1"});
    CHECK(tangentDimAt(v3, qpoint({0, 0, 0})).tangentDim == 3);

    const RingPtr plane = qring({"x", "y"});
    const TangentReport smooth = tangentDimAt(ideal(plane, {"y - x^2"}), qpoint({0, 0}));
    CHECK(smooth.tangentDim == 1);
    CHECK(smooth.variableCount == 2);
    CHECK(smooth.jacobianRank == 1);
}

TEST_CASE("singularity lower bound on line gluings") {
    const RingPtr line = qring({"x"});

    const GluingProblem two = glueAtPoints(makeIdeal(line, {}), {qpoint({1}), qpoint({-1})});
    const SingularityBound r2 = singularityLowerBound(gluePresentation(two), two);
    CHECK(r2.bound == 2);
    CHECK(r2.computed == 2);
    CHECK(r2.holds);

    const GluingProblem three =
        glueAtPoints(makeIdeal(line, {}), {qpoint({0}), qpoint({1}), qpoint({-1})});
    const SingularityBound r3 = singularityLowerBound(gluePresentation(three), three);
    CHECK(r3.bound == 3);
    CHECK(r3.computed == 3);
    CHECK(r3.holds);

    const GluingProblem single = glueAtPoints(makeIdeal(line, {}), {qpoint({0})});
    const SingularityBound r1 = singularityLowerBound(gluePresentation(single), single);
    CHECK(r1.bound == 1);
    CHECK(r1.computed == 1);
    CHECK(r1.holds);
}

TEST_CASE("line unions") {
    const RingPtr pair = qring({"y0", "y1"});
    CHECK(idealEqual(linesUnionIdeal(pair, {qpoint({1, 1})}), ideal(pair, {"y1 - y0"})));
    CHECK(idealEqual(linesUnionIdeal(pair, {qpoint({1, 1}), qpoint({1, -1})}),
                     ideal(pair, {"y0^2 - y1^2"})));
    CHECK_THROWS_AS(linesUnionIdeal(pair, {qpoint({0, 0})}), ZeroDirection);
}

TEST_CASE("three lines over Q(omega)") {
    const FieldSpec field = FieldSpec::extension({Rational(1), Rational(1), Rational(1)});
    const RingPtr ring = makeRing({"y0", "y1", "y2"}, field);
    const FieldElement one = field.one();
    const FieldElement w = field.generator();
    const FieldElement w2 = field.mul(w, w);
    const IdealPresentation lines = linesUnionIdeal(ring, {{one, one, one}, {one, w, w2}, {one, w2, w}});
    const IdealPresentation expected =
        ideal(ring, {"y0^2 - y1*y2", "y1^2 - y0*y2", "y2^2 - y0*y1"});
    CHECK(idealEqual(lines, expected));

    // The output vanishes on sampled points of every input line.
    for (const FieldElement& scale : {field.fromInt(2), field.fromInt(-3), w}) {
        for (const Point& dir : std::vector<Point>{{one, one, one}, {one, w, w2}, {one, w2, w}}) {
            Point p;
            for (const FieldElement& c : dir) p.push_back(field.mul(scale, c));
            for (const Polynomial& g : lines.generators) CHECK(field.isZero(g.eval(p)));
        }
    }
}

TEST_CASE("smooth hypersurface points have tangent dimension n - 1") {
    std::mt19937 rng(47);
    const RingPtr space = qring({"x", "y", "z"});
    const FieldSpec& field = space->field();
    for (int trial = 0; trial < 10; ++trial) {
        const Point p = qpoint({static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2,
                                static_cast<long>(rng() % 5) - 2});
        Polynomial g = randomPoly(rng, space, 3, 4);
        Polynomial f = g - Polynomial::constant(space, g.eval(p));
        bool gradientNonzero = false;
        for (int v = 0; v < 3; ++v)
            if (!field.isZero(f.derivative(v).eval(p))) gradientNonzero = true;
        if (!gradientNonzero) continue;
        CHECK(tangentDimAt(makeIdeal(space, {f}), p).tangentDim == 2);
    }
}
