#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "pinch/problem.hpp"

using namespace pinch;
using namespace pinch::testing;

TEST_CASE("parsing the basic declarations") {
    const ProblemFile pf = parseProblem("field Q\nring x\nideal J: x^2 - 1\n");
    REQUIRE(pf.ring);
    CHECK(pf.ring->arity() == 1);
    REQUIRE(pf.ideals.count("J"));
    CHECK(pf.ideals.at("J").generators[0] == P("x^2 - 1", pf.ring));
}

TEST_CASE("parsing an extension field ring") {
    const ProblemFile pf = parseProblem("field Q[s]/(s^2 + s + 1)\nring y0, y1, y2\n");
    CHECK(pf.ring->field().isExtension());
    CHECK(pf.ring->field().degree() == 2);
    CHECK(pf.ring->arity() == 3);
}

TEST_CASE("parsing point lists") {
    const ProblemFile line = parseProblem("ring x\npoints P: 1, -1\n");
    REQUIRE(line.pointSets.count("P"));
    CHECK(line.pointSets.at("P") == std::vector<Point>{qpoint({1}), qpoint({-1})});

    const ProblemFile plane = parseProblem("ring x, y\npoints P: (0, 0), (1, 1)\n");
    CHECK(plane.pointSets.at("P") == std::vector<Point>{qpoint({0, 0}), qpoint({1, 1})});
}

TEST_CASE("parsing maps and diagrams") {
    const std::string text =
        "field Q\n"
        "ring x, y\n"
        "ideal J: y\n"
        "map phi: R -> J via x, y\n"
        "map psi: K -> J\n"
        "diagram: phi=phi, psi=psi\n";
    const ProblemFile pf = parseProblem(text);
    REQUIRE(pf.diagram);
    const PullbackDiagram d = buildDiagram(pf, false);
    CHECK(d.phi.shape == MapShape::CanonicalQuotient);
    CHECK(d.C.ring->arity() == 0);
    CHECK(validateDiagram(d).shape == DiagramShape::QuotientGlue);
}

TEST_CASE("comments and blank lines are ignored") {
    const ProblemFile pf = parseProblem("# heading\n\nring x  # trailing\nideal J: x # c\n");
    CHECK(pf.ideals.at("J").generators[0] == P("x", pf.ring));
}

TEST_CASE("errors carry line numbers") {
    try {
        parseProblem("ring x\nideal J: y\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    try {
        parseProblem("ring x\nmap f: R -> Missing via x\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("undefined name 'Missing'") != std::string::npos);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    CHECK_THROWS_AS(parseProblem("ring x\nnonsense y\n"), ParseError);
    CHECK_THROWS_AS(parseProblem("ring x\nring y\n"), ParseError);
    CHECK_THROWS_AS(parseProblem("ring x\nfield Q\n"), ParseError);
}

TEST_CASE("ill-formed maps surface as precondition violations") {
    const std::string text =
        "ring x\n"
        "ideal J: x^2\n"
        "map f: J -> R via x\n";
    CHECK_THROWS_AS(parseProblem(text), IllFormedMap);
}

TEST_CASE("reserved endpoint names") {
    CHECK_THROWS_AS(parseProblem("ring x\nideal R: x\n"), ParseError);
    CHECK_THROWS_AS(parseProblem("ring x\nideal K: x\n"), ParseError);
}
