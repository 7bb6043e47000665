// pinch: exact gluing of points on affine algebraic sets, pullback
// finite-generation checks, and the supporting Groebner toolkit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pinch/glue.hpp"
#include "pinch/groebner.hpp"
#include "pinch/io.hpp"
#include "pinch/monoid.hpp"
#include "pinch/problem.hpp"
#include "pinch/pullback.hpp"
#include "pinch/tangent.hpp"

namespace {

using namespace pinch;

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

const IdealPresentation& pickIdeal(const ProblemFile& pf, const std::string& name,
                                   const char* what) {
    if (!name.empty()) {
        const auto it = pf.ideals.find(name);
        if (it == pf.ideals.end()) throw ParseError("undefined ideal '" + name + "'");
        return it->second;
    }
    if (pf.idealOrder.size() == 1) return pf.ideals.at(pf.idealOrder.front());
    throw ParseError(std::string("specify ") + what + " with --ideal (the file declares " +
                     std::to_string(pf.idealOrder.size()) + " ideals)");
}

std::string joined(const std::vector<std::string>& parts) {
    std::string out;
    for (const std::string& p : parts) out += (out.empty() ? "" : ", ") + p;
    return out;
}

std::string polyList(const std::vector<Polynomial>& polys) {
    if (polys.empty()) return "0";
    std::vector<std::string> parts;
    parts.reserve(polys.size());
    for (const Polynomial& p : polys) parts.push_back(str(p));
    return joined(parts);
}

void printPresentation(std::ostream& out, const SubalgebraPresentation& pres) {
    std::vector<std::string> weights;
    for (long w : pres.weights) weights.push_back(std::to_string(w));
    out << "vars: " << joined(pres.newVars) << "\n";
    out << "weights: " << joined(weights) << "\n";
    out << "images: " << polyList(pres.images) << "\n";
    out << "relations: " << polyList(pres.relations.generators) << "\n";
}

// Variables of an ad-hoc polynomial string, in order of first appearance.
std::vector<std::string> inferVars(const std::vector<std::string>& texts) {
    std::vector<std::string> vars;
    for (const std::string& text : texts) {
        std::string cur;
        for (std::size_t i = 0; i <= text.size(); ++i) {
            const char c = i < text.size() ? text[i] : ' ';
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                cur += c;
            } else {
                if (!cur.empty() && !std::isdigit(static_cast<unsigned char>(cur[0])) &&
                    std::find(vars.begin(), vars.end(), cur) == vars.end())
                    vars.push_back(cur);
                cur.clear();
            }
        }
    }
    return vars;
}

MonomialSubalgebra parseMonomialAlgebra(const std::string& text, const RingPtr& ring) {
    std::vector<ExponentVector> gens;
    for (const std::string& part : splitTopLevel(text, ',')) {
        const Polynomial p = parsePolynomial(part, ring);
        if (p.terms().size() != 1 || !ring->field().isOne(p.leadingTerm().coeff))
            throw ParseError("'" + part + "' is not a monomial");
        gens.push_back(p.leadingTerm().mono.exp);
    }
    return makeMonomialSubalgebra(ring->arity(), std::move(gens));
}

int runGb(const std::string& file, const std::string& idealName) {
    const ProblemFile pf = parseProblem(readFile(file));
    const GroebnerBasis gb = buchberger(pickIdeal(pf, idealName, "an ideal"));
    if (gb.basis.empty()) {
        std::cout << "0\n";
        return 0;
    }
    for (const Polynomial& p : gb.basis) std::cout << str(p) << "\n";
    return 0;
}

int runGlue(const std::string& file, const std::string& pointsName, const std::string& idealName,
            const std::string& ambientName) {
    const ProblemFile pf = parseProblem(readFile(file));
    IdealPresentation ambient = makeIdeal(pf.ring, {});
    if (!ambientName.empty()) {
        const auto it = pf.ideals.find(ambientName);
        if (it == pf.ideals.end()) throw ParseError("undefined ideal '" + ambientName + "'");
        ambient = it->second;
    }
    GluingProblem problem;
    if (!pointsName.empty()) {
        const auto it = pf.pointSets.find(pointsName);
        if (it == pf.pointSets.end()) throw ParseError("undefined points '" + pointsName + "'");
        problem = glueAtPoints(ambient, it->second);
    } else if (!idealName.empty()) {
        const auto it = pf.ideals.find(idealName);
        if (it == pf.ideals.end()) throw ParseError("undefined ideal '" + idealName + "'");
        problem = glueAtIdeal(ambient, it->second);
    } else if (pf.pointOrder.size() == 1) {
        problem = glueAtPoints(ambient, pf.pointSets.at(pf.pointOrder.front()));
    } else {
        throw ParseError("specify the locus to glue with --points or --ideal");
    }
    printPresentation(std::cout, gluePresentation(problem));
    return 0;
}

int runGlueA1(const std::string& phi0Text, const std::string& file) {
    RingPtr line;
    if (!file.empty()) {
        const ProblemFile pf = parseProblem(readFile(file));
        if (!pf.ring || pf.ring->arity() != 1)
            throw ParseError("glue-a1 needs a one-variable ring");
        line = pf.ring;
    } else {
        const std::vector<std::string> vars = inferVars({phi0Text});
        if (vars.size() != 1) throw ParseError("phi0 must be univariate");
        line = makeRing(vars, FieldSpec::rationals());
    }
    printPresentation(std::cout, a1Glue(parsePolynomial(phi0Text, line)));
    return 0;
}

int runIntersectMonomials(const std::string& gens1, const std::string& gens2,
                          const std::string& ringSpec) {
    std::vector<std::string> vars;
    if (!ringSpec.empty()) {
        vars = splitTopLevel(ringSpec, ',');
    } else {
        vars = inferVars({gens1, gens2});
    }
    if (vars.empty()) throw ParseError("no ring variables found");
    const RingPtr ring = makeRing(vars, FieldSpec::rationals());
    const MonomialSubalgebra meet =
        intersectMonomial(parseMonomialAlgebra(gens1, ring), parseMonomialAlgebra(gens2, ring));
    std::cout << "# generating set (not minimized)\n";
    if (meet.generators.empty()) {
        std::cout << "1\n";
        return 0;
    }
    for (const ExponentVector& e : meet.generators)
        std::cout << str(Monomial::make(e), *ring) << "\n";
    return 0;
}

int runPullbackCheck(const std::string& file, bool assertDomain) {
    const ProblemFile pf = parseProblem(readFile(file));
    const PullbackDiagram diagram = buildDiagram(pf, assertDomain);
    const ShapeDescriptor shape = validateDiagram(diagram);
    switch (shape.shape) {
        case DiagramShape::QuotientGlue: std::cout << "shape: quotient-glue\n"; break;
        case DiagramShape::MonomialMaps: std::cout << "shape: monomial-maps\n"; break;
        case DiagramShape::General: std::cout << "shape: general\n"; break;
    }
    const auto [first, second] = pullbackProjections(diagram);
    std::cout << "pi1(P): " << first.text << "\n";
    std::cout << "pi2(P): " << second.text << "\n";
    const Verdict verdict = pullbackVerdict(diagram);
    std::cout << "certificate: " << verdict.certificate << "\n";
    if (verdict.presentation) printPresentation(std::cout, *verdict.presentation);
    switch (verdict.status) {
        case FgStatus::FinitelyGenerated: std::cout << "VERDICT: FG\n"; break;
        case FgStatus::NotFinitelyGenerated: std::cout << "VERDICT: NOT_FG\n"; break;
        case FgStatus::Unknown: std::cout << "VERDICT: UNKNOWN\n"; break;
    }
    return 0;
}

int runTangent(const std::string& file, const std::string& pointText,
               const std::string& idealName) {
    const ProblemFile pf = parseProblem(readFile(file));
    const IdealPresentation& relations = pickIdeal(pf, idealName, "the presentation");
    Point point;
    for (const std::string& part : splitTopLevel(pointText, ','))
        point.push_back(parseFieldElement(part, pf.field));
    const TangentReport report = tangentDimAt(relations, point);
    std::cout << "variables: " << report.variableCount << "\n";
    std::cout << "jacobianRank: " << report.jacobianRank << "\n";
    std::cout << "tangentDim: " << report.tangentDim << "\n";
    return 0;
}

int runLines(const std::string& file, const std::string& directionsText) {
    const ProblemFile pf = parseProblem(readFile(file));
    if (!pf.ring) throw ParseError("the file declares no ring");
    std::vector<Point> directions;
    for (const std::string& part : splitTopLevel(directionsText, ','))
        directions.push_back(detail::parsePoint(part, pf.ring));
    const GroebnerBasis gb = buchberger(linesUnionIdeal(pf.ring, directions));
    if (gb.basis.empty()) {
        std::cout << "0\n";
        return 0;
    }
    for (const Polynomial& p : gb.basis) std::cout << str(p) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pushouts of affine algebraic sets via coordinate-ring pullbacks"};
    app.require_subcommand(1);

    std::string file, idealName, ambientName, pointsName, phi0Text, gens1, gens2, ringSpec,
        pointText, directionsText;
    bool assertDomain = false;

    CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal");
    gb->add_option("file", file)->required();
    gb->add_option("--ideal", idealName);

    CLI::App* glue = app.add_subcommand("glue", "presentation of a point-gluing pushout");
    glue->add_option("file", file)->required();
    glue->add_option("--points", pointsName);
    glue->add_option("--ideal", idealName);
    glue->add_option("--ambient", ambientName);

    CLI::App* glueA1 = app.add_subcommand("glue-a1", "fast path: glue the roots of phi0 on the line");
    glueA1->add_option("--phi0", phi0Text)->required();
    glueA1->add_option("file", file);

    CLI::App* im = app.add_subcommand("intersect-monomials", "intersect two monomial subalgebras");
    im->add_option("--gens1", gens1)->required();
    im->add_option("--gens2", gens2)->required();
    im->add_option("--ring", ringSpec);

    CLI::App* pc = app.add_subcommand("pullback-check", "finite-generation verdict for a diagram");
    pc->add_option("file", file)->required();
    pc->add_flag("--assert-domain", assertDomain);

    CLI::App* tangent = app.add_subcommand("tangent", "tangent-space report at a point");
    tangent->add_option("file", file)->required();
    tangent->add_option("--point", pointText)->required();
    tangent->add_option("--ideal", idealName);

    CLI::App* lines = app.add_subcommand("lines", "vanishing ideal of a union of lines");
    lines->add_option("file", file)->required();
    lines->add_option("--directions", directionsText)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gb->parsed()) return runGb(file, idealName);
        if (glue->parsed()) return runGlue(file, pointsName, idealName, ambientName);
        if (glueA1->parsed()) return runGlueA1(phi0Text, file);
        if (im->parsed()) return runIntersectMonomials(gens1, gens2, ringSpec);
        if (pc->parsed()) return runPullbackCheck(file, assertDomain);
        if (tangent->parsed()) return runTangent(file, pointText, idealName);
        if (lines->parsed()) return runLines(file, directionsText);
    } catch (const pinch::Error& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        return e.exitCode();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
