#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pinch/errors.hpp"
#include "pinch/io.hpp"
#include "pinch/pullback.hpp"

namespace pinch {

// A batch problem file. Line oriented, `#` starts a comment:
//   field Q                      | field Q[s]/(s^2+s+1)
//   ring x, y
//   ideal J: x^2 - 1, y
//   points P: 1, -1              | points P: (0,0), (1,1)
//   map phi: R -> J via x, y     | map psi: K -> J
//   diagram: phi=phi, psi=psi
// `R` names the declared polynomial ring, `K` the base field; other map
// endpoints name quotients ring/⟨ideal⟩.
struct ProblemFile {
    FieldSpec field = FieldSpec::rationals();
    RingPtr ring;
    std::map<std::string, IdealPresentation> ideals;
    std::vector<std::string> idealOrder;
    std::map<std::string, std::vector<Point>> pointSets;
    std::vector<std::string> pointOrder;
    std::map<std::string, AlgebraMap> maps;
    std::optional<std::pair<std::string, std::string>> diagram;  // phi name, psi name
};

namespace detail {

inline std::string trimmed(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

inline bool isIdentifier(const std::string& s) {
    if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

inline std::vector<Rational> parseModulus(const std::string& inner) {
    // The modulus is an ordinary univariate polynomial in s over Q.
    const RingPtr sRing = makeRing({"s"}, FieldSpec::rationals());
    const Polynomial m = parsePolynomial(inner, sRing);
    std::vector<Rational> coeffs(m.totalDegree() + 1, Rational(0));
    for (const Term& t : m.terms()) coeffs[t.mono.exp[0]] = t.coeff.coeffs[0];
    return coeffs;
}

inline Point parsePoint(const std::string& text, const RingPtr& ring) {
    const FieldSpec& field = ring->field();
    std::string body = trimmed(text);
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') throw ParseError("unbalanced parentheses in point '" + text + "'");
        body = body.substr(1, body.size() - 2);
    } else if (ring->arity() != 1) {
        throw ParseError("points in a multivariate ring need tuple syntax (a, b, ...)");
    }
    const std::vector<std::string> coords = splitTopLevel(body, ',');
    if (static_cast<int>(coords.size()) != ring->arity())
        throw ParseError("point arity mismatch in '" + text + "'");
    Point p;
    for (const std::string& c : coords) p.push_back(parseFieldElement(c, field));
    return p;
}

}  // namespace detail

inline ProblemFile parseProblem(const std::string& text) {
    ProblemFile pf;
    bool sawRing = false;
    std::istringstream in(text);
    std::string rawLine;
    int lineNo = 0;

    auto fail = [&](const std::string& msg) -> void {
        throw ParseError("line " + std::to_string(lineNo) + ": " + msg);
    };
    auto requireRing = [&]() {
        if (!pf.ring) fail("a 'ring' declaration is required first");
    };

    while (std::getline(in, rawLine)) {
        ++lineNo;
        const auto hash = rawLine.find('#');
        if (hash != std::string::npos) rawLine.erase(hash);
        const std::string line = detail::trimmed(rawLine);
        if (line.empty()) continue;

        std::istringstream ls(line);
        std::string keyword;
        ls >> keyword;
        std::string rest;
        std::getline(ls, rest);
        rest = detail::trimmed(rest);

        try {
            if (keyword == "field") {
                if (sawRing) fail("'field' must precede 'ring'");
                if (rest == "Q") {
                    pf.field = FieldSpec::rationals();
                } else if (rest.rfind("Q[s]/(", 0) == 0 && rest.back() == ')') {
                    pf.field = FieldSpec::extension(
                        detail::parseModulus(rest.substr(6, rest.size() - 7)));
                } else {
                    fail("expected 'Q' or 'Q[s]/(<monic poly in s>)'");
                }
            } else if (keyword == "ring") {
                if (sawRing) fail("duplicate 'ring' declaration");
                std::vector<std::string> names = splitTopLevel(rest, ',');
                if (names.empty()) fail("empty ring declaration");
                for (const std::string& n : names)
                    if (!detail::isIdentifier(n)) fail("invalid variable name '" + n + "'");
                pf.ring = makeRing(std::move(names), pf.field);
                sawRing = true;
            } else if (keyword == "ideal" || keyword == "points" || keyword == "map") {
                requireRing();
                const auto colon = rest.find(':');
                if (colon == std::string::npos) fail("expected ':' after the name");
                const std::string name = detail::trimmed(rest.substr(0, colon));
                const std::string body = detail::trimmed(rest.substr(colon + 1));
                if (!detail::isIdentifier(name)) fail("invalid name '" + name + "'");
                if (name == "R" || name == "K") fail("'" + name + "' is reserved");

                if (keyword == "ideal") {
                    if (pf.ideals.count(name)) fail("duplicate ideal '" + name + "'");
                    std::vector<Polynomial> gens;
                    for (const std::string& part : splitTopLevel(body, ','))
                        gens.push_back(parsePolynomial(part, pf.ring));
                    pf.ideals.emplace(name, makeIdeal(pf.ring, std::move(gens)));
                    pf.idealOrder.push_back(name);
                } else if (keyword == "points") {
                    if (pf.pointSets.count(name)) fail("duplicate points '" + name + "'");
                    std::vector<Point> pts;
                    for (const std::string& part : splitTopLevel(body, ','))
                        pts.push_back(detail::parsePoint(part, pf.ring));
                    pf.pointSets.emplace(name, std::move(pts));
                    pf.pointOrder.push_back(name);
                } else {
                    if (pf.maps.count(name)) fail("duplicate map '" + name + "'");
                    const auto arrow = body.find("->");
                    if (arrow == std::string::npos) fail("expected 'SRC -> TGT' in map");
                    const std::string srcName = detail::trimmed(body.substr(0, arrow));
                    std::istringstream tail(detail::trimmed(body.substr(arrow + 2)));
                    std::string tgtName, viaWord, imagesText;
                    tail >> tgtName;
                    if (tail >> viaWord) {
                        if (viaWord != "via") fail("expected 'via' after the map target");
                        std::getline(tail, imagesText);
                        imagesText = detail::trimmed(imagesText);
                    }
                    auto algebraOf = [&](const std::string& n) -> AlgebraPresentation {
                        if (n == "R") return AlgebraPresentation{pf.ring, makeIdeal(pf.ring, {})};
                        if (n == "K") {
                            const RingPtr base = makeRing({}, pf.field);
                            return AlgebraPresentation{base, makeIdeal(base, {})};
                        }
                        const auto it = pf.ideals.find(n);
                        if (it == pf.ideals.end()) fail("undefined name '" + n + "'");
                        return AlgebraPresentation{pf.ring, it->second};
                    };
                    const AlgebraPresentation src = algebraOf(srcName);
                    const AlgebraPresentation tgt = algebraOf(tgtName);
                    std::vector<Polynomial> images;
                    for (const std::string& part : splitTopLevel(imagesText, ','))
                        images.push_back(parsePolynomial(part, tgt.ring));
                    pf.maps.emplace(name, makeMap(src, tgt, std::move(images)));
                }
            } else if (keyword == "diagram" || keyword == "diagram:") {
                std::string body = rest;
                if (keyword == "diagram") {
                    if (!body.empty() && body.front() == ':') body = detail::trimmed(body.substr(1));
                }
                std::string phiName, psiName;
                for (const std::string& part : splitTopLevel(body, ',')) {
                    const auto eq = part.find('=');
                    if (eq == std::string::npos) fail("expected phi=<map>, psi=<map>");
                    const std::string key = detail::trimmed(part.substr(0, eq));
                    const std::string value = detail::trimmed(part.substr(eq + 1));
                    if (key == "phi")
                        phiName = value;
                    else if (key == "psi")
                        psiName = value;
                    else
                        fail("unknown diagram slot '" + key + "'");
                }
                if (phiName.empty() || psiName.empty()) fail("diagram needs both phi and psi");
                if (!pf.maps.count(phiName)) fail("undefined name '" + phiName + "'");
                if (!pf.maps.count(psiName)) fail("undefined name '" + psiName + "'");
                pf.diagram = {phiName, psiName};
            } else {
                fail("unknown keyword '" + keyword + "'");
            }
        } catch (const ParseError& e) {
            const std::string what = e.what();
            if (what.rfind("line ", 0) == 0) throw;
            throw ParseError("line " + std::to_string(lineNo) + ": " + what);
        } catch (const IllFormedMap& e) {
            throw IllFormedMap("line " + std::to_string(lineNo) + ": " + e.what());
        }
    }
    return pf;
}

inline PullbackDiagram buildDiagram(const ProblemFile& pf, bool assertDomain) {
    if (!pf.diagram) throw ParseError("the file declares no diagram");
    const AlgebraMap& phi = pf.maps.at(pf.diagram->first);
    const AlgebraMap& psi = pf.maps.at(pf.diagram->second);
    return makeDiagram(phi.source, psi.source, phi.target, phi, psi, assertDomain);
}

}  // namespace pinch
