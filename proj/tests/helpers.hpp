#pragma once

#include <random>
#include <string>
#include <vector>

#include "pinch/glue.hpp"
#include "pinch/groebner.hpp"
#include "pinch/io.hpp"
#include "pinch/monoid.hpp"
#include "pinch/poly.hpp"

namespace pinch::testing {

inline RingPtr qring(std::vector<std::string> vars) {
    return makeRing(std::move(vars), FieldSpec::rationals());
}

inline Polynomial P(const std::string& text, const RingPtr& ring) {
    return parsePolynomial(text, ring);
}

inline IdealPresentation ideal(const RingPtr& ring, const std::vector<std::string>& gens) {
    std::vector<Polynomial> polys;
    polys.reserve(gens.size());
    for (const std::string& g : gens) polys.push_back(P(g, ring));
    return makeIdeal(ring, std::move(polys));
}

inline FieldElement q(long num, long den = 1) {
    return FieldSpec::rationals().fromRational(Rational(num, den));
}

inline Point qpoint(const std::vector<long>& coords) {
    Point p;
    p.reserve(coords.size());
    for (long c : coords) p.push_back(q(c));
    return p;
}

// Small random polynomial with integer coefficients; deterministic given the
// engine state (avoids distribution objects for cross-platform stability).
inline Polynomial randomPoly(std::mt19937& rng, const RingPtr& ring, int maxDegree, int maxTerms) {
    const FieldSpec& field = ring->field();
    const int termCount = 1 + static_cast<int>(rng() % maxTerms);
    std::vector<Term> terms;
    for (int t = 0; t < termCount; ++t) {
        Monomial m = Monomial::one(ring->arity());
        int remaining = static_cast<int>(rng() % (maxDegree + 1));
        for (int v = 0; v < ring->arity() && remaining > 0; ++v) {
            const int e = static_cast<int>(rng() % (remaining + 1));
            m.exp[v] = e;
            m.degree += e;
            remaining -= e;
        }
        const long c = 1 + static_cast<long>(rng() % 3);
        terms.push_back(Term{std::move(m), field.fromInt(rng() % 2 == 0 ? c : -c)});
    }
    return Polynomial::fromTerms(ring, MonomialOrder::grevlex(), std::move(terms));
}

inline FieldElement randomElement(std::mt19937& rng, const FieldSpec& field) {
    std::vector<Rational> coeffs;
    for (int i = 0; i < field.degree(); ++i)
        coeffs.push_back(Rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3)));
    return field.element(std::move(coeffs));
}

}  // namespace pinch::testing
