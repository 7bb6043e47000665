#pragma once

#include <utility>

#include "pinch/errors.hpp"
#include "pinch/poly.hpp"

namespace pinch {

// Helpers for polynomials in a one-variable ring, used by the squarefree
// check on gluing inputs.

inline void requireUnivariate(const Polynomial& f) {
    if (f.ring()->arity() != 1) throw DimensionMismatch("univariate operation on multivariate input");
}

inline bool isMonic(const Polynomial& f) {
    requireUnivariate(f);
    return !f.isZero() && f.ring()->field().isOne(f.leadingTerm().coeff);
}

inline std::pair<Polynomial, Polynomial> divmodUnivariate(Polynomial num, const Polynomial& den) {
    requireUnivariate(num);
    requireUnivariate(den);
    if (den.isZero()) throw DivisionByZero("univariate division by zero");
    const FieldSpec& field = num.ring()->field();
    Polynomial quot = Polynomial::zero(num.ring(), num.order());
    while (!num.isZero() && num.totalDegree() >= den.totalDegree()) {
        Monomial shift = Monomial::one(1);
        shift.exp[0] = num.totalDegree() - den.totalDegree();
        shift.degree = shift.exp[0];
        const Term step{shift, field.divide(num.leadingTerm().coeff, den.leadingTerm().coeff)};
        quot = quot + Polynomial::fromTerms(num.ring(), num.order(), {step});
        num = num - den.timesTerm(step);
    }
    return {std::move(quot), std::move(num)};
}

// Monic gcd via Euclid; gcd(f, 0) = monic f.
inline Polynomial gcdUnivariate(Polynomial a, Polynomial b) {
    requireUnivariate(a);
    while (!b.isZero()) {
        Polynomial r = divmodUnivariate(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.isZero() ? a : a.monic();
}

// Distinct roots in the algebraic closure: gcd(f, f') is constant.
inline bool isSquarefree(const Polynomial& f) {
    requireUnivariate(f);
    if (f.isZero()) return false;
    return gcdUnivariate(f, f.derivative(0)).isConstant();
}

}  // namespace pinch
