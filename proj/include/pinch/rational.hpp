#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "pinch/errors.hpp"

namespace pinch {

// Arbitrary precision throughout; coefficient growth under Buchberger is
// unbounded and overflow is not an error mode.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// cpp_rational keeps numerator/denominator coprime, which together with the
// sign flip below gives the canonical positive-denominator form.
inline Rational makeRational(const Int& num, const Int& den) {
    if (den == 0) throw ZeroDenominator("rational with zero denominator");
    if (den < 0) return Rational(-num, -den);
    return Rational(num, den);
}

inline std::string str(const Rational& r) {
    const Int num = numerator(r);
    const Int den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline bool isInteger(const Rational& r) { return denominator(r) == 1; }

}  // namespace pinch
