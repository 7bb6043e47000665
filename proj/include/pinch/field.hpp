#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pinch/errors.hpp"
#include "pinch/rational.hpp"

namespace pinch {

// A scalar of the coefficient field: one rational over Q, or the coefficient
// vector of a residue-class polynomial in s over Q[s]/(m(s)). Always stored
// reduced: length equals the field degree, entries canonical rationals.
struct FieldElement {
    std::vector<Rational> coeffs;

    bool operator==(const FieldElement& other) const = default;
};

namespace detail {

// Dense univariate arithmetic over Q used for residue-class reduction and
// inversion inside an extension field. Vectors are coefficient lists
// c[0] + c[1]s + ..., trailing zeros trimmed.
inline void trimQ(std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degQ(const std::vector<Rational>& p) {
    return static_cast<int>(p.size()) - 1;  // -1 for the zero polynomial
}

inline std::vector<Rational> mulQ(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trimQ(out);
    return out;
}

inline std::vector<Rational> addQ(std::vector<Rational> a, const std::vector<Rational>& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    trimQ(a);
    return a;
}

inline std::vector<Rational> scaleQ(std::vector<Rational> a, const Rational& c) {
    if (c == 0) return {};
    for (auto& x : a) x *= c;
    return a;
}

// Division with remainder; divisor need not be monic.
inline std::pair<std::vector<Rational>, std::vector<Rational>> divmodQ(
    std::vector<Rational> num, const std::vector<Rational>& den) {
    std::vector<Rational> quot;
    const int dd = degQ(den);
    if (dd < 0) throw DivisionByZero("polynomial division by zero");
    if (degQ(num) >= dd) quot.assign(degQ(num) - dd + 1, Rational(0));
    while (degQ(num) >= dd) {
        const int shift = degQ(num) - dd;
        const Rational c = num.back() / den.back();
        quot[shift] = c;
        for (int i = 0; i <= dd; ++i) num[shift + i] -= c * den[i];
        trimQ(num);
    }
    return {std::move(quot), std::move(num)};
}

inline std::vector<Rational> remQ(std::vector<Rational> num, const std::vector<Rational>& den) {
    return divmodQ(std::move(num), den).second;
}

}  // namespace detail

// The coefficient field: Q, or a simple extension Q[s]/(m(s)) with m monic.
// Irreducibility of m is the caller's assertion; inversion detects a failure
// lazily and raises ReducibleModulus. Only one extension layer is supported.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(); }

    // modulus = c0 + c1 s + ... + cd s^d with cd = 1, d >= 1.
    static FieldSpec extension(std::vector<Rational> modulus) {
        detail::trimQ(modulus);
        const int d = detail::degQ(modulus);
        if (d < 1) throw Precondition("extension modulus must have degree >= 1");
        if (modulus.back() != 1) throw NotMonic("extension modulus must be monic");
        FieldSpec spec;
        spec.extension_ = true;
        spec.degree_ = d;
        spec.modulus_ = std::move(modulus);
        if (d <= 3 && spec.modulusHasRationalRoot())
            throw ReducibleModulus("extension modulus has a rational root");
        return spec;
    }

    int degree() const { return degree_; }
    bool isExtension() const { return extension_; }
    const std::vector<Rational>& modulus() const { return modulus_; }

    bool operator==(const FieldSpec& other) const {
        return extension_ == other.extension_ && modulus_ == other.modulus_;
    }

    FieldElement zero() const { return FieldElement{std::vector<Rational>(degree_, Rational(0))}; }

    FieldElement one() const { return fromRational(Rational(1)); }

    FieldElement fromRational(const Rational& r) const {
        FieldElement e = zero();
        e.coeffs[0] = r;
        return e;
    }

    FieldElement fromInt(long n) const { return fromRational(Rational(n)); }

    // s itself (extension fields only).
    FieldElement generator() const {
        if (!extension_) throw Precondition("Q has no extension generator");
        FieldElement e = zero();
        e.coeffs[1] = 1;
        return e;
    }

    // Entries beyond the field degree are folded back via the modulus, so a
    // raw vector written against powers s^0..s^k for any k is accepted.
    FieldElement element(std::vector<Rational> raw) const {
        if (!extension_) {
            detail::trimQ(raw);
            if (raw.size() > 1) throw DimensionMismatch("rational scalar with extension coordinates");
            return raw.empty() ? zero() : fromRational(raw[0]);
        }
        raw = detail::remQ(std::move(raw), modulus_);
        raw.resize(degree_, Rational(0));
        return FieldElement{std::move(raw)};
    }

    // Reduced, sign-normalized, length-padded representation; idempotent.
    FieldElement canonicalize(const std::vector<std::pair<Int, Int>>& raw) const {
        std::vector<Rational> coeffs;
        coeffs.reserve(raw.size());
        for (const auto& [num, den] : raw) coeffs.push_back(makeRational(num, den));
        return element(std::move(coeffs));
    }

    bool isZero(const FieldElement& a) const {
        return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](const Rational& c) { return c == 0; });
    }

    bool isOne(const FieldElement& a) const { return a == one(); }

    // True when the element lies in the prime field.
    bool isRationalValue(const FieldElement& a) const {
        for (std::size_t i = 1; i < a.coeffs.size(); ++i)
            if (a.coeffs[i] != 0) return false;
        return true;
    }

    Rational rationalValue(const FieldElement& a) const {
        if (!isRationalValue(a)) throw Precondition("element is not rational");
        return a.coeffs[0];
    }

    FieldElement add(const FieldElement& a, const FieldElement& b) const {
        checkLength(a);
        checkLength(b);
        FieldElement out = a;
        for (int i = 0; i < degree_; ++i) out.coeffs[i] += b.coeffs[i];
        return out;
    }

    FieldElement sub(const FieldElement& a, const FieldElement& b) const {
        checkLength(a);
        checkLength(b);
        FieldElement out = a;
        for (int i = 0; i < degree_; ++i) out.coeffs[i] -= b.coeffs[i];
        return out;
    }

    FieldElement neg(const FieldElement& a) const {
        checkLength(a);
        FieldElement out = a;
        for (auto& c : out.coeffs) c = -c;
        return out;
    }

    FieldElement mul(const FieldElement& a, const FieldElement& b) const {
        checkLength(a);
        checkLength(b);
        if (!extension_) return fromRational(a.coeffs[0] * b.coeffs[0]);
        return element(detail::mulQ(a.coeffs, b.coeffs));
    }

    // Extended Euclid against the modulus in the extension case.
    FieldElement invert(const FieldElement& a) const {
        checkLength(a);
        if (isZero(a)) throw DivisionByZero("inverting zero");
        if (!extension_) return fromRational(Rational(1) / a.coeffs[0]);

        // Run (g, u) with u*a = g mod m; cofactors of m are not needed.
        std::vector<Rational> r0 = modulus_, r1 = a.coeffs;
        detail::trimQ(r1);
        std::vector<Rational> u0 = {}, u1 = {Rational(1)};
        while (detail::degQ(r1) >= 0) {
            auto [q, r2] = detail::divmodQ(r0, r1);
            auto u2 = detail::addQ(u0, detail::scaleQ(detail::mulQ(q, u1), Rational(-1)));
            r0 = std::move(r1);
            r1 = std::move(r2);
            u0 = std::move(u1);
            u1 = std::move(u2);
        }
        if (detail::degQ(r0) > 0)
            throw ReducibleModulus("modulus shares a factor with a nonzero element");
        return element(detail::scaleQ(std::move(u0), Rational(1) / r0[0]));
    }

    FieldElement divide(const FieldElement& a, const FieldElement& b) const {
        return mul(a, invert(b));
    }

    FieldElement pow(FieldElement base, unsigned long e) const {
        FieldElement acc = one();
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    // "-1 - s", "1/2 + 3*s^2": ascending powers of s, zero terms skipped.
    std::string str(const FieldElement& a) const {
        checkLength(a);
        if (!extension_) return pinch::str(a.coeffs[0]);
        std::string out;
        for (int i = 0; i < degree_; ++i) {
            const Rational& c = a.coeffs[i];
            if (c == 0) continue;
            const bool neg = c < 0;
            const Rational mag = neg ? Rational(-c) : c;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (i == 0) {
                out += pinch::str(mag);
            } else {
                if (mag != 1) out += pinch::str(mag) + "*";
                out += "s";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    FieldSpec() = default;

    void checkLength(const FieldElement& a) const {
        if (static_cast<int>(a.coeffs.size()) != degree_)
            throw DimensionMismatch("field element has wrong coordinate count");
    }

    // Cheap sanity check used for degree <= 3, where a rational root is the
    // same thing as reducibility.
    bool modulusHasRationalRoot() const {
        // Clear denominators to an integer polynomial a0 + ... + ad s^d.
        Int lcm = 1;
        for (const auto& c : modulus_) {
            const Int den = denominator(c);
            lcm = lcm / gcd(lcm, den) * den;
        }
        std::vector<Int> a;
        a.reserve(modulus_.size());
        for (const auto& c : modulus_) a.push_back(numerator(c) * (lcm / denominator(c)));
        if (a.front() == 0) return true;  // root at 0

        auto divisors = [](Int n) {
            if (n < 0) n = -n;
            std::vector<Int> out;
            for (Int d = 1; d * d <= n; ++d) {
                if (n % d == 0) {
                    out.push_back(d);
                    out.push_back(n / d);
                }
            }
            return out;
        };
        auto evalAt = [&a](const Rational& x) {
            Rational acc = 0;
            for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + Rational(*it);
            return acc;
        };
        for (const Int& p : divisors(a.front()))
            for (const Int& q : divisors(a.back()))
                for (int sign : {1, -1})
                    if (evalAt(Rational(sign * p, q)) == 0) return true;
        return false;
    }

    bool extension_ = false;
    int degree_ = 1;
    std::vector<Rational> modulus_;  // nonempty only for extensions
};

}  // namespace pinch
