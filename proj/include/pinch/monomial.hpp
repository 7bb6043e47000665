#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "pinch/errors.hpp"

namespace pinch {

struct Monomial {
    std::vector<int> exp;
    int degree = 0;  // cached sum of exponents

    static Monomial one(int arity) { return Monomial{std::vector<int>(arity, 0), 0}; }

    static Monomial make(std::vector<int> exponents) {
        int d = std::accumulate(exponents.begin(), exponents.end(), 0);
        return Monomial{std::move(exponents), d};
    }

    int arity() const { return static_cast<int>(exp.size()); }
    bool isOne() const { return degree == 0; }

    long weightedDegree(std::span<const long> weights) const {
        long d = 0;
        for (int i = 0; i < arity(); ++i) d += weights[i] * exp[i];
        return d;
    }

    bool divides(const Monomial& m) const {
        if (arity() != m.arity()) return false;
        for (int i = 0; i < arity(); ++i)
            if (exp[i] > m.exp[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial out = *this;
        for (int i = 0; i < arity(); ++i) out.exp[i] += m.exp[i];
        out.degree += m.degree;
        return out;
    }

    Monomial dividedBy(const Monomial& m) const {
        Monomial out = *this;
        for (int i = 0; i < arity(); ++i) out.exp[i] -= m.exp[i];
        out.degree -= m.degree;
        return out;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial out = a;
        for (int i = 0; i < a.arity(); ++i) out.exp[i] = std::max(a.exp[i], b.exp[i]);
        out.degree = std::accumulate(out.exp.begin(), out.exp.end(), 0);
        return out;
    }

    bool operator==(const Monomial& m) const { return exp == m.exp; }
    // Container ordering only; term ordering goes through compareMonomials.
    bool operator<(const Monomial& m) const { return exp < m.exp; }
};

enum class Cmp { LT, EQ, GT };

// grevlex is the default working order; weighted-grevlex carries a grading on
// the variables; a block order makes the first blockSplit variables larger
// than anything in the remaining ones (the elimination block).
struct MonomialOrder {
    enum class Kind { Grevlex, WeightedGrevlex, Block };

    Kind kind = Kind::Grevlex;
    std::vector<long> weights;
    int blockSplit = 0;

    static MonomialOrder grevlex() { return MonomialOrder{}; }

    static MonomialOrder weighted(std::vector<long> w) {
        for (long x : w)
            if (x < 1) throw Precondition("order weights must be >= 1");
        return MonomialOrder{Kind::WeightedGrevlex, std::move(w), 0};
    }

    static MonomialOrder block(int split) {
        if (split < 0) throw Precondition("negative block split");
        return MonomialOrder{Kind::Block, {}, split};
    }

    bool operator==(const MonomialOrder& other) const = default;
};

namespace detail {

// a > b iff deg a > deg b, or degrees tie and the last differing exponent of
// a - b is negative.
inline Cmp grevlexRange(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a.exp[i];
        db += b.exp[i];
    }
    if (da != db) return da > db ? Cmp::GT : Cmp::LT;
    for (int i = hi - 1; i >= lo; --i) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? Cmp::GT : Cmp::LT;
    }
    return Cmp::EQ;
}

}  // namespace detail

inline Cmp compareMonomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    const int n = a.arity();
    if (n != b.arity()) throw DimensionMismatch("comparing monomials of different arity");
    switch (ord.kind) {
        case MonomialOrder::Kind::Grevlex:
            return detail::grevlexRange(a, b, 0, n);
        case MonomialOrder::Kind::WeightedGrevlex: {
            if (static_cast<int>(ord.weights.size()) != n)
                throw DimensionMismatch("weight vector arity mismatch");
            const long wa = a.weightedDegree(ord.weights);
            const long wb = b.weightedDegree(ord.weights);
            if (wa != wb) return wa > wb ? Cmp::GT : Cmp::LT;
            return detail::grevlexRange(a, b, 0, n);
        }
        case MonomialOrder::Kind::Block: {
            if (ord.blockSplit > n) throw DimensionMismatch("block split out of range");
            const Cmp head = detail::grevlexRange(a, b, 0, ord.blockSplit);
            if (head != Cmp::EQ) return head;
            return detail::grevlexRange(a, b, ord.blockSplit, n);
        }
    }
    return Cmp::EQ;  // unreachable
}

}  // namespace pinch
