#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "pinch/errors.hpp"

namespace pinch {

using ExponentVector = std::vector<int>;

namespace detail {

inline bool dominates(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

inline bool isZeroVec(const ExponentVector& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

}  // namespace detail

// The ≤-minimal elements of a finite set; every input dominates some output.
inline std::vector<ExponentVector> dicksonMin(const std::vector<ExponentVector>& input) {
    std::vector<ExponentVector> sorted(input.begin(), input.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<ExponentVector> out;
    for (const ExponentVector& v : sorted) {
        bool minimal = true;
        for (const ExponentVector& w : sorted) {
            if (w != v && detail::dominates(v, w)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(v);
    }
    return out;
}

// Solutions (a, b) in N^{m+p} of U·a = V·b, where the columns of U and V are
// the exponent vectors of the two monomial generator sets.
struct DiophantineSystem {
    int ambient = 0;
    std::vector<ExponentVector> lhsColumns;  // length-`ambient` columns
    std::vector<ExponentVector> rhsColumns;
};

inline DiophantineSystem makeDiophantineSystem(int ambient, std::vector<ExponentVector> lhs,
                                               std::vector<ExponentVector> rhs) {
    auto check = [&](const std::vector<ExponentVector>& cols) {
        for (const ExponentVector& c : cols) {
            if (static_cast<int>(c.size()) != ambient)
                throw DimensionMismatch("exponent vector arity mismatch");
            for (int x : c)
                if (x < 0) throw Precondition("negative exponent in monomial generator");
            if (detail::isZeroVec(c)) throw Precondition("zero column in Diophantine system");
        }
    };
    check(lhs);
    check(rhs);
    return DiophantineSystem{ambient, std::move(lhs), std::move(rhs)};
}

struct HilbertBasis {
    std::vector<ExponentVector> elements;
};

// Contejean-Devie completion: grow candidate vectors from the unit vectors,
// branching x -> x + e_j only when <Ax, Ae_j> < 0, pruning anything that
// dominates a solution already found. The frontier is level-by-level in the
// 1-norm, so recorded solutions are exactly the minimal nonzero ones.
inline HilbertBasis hilbertBasis(const DiophantineSystem& sys) {
    const int m = static_cast<int>(sys.lhsColumns.size());
    const int p = static_cast<int>(sys.rhsColumns.size());
    const int q = m + p;
    const int n = sys.ambient;

    // Column j of A is the j-th lhs column, or minus the (j-m)-th rhs column.
    std::vector<std::vector<long long>> colA(q, std::vector<long long>(n));
    for (int j = 0; j < q; ++j)
        for (int i = 0; i < n; ++i)
            colA[j][i] = j < m ? sys.lhsColumns[j][i] : -sys.rhsColumns[j - m][i];

    auto image = [&](const ExponentVector& x) {
        std::vector<long long> out(n, 0);
        for (int j = 0; j < q; ++j)
            if (x[j] != 0)
                for (int i = 0; i < n; ++i) out[i] += colA[j][i] * x[j];
        return out;
    };

    std::vector<ExponentVector> basis;
    auto dominatesBasis = [&](const ExponentVector& x) {
        for (const ExponentVector& b : basis)
            if (detail::dominates(x, b)) return true;
        return false;
    };

    std::set<ExponentVector> frontier;
    for (int j = 0; j < q; ++j) {
        ExponentVector e(q, 0);
        e[j] = 1;
        frontier.insert(std::move(e));
    }

    while (!frontier.empty()) {
        std::set<ExponentVector> next;
        for (const ExponentVector& x : frontier) {
            if (dominatesBasis(x)) continue;
            const auto ax = image(x);
            if (std::all_of(ax.begin(), ax.end(), [](long long v) { return v == 0; })) {
                basis.push_back(x);
                continue;
            }
            for (int j = 0; j < q; ++j) {
                long long dot = 0;
                for (int i = 0; i < n; ++i) dot += ax[i] * colA[j][i];
                if (dot >= 0) continue;
                ExponentVector y = x;
                y[j] += 1;
                if (!dominatesBasis(y)) next.insert(std::move(y));
            }
        }
        frontier = std::move(next);
    }
    return HilbertBasis{dicksonMin(basis)};
}

// A subalgebra of the polynomial ring generated by monomials, recorded by
// their exponent vectors (the constant monomial is implicit).
struct MonomialSubalgebra {
    int ambient = 0;
    std::vector<ExponentVector> generators;  // nonzero
};

inline MonomialSubalgebra makeMonomialSubalgebra(int ambient, std::vector<ExponentVector> gens) {
    for (const ExponentVector& g : gens) {
        if (static_cast<int>(g.size()) != ambient)
            throw DimensionMismatch("generator arity mismatch");
        for (int x : g)
            if (x < 0) throw Precondition("negative exponent in monomial generator");
        if (detail::isZeroVec(g)) throw Precondition("zero monomial generator");
    }
    return MonomialSubalgebra{ambient, std::move(gens)};
}

// Whether w is an N-combination of the generators; bounded search (the
// coefficient sum can never exceed |w|_1).
inline bool subalgebraMember(const ExponentVector& w, const MonomialSubalgebra& alg) {
    if (static_cast<int>(w.size()) != alg.ambient)
        throw DimensionMismatch("membership query arity mismatch");
    std::map<ExponentVector, bool> memo;
    auto rec = [&](auto&& self, const ExponentVector& v) -> bool {
        if (detail::isZeroVec(v)) return true;
        auto it = memo.find(v);
        if (it != memo.end()) return it->second;
        bool ok = false;
        for (const ExponentVector& g : alg.generators) {
            if (!detail::dominates(v, g)) continue;
            ExponentVector rest = v;
            for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= g[i];
            if (self(self, rest)) {
                ok = true;
                break;
            }
        }
        memo[v] = ok;
        return ok;
    };
    return rec(rec, w);
}

// Generators of S1 ∩ S2 read off the Hilbert basis of U·a = V·b: each basis
// element (a, b) contributes the common monomial U·a. The output generates
// the intersection but is not minimalized.
inline MonomialSubalgebra intersectMonomial(const MonomialSubalgebra& lhs,
                                            const MonomialSubalgebra& rhs) {
    if (lhs.ambient != rhs.ambient) throw DimensionMismatch("intersecting different ambient rings");
    const int m = static_cast<int>(lhs.generators.size());
    if (lhs.generators.empty() || rhs.generators.empty())
        return MonomialSubalgebra{lhs.ambient, {}};
    const HilbertBasis hb =
        hilbertBasis(makeDiophantineSystem(lhs.ambient, lhs.generators, rhs.generators));
    std::set<ExponentVector> gens;
    for (const ExponentVector& sol : hb.elements) {
        ExponentVector mono(lhs.ambient, 0);
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < lhs.ambient; ++i) mono[i] += lhs.generators[j][i] * sol[j];
        gens.insert(std::move(mono));
    }
    std::vector<ExponentVector> sorted(gens.begin(), gens.end());
    std::sort(sorted.begin(), sorted.end(), [](const ExponentVector& a, const ExponentVector& b) {
        const int da = std::accumulate(a.begin(), a.end(), 0);
        const int db = std::accumulate(b.begin(), b.end(), 0);
        return da != db ? da < db : a < b;
    });
    return MonomialSubalgebra{lhs.ambient, std::move(sorted)};
}

}  // namespace pinch
