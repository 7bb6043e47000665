#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "pinch/monoid.hpp"

using namespace pinch;

namespace {

// Independent oracle: every nonzero solution with components <= cap.
std::vector<ExponentVector> bruteForceSolutions(const DiophantineSystem& sys, int cap) {
    const int q = static_cast<int>(sys.lhsColumns.size() + sys.rhsColumns.size());
    std::vector<ExponentVector> solutions;
    ExponentVector x(q, 0);
    auto solves = [&](const ExponentVector& v) {
        for (int i = 0; i < sys.ambient; ++i) {
            long lhs = 0, rhs = 0;
            for (std::size_t j = 0; j < sys.lhsColumns.size(); ++j)
                lhs += static_cast<long>(sys.lhsColumns[j][i]) * v[j];
            for (std::size_t j = 0; j < sys.rhsColumns.size(); ++j)
                rhs += static_cast<long>(sys.rhsColumns[j][i]) * v[sys.lhsColumns.size() + j];
            if (lhs != rhs) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == q) {
            if (std::any_of(x.begin(), x.end(), [](int e) { return e > 0; }) && solves(x))
                solutions.push_back(x);
            return;
        }
        for (int e = 0; e <= cap; ++e) {
            x[idx] = e;
            self(self, idx + 1);
        }
        x[idx] = 0;
    };
    rec(rec, 0);
    return solutions;
}

std::vector<ExponentVector> bruteForceBasis(const DiophantineSystem& sys, int cap) {
    return dicksonMin(bruteForceSolutions(sys, cap));
}

bool decomposes(const ExponentVector& v, const std::vector<ExponentVector>& basis) {
    if (std::all_of(v.begin(), v.end(), [](int e) { return e == 0; })) return true;
    for (const ExponentVector& b : basis) {
        bool fits = true;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] < b[i]) {
                fits = false;
                break;
            }
        if (!fits) continue;
        ExponentVector rest = v;
        for (std::size_t i = 0; i < v.size(); ++i) rest[i] -= b[i];
        if (decomposes(rest, basis)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("dickson minimal elements") {
    CHECK(dicksonMin({{1, 0}, {0, 1}, {1, 1}}) ==
          std::vector<ExponentVector>{{0, 1}, {1, 0}});
    CHECK(dicksonMin({{2, 0}, {0, 2}, {1, 1}}).size() == 3);
    CHECK(dicksonMin({{1, 2}, {2, 1}, {2, 2}, {3, 3}}) ==
          std::vector<ExponentVector>{{1, 2}, {2, 1}});
}

TEST_CASE("hilbert bases of small systems") {
    // x^2, x^3 against x^2: minimal solutions of 2a1 + 3a2 = 2b.
    const DiophantineSystem sys1 = makeDiophantineSystem(1, {{2}, {3}}, {{2}});
    const std::vector<ExponentVector> expected1 = {{0, 2, 3}, {1, 0, 1}};
    auto basis1 = hilbertBasis(sys1).elements;
    std::sort(basis1.begin(), basis1.end());
    CHECK(basis1 == expected1);
    CHECK(basis1 == bruteForceBasis(sys1, 6));

    // x against x^2: a = 2b forces (2, 1).
    const DiophantineSystem sys2 = makeDiophantineSystem(1, {{1}}, {{2}});
    CHECK(hilbertBasis(sys2).elements == std::vector<ExponentVector>{{2, 1}});

    // xy against x: the second coordinate forces a = 0.
    const DiophantineSystem sys3 = makeDiophantineSystem(2, {{1, 1}}, {{1, 0}});
    CHECK(hilbertBasis(sys3).elements.empty());
}

TEST_CASE("hilbert basis properties") {
    std::mt19937 rng(37);
    std::vector<DiophantineSystem> systems = {
        makeDiophantineSystem(1, {{2}, {3}}, {{2}}),
        makeDiophantineSystem(2, {{1, 1}, {2, 0}}, {{1, 0}, {0, 1}}),
        makeDiophantineSystem(2, {{2, 1}}, {{1, 2}}),
    };
    for (int trial = 0; trial < 5; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 2);
        auto column = [&]() {
            ExponentVector c(n, 0);
            while (std::all_of(c.begin(), c.end(), [](int e) { return e == 0; }))
                for (int i = 0; i < n; ++i) c[i] = static_cast<int>(rng() % 4);
            return c;
        };
        systems.push_back(makeDiophantineSystem(n, {column(), column()}, {column()}));
    }

    auto solves = [](const DiophantineSystem& sys, const ExponentVector& v) {
        for (int i = 0; i < sys.ambient; ++i) {
            long acc = 0;
            for (std::size_t j = 0; j < sys.lhsColumns.size(); ++j)
                acc += static_cast<long>(sys.lhsColumns[j][i]) * v[j];
            for (std::size_t j = 0; j < sys.rhsColumns.size(); ++j)
                acc -= static_cast<long>(sys.rhsColumns[j][i]) * v[sys.lhsColumns.size() + j];
            if (acc != 0) return false;
        }
        return true;
    };

    for (const DiophantineSystem& sys : systems) {
        const auto basis = hilbertBasis(sys).elements;
        // Pairwise incomparable and each one solves the system.
        for (std::size_t i = 0; i < basis.size(); ++i) {
            CHECK(solves(sys, basis[i]));
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (i != j) CHECK_FALSE(detail::dominates(basis[i], basis[j]));
        }
        // The basis restricted to the box matches the brute-force minimals,
        // and every bounded solution decomposes over the basis.
        std::vector<ExponentVector> bounded;
        for (const ExponentVector& b : basis)
            if (std::all_of(b.begin(), b.end(), [](int e) { return e <= 8; })) bounded.push_back(b);
        std::sort(bounded.begin(), bounded.end());
        auto oracle = bruteForceBasis(sys, 8);
        std::sort(oracle.begin(), oracle.end());
        CHECK(bounded == oracle);
        for (const ExponentVector& sol : bruteForceSolutions(sys, 8)) CHECK(decomposes(sol, basis));
        // Difference closure: u > v solutions => u - v solves too.
        const auto all = bruteForceSolutions(sys, 4);
        for (const ExponentVector& u : all)
            for (const ExponentVector& v : all) {
                if (u == v || !detail::dominates(u, v)) continue;
                ExponentVector diff = u;
                for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= v[i];
                CHECK(solves(sys, diff));
            }
    }
}

TEST_CASE("monomial subalgebra membership") {
    const MonomialSubalgebra alg = makeMonomialSubalgebra(1, {{2}, {3}});
    CHECK(subalgebraMember({5}, alg));
    CHECK_FALSE(subalgebraMember({1}, alg));
    CHECK(subalgebraMember({7}, alg));
}

TEST_CASE("monomial intersections") {
    const MonomialSubalgebra a = makeMonomialSubalgebra(1, {{2}, {3}});
    const MonomialSubalgebra b = makeMonomialSubalgebra(1, {{2}});
    CHECK(intersectMonomial(a, b).generators ==
          std::vector<ExponentVector>{{2}, {6}});  // x^6 redundant but permitted

    CHECK(intersectMonomial(makeMonomialSubalgebra(1, {{1}}), b).generators ==
          std::vector<ExponentVector>{{2}});

    const MonomialSubalgebra xy = makeMonomialSubalgebra(2, {{1, 1}});
    const MonomialSubalgebra x = makeMonomialSubalgebra(2, {{1, 0}});
    CHECK(intersectMonomial(xy, x).generators.empty());
}

TEST_CASE("intersection matches the membership oracle") {
    const MonomialSubalgebra a = makeMonomialSubalgebra(2, {{2, 0}, {1, 1}});
    const MonomialSubalgebra b = makeMonomialSubalgebra(2, {{1, 0}, {0, 2}});
    const MonomialSubalgebra meet = intersectMonomial(a, b);
    for (int dx = 0; dx <= 8; ++dx)
        for (int dy = 0; dy <= 8 - dx; ++dy) {
            if (dx + dy == 0) continue;
            const ExponentVector w = {dx, dy};
            CHECK(subalgebraMember(w, meet) == (subalgebraMember(w, a) && subalgebraMember(w, b)));
        }
}
