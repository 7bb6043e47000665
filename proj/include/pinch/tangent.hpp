#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "pinch/errors.hpp"
#include "pinch/glue.hpp"
#include "pinch/groebner.hpp"
#include "pinch/linalg.hpp"
#include "pinch/poly.hpp"

namespace pinch {

struct TangentReport {
    int variableCount = 0;
    int jacobianRank = 0;
    int tangentDim = 0;
    std::optional<long> bound;
};

// Rank of (∂r_i/∂t_j) at the point, by exact elimination. The point must lie
// on the variety.
inline int jacobianRankAt(const std::vector<Polynomial>& relations, const Point& point) {
    if (relations.empty()) return 0;
    const RingPtr& ring = relations.front().ring();
    const FieldSpec& field = ring->field();
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(relations.size());
    for (const Polynomial& r : relations) {
        if (!sameRing(r.ring(), ring)) throw DimensionMismatch("relations live in different rings");
        if (!field.isZero(r.eval(point)))
            throw PointNotOnVariety("relation '" + str(r) + "' does not vanish at the point");
        std::vector<FieldElement> row;
        row.reserve(ring->arity());
        for (int j = 0; j < ring->arity(); ++j) row.push_back(r.derivative(j).eval(point));
        rows.push_back(std::move(row));
    }
    return matrixRank(std::move(rows), field);
}

// dim 𝔪/𝔪² at the point: variable count minus the Jacobian rank.
inline TangentReport tangentDimAt(const IdealPresentation& relations, const Point& point) {
    if (static_cast<int>(point.size()) != relations.ring->arity())
        throw DimensionMismatch("point arity mismatch");
    TangentReport report;
    report.variableCount = relations.ring->arity();
    report.jacobianRank = jacobianRankAt(relations.generators, point);
    report.tangentDim = report.variableCount - report.jacobianRank;
    return report;
}

struct SingularityBound {
    long bound = 0;     // k · dim_K B/I
    long computed = 0;  // tangent dimension of the glued presentation at the origin
    bool holds = false;
};

// Singularity lower bound for a pinch: the tangent dimension at the glued
// point is at least (smallest tangent dimension among the identified points)
// times dim_K B/I. k needs rational points to evaluate the Jacobian, except
// on affine space where every tangent space has full dimension.
inline SingularityBound singularityLowerBound(const SubalgebraPresentation& glued, const GluingProblem& problem) {
    long k = 0;
    if (problem.points) {
        k = problem.ambient.ring->arity();
        for (const Point& p : *problem.points)
            k = std::min<long>(k, tangentDimAt(problem.ambient, p).tangentDim);
    } else if (problem.ambient.generators.empty()) {
        k = problem.ambient.ring->arity();
    } else {
        throw Precondition("singularityLowerBound needs rational points to evaluate tangent spaces");
    }

    const GroebnerBasis jb = buchberger(preimageIdeal(problem));
    const StandardMonomials std_mons = standardMonomials(jb);
    if (!std_mons.finite) throw NotZeroDimensional("glued locus is not a finite point set");

    SingularityBound out;
    out.bound = k * static_cast<long>(std_mons.monomials.size());
    const Point origin(glued.newVars.size(), glued.relations.ring->field().zero());
    out.computed = tangentDimAt(glued.relations, origin).tangentDim;
    out.holds = out.computed >= out.bound;
    return out;
}

// The vanishing ideal of a union of lines K·v through the origin, one
// direction per input, via iterated intersection of the line ideals
// ⟨y_i v_j - y_j v_i⟩.
inline IdealPresentation linesUnionIdeal(const RingPtr& ring, const std::vector<Point>& directions) {
    if (directions.empty()) throw Precondition("at least one direction required");
    const FieldSpec& field = ring->field();
    std::optional<IdealPresentation> acc;
    for (const Point& v : directions) {
        if (static_cast<int>(v.size()) != ring->arity())
            throw DimensionMismatch("direction arity mismatch");
        if (std::all_of(v.begin(), v.end(), [&](const FieldElement& c) { return field.isZero(c); }))
            throw ZeroDirection("line direction must be nonzero");
        std::vector<Polynomial> minors;
        for (int i = 0; i < ring->arity(); ++i)
            for (int j = i + 1; j < ring->arity(); ++j) {
                const Polynomial m = Polynomial::variable(ring, i).scaled(v[j]) -
                                     Polynomial::variable(ring, j).scaled(v[i]);
                if (!m.isZero()) minors.push_back(m);
            }
        IdealPresentation line = makeIdeal(ring, std::move(minors));
        acc = acc ? intersectIdeals(*acc, line) : std::move(line);
    }
    return *acc;
}

}  // namespace pinch
