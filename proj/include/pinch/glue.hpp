#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pinch/errors.hpp"
#include "pinch/groebner.hpp"
#include "pinch/io.hpp"
#include "pinch/linalg.hpp"
#include "pinch/poly.hpp"
#include "pinch/univariate.hpp"

namespace pinch {

using Point = std::vector<FieldElement>;

// Gluing data: the ambient variety X as I(X) (possibly the zero ideal) plus
// the locus to pinch, either a list of rational points on X or an ideal
// containing I(X).
struct GluingProblem {
    IdealPresentation ambient;
    std::optional<std::vector<Point>> points;
    std::optional<IdealPresentation> idealJ;
};

inline GluingProblem glueAtPoints(IdealPresentation ambient, std::vector<Point> pts) {
    return GluingProblem{std::move(ambient), std::move(pts), std::nullopt};
}

inline GluingProblem glueAtIdeal(IdealPresentation ambient, IdealPresentation idealJ) {
    if (!sameRing(ambient.ring, idealJ.ring))
        throw DimensionMismatch("gluing ideal outside the ambient ring");
    return GluingProblem{std::move(ambient), std::nullopt, std::move(idealJ)};
}

// A finitely presented subalgebra: new variables with their ambient degrees,
// their images in the ambient ring, and the relation ideal over the new
// variables. Every relation maps into ⟨ambient relations⟩ under x_i ↦ image_i.
struct SubalgebraPresentation {
    std::vector<std::string> newVars;
    std::vector<long> weights;
    std::vector<Polynomial> images;
    IdealPresentation relations;
};

// ⋂_i (⟨t_j - p_ij⟩ + I(X)): the vanishing ideal of the listed points on X.
inline IdealPresentation pointsIdeal(const GluingProblem& problem) {
    if (!problem.points || problem.points->empty())
        throw Precondition("pointsIdeal requires at least one point");
    const RingPtr& ring = problem.ambient.ring;
    const FieldSpec& field = ring->field();

    const auto& pts = *problem.points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (static_cast<int>(pts[i].size()) != ring->arity())
            throw DimensionMismatch("point arity mismatch");
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) throw DuplicatePoint("point list contains a repeated point");
        for (const Polynomial& f : problem.ambient.generators)
            if (!field.isZero(f.eval(pts[i])))
                throw PointOffVariety("point does not satisfy the ambient relations");
    }

    std::optional<IdealPresentation> acc;
    for (const Point& p : pts) {
        std::vector<Polynomial> gens = problem.ambient.generators;
        for (int j = 0; j < ring->arity(); ++j)
            gens.push_back(Polynomial::variable(ring, j) -
                           Polynomial::constant(ring, p[j]));
        IdealPresentation maximal = makeIdeal(ring, std::move(gens));
        acc = acc ? intersectIdeals(*acc, maximal) : std::move(maximal);
    }
    return *acc;
}

// The preimage ideal J̃ in the full polynomial ring: the point ideal, or the
// union of the supplied ideal's generators with the ambient relations.
inline IdealPresentation preimageIdeal(const GluingProblem& problem) {
    if (problem.points) return pointsIdeal(problem);
    if (!problem.idealJ) throw Precondition("gluing problem has no target");
    std::vector<Polynomial> gens = problem.idealJ->generators;
    gens.insert(gens.end(), problem.ambient.generators.begin(), problem.ambient.generators.end());
    return makeIdeal(problem.ambient.ring, std::move(gens));
}

// f ∈ K + ⟨J⟩ iff its normal form against J's basis is a constant.
inline bool kplusjMember(const Polynomial& f, const GroebnerBasis& jBasis) {
    return normalForm(f, jBasis).isConstant();
}

namespace detail {

inline GroebnerBasis zeroDimBasisOrThrow(const IdealPresentation& preimage) {
    const GroebnerBasis gb = buchberger(preimage);
    if (hasConstant(gb))
        throw NotZeroDimensional("unit ideal: the glued locus is empty");
    if (!zeroDim(gb)) {
        std::string missing;
        const auto profile = purePowerProfile(gb);
        for (int i = 0; i < gb.ring->arity(); ++i)
            if (!profile[i]) missing += (missing.empty() ? "" : ", ") + gb.ring->varName(i);
        throw NotZeroDimensional("glued locus is not a finite point set (no pure power of " +
                                 missing + ")");
    }
    return gb;
}

}  // namespace detail

// Algebra generators of K + J̃: all products b_k · h_j of the standard
// monomials of J̃ with its reduced degree-compatible basis, normalized
// against the ambient relations. Degree induction over the basis division
// makes these generate; spanDimCheck cross-checks that claim at runtime.
inline std::vector<Polynomial> glueGenerators(const GluingProblem& problem) {
    const IdealPresentation preimage = preimageIdeal(problem);
    const GroebnerBasis jb = detail::zeroDimBasisOrThrow(preimage);
    const GroebnerBasis ambientBasis = buchberger(problem.ambient);

    const StandardMonomials std_mons = standardMonomials(jb);
    std::vector<Polynomial> out;
    for (const Monomial& b : std_mons.monomials) {
        const Polynomial bp = Polynomial::fromTerms(
            preimage.ring, MonomialOrder::grevlex(), {Term{b, preimage.ring->field().one()}});
        for (const Polynomial& h : jb.basis) {
            Polynomial prod = normalForm(bp * h, ambientBasis);
            if (prod.isZero()) continue;
            if (std::find(out.begin(), out.end(), prod) == out.end()) out.push_back(std::move(prod));
        }
    }
    return out;
}

namespace detail {

inline std::vector<std::string> indexedNames(const std::string& stem, int count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (int i = 0; i < count; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

inline void checkRelationsSound(const SubalgebraPresentation& pres,
                                const IdealPresentation& ambient) {
    const GroebnerBasis ab = buchberger(ambient);
    for (const Polynomial& r : pres.relations.generators)
        if (!member(r.substitute(pres.images), ab))
            throw std::logic_error("relation does not vanish on the images");
}

}  // namespace detail

// The pushout coordinate ring K + J̃ ≅ K[x0..x_{r-1}] / ker(x_i ↦ g_i).
inline SubalgebraPresentation gluePresentation(const GluingProblem& problem) {
    std::vector<Polynomial> gens = glueGenerators(problem);
    SubalgebraPresentation pres;
    pres.newVars = detail::indexedNames("x", static_cast<int>(gens.size()));
    for (const Polynomial& g : gens) pres.weights.push_back(g.totalDegree());
    pres.images = std::move(gens);
    pres.relations = kernelOfMap(problem.ambient, pres.images, pres.newVars);
    detail::checkRelationsSound(pres, problem.ambient);
    return pres;
}

// Fast path for pinching the vanishing set of a monic squarefree phi0 on the
// affine line: generators phi_i = x^i phi0, and two closed-form relation
// templates.
//   type 1:  x_i x_j - x_k x_l           for i + j = k + l
//   type 2:  x_0^2 x_s - sum_l b_l x_p x_q   for s <= n-2, p + q = n + s - l,
//            p = min(n-1, n+s-l), with b_l the coefficient of x^{n-l} in phi0.
// Substituting x_i ↦ phi_i kills both templates identically.
inline SubalgebraPresentation a1Glue(const Polynomial& phi0) {
    requireUnivariate(phi0);
    if (phi0.isZero() || !isMonic(phi0)) throw NotMonic("phi0 must be monic");
    if (!isSquarefree(phi0)) throw NotSquarefree("phi0 must have distinct roots");
    const int n = phi0.totalDegree();
    if (n < 1) throw Precondition("phi0 must be nonconstant");
    const RingPtr& line = phi0.ring();
    const FieldSpec& field = line->field();

    SubalgebraPresentation pres;
    pres.newVars = detail::indexedNames("x", n);
    const RingPtr glued = makeRing(pres.newVars, field);

    const Polynomial x = Polynomial::variable(line, 0);
    Polynomial phi = phi0;
    for (int i = 0; i < n; ++i) {
        pres.images.push_back(phi);
        pres.weights.push_back(n + i);
        phi = phi * x;
    }

    // b[l] = coefficient of x^{n-l} in phi0 (so b[0] = 1).
    std::vector<FieldElement> b(n + 1, field.zero());
    for (const Term& t : phi0.terms()) b[n - t.mono.exp[0]] = t.coeff;

    auto var2 = [&](int i, int j) {
        Monomial m = Monomial::one(n);
        m.exp[i] += 1;
        m.exp[j] += 1;
        m.degree = 2;
        return m;
    };

    std::vector<Polynomial> relations;
    for (int s = 0; s <= 2 * (n - 1); ++s) {
        const int i0 = std::max(0, s - (n - 1));
        const int j0 = s - i0;
        for (int i = i0 + 1; i <= s - i; ++i) {
            const int j = s - i;
            std::vector<Term> terms{Term{var2(i, j), field.one()},
                                    Term{var2(i0, j0), field.neg(field.one())}};
            relations.push_back(Polynomial::fromTerms(glued, MonomialOrder::grevlex(), std::move(terms)));
        }
    }
    for (int s = 0; s <= n - 2; ++s) {
        std::vector<Term> terms;
        Monomial cubic = Monomial::one(n);
        cubic.exp[0] += 2;
        cubic.exp[s] += 1;
        cubic.degree = 3;
        terms.push_back(Term{std::move(cubic), field.one()});
        for (int l = 0; l <= n; ++l) {
            if (field.isZero(b[l])) continue;
            const int p = std::min(n - 1, n + s - l);
            const int q = n + s - l - p;
            terms.push_back(Term{var2(p, q), field.neg(b[l])});
        }
        relations.push_back(Polynomial::fromTerms(glued, MonomialOrder::grevlex(), std::move(terms)));
    }
    pres.relations = makeIdeal(glued, std::move(relations));

    for (const Polynomial& r : pres.relations.generators)
        if (!r.substitute(pres.images).isZero())
            throw std::logic_error("template relation does not vanish");
    return pres;
}

struct SpanDims {
    long wordSpanDim = 0;
    long closedFormDim = 0;
};

// Completeness certificate for a generator set of K + J̃: the dimension of
// the span of all generator words of ambient degree <= d must equal
//   1 + #std-monomials(I(X)) up to d - #std-monomials(J̃) up to d.
inline SpanDims spanDimCheck(const GluingProblem& problem, const std::vector<Polynomial>& gens,
                             int degreeBound) {
    const GroebnerBasis ambientBasis = buchberger(problem.ambient);
    const GroebnerBasis jb = buchberger(preimageIdeal(problem));
    const FieldSpec& field = problem.ambient.ring->field();

    SpanDims out;
    out.closedFormDim = 1 +
                        static_cast<long>(standardMonomialsUpTo(ambientBasis, degreeBound).size()) -
                        static_cast<long>(standardMonomialsUpTo(jb, degreeBound).size());

    // Words: products of generators with the degree of a word measured as the
    // sum of its factors' ambient degrees, reduced mod I(X) as they grow.
    std::vector<Polynomial> words;
    auto expand = [&](auto&& self, const Polynomial& word, int degree, std::size_t start) -> void {
        words.push_back(word);
        for (std::size_t i = start; i < gens.size(); ++i) {
            if (gens[i].totalDegree() < 1) continue;  // constants span nothing new
            const int next = degree + gens[i].totalDegree();
            if (next > degreeBound) continue;
            self(self, normalForm(word * gens[i], ambientBasis), next, i);
        }
    };
    expand(expand, Polynomial::constant(problem.ambient.ring, field.one()), 0, 0);

    std::set<Monomial> support;
    for (const Polynomial& w : words)
        for (const Term& t : w.terms()) support.insert(t.mono);
    std::vector<Monomial> columns(support.begin(), support.end());
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(words.size());
    for (const Polynomial& w : words) {
        std::vector<FieldElement> row(columns.size(), field.zero());
        for (const Term& t : w.terms()) {
            const auto it = std::lower_bound(columns.begin(), columns.end(), t.mono);
            row[it - columns.begin()] = t.coeff;
        }
        rows.push_back(std::move(row));
    }
    out.wordSpanDim = matrixRank(std::move(rows), field);
    return out;
}

}  // namespace pinch
