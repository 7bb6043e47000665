#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pinch/errors.hpp"
#include "pinch/glue.hpp"
#include "pinch/groebner.hpp"
#include "pinch/io.hpp"
#include "pinch/monoid.hpp"

namespace pinch {

struct AlgebraPresentation {
    RingPtr ring;
    IdealPresentation relations;
};

inline AlgebraPresentation makeAlgebra(RingPtr ring, std::vector<Polynomial> relations) {
    IdealPresentation rel = makeIdeal(ring, std::move(relations));
    return AlgebraPresentation{std::move(ring), std::move(rel)};
}

enum class MapShape { CanonicalQuotient, Generic };

struct AlgebraMap {
    AlgebraPresentation source;
    AlgebraPresentation target;
    std::vector<Polynomial> images;  // one per source variable, in the target ring
    MapShape shape = MapShape::Generic;
};

namespace detail {

inline bool isIdentityImages(const AlgebraMap& map) {
    if (static_cast<int>(map.images.size()) != map.source.ring->arity()) return false;
    for (int i = 0; i < map.source.ring->arity(); ++i)
        if (!(map.images[i] == Polynomial::variable(map.target.ring, i))) return false;
    return true;
}

}  // namespace detail

// Every source relation must land in the target ideal; throws IllFormedMap
// otherwise. Classifies canonical quotients (same ring, identity images).
inline AlgebraMap makeMap(AlgebraPresentation source, AlgebraPresentation target,
                          std::vector<Polynomial> images) {
    if (static_cast<int>(images.size()) != source.ring->arity())
        throw IllFormedMap("one image per source variable required");
    for (const Polynomial& img : images)
        if (!sameRing(img.ring(), target.ring)) throw IllFormedMap("image outside the target ring");

    AlgebraMap map{std::move(source), std::move(target), std::move(images), MapShape::Generic};
    const GroebnerBasis targetBasis = buchberger(map.target.relations);
    for (const Polynomial& rel : map.source.relations.generators)
        if (!member(rel.substitute(map.images), targetBasis))
            throw IllFormedMap("source relation '" + str(rel) + "' does not map into the target ideal");
    if (sameRing(map.source.ring, map.target.ring) && detail::isIdentityImages(map))
        map.shape = MapShape::CanonicalQuotient;
    return map;
}

// The diagram B --phi--> A <--psi-- C whose pullback {(b, c) : phi b = psi c}
// is under question. domainAsserted records the user's claim that the
// canonical-quotient source is a domain.
struct PullbackDiagram {
    AlgebraPresentation B;
    AlgebraPresentation C;
    AlgebraPresentation A;
    AlgebraMap phi;
    AlgebraMap psi;
    bool domainAsserted = false;
};

enum class DiagramShape { QuotientGlue, MonomialMaps, General };

struct ShapeDescriptor {
    DiagramShape shape = DiagramShape::General;
    bool swapped = false;  // psi was the canonical quotient; roles normalized
    std::string note;
};

inline PullbackDiagram makeDiagram(AlgebraPresentation B, AlgebraPresentation C,
                                   AlgebraPresentation A, AlgebraMap phi, AlgebraMap psi,
                                   bool domainAsserted = false) {
    auto sameAlgebra = [](const AlgebraPresentation& x, const AlgebraPresentation& y) {
        return sameRing(x.ring, y.ring) && idealEqual(x.relations, y.relations);
    };
    if (!sameAlgebra(phi.source, B) || !sameAlgebra(psi.source, C) ||
        !sameAlgebra(phi.target, A) || !sameAlgebra(psi.target, A))
        throw IllFormedMap("diagram maps do not match the stated corners");
    return PullbackDiagram{std::move(B), std::move(C), std::move(A), std::move(phi), std::move(psi),
                           domainAsserted};
}

namespace detail {

inline bool allSingleTermImages(const AlgebraMap& map) {
    for (const Polynomial& img : map.images)
        if (img.isZero() || img.terms().size() != 1 || img.isConstant()) return false;
    return true;
}

inline bool injectiveFromFreeSource(const AlgebraMap& map) {
    if (!map.source.relations.generators.empty()) return false;
    const IdealPresentation kernel =
        kernelOfMap(map.target.relations, map.images, map.source.ring->vars());
    return kernel.generators.empty();
}

inline PullbackDiagram normalized(const PullbackDiagram& d, const ShapeDescriptor& desc) {
    if (!desc.swapped) return d;
    return PullbackDiagram{d.C, d.B, d.A, d.psi, d.phi, d.domainAsserted};
}

}  // namespace detail

// Shape classification:
//   QuotientGlue  - one map is a canonical quotient B -> B/J, the other lands
//                   in the same quotient (the conductor situation),
//   MonomialMaps  - injective maps of polynomial rings with monomial images,
//   General       - anything else; the verdict will be Unknown.
inline ShapeDescriptor validateDiagram(const PullbackDiagram& d) {
    ShapeDescriptor desc;
    if (d.phi.shape == MapShape::CanonicalQuotient) {
        desc.shape = DiagramShape::QuotientGlue;
        return desc;
    }
    if (d.psi.shape == MapShape::CanonicalQuotient) {
        desc.shape = DiagramShape::QuotientGlue;
        desc.swapped = true;
        desc.note = "roles swapped: psi is the canonical quotient";
        return desc;
    }
    if (d.A.relations.generators.empty() && d.B.relations.generators.empty() &&
        d.C.relations.generators.empty() && detail::allSingleTermImages(d.phi) &&
        detail::allSingleTermImages(d.psi) && detail::injectiveFromFreeSource(d.phi) &&
        detail::injectiveFromFreeSource(d.psi)) {
        desc.shape = DiagramShape::MonomialMaps;
        return desc;
    }
    desc.shape = DiagramShape::General;
    return desc;
}

struct SubalgebraDescription {
    enum class Kind { LiftsPlusIdeal, WholeAlgebra, MonomialIntersection, General };
    Kind kind = Kind::General;
    std::string text;
};

// The projections of the pullback: pi_1(P) = phi^{-1}(Im phi ∩ Im psi) and
// symmetrically for pi_2. In the quotient shape the first is K[psi lifts] + J
// and the second is all of C.
inline std::pair<SubalgebraDescription, SubalgebraDescription> pullbackProjections(
    const PullbackDiagram& d) {
    const ShapeDescriptor desc = validateDiagram(d);
    const PullbackDiagram n = detail::normalized(d, desc);
    SubalgebraDescription first, second;
    switch (desc.shape) {
        case DiagramShape::QuotientGlue: {
            first.kind = SubalgebraDescription::Kind::LiftsPlusIdeal;
            std::string lifts;
            for (const Polynomial& img : n.psi.images)
                lifts += (lifts.empty() ? "" : ", ") + str(img);
            std::string jgens;
            for (const Polynomial& g : n.A.relations.generators)
                jgens += (jgens.empty() ? "" : ", ") + str(g);
            first.text = "K[" + lifts + "] + (" + jgens + ") inside B";
            second.kind = SubalgebraDescription::Kind::WholeAlgebra;
            second.text = "all of C";
            break;
        }
        case DiagramShape::MonomialMaps: {
            std::string g1, g2;
            for (const Polynomial& img : n.phi.images) g1 += (g1.empty() ? "" : ", ") + str(img);
            for (const Polynomial& img : n.psi.images) g2 += (g2.empty() ? "" : ", ") + str(img);
            first.kind = second.kind = SubalgebraDescription::Kind::MonomialIntersection;
            first.text = second.text = "K[" + g1 + "] ∩ K[" + g2 + "] (monomial subalgebras)";
            break;
        }
        case DiagramShape::General:
            first.text = "phi^{-1}(Im phi ∩ Im psi) (no normal form available)";
            second.text = "psi^{-1}(Im phi ∩ Im psi) (no normal form available)";
            break;
    }
    if (desc.swapped) std::swap(first, second);
    return {first, second};
}

struct ModuleFiniteness {
    bool finite = false;
    std::vector<std::string> profile;  // per ambient variable: witness or "none"
};

// Is A module-finite over its subalgebra generated by subalgGens? Adjoin a
// tag variable per generator, compute a basis of ⟨relations⟩ + ⟨y_r - g_r⟩
// under ambient ≫ tags, and look for a pure-power leading monomial per
// ambient variable: such powers are exactly the monic integral equations.
inline ModuleFiniteness moduleFiniteTest(const AlgebraPresentation& algebra,
                                         const std::vector<Polynomial>& subalgGens) {
    const RingPtr& ring = algebra.ring;
    for (const Polynomial& g : subalgGens)
        if (!sameRing(g.ring(), ring)) throw DimensionMismatch("generator outside the algebra ring");

    std::vector<std::string> names = ring->vars();
    for (std::size_t i = 0; i < subalgGens.size(); ++i)
        names.push_back(detail::freshName("~m" + std::to_string(i), names));
    const int split = ring->arity();
    const RingPtr wide = makeRing(names, ring->field());

    std::vector<Polynomial> gens;
    for (const Polynomial& f : algebra.relations.generators)
        gens.push_back(detail::liftTo(f, wide, 0));
    for (std::size_t i = 0; i < subalgGens.size(); ++i)
        gens.push_back(Polynomial::variable(wide, split + static_cast<int>(i)) -
                       detail::liftTo(subalgGens[i], wide, 0));

    const GroebnerBasis gb = buchberger(makeIdeal(wide, std::move(gens)), MonomialOrder::block(split));

    ModuleFiniteness out;
    out.finite = true;
    if (detail::hasConstant(gb)) {
        out.profile.assign(split > 0 ? split : 0, "unit ideal");
        return out;  // zero algebra, trivially module-finite
    }
    for (int v = 0; v < split; ++v) {
        std::string witness;
        for (const Polynomial& f : gb.basis) {
            const Monomial& lm = f.leadingTerm().mono;
            bool pure = lm.exp[v] >= 1;
            for (int i = 0; i < wide->arity() && pure; ++i)
                if (i != v && lm.exp[i] != 0) pure = false;
            if (pure) {
                witness = str(lm, *wide);
                break;
            }
        }
        if (witness.empty()) {
            out.finite = false;
            out.profile.push_back(ring->varName(v) + ": none");
        } else {
            out.profile.push_back(ring->varName(v) + ": " + witness);
        }
    }
    return out;
}

enum class FgStatus { FinitelyGenerated, NotFinitelyGenerated, Unknown };

struct Verdict {
    FgStatus status = FgStatus::Unknown;
    std::string certificate;
    std::optional<SubalgebraPresentation> presentation;
};

namespace detail {

// J as an ideal of B is zero exactly when the two relation ideals agree.
inline bool quotientIdealIsZero(const PullbackDiagram& n) {
    return idealEqual(n.A.relations, n.B.relations);
}

inline std::vector<Polynomial> nonconstantLifts(const std::vector<Polynomial>& images) {
    std::vector<Polynomial> out;
    for (const Polynomial& img : images)
        if (!img.isConstant() && std::find(out.begin(), out.end(), img) == out.end())
            out.push_back(img);
    return out;
}

inline ExponentVector exponentOf(const Polynomial& mono) {
    return mono.leadingTerm().mono.exp;
}

// Presentation for the quotient shape: psi-image lifts plus the glue
// generators of J̃, with relations from the elimination kernel.
inline SubalgebraPresentation quotientPresentation(const PullbackDiagram& n) {
    const GluingProblem problem = glueAtIdeal(n.B.relations, n.A.relations);
    std::vector<Polynomial> gens = detail::nonconstantLifts(n.psi.images);
    for (Polynomial& g : glueGenerators(problem))
        if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(std::move(g));

    SubalgebraPresentation pres;
    pres.newVars = indexedNames("x", static_cast<int>(gens.size()));
    for (const Polynomial& g : gens) pres.weights.push_back(g.totalDegree());
    pres.images = std::move(gens);
    pres.relations = kernelOfMap(n.B.relations, pres.images, pres.newVars);
    checkRelationsSound(pres, n.B.relations);
    return pres;
}

inline SubalgebraPresentation monomialPresentation(const PullbackDiagram& d,
                                                   const MonomialSubalgebra& meet) {
    SubalgebraPresentation pres;
    pres.newVars = indexedNames("x", static_cast<int>(meet.generators.size()));
    for (const ExponentVector& e : meet.generators) {
        Monomial m = Monomial::make(e);
        pres.weights.push_back(m.degree);
        pres.images.push_back(Polynomial::fromTerms(d.A.ring, MonomialOrder::grevlex(),
                                                    {Term{std::move(m), d.A.ring->field().one()}}));
    }
    pres.relations = kernelOfMap(d.A.relations, pres.images, pres.newVars);
    return pres;
}

inline MonomialSubalgebra monomialMeet(const PullbackDiagram& d) {
    const int arity = d.A.ring->arity();
    std::vector<ExponentVector> g1, g2;
    for (const Polynomial& img : d.phi.images) g1.push_back(exponentOf(img));
    for (const Polynomial& img : d.psi.images) g2.push_back(exponentOf(img));
    return intersectMonomial(makeMonomialSubalgebra(arity, std::move(g1)),
                             makeMonomialSubalgebra(arity, std::move(g2)));
}

}  // namespace detail

// Decide finite generation of the pullback.
//   QuotientGlue: with B a domain and J nonzero, the pullback is finitely
//   generated iff A = B/J is module-finite over the psi images; the
//   certificate is the pure-power profile. MonomialMaps: always finitely
//   generated (the monomial intersection is). General: Unknown.
inline Verdict pullbackVerdict(const PullbackDiagram& d) {
    const ShapeDescriptor desc = validateDiagram(d);
    Verdict verdict;
    switch (desc.shape) {
        case DiagramShape::QuotientGlue: {
            const PullbackDiagram n = detail::normalized(d, desc);
            if (detail::quotientIdealIsZero(n)) {
                verdict.status = FgStatus::Unknown;
                verdict.certificate =
                    "quotient ideal J is zero; the regular-ideal hypothesis is unavailable "
                    "(RegularityUnknown)";
                break;
            }
            const bool domain = n.B.relations.generators.empty() || n.domainAsserted;
            if (!domain) {
                verdict.status = FgStatus::Unknown;
                verdict.certificate =
                    "cannot verify that B is a domain; rerun with --assert-domain if it is "
                    "(RegularityUnknown)";
                break;
            }
            const AlgebraPresentation quotient{n.B.ring, n.A.relations};
            const ModuleFiniteness mf = moduleFiniteTest(quotient, n.psi.images);
            std::string profile;
            for (const std::string& line : mf.profile)
                profile += (profile.empty() ? "" : "; ") + line;
            if (!mf.finite) {
                verdict.status = FgStatus::NotFinitelyGenerated;
                std::string missing;
                for (const std::string& line : mf.profile)
                    if (line.ends_with(": none")) {
                        const std::string var = line.substr(0, line.size() - 6);
                        missing += (missing.empty() ? "" : "; ") + ("no pure power of " + var);
                    }
                verdict.certificate = missing + " (module-finiteness fails: " + profile + ")";
                break;
            }
            verdict.status = FgStatus::FinitelyGenerated;
            verdict.certificate = "module-finite over the lifted subalgebra: " + profile;
            const GroebnerBasis jb = buchberger(
                makeIdeal(n.B.ring, [&] {
                    std::vector<Polynomial> g = n.A.relations.generators;
                    g.insert(g.end(), n.B.relations.generators.begin(),
                             n.B.relations.generators.end());
                    return g;
                }()));
            if (zeroDim(jb) && !detail::hasConstant(jb)) {
                verdict.certificate +=
                    "; dim_K B/J = " + std::to_string(standardMonomials(jb).monomials.size());
                verdict.presentation = detail::quotientPresentation(n);
            } else {
                verdict.certificate += "; presentation not synthesized (J is not zero-dimensional)";
            }
            const IdealPresentation psiKernel =
                kernelOfMap(n.A.relations, n.psi.images, n.C.ring->vars());
            if (!idealEqual(psiKernel, n.C.relations))
                verdict.certificate +=
                    "; psi has a nonzero kernel, the presentation describes the B-side image";
            if (desc.swapped) verdict.certificate += " [" + desc.note + "]";
            break;
        }
        case DiagramShape::MonomialMaps: {
            const MonomialSubalgebra meet = detail::monomialMeet(d);
            verdict.status = FgStatus::FinitelyGenerated;
            std::string gens;
            for (const ExponentVector& e : meet.generators)
                gens += (gens.empty() ? "" : ", ") + str(Monomial::make(e), *d.A.ring);
            verdict.certificate = "monomial subalgebra intersection; generating set {" + gens +
                                  "} from the Hilbert basis (not minimized)";
            verdict.presentation = detail::monomialPresentation(d, meet);
            break;
        }
        case DiagramShape::General:
            verdict.status = FgStatus::Unknown;
            verdict.certificate =
                "general diagram: deciding finite generation reduces to an intersection of "
                "subalgebras, which is undecidable in this fragment";
            break;
    }
    return verdict;
}

// The presentation alone; UnsupportedShape when the verdict cannot emit one.
inline SubalgebraPresentation pullbackPresentation(const PullbackDiagram& d) {
    const Verdict verdict = pullbackVerdict(d);
    if (verdict.status != FgStatus::FinitelyGenerated || !verdict.presentation)
        throw UnsupportedShape("no presentation for this diagram: " + verdict.certificate);
    return *verdict.presentation;
}

}  // namespace pinch
