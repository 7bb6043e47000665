#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pinch/errors.hpp"
#include "pinch/poly.hpp"

namespace pinch {

struct IdealPresentation {
    RingPtr ring;
    std::vector<Polynomial> generators;
};

// Zero generators are dropped; spelled-out generators keep their order.
inline IdealPresentation makeIdeal(RingPtr ring, std::vector<Polynomial> gens) {
    std::vector<Polynomial> kept;
    kept.reserve(gens.size());
    for (Polynomial& g : gens) {
        if (g.isZero()) continue;
        if (!sameRing(g.ring(), ring)) throw DimensionMismatch("generator outside the stated ring");
        kept.push_back(std::move(g));
    }
    return IdealPresentation{std::move(ring), std::move(kept)};
}

struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Polynomial> basis;  // monic, autoreduced, descending leading monomials
    bool reduced = false;
};

namespace detail {

inline Polynomial sPolynomial(const Polynomial& f, const Polynomial& g) {
    const Monomial lcm = Monomial::lcm(f.leadingTerm().mono, g.leadingTerm().mono);
    const FieldSpec& field = f.ring()->field();
    // Both inputs are monic here.
    Term tf{lcm.dividedBy(f.leadingTerm().mono), field.one()};
    Term tg{lcm.dividedBy(g.leadingTerm().mono), field.one()};
    return f.timesTerm(tf) - g.timesTerm(tg);
}

inline Polynomial reduceFully(Polynomial p, const std::vector<Polynomial>& basis,
                              const MonomialOrder& ord) {
    p = p.withOrder(ord);
    const FieldSpec& field = p.ring()->field();
    std::vector<Term> remainder;
    while (!p.isZero()) {
        const Term lead = p.leadingTerm();
        const Polynomial* reducer = nullptr;
        for (const Polynomial& g : basis) {
            if (!g.isZero() && g.leadingTerm().mono.divides(lead.mono)) {
                reducer = &g;
                break;
            }
        }
        if (reducer) {
            Term quot{lead.mono.dividedBy(reducer->leadingTerm().mono),
                      field.divide(lead.coeff, reducer->leadingTerm().coeff)};
            p = p - reducer->timesTerm(quot);
        } else {
            remainder.push_back(lead);
            p = p - Polynomial::fromTerms(p.ring(), ord, {lead});
        }
    }
    return Polynomial::fromTerms(p.ring(), ord, std::move(remainder));
}

}  // namespace detail

// Remainder of division by the basis: no term of the result is divisible by
// any leading monomial; f - result lies in the generated ideal. Unique when
// the basis is reduced.
inline Polynomial normalForm(const Polynomial& f, const GroebnerBasis& gb) {
    if (!sameRing(f.ring(), gb.ring)) throw DimensionMismatch("normal form outside the basis ring");
    return detail::reduceFully(f, gb.basis, gb.order);
}

// Buchberger with the coprimality and chain criteria for S-pair pruning and
// normal pair selection (lowest lcm degree first). The returned basis is the
// unique reduced one; with a fixed ring, order, and generator sequence the
// output is reproducible element for element.
inline GroebnerBasis buchberger(const IdealPresentation& ideal, MonomialOrder ord = MonomialOrder::grevlex()) {
    const RingPtr& ring = ideal.ring;
    std::vector<Polynomial> basis;
    for (const Polynomial& g : ideal.generators) {
        Polynomial h = g.withOrder(ord);
        if (!h.isZero()) basis.push_back(h.monic());
    }

    std::set<std::pair<int, int>> pending;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(basis.size()); ++j) pending.insert({i, j});

    auto lcmDegree = [&](const std::pair<int, int>& p) {
        return Monomial::lcm(basis[p.first].leadingTerm().mono, basis[p.second].leadingTerm().mono)
            .degree;
    };

    while (!pending.empty()) {
        auto best = pending.begin();
        int bestDeg = lcmDegree(*best);
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            const int d = lcmDegree(*it);
            if (d < bestDeg) {
                best = it;
                bestDeg = d;
            }
        }
        const auto [i, j] = *best;
        pending.erase(best);

        const Monomial& lmi = basis[i].leadingTerm().mono;
        const Monomial& lmj = basis[j].leadingTerm().mono;
        const Monomial lcm = Monomial::lcm(lmi, lmj);
        if (lcm.degree == lmi.degree + lmj.degree) continue;  // coprime leading monomials

        bool chained = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!basis[k].leadingTerm().mono.divides(lcm)) continue;
            const auto ik = std::minmax(i, k);
            const auto jk = std::minmax(j, k);
            if (!pending.count({ik.first, ik.second}) && !pending.count({jk.first, jk.second}))
                chained = true;
        }
        if (chained) continue;

        Polynomial r = detail::reduceFully(detail::sPolynomial(basis[i], basis[j]), basis, ord);
        if (r.isZero()) continue;
        basis.push_back(r.monic());
        const int idx = static_cast<int>(basis.size()) - 1;
        for (int t = 0; t < idx; ++t) pending.insert({t, idx});
    }

    // Minimalize: drop elements whose leading monomial another one divides.
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            const Monomial& lmi = basis[i].leadingTerm().mono;
            const Monomial& lmj = basis[j].leadingTerm().mono;
            if (lmj.divides(lmi) && (!(lmj == lmi) || j < i)) keep[i] = false;
        }
    }
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(basis[i]);

    // Autoreduce tails against the rest.
    std::vector<Polynomial> reduced = minimal;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = detail::reduceFully(reduced[i], others, ord).monic();
    }
    std::erase_if(reduced, [](const Polynomial& p) { return p.isZero(); });
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return compareMonomials(a.leadingTerm().mono, b.leadingTerm().mono, ord) == Cmp::GT;
    });
    return GroebnerBasis{ring, std::move(ord), std::move(reduced), true};
}

inline bool member(const Polynomial& f, const GroebnerBasis& gb) {
    return normalForm(f, gb).isZero();
}

inline bool member(const Polynomial& f, const IdealPresentation& ideal) {
    if (!sameRing(f.ring(), ideal.ring)) throw DimensionMismatch("membership outside the ideal ring");
    return member(f, buchberger(ideal));
}

inline bool idealEqual(const IdealPresentation& lhs, const IdealPresentation& rhs) {
    if (!sameRing(lhs.ring, rhs.ring)) throw DimensionMismatch("comparing ideals of different rings");
    const GroebnerBasis gl = buchberger(lhs);
    const GroebnerBasis gr = buchberger(rhs);
    for (const Polynomial& g : rhs.generators)
        if (!member(g, gl)) return false;
    for (const Polynomial& g : lhs.generators)
        if (!member(g, gr)) return false;
    return true;
}

namespace detail {

// Pads exponent vectors into a wider ring whose first `offset` variables are
// fresh; existing variables land at position offset + i.
inline Polynomial liftTo(const Polynomial& f, const RingPtr& wide, int offset) {
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        Monomial m = Monomial::one(wide->arity());
        for (int i = 0; i < t.mono.arity(); ++i) m.exp[offset + i] = t.mono.exp[i];
        m.degree = t.mono.degree;
        terms.push_back(Term{std::move(m), t.coeff});
    }
    return Polynomial::fromTerms(wide, MonomialOrder::grevlex(), std::move(terms));
}

// Keeps the coordinates [from, from + arity) of each monomial.
inline Polynomial projectTo(const Polynomial& f, const RingPtr& narrow, int from) {
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        Monomial m = Monomial::one(narrow->arity());
        for (int i = 0; i < narrow->arity(); ++i) m.exp[i] = t.mono.exp[from + i];
        m.degree = t.mono.degree;
        terms.push_back(Term{std::move(m), t.coeff});
    }
    return Polynomial::fromTerms(narrow, MonomialOrder::grevlex(), std::move(terms));
}

inline bool usesBlock(const Polynomial& f, int split) {
    for (const Term& t : f.terms())
        for (int i = 0; i < split; ++i)
            if (t.mono.exp[i] > 0) return true;
    return false;
}

inline std::string freshName(std::string base, const std::vector<std::string>& taken) {
    while (std::find(taken.begin(), taken.end(), base) != taken.end()) base = "~" + base;
    return base;
}

}  // namespace detail

// Generators of I ∩ J via the auxiliary variable: t·I + (1-t)·J with t
// eliminated under a block order.
inline IdealPresentation intersectIdeals(const IdealPresentation& lhs, const IdealPresentation& rhs) {
    if (!sameRing(lhs.ring, rhs.ring)) throw DimensionMismatch("intersecting ideals of different rings");
    const RingPtr& ring = lhs.ring;

    std::vector<std::string> names;
    names.push_back(detail::freshName("~t", ring->vars()));
    names.insert(names.end(), ring->vars().begin(), ring->vars().end());
    const RingPtr wide = makeRing(names, ring->field());

    const Polynomial t = Polynomial::variable(wide, 0);
    const Polynomial oneMinusT =
        Polynomial::constant(wide, wide->field().one()) - t;
    std::vector<Polynomial> gens;
    for (const Polynomial& f : lhs.generators) gens.push_back(t * detail::liftTo(f, wide, 1));
    for (const Polynomial& g : rhs.generators) gens.push_back(oneMinusT * detail::liftTo(g, wide, 1));

    const GroebnerBasis gb = buchberger(makeIdeal(wide, std::move(gens)), MonomialOrder::block(1));
    std::vector<Polynomial> out;
    for (const Polynomial& f : gb.basis)
        if (!detail::usesBlock(f, 1)) out.push_back(detail::projectTo(f, ring, 1));
    return IdealPresentation{ring, std::move(out)};
}

// Kernel of K[newVars] -> K[ambient vars]/⟨ambientRelations⟩, x_i ↦ image_i:
// eliminate the ambient block from ⟨ambientRelations⟩ + ⟨x_i - image_i⟩.
inline IdealPresentation kernelOfMap(const IdealPresentation& ambient,
                                     const std::vector<Polynomial>& images,
                                     const std::vector<std::string>& newVars) {
    if (images.size() != newVars.size()) throw DimensionMismatch("one image per new variable required");
    const RingPtr& ring = ambient.ring;
    for (const Polynomial& img : images)
        if (!sameRing(img.ring(), ring)) throw DimensionMismatch("image outside the ambient ring");

    std::vector<std::string> names;
    for (const std::string& v : ring->vars()) names.push_back(detail::freshName(v, newVars));
    const int split = static_cast<int>(names.size());
    names.insert(names.end(), newVars.begin(), newVars.end());
    const RingPtr wide = makeRing(names, ring->field());

    std::vector<Polynomial> gens;
    for (const Polynomial& f : ambient.generators) gens.push_back(detail::liftTo(f, wide, 0));
    for (std::size_t i = 0; i < images.size(); ++i)
        gens.push_back(Polynomial::variable(wide, split + static_cast<int>(i)) -
                       detail::liftTo(images[i], wide, 0));

    const GroebnerBasis gb = buchberger(makeIdeal(wide, std::move(gens)), MonomialOrder::block(split));
    const RingPtr out = makeRing(newVars, ring->field());
    std::vector<Polynomial> kept;
    for (const Polynomial& f : gb.basis)
        if (!detail::usesBlock(f, split)) kept.push_back(detail::projectTo(f, out, split));
    return IdealPresentation{out, std::move(kept)};
}

struct StandardMonomials {
    bool finite = false;
    std::vector<Monomial> monomials;   // populated only in the finite case
    std::vector<bool> purePower;       // per variable: has a pure-power leading monomial
};

namespace detail {

inline bool hasConstant(const GroebnerBasis& gb) {
    for (const Polynomial& f : gb.basis)
        if (f.leadingTerm().mono.isOne()) return true;
    return false;
}

inline std::vector<bool> purePowerProfile(const GroebnerBasis& gb) {
    const int n = gb.ring->arity();
    std::vector<bool> profile(n, false);
    for (const Polynomial& f : gb.basis) {
        const Monomial& lm = f.leadingTerm().mono;
        int nonzero = -1;
        bool pure = true;
        for (int i = 0; i < n; ++i) {
            if (lm.exp[i] == 0) continue;
            if (nonzero >= 0) {
                pure = false;
                break;
            }
            nonzero = i;
        }
        if (pure && nonzero >= 0) profile[nonzero] = true;
    }
    return profile;
}

inline bool isStandard(const Monomial& m, const GroebnerBasis& gb) {
    for (const Polynomial& f : gb.basis)
        if (f.leadingTerm().mono.divides(m)) return false;
    return true;
}

}  // namespace detail

// True iff every variable carries a pure-power leading monomial (or the
// ideal is the unit ideal), i.e. the quotient is finite dimensional over K.
inline bool zeroDim(const GroebnerBasis& gb) {
    if (!gb.reduced) throw Precondition("zeroDim requires a reduced basis");
    if (detail::hasConstant(gb)) return true;
    const auto profile = detail::purePowerProfile(gb);
    return std::all_of(profile.begin(), profile.end(), [](bool b) { return b; });
}

// All monomials outside the leading-term ideal: a finite list when the ideal
// is zero-dimensional, otherwise just the per-variable pure-power profile.
inline StandardMonomials standardMonomials(const GroebnerBasis& gb) {
    if (!gb.reduced) throw Precondition("standardMonomials requires a reduced basis");
    const int n = gb.ring->arity();
    StandardMonomials out;
    out.purePower = detail::purePowerProfile(gb);
    if (detail::hasConstant(gb)) {
        out.finite = true;
        out.purePower.assign(n, true);
        return out;  // unit ideal: empty quotient
    }
    if (!std::all_of(out.purePower.begin(), out.purePower.end(), [](bool b) { return b; }))
        return out;  // infinite: profile only

    out.finite = true;
    // Divisors of standard monomials are standard, so expanding only the
    // standard frontier enumerates all of them.
    std::set<Monomial> seen;
    std::vector<Monomial> queue{Monomial::one(n)};
    seen.insert(queue[0]);
    while (!queue.empty()) {
        Monomial m = queue.back();
        queue.pop_back();
        if (!detail::isStandard(m, gb)) continue;
        out.monomials.push_back(m);
        for (int i = 0; i < n; ++i) {
            Monomial next = m;
            next.exp[i] += 1;
            next.degree += 1;
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    std::sort(out.monomials.begin(), out.monomials.end(), [](const Monomial& a, const Monomial& b) {
        return compareMonomials(a, b, MonomialOrder::grevlex()) == Cmp::LT;
    });
    return out;
}

// Standard monomials of total degree <= bound; well-defined for any ideal.
inline std::vector<Monomial> standardMonomialsUpTo(const GroebnerBasis& gb, int bound) {
    const int n = gb.ring->arity();
    std::vector<Monomial> out;
    if (detail::hasConstant(gb)) return out;
    Monomial m = Monomial::one(n);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == n) {
            if (detail::isStandard(m, gb)) out.push_back(m);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            m.exp[var] = e;
            m.degree += e;
            self(self, var + 1, remaining - e);
            m.degree -= e;
            m.exp[var] = 0;
        }
    };
    rec(rec, 0, bound);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return compareMonomials(a, b, MonomialOrder::grevlex()) == Cmp::LT;
    });
    return out;
}

}  // namespace pinch
