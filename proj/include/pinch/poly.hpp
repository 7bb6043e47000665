#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pinch/errors.hpp"
#include "pinch/field.hpp"
#include "pinch/monomial.hpp"

namespace pinch {

// A polynomial ring: named variables over a coefficient field. Rings are
// immutable and shared; equality is by value so that structurally identical
// rings built in different places are interchangeable.
class Ring {
public:
    Ring(std::vector<std::string> vars, FieldSpec field)
        : vars_(std::move(vars)), field_(std::move(field)) {
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i].empty()) throw Precondition("empty variable name");
            if (field_.isExtension() && vars_[i] == "s")
                throw Precondition("variable name 's' collides with the extension generator");
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j]) throw Precondition("duplicate variable name " + vars_[i]);
        }
    }

    int arity() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& varName(int i) const { return vars_[i]; }
    const FieldSpec& field() const { return field_; }

    std::optional<int> varIndex(const std::string& name) const {
        for (int i = 0; i < arity(); ++i)
            if (vars_[i] == name) return i;
        return std::nullopt;
    }

    bool operator==(const Ring& other) const {
        return vars_ == other.vars_ && field_ == other.field_;
    }

private:
    std::vector<std::string> vars_;
    FieldSpec field_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr makeRing(std::vector<std::string> vars, FieldSpec field) {
    return std::make_shared<const Ring>(std::move(vars), std::move(field));
}

inline bool sameRing(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

struct Term {
    Monomial mono;
    FieldElement coeff;
};

// Sparse polynomial in canonical form: nonzero coefficients only, terms
// strictly descending under the attached monomial order. The canonical form
// is unique per (ring, order); printing always re-sorts to grevlex.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero(RingPtr ring, MonomialOrder ord = MonomialOrder::grevlex()) {
        Polynomial p;
        p.ring_ = std::move(ring);
        p.order_ = std::move(ord);
        return p;
    }

    static Polynomial constant(RingPtr ring, FieldElement c,
                               MonomialOrder ord = MonomialOrder::grevlex()) {
        std::vector<Term> t;
        t.push_back(Term{Monomial::one(ring->arity()), std::move(c)});
        return fromTerms(std::move(ring), std::move(ord), std::move(t));
    }

    static Polynomial variable(RingPtr ring, int index,
                               MonomialOrder ord = MonomialOrder::grevlex()) {
        if (index < 0 || index >= ring->arity()) throw DimensionMismatch("variable index out of range");
        Monomial m = Monomial::one(ring->arity());
        m.exp[index] = 1;
        m.degree = 1;
        std::vector<Term> t;
        t.push_back(Term{std::move(m), ring->field().one()});
        return fromTerms(std::move(ring), std::move(ord), std::move(t));
    }

    // The only construction path: sorts, merges equal monomials, drops zeros.
    static Polynomial fromTerms(RingPtr ring, MonomialOrder ord, std::vector<Term> terms) {
        const FieldSpec& field = ring->field();
        for (const Term& t : terms)
            if (t.mono.arity() != ring->arity())
                throw DimensionMismatch("term arity does not match ring");
        std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
            return compareMonomials(a.mono, b.mono, ord) == Cmp::GT;
        });
        std::vector<Term> merged;
        merged.reserve(terms.size());
        for (Term& t : terms) {
            if (!merged.empty() && merged.back().mono == t.mono) {
                merged.back().coeff = field.add(merged.back().coeff, t.coeff);
            } else {
                merged.push_back(std::move(t));
            }
        }
        std::erase_if(merged, [&](const Term& t) { return field.isZero(t.coeff); });
        Polynomial p;
        p.ring_ = std::move(ring);
        p.order_ = std::move(ord);
        p.terms_ = std::move(merged);
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    bool isConstant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.isOne());
    }

    const Term& leadingTerm() const {
        if (isZero()) throw Precondition("zero polynomial has no leading term");
        return terms_.front();
    }

    int totalDegree() const {
        int d = -1;
        for (const Term& t : terms_) d = std::max(d, t.mono.degree);
        return d;
    }

    long weightedDegree(std::span<const long> weights) const {
        long d = -1;
        for (const Term& t : terms_) d = std::max(d, t.mono.weightedDegree(weights));
        return d;
    }

    Polynomial withOrder(MonomialOrder ord) const {
        if (ord == order_) return *this;
        return fromTerms(ring_, std::move(ord), terms_);
    }

    Polynomial operator-() const {
        Polynomial out = *this;
        const FieldSpec& field = ring_->field();
        for (Term& t : out.terms_) t.coeff = field.neg(t.coeff);
        return out;
    }

    Polynomial operator+(const Polynomial& g) const {
        requireSameRing(g);
        std::vector<Term> all = terms_;
        const Polynomial gg = g.withOrder(order_);
        all.insert(all.end(), gg.terms_.begin(), gg.terms_.end());
        return fromTerms(ring_, order_, std::move(all));
    }

    Polynomial operator-(const Polynomial& g) const { return *this + (-g); }

    Polynomial operator*(const Polynomial& g) const {
        requireSameRing(g);
        const FieldSpec& field = ring_->field();
        std::vector<Term> prods;
        prods.reserve(terms_.size() * g.terms_.size());
        for (const Term& a : terms_)
            for (const Term& b : g.terms_)
                prods.push_back(Term{a.mono * b.mono, field.mul(a.coeff, b.coeff)});
        return fromTerms(ring_, order_, std::move(prods));
    }

    Polynomial scaled(const FieldElement& c) const {
        const FieldSpec& field = ring_->field();
        if (field.isZero(c)) return zero(ring_, order_);
        Polynomial out = *this;
        for (Term& t : out.terms_) t.coeff = field.mul(t.coeff, c);
        return out;
    }

    Polynomial timesTerm(const Term& t) const {
        const FieldSpec& field = ring_->field();
        if (field.isZero(t.coeff)) return zero(ring_, order_);
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const Term& a : terms_) out.push_back(Term{a.mono * t.mono, field.mul(a.coeff, t.coeff)});
        // Multiplying by a term preserves the strict descending order.
        Polynomial p;
        p.ring_ = ring_;
        p.order_ = order_;
        p.terms_ = std::move(out);
        return p;
    }

    Polynomial monic() const {
        if (isZero()) return *this;
        return scaled(ring_->field().invert(leadingTerm().coeff));
    }

    FieldElement eval(std::span<const FieldElement> point) const {
        const FieldSpec& field = ring_->field();
        if (static_cast<int>(point.size()) != ring_->arity())
            throw DimensionMismatch("evaluation point arity mismatch");
        FieldElement acc = field.zero();
        for (const Term& t : terms_) {
            FieldElement v = t.coeff;
            for (int i = 0; i < ring_->arity(); ++i)
                if (t.mono.exp[i] > 0)
                    v = field.mul(v, field.pow(point[i], static_cast<unsigned long>(t.mono.exp[i])));
            acc = field.add(acc, v);
        }
        return acc;
    }

    // Ring homomorphism determined by variable images; the images live in a
    // common (possibly different) ring over the same field.
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (static_cast<int>(images.size()) != ring_->arity())
            throw DimensionMismatch("one image per variable required");
        RingPtr target;
        if (images.empty()) {
            target = ring_;  // zero-variable source: constants map to constants
        } else {
            target = images[0].ring();
            for (const Polynomial& img : images)
                if (!sameRing(img.ring(), target))
                    throw DimensionMismatch("substitution images live in different rings");
        }
        if (!(target->field() == ring_->field()))
            throw DimensionMismatch("substitution across different coefficient fields");

        const FieldSpec& field = target->field();
        // Power cache per variable up to the needed exponent.
        std::vector<std::vector<Polynomial>> pows(images.size());
        auto power = [&](int var, int e) -> const Polynomial& {
            auto& cache = pows[var];
            if (cache.empty()) cache.push_back(constant(target, field.one()));
            while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[var]);
            return cache[e];
        };
        Polynomial acc = zero(target);
        for (const Term& t : terms_) {
            Polynomial prod = constant(target, t.coeff);
            for (int i = 0; i < ring_->arity(); ++i)
                if (t.mono.exp[i] > 0) prod = prod * power(i, t.mono.exp[i]);
            acc = acc + prod;
        }
        return acc;
    }

    Polynomial derivative(int var) const {
        if (var < 0 || var >= ring_->arity()) throw DimensionMismatch("variable index out of range");
        const FieldSpec& field = ring_->field();
        std::vector<Term> out;
        for (const Term& t : terms_) {
            if (t.mono.exp[var] == 0) continue;
            Term d = t;
            d.coeff = field.mul(d.coeff, field.fromInt(t.mono.exp[var]));
            d.mono.exp[var] -= 1;
            d.mono.degree -= 1;
            out.push_back(std::move(d));
        }
        return fromTerms(ring_, order_, std::move(out));
    }

    // Terms of (weighted) total degree exactly d.
    Polynomial homogeneousPart(long d, std::span<const long> weights = {}) const {
        std::vector<Term> out;
        for (const Term& t : terms_) {
            const long deg = weights.empty() ? t.mono.degree : t.mono.weightedDegree(weights);
            if (deg == d) out.push_back(t);
        }
        return fromTerms(ring_, order_, std::move(out));
    }

    bool operator==(const Polynomial& g) const {
        if (!sameRing(ring_, g.ring_)) return false;
        const std::vector<Term>& other =
            (order_ == g.order_) ? g.terms_ : g.withOrder(order_).terms_;
        if (terms_.size() != other.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].mono == other[i].mono && terms_[i].coeff == other[i].coeff)) return false;
        return true;
    }

private:
    void requireSameRing(const Polynomial& g) const {
        if (!sameRing(ring_, g.ring_)) throw DimensionMismatch("operands live in different rings");
    }

    RingPtr ring_;
    MonomialOrder order_ = MonomialOrder::grevlex();
    std::vector<Term> terms_;
};

}  // namespace pinch
