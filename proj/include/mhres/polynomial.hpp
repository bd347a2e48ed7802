#ifndef MHRES_POLYNOMIAL_HPP
#define MHRES_POLYNOMIAL_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mhres/errors.hpp"
#include "mhres/monomial.hpp"
#include "mhres/numbers.hpp"

namespace mhres {

template <class D>
class MultiPoly;

// Coefficient domain of exact rationals.
struct RationalDomain {
    using Value = Rational;
    static Value zero() { return Value(0); }
    static Value one() { return Value(1); }
    static bool is_zero(const Value& v) { return sgn(v) == 0; }
    static Value neg(const Value& v) { return -v; }
    static Value add(const Value& a, const Value& b) { return a + b; }
    static Value mul(const Value& a, const Value& b) { return a * b; }
    static Value exact_div(const Value& a, const Value& b) {
        if (is_zero(b)) throw NotDivisible("rational division by zero");
        return a / b;
    }
    static std::string str(const Value& v) { return to_string(v); }
};

// Coefficient domain whose elements are themselves polynomials (used for
// generic coefficients and for determinants of matrices of polynomials).
template <class D>
struct PolyDomain {
    using Value = MultiPoly<D>;
    static Value zero() { return Value(); }
    static Value one() { return Value::constant(D::one()); }
    static bool is_zero(const Value& v) { return v.is_zero(); }
    static Value neg(const Value& v) { return v.negated(); }
    static Value add(const Value& a, const Value& b) { return a + b; }
    static Value mul(const Value& a, const Value& b) { return a * b; }
    static Value exact_div(const Value& a, const Value& b) { return mhres::exact_div(a, b); }
    static std::string str(const Value& v);
};

// Sparse multivariate polynomial over a coefficient domain D. Terms are kept
// sorted in the monomial order with no zero coefficients, so representations
// are canonical and equality is structural.
template <class D>
class MultiPoly {
public:
    using Coef = typename D::Value;
    struct Term {
        Monomial mono;
        Coef coef;
    };

    MultiPoly() = default;

    static MultiPoly constant(Coef c) {
        MultiPoly p;
        if (!D::is_zero(c)) p.terms_.push_back({Monomial(), std::move(c)});
        return p;
    }

    static MultiPoly variable(VarIndex v, std::uint32_t e = 1) {
        MultiPoly p;
        p.terms_.push_back({Monomial::var(v, e), D::one()});
        return p;
    }

    static MultiPoly from_terms(std::vector<Term> terms) {
        std::map<Monomial, Coef> acc;
        for (auto& t : terms) accumulate(acc, t.mono, t.coef);
        return from_map(acc);
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading_term() const { return terms_.back(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
    }

    Coef coefficient(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& k) { return t.mono < k; });
        if (it != terms_.end() && it->mono == m) return it->coef;
        return D::zero();
    }

    long total_degree() const { return terms_.empty() ? -1 : terms_.back().mono.total_degree(); }

    MultiPoly operator+(const MultiPoly& o) const { return merged(o, false); }
    MultiPoly operator-(const MultiPoly& o) const { return merged(o, true); }

    MultiPoly negated() const {
        MultiPoly out;
        out.terms_.reserve(terms_.size());
        for (auto& t : terms_) out.terms_.push_back({t.mono, D::neg(t.coef)});
        return out;
    }

    MultiPoly operator*(const MultiPoly& o) const {
        std::map<Monomial, Coef> acc;
        for (auto& a : terms_)
            for (auto& b : o.terms_) accumulate(acc, a.mono * b.mono, D::mul(a.coef, b.coef));
        return from_map(acc);
    }

    MultiPoly scaled(const Coef& c) const {
        if (D::is_zero(c)) return MultiPoly();
        MultiPoly out;
        out.terms_.reserve(terms_.size());
        for (auto& t : terms_) out.terms_.push_back({t.mono, D::mul(t.coef, c)});
        return out;
    }

    MultiPoly mul_term(const Monomial& m, const Coef& c) const {
        if (D::is_zero(c)) return MultiPoly();
        MultiPoly out;
        out.terms_.reserve(terms_.size());
        for (auto& t : terms_) out.terms_.push_back({t.mono * m, D::mul(t.coef, c)});
        return out;
    }

    bool operator==(const MultiPoly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (!(terms_[i].mono == o.terms_[i].mono)) return false;
            if (!D::is_zero(D::add(terms_[i].coef, D::neg(o.terms_[i].coef)))) return false;
        }
        return true;
    }

    template <class Namer>
    std::string str(Namer&& name) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string c = D::str(it->coef);
            bool neg = !c.empty() && c[0] == '-';
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (neg) c = c.substr(1);
            if (c.find(' ') != std::string::npos) c = "(" + c + ")";
            if (it->mono.is_one()) {
                out += c;
            } else if (c == "1") {
                out += it->mono.str(name);
            } else {
                out += c + "*" + it->mono.str(name);
            }
        }
        return out;
    }

    static MultiPoly from_map(std::map<Monomial, Coef>& acc) {
        MultiPoly out;
        out.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!D::is_zero(c)) out.terms_.push_back({m, std::move(c)});
        return out;
    }

private:
    static void accumulate(std::map<Monomial, Coef>& acc, const Monomial& m, const Coef& c) {
        auto [it, fresh] = acc.emplace(m, c);
        if (!fresh) it->second = D::add(it->second, c);
    }

    MultiPoly merged(const MultiPoly& o, bool subtract) const {
        MultiPoly out;
        out.terms_.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        while (a != terms_.end() && b != o.terms_.end()) {
            int cmp = Monomial::compare(a->mono, b->mono);
            if (cmp < 0) {
                out.terms_.push_back(*a++);
            } else if (cmp > 0) {
                out.terms_.push_back({b->mono, subtract ? D::neg(b->coef) : b->coef});
                ++b;
            } else {
                Coef c = subtract ? D::add(a->coef, D::neg(b->coef)) : D::add(a->coef, b->coef);
                if (!D::is_zero(c)) out.terms_.push_back({a->mono, std::move(c)});
                ++a;
                ++b;
            }
        }
        out.terms_.insert(out.terms_.end(), a, terms_.end());
        for (; b != o.terms_.end(); ++b)
            out.terms_.push_back({b->mono, subtract ? D::neg(b->coef) : b->coef});
        return out;
    }

    std::vector<Term> terms_;
};

// Exact division via leading-term elimination; throws NotDivisible when den
// does not divide num in the polynomial ring.
template <class D>
MultiPoly<D> exact_div(const MultiPoly<D>& num, const MultiPoly<D>& den) {
    if (den.is_zero()) throw NotDivisible("polynomial division by zero");
    MultiPoly<D> rem = num;
    std::vector<typename MultiPoly<D>::Term> quot;
    const auto& dlt = den.leading_term();
    while (!rem.is_zero()) {
        const auto& rlt = rem.leading_term();
        auto m = rlt.mono.divide(dlt.mono);
        if (!m) throw NotDivisible("leading monomial does not divide");
        typename D::Value c = D::exact_div(rlt.coef, dlt.coef);
        quot.push_back({*m, c});
        rem = rem - den.mul_term(*m, c);
        if (!rem.is_zero() && !(rem.leading_term().mono < rlt.mono))
            throw NotDivisible("no progress in division");
    }
    return MultiPoly<D>::from_terms(std::move(quot));
}

// Exact division by (x_plus - x_minus), done as synthetic division in x_plus.
// The remainder is num with x_plus replaced by x_minus; it must vanish.
template <class D>
MultiPoly<D> divide_linear_difference(const MultiPoly<D>& num, VarIndex plus, VarIndex minus) {
    std::map<std::uint32_t, std::map<Monomial, typename D::Value>> buckets;
    std::uint32_t top = 0;
    for (auto& t : num.terms()) {
        std::uint32_t e = t.mono.degree_in(plus);
        top = std::max(top, e);
        auto& acc = buckets[e];
        auto [it, fresh] = acc.emplace(t.mono, t.coef);
        if (!fresh) it->second = D::add(it->second, t.coef);
    }
    std::map<Monomial, typename D::Value> quot;
    for (std::uint32_t e = top; e >= 1; --e) {
        auto found = buckets.find(e);
        if (found == buckets.end()) continue;
        for (auto& [mono, coef] : found->second) {
            if (D::is_zero(coef)) continue;
            auto reduced = mono.divide(Monomial::var(plus));
            auto [qit, fresh] = quot.emplace(*reduced, coef);
            if (!fresh) qit->second = D::add(qit->second, coef);
            Monomial pushed = *reduced * Monomial::var(minus);
            auto& low = buckets[e - 1];
            auto [pit, pfresh] = low.emplace(pushed, coef);
            if (!pfresh) pit->second = D::add(pit->second, coef);
        }
    }
    auto rem = buckets.find(0);
    if (rem != buckets.end())
        for (auto& [mono, coef] : rem->second)
            if (!D::is_zero(coef))
                throw NotDivisible("nonzero remainder in linear-difference division");
    return MultiPoly<D>::from_map(quot);
}

// Rebuilds the polynomial with variables renamed through `map`.
template <class D>
MultiPoly<D> remap_variables(const MultiPoly<D>& p, const std::function<VarIndex(VarIndex)>& map) {
    std::vector<typename MultiPoly<D>::Term> terms;
    terms.reserve(p.term_count());
    for (auto& t : p.terms()) {
        Monomial m;
        for (auto& [v, e] : t.mono.factors()) m = m * Monomial::var(map(v), e);
        terms.push_back({m, t.coef});
    }
    return MultiPoly<D>::from_terms(std::move(terms));
}

// Full evaluation of a rational-coefficient polynomial at a rational point.
inline Rational evaluate(const MultiPoly<RationalDomain>& p, const std::vector<Rational>& point) {
    Rational out(0);
    for (auto& t : p.terms()) {
        Rational v = t.coef;
        for (auto& [var, e] : t.mono.factors()) {
            Rational base = point.at(var);
            for (std::uint32_t i = 0; i < e; ++i) v *= base;
        }
        out += v;
    }
    return out;
}

// Specializes polynomial coefficients (generic mode) to rationals.
inline MultiPoly<RationalDomain> specialize(const MultiPoly<PolyDomain<RationalDomain>>& p,
                                            const std::vector<Rational>& coeff_point) {
    std::vector<MultiPoly<RationalDomain>::Term> terms;
    for (auto& t : p.terms()) {
        Rational c = evaluate(t.coef, coeff_point);
        if (sgn(c) != 0) terms.push_back({t.mono, c});
    }
    return MultiPoly<RationalDomain>::from_terms(std::move(terms));
}

template <class D>
std::string PolyDomain<D>::str(const Value& v) {
    return v.str([](VarIndex i) { return "t" + std::to_string(i); });
}

using RatPoly = MultiPoly<RationalDomain>;
using CoefDomain = PolyDomain<RationalDomain>;
using GenPoly = MultiPoly<CoefDomain>;

}  // namespace mhres

#endif
