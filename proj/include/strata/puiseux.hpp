#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "strata/cyclotomic.hpp"
#include "strata/rational.hpp"

namespace strata {

/**
 * Finite-support series in rational powers of the uniformizer eps, with
 * exact cyclotomic coefficients. Exponent denominators must divide the
 * series' denominator bound; the bound is fixed up front by callers and
 * enforced on every inserted term, never widened silently (binary
 * operations combine bounds by lcm).
 *
 * ord() is the usual order (ord eps = 1, minimal exponent of the
 * support); val() is its negative, the convention used in reports.
 * Both are empty for the zero series.
 */
class PuiseuxSeries {
public:
    explicit PuiseuxSeries(long long denom_bound = 1) : bound_(denom_bound)
    {
        if (bound_ < 1) throw std::invalid_argument("PuiseuxSeries: bad denominator bound");
    }

    static PuiseuxSeries monomial(long long denom_bound, const Rational& exponent,
                                  const CycloNumber& coeff)
    {
        PuiseuxSeries s(denom_bound);
        s.add_term(exponent, coeff);
        return s;
    }

    static PuiseuxSeries constant(long long denom_bound, const CycloNumber& coeff)
    {
        return monomial(denom_bound, Rational(0), coeff);
    }

    long long denom_bound() const { return bound_; }
    const std::map<Rational, CycloNumber>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Rational& exponent, const CycloNumber& coeff)
    {
        if (coeff.is_zero()) return;
        if (bound_ % exponent.den() != 0)
            throw std::domain_error("PuiseuxSeries: exponent denominator exceeds the bound");
        auto [it, fresh] = terms_.emplace(exponent, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Usual order: minimal exponent of the support; empty for zero.
    std::optional<Rational> ord() const
    {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first;
    }

    /// Valuation with val(eps^{1/n}) = -1/n; empty encodes val(0) = -infinity.
    std::optional<Rational> val() const
    {
        const auto o = ord();
        if (!o) return std::nullopt;
        return -*o;
    }

    const CycloNumber& leading_coeff() const
    {
        if (terms_.empty()) throw std::domain_error("PuiseuxSeries: zero series has no leading term");
        return terms_.begin()->second;
    }

    bool is_monomial() const { return terms_.size() == 1; }

    PuiseuxSeries operator-() const
    {
        PuiseuxSeries r(bound_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    PuiseuxSeries operator+(const PuiseuxSeries& o) const
    {
        PuiseuxSeries r(lcm_ll(bound_, o.bound_));
        r.terms_ = terms_;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    PuiseuxSeries operator-(const PuiseuxSeries& o) const { return *this + (-o); }

    PuiseuxSeries operator*(const PuiseuxSeries& o) const
    {
        PuiseuxSeries r(lcm_ll(bound_, o.bound_));
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }

    PuiseuxSeries& operator+=(const PuiseuxSeries& o) { return *this = *this + o; }
    PuiseuxSeries& operator*=(const PuiseuxSeries& o) { return *this = *this * o; }

    bool operator==(const PuiseuxSeries& o) const
    {
        if (terms_.size() != o.terms_.size()) return false;
        auto it = terms_.begin();
        auto jt = o.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt)
            if (it->first != jt->first || it->second != jt->second) return false;
        return true;
    }
    bool operator!=(const PuiseuxSeries& o) const { return !(*this == o); }

    /// Exact inverse, defined on the units of the finite-support subring:
    /// single-term series with invertible coefficient.
    PuiseuxSeries invert() const
    {
        if (terms_.empty()) throw std::domain_error("PuiseuxSeries::invert: zero series");
        if (terms_.size() != 1)
            throw std::domain_error("PuiseuxSeries::invert: not a monomial, no finite inverse");
        const auto& [e, c] = *terms_.begin();
        return monomial(bound_, -e, c.inverse());
    }

    PuiseuxSeries pow(long long k) const
    {
        if (k < 0) return invert().pow(-k);
        PuiseuxSeries acc = constant(bound_, CycloNumber(Rational(1)));
        PuiseuxSeries base = *this;
        while (k > 0) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    /**
     * The Galois generator: eps^q -> exp(2*pi*i*q) * eps^q termwise,
     * fixing the coefficient field pointwise.
     */
    PuiseuxSeries sigma() const
    {
        PuiseuxSeries r(bound_);
        for (const auto& [e, c] : terms_) r.add_term(e, c * CycloNumber::exp2pii(e));
        return r;
    }

    std::string str() const
    {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += c.str() + "*eps^(" + e.str() + ")";
        }
        return s;
    }

private:
    long long bound_;
    std::map<Rational, CycloNumber> terms_;
};

}  // namespace strata
