#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "strata/linalg.hpp"
#include "strata/rational.hpp"

namespace strata {

namespace detail {

/// Exact division of integer polynomials (coefficients ascending);
/// throws if the division leaves a remainder.
inline IntVec int_poly_divide(IntVec num, const IntVec& den)
{
    if (den.empty() || den.back() == 0) throw std::invalid_argument("int_poly_divide: bad divisor");
    if (num.size() < den.size()) throw std::logic_error("int_poly_divide: degree underflow");
    IntVec q(num.size() - den.size() + 1, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        if (num[k + den.size() - 1] % den.back() != 0)
            throw std::logic_error("int_poly_divide: inexact division");
        const long long c = num[k + den.size() - 1] / den.back();
        q[k] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    for (long long c : num)
        if (c != 0) throw std::logic_error("int_poly_divide: nonzero remainder");
    return q;
}

}  // namespace detail

/// The n-th cyclotomic polynomial, coefficients ascending. Memoized
/// behind a mutex; map nodes are stable, so returned references stay
/// valid across later insertions.
inline const IntVec& cyclotomic_polynomial(long long n)
{
    static std::mutex guard;
    static std::map<long long, IntVec> cache;
    {
        const std::lock_guard<std::mutex> lock(guard);
        const auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");

    IntVec result(static_cast<std::size_t>(n) + 1, 0);
    result[0] = -1;
    result.back() = 1;
    for (long long d = 1; d < n; ++d)
        if (n % d == 0) result = detail::int_poly_divide(result, cyclotomic_polynomial(d));

    const std::lock_guard<std::mutex> lock(guard);
    return cache.emplace(n, std::move(result)).first->second;
}

inline long long euler_phi(long long n)
{
    return static_cast<long long>(cyclotomic_polynomial(n).size()) - 1;
}

/**
 * An element of the cyclotomic field Q(zeta_N), represented exactly in
 * the quotient ring Q[s]/(Phi_N(s)) with s the primitive N-th root of
 * unity exp(2*pi*i/N).
 *
 * Mixed levels are handled by the coherent embedding zeta_{mN}^m =
 * zeta_N: binary operations lift both sides to the lcm level first.
 */
class CycloNumber {
public:
    CycloNumber() : level_(1), coeffs_{Rational(0)} {}

    explicit CycloNumber(const Rational& r) : level_(1), coeffs_{r} {}

    CycloNumber(long long level, RatVec raw_poly) : level_(level)
    {
        if (level < 1) throw std::invalid_argument("CycloNumber: bad level");
        coeffs_ = reduce(level, std::move(raw_poly));
    }

    /// zeta_level^k.
    static CycloNumber root_of_unity(long long level, long long k)
    {
        k %= level;
        if (k < 0) k += level;
        RatVec raw(static_cast<std::size_t>(k) + 1, Rational(0));
        raw.back() = Rational(1);
        return CycloNumber(level, std::move(raw));
    }

    /// exp(2*pi*i*q) for rational q, at level den(q).
    static CycloNumber exp2pii(const Rational& q)
    {
        const Rational f = q.frac();
        return root_of_unity(f.den(), f.num());
    }

    long long level() const { return level_; }
    const RatVec& coeffs() const { return coeffs_; }

    bool is_zero() const
    {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    bool is_rational() const
    {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) return false;
        return true;
    }

    Rational rational_value() const
    {
        if (!is_rational()) throw std::domain_error("CycloNumber: not a rational number");
        return coeffs_[0];
    }

    CycloNumber lift_to(long long m) const
    {
        if (m == level_) return *this;
        if (m % level_ != 0) throw std::invalid_argument("CycloNumber::lift_to: not a multiple level");
        const long long stride = m / level_;
        RatVec raw(static_cast<std::size_t>(euler_phi(level_) - 1) * stride + 1, Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            raw[i * static_cast<std::size_t>(stride)] = coeffs_[i];
        return CycloNumber(m, std::move(raw));
    }

    CycloNumber operator-() const
    {
        CycloNumber r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    CycloNumber operator+(const CycloNumber& o) const
    {
        const long long m = lcm_ll(level_, o.level_);
        const CycloNumber a = lift_to(m), b = o.lift_to(m);
        RatVec sum = a.coeffs_;
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += b.coeffs_[i];
        CycloNumber r;
        r.level_ = m;
        r.coeffs_ = std::move(sum);
        return r;
    }

    CycloNumber operator-(const CycloNumber& o) const { return *this + (-o); }

    CycloNumber operator*(const CycloNumber& o) const
    {
        const long long m = lcm_ll(level_, o.level_);
        const CycloNumber a = lift_to(m), b = o.lift_to(m);
        RatVec prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return CycloNumber(m, std::move(prod));
    }

    CycloNumber& operator+=(const CycloNumber& o) { return *this = *this + o; }
    CycloNumber& operator-=(const CycloNumber& o) { return *this = *this - o; }
    CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }

    bool operator==(const CycloNumber& o) const
    {
        const long long m = lcm_ll(level_, o.level_);
        return lift_to(m).coeffs_ == o.lift_to(m).coeffs_;
    }
    bool operator!=(const CycloNumber& o) const { return !(*this == o); }

    /// Field inverse by Cramer's rule against the multiplication-by-f
    /// matrix in the power basis, with fraction-free determinants so the
    /// intermediate growth stays bounded. Phi_N is irreducible over Q,
    /// so the matrix of a nonzero element is always invertible.
    CycloNumber inverse() const
    {
        if (is_zero()) throw std::domain_error("CycloNumber::inverse: zero");
        if (is_rational()) return CycloNumber(Rational(1) / coeffs_[0]).lift_to(level_);

        long long scale = 1;
        for (const auto& c : coeffs_) scale = lcm_ll(scale, c.den());
        const std::size_t deg = coeffs_.size();
        IntMat mul(deg, IntVec(deg, 0));
        for (std::size_t j = 0; j < deg; ++j) {
            RatVec col(j + deg, Rational(0));
            for (std::size_t i = 0; i < deg; ++i) col[i + j] = coeffs_[i] * Rational(scale);
            const RatVec reduced = reduce(level_, std::move(col));
            for (std::size_t i = 0; i < deg; ++i) mul[i][j] = reduced[i].num();
        }
        const long long det = int_det_bareiss(mul);
        if (det == 0) throw std::logic_error("CycloNumber::inverse: singular multiplication matrix");
        RatVec g(deg);
        for (std::size_t i = 0; i < deg; ++i) {
            IntMat replaced = mul;
            for (std::size_t r = 0; r < deg; ++r) replaced[r][i] = r == 0 ? 1 : 0;
            g[i] = Rational(scale) * Rational(int_det_bareiss(replaced), det);
        }
        return CycloNumber(level_, std::move(g));
    }

    CycloNumber pow(long long e) const
    {
        if (e < 0) return inverse().pow(-e);
        CycloNumber acc(Rational(1));
        CycloNumber base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc.lift_to(lcm_ll(acc.level(), level_));
    }

    std::string str() const
    {
        std::string s = "[" + std::to_string(level_) + ";";
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            s += (i ? "," : " ") + coeffs_[i].str();
        return s + "]";
    }

private:
    static RatVec reduce(long long level, RatVec raw)
    {
        const IntVec& phi = cyclotomic_polynomial(level);
        const std::size_t deg = phi.size() - 1;
        RatVec out(deg == 0 ? 1 : deg, Rational(0));
        // Reduce monomials from the top down: s^d = s^{d-deg} * (s^deg - Phi).
        while (raw.size() > deg && !(deg == 0)) {
            const Rational c = raw.back();
            raw.pop_back();
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < deg; ++j)
                raw[raw.size() - deg + j] -= c * Rational(phi[j]);
        }
        for (std::size_t i = 0; i < raw.size() && i < out.size(); ++i) out[i] = raw[i];
        return out;
    }

    long long level_;
    RatVec coeffs_;
};

}  // namespace strata
