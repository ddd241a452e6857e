#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace strata {

/**
 * Exact rational number on 64-bit numerator / denominator.
 *
 * Always normalized: gcd(num, den) == 1 and den > 0. Intermediate
 * products are computed in 128-bit arithmetic and every narrowing back
 * to 64 bits is checked, so overflow throws instead of wrapping.
 */
class Rational {
public:
    Rational() noexcept : num_(0), den_(1) {}
    Rational(long long n) noexcept : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const noexcept { return num_; }
    long long den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view s)
    {
        const auto slash = s.find('/');
        try {
            if (slash == std::string_view::npos) {
                return Rational(std::stoll(std::string(s)));
            }
            const long long p = std::stoll(std::string(s.substr(0, slash)));
            const long long q = std::stoll(std::string(s.substr(slash + 1)));
            return Rational(p, q);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational::parse: malformed literal '" + std::string(s) + "'");
        } catch (const std::out_of_range&) {
            throw std::overflow_error("Rational::parse: literal out of range '" + std::string(s) + "'");
        }
    }

    Rational operator-() const noexcept
    {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational operator+(const Rational& o) const
    {
        const __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
        const __int128 d = static_cast<__int128>(den_) * o.den_;
        return from_wide(n, d);
    }

    Rational operator-(const Rational& o) const { return *this + (-o); }

    Rational operator*(const Rational& o) const
    {
        // Cross-reduce first so the wide product stays small.
        const long long g1 = std::gcd(num_, o.den_);
        const long long g2 = std::gcd(o.num_, den_);
        const __int128 n = static_cast<__int128>(num_ / g1) * (o.num_ / g2);
        const __int128 d = static_cast<__int128>(den_ / g2) * (o.den_ / g1);
        return from_wide(n, d);
    }

    Rational operator/(const Rational& o) const
    {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        const long long g1 = std::gcd(std::abs(num_), std::abs(o.num_));
        const long long g2 = std::gcd(den_, o.den_);
        const __int128 n = static_cast<__int128>(num_ / g1) * (o.den_ / g2);
        const __int128 d = static_cast<__int128>(den_ / g2) * (o.num_ / g1);
        return from_wide(n, d);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const noexcept { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const noexcept { return !(*this == o); }

    bool operator<(const Rational& o) const noexcept
    {
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }
    bool operator>(const Rational& o) const noexcept { return o < *this; }
    bool operator<=(const Rational& o) const noexcept { return !(o < *this); }
    bool operator>=(const Rational& o) const noexcept { return !(*this < o); }

    /// Largest integer <= *this.
    long long floor() const noexcept
    {
        if (num_ >= 0) return num_ / den_;
        return -((-num_ + den_ - 1) / den_);
    }

    /// Fractional part in [0, 1).
    Rational frac() const { return *this - Rational(floor()); }

    std::string str() const
    {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static long long narrow(__int128 v)
    {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rational: 64-bit overflow");
        return static_cast<long long>(v);
    }

    static Rational from_wide(__int128 n, __int128 d)
    {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const __int128 g = wide_gcd(n < 0 ? -n : n, d);
        Rational r;
        r.num_ = narrow(n / g);
        r.den_ = narrow(d / g);
        return r;
    }

    static __int128 wide_gcd(__int128 a, __int128 b) noexcept
    {
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void normalize()
    {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const long long g = std::gcd(std::abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_;
    long long den_;
};

inline Rational abs(const Rational& r) { return r.num() < 0 ? -r : r; }

inline long long lcm_ll(long long a, long long b)
{
    const __int128 l = static_cast<__int128>(a) / std::gcd(a, b) * b;
    if (l > INT64_MAX) throw std::overflow_error("lcm_ll: overflow");
    return static_cast<long long>(l);
}

}  // namespace strata

template <>
struct std::hash<strata::Rational> {
    std::size_t operator()(const strata::Rational& r) const noexcept
    {
        const std::size_t h1 = std::hash<long long>{}(r.num());
        const std::size_t h2 = std::hash<long long>{}(r.den());
        return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
    }
};
