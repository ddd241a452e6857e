#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "strata/rational.hpp"

namespace strata {

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

template <typename T>
std::vector<std::vector<T>> identity_matrix(std::size_t n)
{
    std::vector<std::vector<T>> m(n, std::vector<T>(n, T(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = T(1);
    return m;
}

template <typename T>
std::vector<std::vector<T>> transpose(const std::vector<std::vector<T>>& m)
{
    if (m.empty()) return {};
    std::vector<std::vector<T>> t(m[0].size(), std::vector<T>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

template <typename T>
std::vector<std::vector<T>> mat_mul(const std::vector<std::vector<T>>& a,
                                    const std::vector<std::vector<T>>& b)
{
    if (a.empty() || b.empty()) return {};
    if (a[0].size() != b.size()) throw std::invalid_argument("mat_mul: shape mismatch");
    std::vector<std::vector<T>> c(a.size(), std::vector<T>(b[0].size(), T(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            const T& aik = a[i][k];
            if (aik == T(0)) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += aik * b[k][j];
        }
    return c;
}

template <typename T, typename S>
std::vector<T> mat_vec(const std::vector<std::vector<S>>& m, const std::vector<T>& v)
{
    if (m.empty()) return {};
    if (m[0].size() != v.size()) throw std::invalid_argument("mat_vec: shape mismatch");
    std::vector<T> r(m.size(), T(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += T(m[i][j]) * v[j];
    return r;
}

template <typename T>
std::vector<T> vec_add(const std::vector<T>& a, const std::vector<T>& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: shape mismatch");
    std::vector<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

template <typename T>
std::vector<T> vec_sub(const std::vector<T>& a, const std::vector<T>& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: shape mismatch");
    std::vector<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

template <typename T>
std::vector<T> vec_scale(const T& c, const std::vector<T>& v)
{
    std::vector<T> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline RatVec to_rational(const IntVec& v)
{
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

inline RatMat to_rational(const IntMat& m)
{
    RatMat r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = to_rational(m[i]);
    return r;
}

inline bool all_integral(const RatVec& v)
{
    for (const auto& x : v)
        if (!x.is_integer()) return false;
    return true;
}

/// Gauss-Jordan inverse over the rationals. Throws on a singular input.
inline RatMat rat_inverse(const RatMat& m)
{
    const std::size_t n = m.size();
    RatMat a = m;
    RatMat inv = identity_matrix<Rational>(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("rat_inverse: singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            const Rational f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

/// Exact determinant by fraction-free elimination.
inline Rational rat_det(RatMat a)
{
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        const Rational p = a[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col].is_zero()) continue;
            const Rational f = a[i][col] / p;
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

inline long long int_det(const IntMat& m)
{
    const Rational d = rat_det(to_rational(m));
    if (!d.is_integer()) throw std::logic_error("int_det: non-integral determinant");
    return d.num();
}

/// Fraction-free Bareiss determinant; every intermediate entry is a
/// minor of the input, so growth is bounded and overflow is checked.
inline long long int_det_bareiss(IntMat a)
{
    const std::size_t n = a.size();
    if (n == 0) return 1;
    const auto mul_div = [](long long x, long long y, long long u, long long v, long long prev) {
        const __int128 t = static_cast<__int128>(x) * y - static_cast<__int128>(u) * v;
        const __int128 q = t / prev;
        if (q > INT64_MAX || q < INT64_MIN) throw std::overflow_error("int_det_bareiss: overflow");
        return static_cast<long long>(q);
    };
    long long prev = 1;
    long long sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = mul_div(a[k][k], a[i][j], a[i][k], a[k][j], prev);
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Rank over the rationals.
inline std::size_t rat_rank(RatMat a)
{
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        const Rational p = a[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][col].is_zero()) continue;
            const Rational f = a[i][col] / p;
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace strata
