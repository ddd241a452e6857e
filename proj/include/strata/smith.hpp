#pragma once

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "strata/linalg.hpp"
#include "strata/rational.hpp"

namespace strata {

/**
 * Smith normal form u*m*v = d with u, v unimodular and d diagonal,
 * d[0][0] | d[1][1] | ... ; diagonal entries nonnegative.
 */
struct SmithForm {
    IntMat u, d, v;
    std::size_t rank = 0;

    long long diag(std::size_t i) const { return d[i][i]; }
};

namespace detail {

inline long long checked_mul(long long a, long long b)
{
    const __int128 p = static_cast<__int128>(a) * b;
    if (p > INT64_MAX || p < INT64_MIN) throw std::overflow_error("smith: 64-bit overflow");
    return static_cast<long long>(p);
}

inline void row_axpy(IntMat& m, std::size_t dst, std::size_t src, long long f)
{
    for (std::size_t j = 0; j < m[dst].size(); ++j)
        m[dst][j] = m[dst][j] + checked_mul(f, m[src][j]);
}

inline void col_axpy(IntMat& m, std::size_t dst, std::size_t src, long long f)
{
    for (std::size_t i = 0; i < m.size(); ++i) m[i][dst] = m[i][dst] + checked_mul(f, m[i][src]);
}

inline void swap_cols(IntMat& m, std::size_t a, std::size_t b)
{
    for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace detail

inline SmithForm smith_normal_form(IntMat m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    SmithForm s;
    s.u = identity_matrix<long long>(rows);
    s.v = identity_matrix<long long>(cols);

    std::size_t t = 0;
    while (t < std::min(rows, cols)) {
        // Move a smallest-magnitude nonzero entry of the trailing block to (t, t).
        std::size_t pi = rows, pj = cols;
        long long best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (best == 0 || std::abs(m[i][j]) < best)) {
                    best = std::abs(m[i][j]);
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;  // trailing block is zero
        std::swap(m[pi], m[t]);
        std::swap(s.u[pi], s.u[t]);
        if (pj != t) {
            detail::swap_cols(m, pj, t);
            detail::swap_cols(s.v, pj, t);
        }

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (m[i][t] == 0) continue;
            const long long q = m[i][t] / m[t][t];
            detail::row_axpy(m, i, t, -q);
            detail::row_axpy(s.u, i, t, -q);
            if (m[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (m[t][j] == 0) continue;
            const long long q = m[t][j] / m[t][t];
            detail::col_axpy(m, j, t, -q);
            detail::col_axpy(s.v, j, t, -q);
            if (m[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // remainders survive, pick a smaller pivot

        // Enforce divisibility d_t | every later entry.
        bool fixed = true;
        for (std::size_t i = t + 1; i < rows && fixed; ++i)
            for (std::size_t j = t + 1; j < cols && fixed; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    detail::row_axpy(m, t, i, 1);
                    detail::row_axpy(s.u, t, i, 1);
                    fixed = false;
                }
        if (!fixed) continue;

        if (m[t][t] < 0) {
            for (std::size_t j = 0; j < cols; ++j) m[t][j] = -m[t][j];
            for (std::size_t j = 0; j < rows; ++j) s.u[t][j] = -s.u[t][j];
        }
        ++t;
    }

    s.d = std::move(m);
    s.rank = t;
    return s;
}

/**
 * Full solution of the lattice congruence m*y = b (mod Z^rows), y rational.
 *
 * When solvable the set of solutions modulo Z^cols is
 *   { p + k : p in torsion, k in span_R(kernel_basis) },
 * with one torsion representative per connected component.
 */
struct CongruenceSolution {
    bool solvable = false;
    RatVec particular;
    std::vector<RatVec> kernel_basis;
    std::vector<RatVec> torsion;

    std::size_t dim() const { return kernel_basis.size(); }
};

inline CongruenceSolution smith_solve(const IntMat& m, const RatVec& b)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    if (b.size() != rows) throw std::invalid_argument("smith_solve: shape mismatch");

    const SmithForm s = smith_normal_form(m);
    CongruenceSolution out;

    // c = u*b; zero rows of d require integral components of c.
    RatVec c = mat_vec(to_rational(s.u), b);
    for (std::size_t i = s.rank; i < rows; ++i)
        if (!c[i].is_integer()) return out;

    out.solvable = true;
    RatVec z(cols, Rational(0));
    for (std::size_t i = 0; i < s.rank; ++i) z[i] = c[i] / Rational(s.diag(i));
    const RatMat v = to_rational(s.v);
    out.particular = mat_vec(v, z);

    for (std::size_t j = s.rank; j < cols; ++j) {
        RatVec k(cols);
        for (std::size_t i = 0; i < cols; ++i) k[i] = v[i][j];
        out.kernel_basis.push_back(std::move(k));
    }

    // Torsion translates: one representative per residue of z_i modulo 1/d_i.
    __int128 count = 1;
    for (std::size_t i = 0; i < s.rank; ++i) count *= s.diag(i);
    if (count > 200000) throw std::overflow_error("smith_solve: torsion component count too large");

    std::vector<RatVec> reps;
    reps.push_back(out.particular);
    for (std::size_t i = 0; i < s.rank; ++i) {
        const long long d = s.diag(i);
        if (d == 1) continue;
        std::vector<RatVec> next;
        next.reserve(reps.size() * static_cast<std::size_t>(d));
        for (const auto& r : reps)
            for (long long k = 0; k < d; ++k) {
                RatVec shifted = r;
                const Rational step = Rational(k, d);
                for (std::size_t row = 0; row < cols; ++row)
                    shifted[row] += step * v[row][i];
                next.push_back(std::move(shifted));
            }
        reps = std::move(next);
    }
    out.torsion = std::move(reps);
    return out;
}

/// Direct congruence membership test, used as an independent cross-check.
inline bool satisfies_congruence(const IntMat& m, const RatVec& b, const RatVec& y)
{
    const RatVec my = mat_vec(to_rational(m), y);
    for (std::size_t i = 0; i < my.size(); ++i)
        if (!(my[i] - b[i]).is_integer()) return false;
    return true;
}

}  // namespace strata
