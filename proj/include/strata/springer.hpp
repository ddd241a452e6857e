#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "strata/alcove.hpp"
#include "strata/cyclotomic.hpp"
#include "strata/rootsys.hpp"
#include "strata/smith.hpp"
#include "strata/weyl.hpp"

namespace strata {

/**
 * A torsion point of the maximal torus in additive coordinates: a
 * rational vector in the simple-coroot basis reduced to [0,1)^l.
 * The point represents Exp applied to the alcove point with the same
 * coordinates, so equality is congruence mod Z^l. The center acts by
 * subtraction of the class representative.
 */
struct TorusPoint {
    RatVec coords;

    bool operator==(const TorusPoint& o) const { return coords == o.coords; }
    bool operator!=(const TorusPoint& o) const { return !(*this == o); }
};

inline TorusPoint reduce_torus(const RatVec& v)
{
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].frac();
    return TorusPoint{std::move(r)};
}

inline TorusPoint torus_act(const WeylElement& w, const TorusPoint& u)
{
    return reduce_torus(act(w, u.coords));
}

/// No root takes an integral value at u; equivalently the stabilizer of
/// Exp(u) in W is trivial.
inline bool is_regular(const RootSystem& rs, const TorusPoint& u)
{
    for (const auto& alpha : rs.roots())
        if (rs.pairing(alpha, u.coords).is_integer()) return false;
    return true;
}

/// Action of the central class x on the torus: u - rep(x), reduced.
inline TorusPoint center_translate(const RootSystem& rs, const CentralClass& x, const TorusPoint& u)
{
    if (x.rep.size() != rs.rank() || u.coords.size() != rs.rank())
        throw std::invalid_argument("center_translate: shape mismatch");
    return reduce_torus(vec_sub(u.coords, x.rep));
}

/// Number of fundamental weights trivial on x.
inline std::size_t a_of(const RootSystem& rs, const CentralClass& x)
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < rs.rank(); ++i)
        if (rs.pairing(rs.fund_weight(i), x.rep).is_integer()) ++n;
    return n;
}

/**
 * The solution set of w(u) = x.u on the torus: a coset of the fixed
 * subtorus of w. `dim` is the real dimension of that subtorus and
 * `components` lists one torsion representative per connected
 * component (the complete finite solution list when dim == 0).
 */
struct TwistedFixedSet {
    bool solvable = false;
    std::size_t dim = 0;
    TorusPoint particular;
    std::vector<TorusPoint> components;
    std::vector<RatVec> kernel_basis;
};

/// Solves (M_w - I) y = -rep(x) (mod Z^l).
inline TwistedFixedSet solve_twisted(const RootSystem& rs, const WeylElement& w,
                                     const CentralClass& x)
{
    const std::size_t l = rs.rank();
    IntMat m = w.matrix;
    for (std::size_t i = 0; i < l; ++i) m[i][i] -= 1;
    RatVec b(l);
    for (std::size_t i = 0; i < l; ++i) b[i] = -x.rep[i];

    const CongruenceSolution sol = smith_solve(m, b);
    TwistedFixedSet out;
    if (!sol.solvable) return out;
    out.solvable = true;
    out.dim = sol.dim();
    out.particular = reduce_torus(sol.particular);
    out.kernel_basis = sol.kernel_basis;
    std::set<RatVec> seen;
    for (const auto& t : sol.torsion) {
        TorusPoint p = reduce_torus(t);
        if (seen.insert(p.coords).second) out.components.push_back(std::move(p));
    }
    return out;
}

/// Exact check of the defining congruence w(u) = x.u.
inline bool verifies_twist(const RootSystem& rs, const WeylElement& w, const CentralClass& x,
                           const TorusPoint& u)
{
    if (u.coords.size() != rs.rank())
        throw std::invalid_argument("verifies_twist: shape mismatch");
    const RatVec lhs = act(w, u.coords);
    const RatVec rhs = vec_sub(u.coords, x.rep);
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (!(lhs[i] - rhs[i]).is_integer()) return false;
    return true;
}

/**
 * The set { w : w(u) = x.u solvable and dim = a(x) }. By the twisted
 * regular-element theory this is exactly one conjugacy class, the class
 * of psi(x); callers confirm with are_conjugate.
 */
inline std::vector<std::size_t> regular_twist_set(const RootSystem& rs, const CentralClass& x,
                                                  const WeylGroup& group)
{
    const std::size_t target = a_of(rs, x);
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < group.size(); ++i) {
        const TwistedFixedSet fs = solve_twisted(rs, group[i], x);
        if (fs.solvable && fs.dim == target) hits.push_back(i);
    }
    return hits;
}

/**
 * Searches the solution coset of w(u) = x.u for a regular point.
 * Dimension zero is decided exactly by checking every component;
 * positive dimension samples rational offsets of bounded denominator
 * along the kernel, deterministically from `seed`.
 */
inline std::optional<TorusPoint> find_regular_solution(const RootSystem& rs, const WeylElement& w,
                                                       const CentralClass& x,
                                                       long long denom_bound = 60,
                                                       std::size_t samples = 100,
                                                       unsigned long long seed = 0)
{
    const TwistedFixedSet fs = solve_twisted(rs, w, x);
    if (!fs.solvable)
        throw std::invalid_argument("find_regular_solution: called on an unsolvable instance");

    if (fs.dim == 0) {
        for (const auto& p : fs.components)
            if (is_regular(rs, p)) return p;
        return std::nullopt;
    }

    // Prime denominators dodge the integral-pairing hyperplanes; all
    // candidates stay within the requested bound.
    std::vector<long long> denoms;
    for (long long d : {59LL, 53LL, 47LL, 43LL, 41LL})
        if (d <= denom_bound) denoms.push_back(d);
    if (denoms.empty()) denoms.push_back(std::max<long long>(1, denom_bound));

    std::mt19937_64 rng(seed);
    for (std::size_t trial = 0; trial < samples; ++trial) {
        const auto& base = fs.components[trial % fs.components.size()];
        const long long d = denoms[trial % denoms.size()];
        RatVec y = base.coords;
        for (const auto& k : fs.kernel_basis) {
            const long long num = static_cast<long long>(rng() % static_cast<unsigned long long>(d));
            y = vec_add(y, vec_scale(Rational(num, d), k));
        }
        const TorusPoint cand = reduce_torus(y);
        if (!verifies_twist(rs, w, x, cand))
            throw std::logic_error("find_regular_solution: sampled point violates the congruence");
        if (is_regular(rs, cand)) return cand;
    }
    return std::nullopt;
}

/// Orbit of a weight (root coordinates) under the Weyl group, generated
/// by the simple reflections; deterministic order.
inline std::vector<RatVec> weight_orbit(const RootSystem& rs, const RatVec& weight)
{
    std::set<RatVec> seen{weight};
    std::vector<RatVec> orbit{weight}, work{weight};
    while (!work.empty()) {
        const RatVec v = work.back();
        work.pop_back();
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            // s_i on root coordinates: subtract <v, alpha_i^vee> alpha_i.
            Rational p(0);
            for (std::size_t k = 0; k < rs.rank(); ++k) p += Rational(rs.cartan()[i][k]) * v[k];
            RatVec img = v;
            img[i] -= p;
            if (seen.insert(img).second) {
                orbit.push_back(img);
                work.push_back(img);
            }
        }
    }
    std::sort(orbit.begin(), orbit.end(), [](const RatVec& a, const RatVec& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] < b[i]) return true;
            if (b[i] < a[i]) return false;
        }
        return false;
    });
    return orbit;
}

/// Value of e^{lambda} at Exp(u): exp(2*pi*i*<lambda, u>).
inline CycloNumber character_value(const RootSystem& rs, const RatVec& weight, const TorusPoint& u)
{
    return CycloNumber::exp2pii(rs.pairing(weight, u.coords));
}

/**
 * Chevalley coordinate c_i(u) = sum over the orbit W*varpi_i of
 * e^{lambda}(Exp u), computed exactly in Q(zeta).
 */
inline std::vector<CycloNumber> chevalley_c(const RootSystem& rs, const TorusPoint& u)
{
    std::vector<CycloNumber> out;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        CycloNumber acc(Rational(0));
        for (const auto& lambda : weight_orbit(rs, rs.fund_weight(i)))
            acc += character_value(rs, lambda, u);
        out.push_back(acc);
    }
    return out;
}

/// Value of the fundamental weight character at the central element x.
inline CycloNumber fund_weight_at_center(const RootSystem& rs, const CentralClass& x, std::size_t i)
{
    // x = Exp(-rep), so varpi_i(x) = exp(-2*pi*i*<varpi_i, rep>).
    return CycloNumber::exp2pii(-rs.pairing(rs.fund_weight(i), x.rep));
}

/**
 * Eigenvalue identity: the characteristic polynomial of psi(x) equals
 * prod_i (t - zeta_N^{k_i}) with k_i/N = <varpi_i, rep(x)> mod Z, both
 * sides compared coefficientwise as rational integers in Z[s]/(Phi_N).
 */
inline bool eigenvalue_check(const RootSystem& rs, const WeylElement& psi_x, const CentralClass& x)
{
    const std::size_t l = rs.rank();
    const long long n = x.order();
    const IntVec lhs = char_poly(psi_x);

    // prod_i (t - s^{k_i}) over Q(zeta_n), coefficients ascending in t.
    std::vector<CycloNumber> poly{CycloNumber(Rational(1))};
    for (std::size_t i = 0; i < l; ++i) {
        const Rational q = rs.pairing(rs.fund_weight(i), x.rep).frac();
        const CycloNumber root = CycloNumber::root_of_unity(n, q.num() * (n / q.den()));
        std::vector<CycloNumber> next(poly.size() + 1, CycloNumber(Rational(0)));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= poly[k] * root;
        }
        poly = std::move(next);
    }

    for (std::size_t k = 0; k <= l; ++k) {
        if (!poly[k].is_rational()) return false;
        const Rational c = poly[k].rational_value();
        if (!c.is_integer() || c.num() != lhs[k]) return false;
    }
    return true;
}

}  // namespace strata
