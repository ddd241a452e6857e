#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strata/alcove.hpp"
#include "strata/ambient.hpp"
#include "strata/rootsys.hpp"
#include "strata/smith.hpp"
#include "strata/weyl.hpp"

namespace strata {

/**
 * A dominant rational Newton point in ambient cocharacter coordinates,
 * together with the standard Levi it selects: the simple roots pairing
 * to zero with nu. Validation requires strict positivity off the Levi.
 */
struct NewtonPoint {
    RatVec nu;
    std::vector<std::size_t> levi;  // 0-based simple-root indices with <alpha_i, nu> = 0
};

inline NewtonPoint levi_of(const RootSystem& rs, const AmbientLattice& amb, const RatVec& nu)
{
    if (nu.size() != amb.n) throw std::invalid_argument("levi_of: shape mismatch");
    NewtonPoint np;
    np.nu = nu;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        const Rational p = ambient_root_pairing(amb, i, nu);
        if (p.is_zero())
            np.levi.push_back(i);
        else if (p < Rational(0))
            throw std::invalid_argument("levi_of: nu is not dominant (negative pairing with alpha_" +
                                        std::to_string(i + 1) + ")");
    }
    return np;
}

/// One irreducible factor of the Levi root system.
struct LeviComponent {
    RootSystem sub;
    std::vector<std::size_t> simple_indices;  // positions in the parent diagram
    CentralClass mu;                          // class of the Newton point inside this factor
};

struct LeviDecomposition {
    std::vector<LeviComponent> components;
    RatVec lift;         // an integral cocharacter x with p_M(x) = nu
    RatVec second_lift;  // an independent lift, for well-definedness checks
};

namespace detail {

inline IntMat sub_cartan(const IntMat& cartan, const std::vector<std::size_t>& idx)
{
    IntMat c(idx.size(), IntVec(idx.size(), 0));
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) c[a][b] = cartan[idx[a]][idx[b]];
    return c;
}

/// Central class of x - nu inside one Levi factor: expand through the
/// factor's fundamental coweights using the pairings <alpha_j, x>.
inline CentralClass component_class(const RootSystem& sub, const AmbientLattice& amb,
                                    const std::vector<std::size_t>& idx, const RatVec& x,
                                    const RatVec& nu)
{
    RatVec rep(sub.rank(), Rational(0));
    for (std::size_t a = 0; a < idx.size(); ++a) {
        const Rational c = ambient_root_pairing(amb, idx[a], x) - ambient_root_pairing(amb, idx[a], nu);
        rep = vec_add(rep, vec_scale(c, sub.fund_coweight(a)));
    }
    return normalize_central(sub, rep);
}

}  // namespace detail

/**
 * Finds an integral cocharacter x with p_M(x) = nu and computes the
 * class of x - nu in P(R_M^vee)/Q(R_M^vee), factor by factor. The class
 * does not depend on the choice of x (two lifts differ by Q(R_M^vee));
 * a second lift is returned so callers can assert that.
 *
 * Throws when nu is not in the image of the cocharacter lattice.
 */
inline LeviDecomposition mu_class(const RootSystem& rs, const AmbientLattice& amb,
                                  const NewtonPoint& np)
{
    const std::size_t n = amb.n;
    const RatMat basis_inv = rat_inverse(to_rational(amb.basis));

    // x = nu + sum_j t_j alpha_j^vee must lie in the lattice: in basis
    // coordinates, (B^-1 A_M) t = -B^-1 nu (mod Z^n).
    const std::size_t k = np.levi.size();
    RatMat am(n, RatVec(k, Rational(0)));
    for (std::size_t col = 0; col < k; ++col)
        for (std::size_t row = 0; row < n; ++row)
            am[row][col] = Rational(amb.coroot_embed[row][np.levi[col]]);
    const RatMat sys = mat_mul(basis_inv, am);

    long long scale = 1;
    for (const auto& row : sys)
        for (const auto& c : row) scale = lcm_ll(scale, c.den());
    IntMat sys_int(n, IntVec(k, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const Rational s = sys[i][j] * Rational(scale);
            sys_int[i][j] = s.num();
        }

    RatVec rhs = mat_vec(basis_inv, np.nu);
    for (auto& c : rhs) c = -c;

    const CongruenceSolution sol = smith_solve(sys_int, rhs);
    if (!sol.solvable)
        throw std::invalid_argument("mu_class: nu does not lift to the cocharacter lattice");

    const auto lift_from = [&](const RatVec& s) {
        RatVec t = vec_scale(Rational(scale), s);
        RatVec x = np.nu;
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t row = 0; row < n; ++row)
                x[row] += t[j] * Rational(amb.coroot_embed[row][np.levi[j]]);
        if (!all_integral(mat_vec(basis_inv, x)))
            throw std::logic_error("mu_class: lift left the lattice");
        return x;
    };

    LeviDecomposition out;
    out.lift = lift_from(sol.particular);
    // An independent lift: shift the particular solution by a unit vector
    // (the congruence is invariant under integer translations of t), or
    // equivalently add a Levi coroot to x.
    RatVec second = sol.particular;
    if (sol.torsion.size() > 1) {
        second = sol.torsion[1];
    } else if (k > 0) {
        second[0] += Rational(1);
    }
    out.second_lift = lift_from(second);

    for (const auto& idx : diagram_components(rs.cartan(), np.levi)) {
        RootSystem sub = root_system_from_cartan(detail::sub_cartan(rs.cartan(), idx),
                                                 rs.kind() + "-levi");
        CentralClass mu = detail::component_class(sub, amb, idx, out.lift, np.nu);
        // Two lifts differ by an element of the Levi coroot lattice, so
        // the class must not depend on the choice.
        const CentralClass mu2 = detail::component_class(sub, amb, idx, out.second_lift, np.nu);
        if (mu.rep != mu2.rep) throw std::logic_error("mu_class: class depends on the lift");
        out.components.push_back(LeviComponent{std::move(sub), idx, std::move(mu)});
    }
    return out;
}

/**
 * The Newton-stratum twist w(nu): the alcove homomorphism of each Levi
 * factor applied to its central class, embedded into W(R) as a product
 * of parent simple reflections (identity off the Levi).
 */
struct NewtonTwist {
    WeylElement w;                    // on the parent simple-coroot coordinates
    IntMat ambient_matrix;            // the same element on ambient coordinates
    IntVec charpoly;
    long long order = 1;
    std::vector<long long> cycle_type;  // nonempty iff ambient_matrix is a permutation
    LeviDecomposition levi;
};

/// Cycle lengths of a permutation matrix (empty if not a permutation),
/// sorted descending.
inline std::vector<long long> permutation_cycle_type(const IntMat& m)
{
    const std::size_t n = m.size();
    std::vector<std::size_t> image(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t hit = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (m[i][j] == 0) continue;
            if (m[i][j] != 1 || hit != n) return {};
            hit = i;
        }
        if (hit == n) return {};
        image[j] = hit;
    }
    std::vector<bool> seen(n, false);
    std::vector<long long> cycles;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        long long len = 0;
        std::size_t c = s;
        while (!seen[c]) {
            seen[c] = true;
            c = image[c];
            ++len;
        }
        cycles.push_back(len);
    }
    std::sort(cycles.rbegin(), cycles.rend());
    return cycles;
}

inline NewtonTwist newton_twist(const RootSystem& rs, const AmbientLattice& amb,
                                const NewtonPoint& np, std::size_t cap = WeylGroup::kDefaultCap)
{
    NewtonTwist out;
    out.levi = mu_class(rs, amb, np);

    std::vector<std::size_t> parent_word;
    for (const auto& comp : out.levi.components) {
        const WeylGroup sub_group = WeylGroup::enumerate(comp.sub, cap);
        const WeylElement& sub_psi = psi(comp.sub, sub_group, comp.mu);
        for (const std::size_t gen : sub_psi.word) parent_word.push_back(comp.simple_indices[gen]);
    }

    IntMat w = identity_matrix<long long>(rs.rank());
    IntMat ambient = identity_matrix<long long>(amb.n);
    for (const std::size_t i : parent_word) {
        w = mat_mul(w, rs.simple_reflection_coroot(i));
        // ambient reflection: v -> v - <alpha_i, v> alpha_i^vee
        IntMat refl = identity_matrix<long long>(amb.n);
        for (std::size_t r = 0; r < amb.n; ++r)
            for (std::size_t c = 0; c < amb.n; ++c)
                refl[r][c] -= amb.coroot_embed[r][i] * amb.root_covectors[i][c];
        ambient = mat_mul(ambient, refl);
    }
    out.w = WeylElement{std::move(w), std::move(parent_word)};
    out.ambient_matrix = std::move(ambient);
    out.charpoly = char_poly(out.w);
    out.order = WeylGroup::element_order(out.w);
    out.cycle_type = permutation_cycle_type(out.ambient_matrix);
    return out;
}

/**
 * Newton polygon of a monic polynomial, as slope blocks (slope, size)
 * sorted by ascending slope; slopes are the usual-order valuations of
 * the roots. Block breakpoints are lattice points, so slope*size is an
 * integer per block.
 */
struct NewtonPolygon {
    struct Block {
        Rational slope;
        long long size;
    };
    std::vector<Block> blocks;
    std::size_t n = 0;
};

/**
 * Lower convex hull of {(i, ord c_i)} plus the monic corner (n, 0),
 * for the coefficients c_0..c_{n-1}; an absent order means c_i = 0.
 */
inline NewtonPolygon gl_newton_polygon(const std::vector<std::optional<long long>>& orders)
{
    const std::size_t n = orders.size();
    if (n == 0) throw std::invalid_argument("gl_newton_polygon: empty polynomial");
    if (!orders[0])
        throw std::invalid_argument("gl_newton_polygon: constant term has infinite order");

    std::vector<std::pair<long long, long long>> pts;
    for (std::size_t i = 0; i < n; ++i)
        if (orders[i]) pts.emplace_back(static_cast<long long>(i), *orders[i]);
    pts.emplace_back(static_cast<long long>(n), 0);

    // Monotone-chain lower hull; x strictly increases already.
    std::vector<std::pair<long long, long long>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            const __int128 cross = static_cast<__int128>(b.first - a.first) * (p.second - a.second) -
                                   static_cast<__int128>(b.second - a.second) * (p.first - a.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }

    NewtonPolygon poly;
    poly.n = n;
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        const long long dx = hull[s + 1].first - hull[s].first;
        const long long dy = hull[s + 1].second - hull[s].second;
        poly.blocks.push_back({Rational(-dy, dx), dx});
    }
    std::reverse(poly.blocks.begin(), poly.blocks.end());  // ascending slope
    std::vector<NewtonPolygon::Block> merged;
    for (const auto& b : poly.blocks) {
        if (!merged.empty() && merged.back().slope == b.slope)
            merged.back().size += b.size;
        else
            merged.push_back(b);
    }
    poly.blocks = std::move(merged);
    for (const auto& b : poly.blocks)
        if (!(b.slope * Rational(b.size)).is_integer())
            throw std::logic_error("gl_newton_polygon: non-lattice breakpoint");
    return poly;
}

/// The dominant Newton point of a polygon: slopes with multiplicity in
/// descending order.
inline RatVec nu_of_polygon(const NewtonPolygon& poly)
{
    RatVec nu;
    for (auto it = poly.blocks.rbegin(); it != poly.blocks.rend(); ++it)
        for (long long k = 0; k < it->size; ++k) nu.push_back(it->slope);
    return nu;
}

/// Independent cycle-type oracle: a block of slope p/q (lowest terms)
/// and size d contributes d/q cycles of length q.
inline std::vector<long long> gl_cycle_type(const NewtonPolygon& poly)
{
    std::vector<long long> cycles;
    for (const auto& b : poly.blocks) {
        const long long q = b.slope.den();
        for (long long m = 0; m < b.size / q; ++m) cycles.push_back(q);
    }
    std::sort(cycles.rbegin(), cycles.rend());
    return cycles;
}

/// Sum over all roots of max(0, <alpha, nu>), in ambient coordinates.
inline Rational m_nu_ambient(const RootSystem& rs, const AmbientLattice& amb, const RatVec& nu)
{
    Rational acc(0);
    for (const auto& root : rs.roots()) {
        Rational p(0);
        for (std::size_t i = 0; i < rs.rank(); ++i)
            if (root[i] != 0) p += Rational(root[i]) * ambient_root_pairing(amb, i, nu);
        if (p > Rational(0)) acc += p;
    }
    return acc;
}

/// Same sum for nu in simple-coroot coordinates.
inline Rational m_nu(const RootSystem& rs, const RatVec& nu)
{
    Rational acc(0);
    for (const auto& root : rs.roots()) {
        const Rational p = rs.pairing(root, nu);
        if (p > Rational(0)) acc += p;
    }
    return acc;
}

}  // namespace strata
