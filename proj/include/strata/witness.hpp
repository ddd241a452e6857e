#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strata/alcove.hpp"
#include "strata/ambient.hpp"
#include "strata/newton.hpp"
#include "strata/puiseux.hpp"
#include "strata/rootsys.hpp"
#include "strata/springer.hpp"
#include "strata/weyl.hpp"

namespace strata {

/**
 * A self-verifying Newton-stratum witness: the coordinates of a point
 * a of the maximal torus over the Puiseux field, the group element h
 * with sigma(a) = h(a), and the named checks recomputed from the stored
 * coordinates.
 */
struct WitnessReport {
    std::vector<PuiseuxSeries> coords;               // dual-basis cocharacter coordinates
    IntMat h_ambient;                                // h on ambient coordinates
    WeylElement h;                                   // h on simple-coroot coordinates
    std::vector<std::pair<std::string, bool>> checks;
    Rational m_nu;
    std::optional<Rational> val_omega;               // empty when Omega(a) = 0
    std::string failure_detail;

    bool ok() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
    }

    bool check(const std::string& name) const
    {
        for (const auto& [k, v] : checks)
            if (k == name) return v;
        throw std::invalid_argument("WitnessReport: no check named " + name);
    }
};

namespace detail {

/// ord(1 - f/g) for monomials f, g; empty when f == g (the factor vanishes).
inline std::optional<Rational> ord_one_minus_ratio(const PuiseuxSeries& f, const PuiseuxSeries& g)
{
    const Rational e = *f.ord() - *g.ord();
    if (!e.is_zero()) return e < Rational(0) ? e : Rational(0);
    if (f.leading_coeff() == g.leading_coeff()) return std::nullopt;
    return Rational(0);
}

/// Permutation image array -> matrix on simple-coroot coordinates of
/// A_{n-1}: column j of the result expands e_{p(j)} - e_{p(j+1)} in the
/// simple coroots.
inline IntMat permutation_to_coroot_matrix(const std::vector<std::size_t>& image)
{
    const std::size_t n = image.size();
    IntMat m(n - 1, IntVec(n - 1, 0));
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const std::size_t a = image[j], b = image[j + 1];
        if (a < b)
            for (std::size_t k = a; k < b; ++k) m[k][j] = 1;
        else
            for (std::size_t k = b; k < a; ++k) m[k][j] = -1;
    }
    return m;
}

inline IntMat permutation_to_matrix(const std::vector<std::size_t>& image)
{
    const std::size_t n = image.size();
    IntMat m(n, IntVec(n, 0));
    for (std::size_t j = 0; j < n; ++j) m[image[j]][j] = 1;
    return m;
}

}  // namespace detail

/**
 * Diagonal witness for a GL_n Newton polygon. A block of slope p/q and
 * size d contributes d/q cycles of entries c * zeta_q^j * eps^{p/q},
 * j = 0..q-1, one unit constant c per cycle; blocks are laid out in
 * slope-descending order so the coordinate valuations read off the
 * dominant Newton point.
 *
 * Verified exactly from the stored coordinates: the coordinate orders
 * match nu, sigma permutes the entries by the expected product of
 * q-cycles, all entries are pairwise distinct (with the within-block
 * unit test deciding the Omega condition), and the characteristic
 * polynomial of the witness reproduces the input polygon.
 */
inline WitnessReport build_witness_gl(const NewtonPolygon& poly,
                                      const std::vector<CycloNumber>& constants = {})
{
    const std::size_t n = poly.n;
    const RatVec nu = nu_of_polygon(poly);

    long long slope_lcm = 1;
    long long max_cycles = 0;
    for (const auto& b : poly.blocks) {
        slope_lcm = lcm_ll(slope_lcm, b.slope.den());
        max_cycles = std::max(max_cycles, b.size / b.slope.den());
    }

    std::vector<CycloNumber> units = constants;
    if (units.empty()) {
        // Distinct roots of unity at a level coprime to every slope
        // denominator; ratios of such units can never be q-th roots of unity.
        long long level = 1;
        while (level < max_cycles || std::gcd(level, slope_lcm) != 1) ++level;
        for (long long m = 0; m < max_cycles; ++m)
            units.push_back(CycloNumber::root_of_unity(level, m));
    } else if (static_cast<long long>(units.size()) < max_cycles) {
        throw std::invalid_argument("build_witness_gl: not enough unit constants");
    }
    for (const auto& u : units)
        if (u.is_zero()) throw std::invalid_argument("build_witness_gl: zero unit constant");

    WitnessReport rep;
    rep.coords.assign(n, PuiseuxSeries(slope_lcm));
    std::vector<std::size_t> sigma_image(n);  // sigma(a)_i = a_{sigma_image(i)}

    std::size_t pos = 0;
    for (auto it = poly.blocks.rbegin(); it != poly.blocks.rend(); ++it) {
        const long long q = it->slope.den();
        const long long p = it->slope.num();
        for (long long m = 0; m < it->size / q; ++m) {
            const std::size_t base = pos;
            for (long long j = 0; j < q; ++j, ++pos) {
                const CycloNumber coeff = units[static_cast<std::size_t>(m)] *
                                          CycloNumber::root_of_unity(q, j);
                rep.coords[pos] = PuiseuxSeries::monomial(slope_lcm, it->slope, coeff);
                sigma_image[pos] = base + static_cast<std::size_t>((j + p) % q + q) % q;
            }
        }
    }

    // sigma multiplies entry (m, j) by zeta_q^p, i.e. moves it to slot
    // (m, j+p); so h maps slot (m, j+p) back to slot (m, j).
    std::vector<std::size_t> h_image(n);
    for (std::size_t i = 0; i < n; ++i) h_image[sigma_image[i]] = i;
    rep.h_ambient = detail::permutation_to_matrix(h_image);
    rep.h = WeylElement{detail::permutation_to_coroot_matrix(h_image), {}};

    bool galois = true;
    for (std::size_t i = 0; i < n && galois; ++i)
        galois = rep.coords[i].sigma() == rep.coords[sigma_image[i]];

    bool valuations = true;
    for (std::size_t i = 0; i < n && valuations; ++i)
        valuations = rep.coords[i].ord() && *rep.coords[i].ord() == nu[i];

    bool regular = true;
    for (std::size_t i = 0; i < n && regular; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rep.coords[i] == rep.coords[j]) {
                regular = false;
                rep.failure_detail = "coordinates " + std::to_string(i + 1) + " and " +
                                     std::to_string(j + 1) + " collide";
                break;
            }

    // val Omega(a) as a sum of per-root valuations; equality with m_nu
    // is the within-block unit condition.
    rep.m_nu = Rational(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const Rational d = nu[i] - nu[j];
            if (d > Rational(0)) rep.m_nu += d;
        }
    Rational omega_ord(0);
    bool omega_finite = true;
    for (std::size_t i = 0; i < n && omega_finite; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto o = detail::ord_one_minus_ratio(rep.coords[i], rep.coords[j]);
            if (!o) {
                omega_finite = false;
                break;
            }
            omega_ord += *o;
        }
    if (omega_finite) rep.val_omega = -omega_ord;
    const bool omega_ok = omega_finite && *rep.val_omega == rep.m_nu;

    // Characteristic polynomial of the witness must reproduce the polygon.
    std::vector<PuiseuxSeries> cp{PuiseuxSeries::constant(slope_lcm, CycloNumber(Rational(1)))};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<PuiseuxSeries> next(cp.size() + 1, PuiseuxSeries(slope_lcm));
        for (std::size_t k = 0; k < cp.size(); ++k) {
            next[k + 1] += cp[k];
            next[k] += -(cp[k] * rep.coords[i]);
        }
        cp = std::move(next);
    }
    bool polygon = true;
    std::vector<std::optional<long long>> orders(n);
    for (std::size_t i = 0; i < n && polygon; ++i) {
        const auto o = cp[i].ord();
        if (!o)
            orders[i] = std::nullopt;
        else if (o->is_integer())
            orders[i] = o->num();
        else
            polygon = false;  // a stratum point has coefficients over the base field
    }
    if (polygon) {
        const NewtonPolygon back = gl_newton_polygon(orders);
        polygon = back.blocks.size() == poly.blocks.size();
        for (std::size_t b = 0; polygon && b < back.blocks.size(); ++b)
            polygon = back.blocks[b].slope == poly.blocks[b].slope &&
                      back.blocks[b].size == poly.blocks[b].size;
    }

    rep.checks = {{"polygon", polygon},
                  {"galois", galois},
                  {"valuations", valuations},
                  {"regularity", regular && omega_ok}};
    return rep;
}

/**
 * Witness for a central Newton point of any supported type, following
 * the barycenter construction: omega_i(a) = eps^{m_i} * varpi_i(Exp e)
 * with m_i = <omega_i, nu> and e the alcove barycenter. The stored h is
 * the alcove homomorphism applied to the class of (lift - nu), and the
 * Galois check sigma(a) = h(a) is exact, coordinate by coordinate.
 */
inline WitnessReport build_witness_central(const RootSystem& rs, const AmbientLattice& amb,
                                           const RatVec& nu, const WeylGroup& group)
{
    const std::size_t l = rs.rank();
    const std::size_t n = amb.n;
    if (nu.size() != n) throw std::invalid_argument("build_witness_central: shape mismatch");
    for (std::size_t i = 0; i < l; ++i)
        if (!ambient_root_pairing(amb, i, nu).is_zero())
            throw std::invalid_argument("build_witness_central: nu is not central");

    // Central class of lift - nu; throws when nu does not lift.
    const NewtonPoint np = levi_of(rs, amb, nu);
    const LeviDecomposition levi = mu_class(rs, amb, np);
    const CentralClass mu = normalize_central(rs, levi.components.at(0).mu.rep);
    const WeylElement& g = psi(rs, group, mu);

    RatVec m(n);
    long long bound = 1;
    for (std::size_t i = 0; i < n; ++i) {
        m[i] = ambient_omega_pairing(amb, i, nu);
        bound = lcm_ll(bound, m[i].den());
    }

    const AlcovePoint e = barycenter(rs);
    const TorusPoint u = reduce_torus(e.coords);

    // a in omega coordinates.
    std::vector<PuiseuxSeries> a_omega;
    for (std::size_t i = 0; i < n; ++i) {
        const CycloNumber c = i < l ? character_value(rs, rs.fund_weight(i), u)
                                    : CycloNumber(Rational(1));
        a_omega.push_back(PuiseuxSeries::monomial(bound, m[i], c));
    }

    // Action of g on the omega basis: g^{-1} omega_i = omega_i - sum_k c_k alpha_k
    // with integral c solved from the coroot pairings, then alpha_k expanded
    // back through omega. Rows l..n-1 stay fixed.
    const RatMat omega_inv = rat_inverse(to_rational(amb.omega));
    RatMat roots_in_omega = mat_mul(to_rational(amb.root_covectors), omega_inv);
    IntMat omega_action(n, IntVec(n, 0));
    const RatMat cartan_inv = rs.inv_cartan();
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= l) {
            omega_action[i][i] = 1;
            continue;
        }
        RatVec q(l);
        for (std::size_t j = 0; j < l; ++j)
            q[j] = Rational(g.matrix[i][j]) - Rational(i == j ? 1 : 0);
        // C * c = -q
        RatVec c = mat_vec(cartan_inv, q);
        for (auto& v : c) v = -v;
        RatVec row(n, Rational(0));
        row[i] = Rational(1);
        for (std::size_t k = 0; k < l; ++k)
            for (std::size_t mcol = 0; mcol < n; ++mcol)
                row[mcol] -= c[k] * roots_in_omega[k][mcol];
        for (std::size_t mcol = 0; mcol < n; ++mcol) {
            if (!row[mcol].is_integer())
                throw std::logic_error("build_witness_central: omega action is not integral");
            omega_action[i][mcol] = row[mcol].num();
        }
    }

    WitnessReport rep;
    rep.h = g;
    {
        IntMat ambient = identity_matrix<long long>(n);
        for (const std::size_t i : group.word_of(g)) {
            IntMat refl = identity_matrix<long long>(n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t cc = 0; cc < n; ++cc)
                    refl[r][cc] -= amb.coroot_embed[r][i] * amb.root_covectors[i][cc];
            ambient = mat_mul(ambient, refl);
        }
        rep.h_ambient = std::move(ambient);
    }

    bool valuations = true;
    for (std::size_t i = 0; i < n && valuations; ++i)
        valuations = a_omega[i].ord() && *a_omega[i].ord() == m[i];

    bool galois = true;
    for (std::size_t i = 0; i < n && galois; ++i) {
        PuiseuxSeries rhs = PuiseuxSeries::constant(bound, CycloNumber(Rational(1)));
        for (std::size_t k = 0; k < n; ++k)
            if (omega_action[i][k] != 0) rhs *= a_omega[k].pow(omega_action[i][k]);
        galois = a_omega[i].sigma() == rhs;
    }

    // Omega(a) = prod over roots of (1 - alpha(u)): each factor must be a
    // nonzero constant in the cyclotomic field.
    bool regular = true;
    for (const auto& alpha : rs.roots()) {
        const CycloNumber v = character_value(rs, to_rational(alpha), u);
        if ((CycloNumber(Rational(1)) - v).is_zero()) {
            regular = false;
            break;
        }
    }
    rep.m_nu = Rational(0);
    if (regular) rep.val_omega = Rational(0);

    // Dual-basis coordinates of a (for GL presets these are the diagonal
    // entries): e_j^* expanded through omega.
    const RatMat basis_t_inv = rat_inverse(to_rational(transpose(amb.omega)));
    for (std::size_t j = 0; j < n; ++j) {
        PuiseuxSeries coord = PuiseuxSeries::constant(bound, CycloNumber(Rational(1)));
        for (std::size_t i = 0; i < n; ++i) {
            const Rational c = basis_t_inv[i][j];
            if (c.is_zero()) continue;
            if (!c.is_integer())
                throw std::logic_error("build_witness_central: omega basis is not unimodular");
            coord *= a_omega[i].pow(c.num());
        }
        rep.coords.push_back(std::move(coord));
    }

    rep.checks = {{"valuations", valuations}, {"galois", galois}, {"regularity", regular}};
    return rep;
}

}  // namespace strata
