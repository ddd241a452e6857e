#pragma once

#include <stdexcept>
#include <string>

#include "strata/linalg.hpp"
#include "strata/rootsys.hpp"

namespace strata {

/**
 * An ambient cocharacter lattice X_*(A) around the coroot lattice of a
 * root system, carrying enough of the character side to evaluate roots
 * and the distinguished basis omega_1..omega_n on ambient vectors.
 *
 * Fields (rows/columns are ambient coordinates):
 *  - basis: integer n x n matrix whose columns generate X_*(A);
 *  - coroot_embed: n x l matrix, column i = simple coroot alpha_i^vee;
 *  - root_covectors: l x n matrix, row i = alpha_i as a functional
 *    (roots vanish on the central directions, which pins the extension
 *    off the coroot span);
 *  - omega: n x n matrix, row i = omega_i as a functional; rows 1..l
 *    lift the fundamental weights, rows l+1..n span the characters
 *    trivial on the derived subgroup.
 *
 * Shipped presets: the simply connected lattice (= the coroot lattice)
 * and GL_n.
 */
struct AmbientLattice {
    std::size_t n = 0;
    IntMat basis;
    IntMat coroot_embed;
    IntMat root_covectors;
    IntMat omega;
    std::string label;
};

/// Consistency of an ambient lattice against its root system:
/// root_covectors * coroot_embed equals the transposed Cartan matrix and
/// omega * coroot_embed stacks the identity over zeroes.
inline void validate_ambient(const RootSystem& rs, const AmbientLattice& amb)
{
    const std::size_t l = rs.rank();
    if (amb.coroot_embed.size() != amb.n || amb.root_covectors.size() != l ||
        amb.omega.size() != amb.n || amb.basis.size() != amb.n)
        throw std::invalid_argument("AmbientLattice: shape mismatch");
    const IntMat pair_rc = mat_mul(amb.root_covectors, amb.coroot_embed);
    const IntMat ct = transpose(rs.cartan());
    if (pair_rc != ct) throw std::invalid_argument("AmbientLattice: root/coroot pairings disagree with the Cartan matrix");
    const IntMat pair_oc = mat_mul(amb.omega, amb.coroot_embed);
    for (std::size_t i = 0; i < amb.n; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            const long long expect = (i == j) ? 1 : 0;
            if (pair_oc[i][j] != expect)
                throw std::invalid_argument("AmbientLattice: omega rows are not dual lifts");
        }
}

/// The semisimple simply connected preset: X_*(A) = Q(R^vee), ambient
/// coordinates = simple-coroot coordinates.
inline AmbientLattice ambient_simply_connected(const RootSystem& rs)
{
    const std::size_t l = rs.rank();
    AmbientLattice amb;
    amb.n = l;
    amb.basis = identity_matrix<long long>(l);
    amb.coroot_embed = identity_matrix<long long>(l);
    amb.root_covectors = transpose(rs.cartan());
    amb.omega = identity_matrix<long long>(l);
    amb.label = "sc:" + rs.kind();
    validate_ambient(rs, amb);
    return amb;
}

/// The GL_n preset on Z^n with alpha_i^vee = e_i - e_{i+1}; the root
/// system is A_{n-1}, and omega_i = e_1^* + ... + e_i^*.
inline AmbientLattice ambient_gl(std::size_t n)
{
    if (n < 2) throw std::invalid_argument("ambient_gl: n must be at least 2");
    const std::size_t l = n - 1;
    AmbientLattice amb;
    amb.n = n;
    amb.basis = identity_matrix<long long>(n);
    amb.coroot_embed = IntMat(n, IntVec(l, 0));
    for (std::size_t i = 0; i < l; ++i) {
        amb.coroot_embed[i][i] = 1;
        amb.coroot_embed[i + 1][i] = -1;
    }
    amb.root_covectors = IntMat(l, IntVec(n, 0));
    for (std::size_t i = 0; i < l; ++i) {
        amb.root_covectors[i][i] = 1;
        amb.root_covectors[i][i + 1] = -1;
    }
    amb.omega = IntMat(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= i; ++k) amb.omega[i][k] = 1;
    amb.label = "GL" + std::to_string(n);
    return amb;
}

/// <alpha_i, v> for an ambient vector v.
inline Rational ambient_root_pairing(const AmbientLattice& amb, std::size_t i, const RatVec& v)
{
    Rational acc(0);
    for (std::size_t k = 0; k < amb.n; ++k) acc += Rational(amb.root_covectors[i][k]) * v[k];
    return acc;
}

/// <omega_i, v> for an ambient vector v.
inline Rational ambient_omega_pairing(const AmbientLattice& amb, std::size_t i, const RatVec& v)
{
    Rational acc(0);
    for (std::size_t k = 0; k < amb.n; ++k) acc += Rational(amb.omega[i][k]) * v[k];
    return acc;
}

}  // namespace strata
