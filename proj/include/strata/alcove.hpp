#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "strata/rootsys.hpp"
#include "strata/weyl.hpp"

namespace strata {

/**
 * A point of the affine space E carrying the alcove geometry, written in
 * simple-coroot coordinates. E is identified with V* through the base
 * vertex f0 (the functional vanishing on all simple roots), so the wall
 * attached to the affine simple root reads 1 - <highest root, p>.
 */
struct AlcovePoint {
    RatVec coords;

    bool operator==(const AlcovePoint& o) const { return coords == o.coords; }
};

/// Element of the extended affine Weyl group: p -> linear(p) + translation,
/// with the translation in the coweight lattice P(R^vee).
struct AffineMap {
    WeylElement linear;
    RatVec translation;
};

inline AffineMap affine_compose(const AffineMap& f, const AffineMap& g)
{
    // (w,t) o (w',t') = (w w', t + w t')
    return AffineMap{WeylElement{mat_mul(f.linear.matrix, g.linear.matrix), {}},
                     vec_add(f.translation, act(f.linear, g.translation))};
}

inline RatVec affine_apply(const AffineMap& f, const RatVec& p)
{
    return vec_add(act(f.linear, p), f.translation);
}

/// Strict inequalities 0 < <alpha_i, p> for all i and <highest root, p> < 1.
inline bool in_open_alcove(const RootSystem& rs, const AlcovePoint& p)
{
    for (std::size_t i = 0; i < rs.rank(); ++i)
        if (!(rs.simple_pairing(i, p.coords) > Rational(0))) return false;
    return rs.pairing(rs.highest_root(), p.coords) < Rational(1);
}

/**
 * The l+1 vertices of the closed fundamental alcove: the origin and the
 * fundamental coweights divided by their marks. Each vertex meets
 * exactly l of the l+1 walls.
 */
inline std::vector<AlcovePoint> fundamental_alcove_vertices(const RootSystem& rs)
{
    std::vector<AlcovePoint> vs;
    vs.push_back(AlcovePoint{RatVec(rs.rank(), Rational(0))});
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        RatVec v = rs.fund_coweight(i);
        const Rational d(rs.marks()[i + 1]);
        for (auto& c : v) c /= d;
        vs.push_back(AlcovePoint{std::move(v)});
    }
    return vs;
}

/// Arithmetic mean of the alcove vertices; always interior.
inline AlcovePoint barycenter(const RootSystem& rs)
{
    const auto vs = fundamental_alcove_vertices(rs);
    RatVec acc(rs.rank(), Rational(0));
    for (const auto& v : vs) acc = vec_add(acc, v.coords);
    const Rational f(1, static_cast<long long>(vs.size()));
    for (auto& c : acc) c *= f;
    return AlcovePoint{std::move(acc)};
}

/**
 * The homomorphism P(R^vee)/Q(R^vee) -> W: the unique w with
 * w(e) = e - rep(mu) for the alcove barycenter e. Uniqueness holds
 * because only the identity of the affine Weyl group fixes an interior
 * point of an alcove.
 */
inline const WeylElement& psi(const RootSystem& rs, const WeylGroup& group, const CentralClass& mu)
{
    const AlcovePoint e = barycenter(rs);
    const RatVec target = vec_sub(e.coords, mu.rep);
    for (const auto& w : group.elements())
        if (act(w, e.coords) == target) return w;
    throw std::logic_error("psi: no Weyl element maps the barycenter to its translate");
}

/// psi for every coset representative, in coset_representatives order.
inline std::vector<WeylElement> psi_table(const RootSystem& rs, const WeylGroup& group)
{
    std::vector<WeylElement> t;
    for (const auto& mu : coset_representatives(rs)) t.push_back(psi(rs, group, mu));
    return t;
}

/**
 * Independent confirmation of psi: the affine map p -> psi(mu)(p) + rep(mu)
 * must permute the alcove vertex set and fix the barycenter.
 */
inline bool validate_alcove_automorphism(const RootSystem& rs, const WeylGroup& group,
                                         const CentralClass& mu)
{
    const AffineMap gamma{psi(rs, group, mu), mu.rep};
    const auto vs = fundamental_alcove_vertices(rs);
    std::vector<RatVec> image;
    for (const auto& v : vs) image.push_back(affine_apply(gamma, v.coords));
    for (const auto& v : vs)
        if (std::find(image.begin(), image.end(), v.coords) == image.end()) return false;
    return affine_apply(gamma, barycenter(rs).coords) == barycenter(rs).coords;
}

}  // namespace strata
