#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "strata/linalg.hpp"
#include "strata/rational.hpp"

namespace strata {

/**
 * Complete combinatorial datum of a reduced irreducible root system.
 *
 * Coordinate conventions, fixed once for the whole library:
 *  - weight-side vectors (roots, fundamental weights) are stored in the
 *    simple-root basis;
 *  - coweight-side vectors (coroots, fundamental coweights, torus
 *    points) are stored in the simple-coroot basis, so the coroot
 *    lattice is exactly Z^l and Weyl matrices are integral;
 *  - cartan()[i][j] = <alpha_j, alpha_i^vee>, and the natural pairing of
 *    a weight a with a coweight b is a^T * cartan^T * b.
 *
 * Roots and coroots are index-aligned: coroot(k) is the coroot of
 * root(k).
 */
class RootSystem {
public:
    RootSystem(std::string kind, IntMat cartan) : kind_(std::move(kind)), cartan_(std::move(cartan))
    {
        rank_ = cartan_.size();
        if (rank_ == 0) throw std::invalid_argument("RootSystem: empty Cartan matrix");
        for (std::size_t i = 0; i < rank_; ++i) {
            if (cartan_[i].size() != rank_) throw std::invalid_argument("RootSystem: Cartan not square");
            if (cartan_[i][i] != 2) throw std::invalid_argument("RootSystem: Cartan diagonal must be 2");
            for (std::size_t j = 0; j < rank_; ++j)
                if (i != j && cartan_[i][j] > 0)
                    throw std::invalid_argument("RootSystem: positive off-diagonal Cartan entry");
        }
        if (!connected()) throw std::invalid_argument("RootSystem: Cartan matrix is not irreducible");
        inv_cartan_ = rat_inverse(to_rational(cartan_));
        generate_roots();
        compute_marks();
    }

    const std::string& kind() const { return kind_; }
    std::size_t rank() const { return rank_; }
    const IntMat& cartan() const { return cartan_; }
    const RatMat& inv_cartan() const { return inv_cartan_; }

    const std::vector<IntVec>& roots() const { return roots_; }
    const std::vector<IntVec>& coroots() const { return coroots_; }
    const IntVec& highest_root() const { return highest_root_; }

    /// marks()[0] == 1 is the affine mark; marks()[i] is the coefficient
    /// of alpha_i in the highest root for i >= 1.
    const IntVec& marks() const { return marks_; }

    /// 0-based indices i with mark delta_i == 1.
    const std::vector<std::size_t>& minuscule_indices() const { return minuscule_; }

    /// |P(R^vee)/Q(R^vee)| = det of the Cartan matrix.
    long long index() const { return int_det(cartan_); }

    /// Fundamental coweight in simple-coroot coordinates.
    RatVec fund_coweight(std::size_t j) const { return inv_cartan_[j]; }

    /// Fundamental weight in simple-root coordinates.
    RatVec fund_weight(std::size_t i) const
    {
        RatVec w(rank_);
        for (std::size_t k = 0; k < rank_; ++k) w[k] = inv_cartan_[k][i];
        return w;
    }

    /// <weight, coweight> for a weight in root coordinates and a coweight
    /// in coroot coordinates.
    Rational pairing(const RatVec& weight, const RatVec& coweight) const
    {
        if (weight.size() != rank_ || coweight.size() != rank_)
            throw std::invalid_argument("RootSystem::pairing: shape mismatch");
        Rational acc(0);
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < rank_; ++j)
                acc += weight[i] * Rational(cartan_[j][i]) * coweight[j];
        return acc;
    }

    Rational pairing(const IntVec& weight, const RatVec& coweight) const
    {
        return pairing(to_rational(weight), coweight);
    }

    /// <alpha_i, v> for a coweight v.
    Rational simple_pairing(std::size_t i, const RatVec& coweight) const
    {
        Rational acc(0);
        for (std::size_t j = 0; j < rank_; ++j) acc += Rational(cartan_[j][i]) * coweight[j];
        return acc;
    }

    /// Matrix of s_i on simple-coroot coordinates.
    IntMat simple_reflection_coroot(std::size_t i) const
    {
        IntMat m = identity_matrix<long long>(rank_);
        for (std::size_t j = 0; j < rank_; ++j) m[i][j] -= cartan_[j][i];
        return m;
    }

    /// Matrix of s_i on simple-root coordinates.
    IntMat simple_reflection_root(std::size_t i) const
    {
        IntMat m = identity_matrix<long long>(rank_);
        for (std::size_t j = 0; j < rank_; ++j) m[i][j] -= cartan_[i][j];
        return m;
    }

    std::vector<IntVec> positive_roots() const
    {
        std::vector<IntVec> pos;
        for (const auto& r : roots_)
            if (height(r) > 0) pos.push_back(r);
        return pos;
    }

    /// Sum of the positive roots (= 2*rho), in simple-root coordinates.
    IntVec two_rho() const
    {
        IntVec acc(rank_, 0);
        for (const auto& r : positive_roots())
            for (std::size_t i = 0; i < rank_; ++i) acc[i] += r[i];
        return acc;
    }

    bool is_root(const IntVec& v) const
    {
        return std::find(roots_.begin(), roots_.end(), v) != roots_.end();
    }

    /// Membership in the coweight lattice P(R^vee): integral pairing with
    /// every simple root.
    bool in_coweight_lattice(const RatVec& v) const
    {
        for (std::size_t i = 0; i < rank_; ++i)
            if (!simple_pairing(i, v).is_integer()) return false;
        return true;
    }

    static long long height(const IntVec& root)
    {
        long long h = 0;
        for (auto c : root) h += c;
        return h;
    }

private:
    bool connected() const
    {
        std::vector<bool> seen(rank_, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            const std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < rank_; ++j)
                if (!seen[j] && cartan_[i][j] != 0) {
                    seen[j] = true;
                    stack.push_back(j);
                }
        }
        return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    }

    void generate_roots()
    {
        std::set<IntVec> seen;
        std::vector<std::pair<IntVec, IntVec>> work;
        for (std::size_t i = 0; i < rank_; ++i) {
            IntVec a(rank_, 0), b(rank_, 0);
            a[i] = 1;
            b[i] = 1;
            seen.insert(a);
            work.emplace_back(a, b);
        }
        std::vector<std::pair<IntVec, IntVec>> all = work;
        while (!work.empty()) {
            auto [a, b] = work.back();
            work.pop_back();
            for (std::size_t i = 0; i < rank_; ++i) {
                IntVec ra = a, rb = b;
                long long pa = 0, pb = 0;
                for (std::size_t k = 0; k < rank_; ++k) {
                    pa += cartan_[i][k] * a[k];
                    pb += cartan_[k][i] * b[k];
                }
                ra[i] -= pa;
                rb[i] -= pb;
                if (seen.insert(ra).second) {
                    all.emplace_back(ra, rb);
                    work.emplace_back(ra, rb);
                }
            }
            if (seen.size() > 1000) throw std::logic_error("RootSystem: root closure runaway");
        }
        std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
            const long long hx = height(x.first), hy = height(y.first);
            if (hx != hy) return hx < hy;
            return x.first < y.first;
        });
        for (auto& [a, b] : all) {
            roots_.push_back(a);
            coroots_.push_back(b);
        }
    }

    void compute_marks()
    {
        std::size_t best = 0;
        for (std::size_t k = 1; k < roots_.size(); ++k)
            if (height(roots_[k]) > height(roots_[best])) best = k;
        highest_root_ = roots_[best];
        marks_.assign(rank_ + 1, 0);
        marks_[0] = 1;
        for (std::size_t i = 0; i < rank_; ++i) marks_[i + 1] = highest_root_[i];
        for (std::size_t i = 0; i < rank_; ++i)
            if (marks_[i + 1] == 1) minuscule_.push_back(i);
    }

    std::string kind_;
    std::size_t rank_;
    IntMat cartan_;
    RatMat inv_cartan_;
    std::vector<IntVec> roots_;
    std::vector<IntVec> coroots_;
    IntVec highest_root_;
    IntVec marks_;
    std::vector<std::size_t> minuscule_;
};

namespace detail {

inline IntMat chain_cartan(std::size_t l)
{
    IntMat c = identity_matrix<long long>(l);
    for (std::size_t i = 0; i < l; ++i) c[i][i] = 2;
    for (std::size_t i = 0; i + 1 < l; ++i) {
        c[i][i + 1] = -1;
        c[i + 1][i] = -1;
    }
    return c;
}

struct TypeInfo {
    IntMat cartan;
    long long weyl_order;
    std::size_t root_count;
};

inline long long factorial(long long n)
{
    long long f = 1;
    for (long long k = 2; k <= n; ++k) f *= k;
    return f;
}

inline TypeInfo type_info(char family, std::size_t l)
{
    switch (family) {
        case 'A': {
            if (l < 1 || l > 8) throw std::invalid_argument("build_root_system: rank out of range for type A");
            return {chain_cartan(l), factorial(static_cast<long long>(l) + 1),
                    l * (l + 1)};
        }
        case 'B': {
            if (l < 2 || l > 6) throw std::invalid_argument("build_root_system: rank out of range for type B");
            IntMat c = chain_cartan(l);
            c[l - 1][l - 2] = -2;  // <alpha_{l-1}, alpha_l^vee> = -2
            return {c, (1LL << l) * factorial(static_cast<long long>(l)), 2 * l * l};
        }
        case 'C': {
            if (l < 2 || l > 6) throw std::invalid_argument("build_root_system: rank out of range for type C");
            IntMat c = chain_cartan(l);
            c[l - 2][l - 1] = -2;
            return {c, (1LL << l) * factorial(static_cast<long long>(l)), 2 * l * l};
        }
        case 'D': {
            if (l < 4 || l > 6) throw std::invalid_argument("build_root_system: rank out of range for type D");
            IntMat c = chain_cartan(l);
            c[l - 2][l - 1] = 0;
            c[l - 1][l - 2] = 0;
            c[l - 3][l - 1] = -1;
            c[l - 1][l - 3] = -1;
            return {c, (1LL << (l - 1)) * factorial(static_cast<long long>(l)), 2 * l * (l - 1)};
        }
        case 'E': {
            if (l < 6 || l > 8) throw std::invalid_argument("build_root_system: rank out of range for type E");
            IntMat c = identity_matrix<long long>(l);
            for (std::size_t i = 0; i < l; ++i) c[i][i] = 2;
            auto link = [&](std::size_t a, std::size_t b) {  // 1-based labels
                c[a - 1][b - 1] = -1;
                c[b - 1][a - 1] = -1;
            };
            link(1, 3);
            link(3, 4);
            link(4, 5);
            link(5, 6);
            if (l >= 7) link(6, 7);
            if (l >= 8) link(7, 8);
            link(2, 4);
            const long long orders[3] = {51840, 2903040, 696729600};
            const std::size_t counts[3] = {72, 126, 240};
            return {c, orders[l - 6], counts[l - 6]};
        }
        case 'F': {
            if (l != 4) throw std::invalid_argument("build_root_system: type F has rank 4");
            IntMat c = chain_cartan(4);
            c[2][1] = -2;  // <alpha_2, alpha_3^vee> = -2
            return {c, 1152, 48};
        }
        case 'G': {
            if (l != 2) throw std::invalid_argument("build_root_system: type G has rank 2");
            return {IntMat{{2, -3}, {-1, 2}}, 12, 12};
        }
        default:
            throw std::invalid_argument("build_root_system: unknown family");
    }
}

}  // namespace detail

/// Classical order of the Weyl group for a supported type string.
inline long long classical_weyl_order(std::string_view kind)
{
    if (kind.size() < 2) throw std::invalid_argument("classical_weyl_order: bad type string");
    return detail::type_info(kind[0], std::stoul(std::string(kind.substr(1)))).weyl_order;
}

/// Builds the root system for a type string "A1".."E8", validating the
/// classical root count.
inline RootSystem build_root_system(std::string_view kind)
{
    if (kind.size() < 2 || kind[0] < 'A' || kind[0] > 'G')
        throw std::invalid_argument("build_root_system: unknown type string '" + std::string(kind) + "'");
    std::size_t l = 0;
    try {
        l = std::stoul(std::string(kind.substr(1)));
    } catch (...) {
        throw std::invalid_argument("build_root_system: unknown type string '" + std::string(kind) + "'");
    }
    const detail::TypeInfo info = detail::type_info(kind[0], l);
    RootSystem rs(std::string(kind), info.cartan);
    if (rs.roots().size() != info.root_count)
        throw std::logic_error("build_root_system: root count mismatch for " + std::string(kind));
    return rs;
}

/// Builds an (irreducible) root system directly from a Cartan matrix;
/// used for Levi subsystems cut out of a larger diagram.
inline RootSystem root_system_from_cartan(IntMat cartan, std::string label)
{
    return RootSystem(std::move(label), std::move(cartan));
}

/// Connected components of the subdiagram induced on `subset` (0-based
/// simple-root indices); each component is returned in ascending order.
inline std::vector<std::vector<std::size_t>> diagram_components(const IntMat& cartan,
                                                                std::vector<std::size_t> subset)
{
    std::sort(subset.begin(), subset.end());
    std::vector<std::vector<std::size_t>> comps;
    std::set<std::size_t> left(subset.begin(), subset.end());
    while (!left.empty()) {
        std::vector<std::size_t> comp;
        std::vector<std::size_t> stack{*left.begin()};
        left.erase(left.begin());
        while (!stack.empty()) {
            const std::size_t i = stack.back();
            stack.pop_back();
            comp.push_back(i);
            for (auto it = left.begin(); it != left.end();) {
                if (cartan[i][*it] != 0) {
                    stack.push_back(*it);
                    it = left.erase(it);
                } else {
                    ++it;
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

/**
 * An element of P(R^vee)/Q(R^vee), held by its canonical representative:
 * the zero vector or a minuscule fundamental coweight.
 */
struct CentralClass {
    RatVec rep;

    bool is_zero() const
    {
        return std::all_of(rep.begin(), rep.end(), [](const Rational& r) { return r.is_zero(); });
    }

    /// Order in P(R^vee)/Q(R^vee) = lcm of coordinate denominators.
    long long order() const
    {
        long long n = 1;
        for (const auto& c : rep) n = lcm_ll(n, c.den());
        return n;
    }
};

/// Canonicalizes a coweight-lattice vector to its coset representative.
inline CentralClass normalize_central(const RootSystem& rs, const RatVec& v)
{
    if (v.size() != rs.rank()) throw std::invalid_argument("normalize_central: shape mismatch");
    if (!rs.in_coweight_lattice(v))
        throw std::invalid_argument("normalize_central: vector not in the coweight lattice");
    std::vector<RatVec> candidates;
    candidates.push_back(RatVec(rs.rank(), Rational(0)));
    for (const std::size_t j : rs.minuscule_indices()) candidates.push_back(rs.fund_coweight(j));
    CentralClass result;
    int hits = 0;
    for (const auto& c : candidates) {
        if (all_integral(vec_sub(v, c))) {
            result.rep = c;
            ++hits;
        }
    }
    if (hits != 1) throw std::logic_error("normalize_central: representative not unique");
    return result;
}

inline CentralClass central_add(const RootSystem& rs, const CentralClass& a, const CentralClass& b)
{
    return normalize_central(rs, vec_add(a.rep, b.rep));
}

inline CentralClass central_neg(const RootSystem& rs, const CentralClass& a)
{
    RatVec n(a.rep.size());
    for (std::size_t i = 0; i < n.size(); ++i) n[i] = -a.rep[i];
    return normalize_central(rs, n);
}

/**
 * The complete list {0} + {minuscule fundamental coweights} of coset
 * representatives of P(R^vee)/Q(R^vee); its length equals det(Cartan).
 */
inline std::vector<CentralClass> coset_representatives(const RootSystem& rs)
{
    std::vector<CentralClass> reps;
    reps.push_back(CentralClass{RatVec(rs.rank(), Rational(0))});
    for (const std::size_t j : rs.minuscule_indices()) reps.push_back(CentralClass{rs.fund_coweight(j)});
    return reps;
}

}  // namespace strata
