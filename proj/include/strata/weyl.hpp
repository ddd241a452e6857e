#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "strata/linalg.hpp"
#include "strata/rootsys.hpp"

namespace strata {

/**
 * A Weyl group element as an integer matrix on simple-coroot
 * coordinates, together with a reduced word in the simple reflections
 * (0-based generator indices) when one is known.
 */
struct WeylElement {
    IntMat matrix;
    std::vector<std::size_t> word;

    bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
};

namespace detail {

inline std::size_t matrix_key_hash(const IntMat& m)
{
    std::size_t h = 1469598103934665603ULL;
    for (const auto& row : m)
        for (long long v : row) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL;
            h *= 1099511628211ULL;
        }
    return h;
}

struct MatHash {
    std::size_t operator()(const IntMat& m) const { return matrix_key_hash(m); }
};

}  // namespace detail

/// Thrown by enumeration when the group is larger than the cap.
class EnumerationCapExceeded : public std::runtime_error {
public:
    EnumerationCapExceeded(std::size_t partial, long long classical)
        : std::runtime_error("Weyl group enumeration cap exceeded: " + std::to_string(partial) +
                             " elements found, classical order " +
                             (classical > 0 ? std::to_string(classical) : std::string("unknown"))),
          partial_count(partial),
          classical_order(classical)
    {
    }

    std::size_t partial_count;
    long long classical_order;
};

/**
 * A fully enumerated Weyl group. Elements are listed breadth-first by
 * word length with lexicographic tie-break, so element 0 is the
 * identity and the stored words are reduced.
 */
class WeylGroup {
public:
    static constexpr std::size_t kDefaultCap = 60000;

    /// Closure of the simple reflections. `classical_order`, when known,
    /// lets the cap be checked before doing any work.
    static WeylGroup enumerate(const RootSystem& rs, std::size_t cap = kDefaultCap,
                               long long classical_order = -1)
    {
        if (classical_order > 0 && static_cast<std::size_t>(classical_order) > cap)
            throw EnumerationCapExceeded(0, classical_order);

        WeylGroup g(rs);
        const std::size_t l = rs.rank();
        std::vector<IntMat> gens(l);
        for (std::size_t i = 0; i < l; ++i) gens[i] = rs.simple_reflection_coroot(i);

        WeylElement id{identity_matrix<long long>(l), {}};
        g.push(std::move(id));
        std::size_t frontier_begin = 0;
        while (frontier_begin < g.elements_.size()) {
            const std::size_t frontier_end = g.elements_.size();
            for (std::size_t e = frontier_begin; e < frontier_end; ++e)
                for (std::size_t i = 0; i < l; ++i) {
                    IntMat m = mat_mul(g.elements_[e].matrix, gens[i]);
                    if (g.index_.count(m)) continue;
                    if (g.elements_.size() >= cap)
                        throw EnumerationCapExceeded(g.elements_.size(), classical_order);
                    WeylElement w;
                    w.word = g.elements_[e].word;
                    w.word.push_back(i);
                    w.matrix = std::move(m);
                    g.push(std::move(w));
                }
            frontier_begin = frontier_end;
        }
        return g;
    }

    const RootSystem& root_system() const { return *rs_; }
    std::size_t size() const { return elements_.size(); }
    const WeylElement& operator[](std::size_t i) const { return elements_[i]; }
    const std::vector<WeylElement>& elements() const { return elements_; }
    const WeylElement& identity() const { return elements_[0]; }

    bool contains(const WeylElement& w) const { return index_.count(w.matrix) != 0; }

    std::size_t index_of(const WeylElement& w) const
    {
        const auto it = index_.find(w.matrix);
        if (it == index_.end()) throw std::invalid_argument("WeylGroup: element not in group");
        return it->second;
    }

    /// Product, with the stored reduced word of the result.
    WeylElement multiply(const WeylElement& a, const WeylElement& b) const
    {
        return elements_[index_of(WeylElement{mat_mul(a.matrix, b.matrix), {}})];
    }

    WeylElement inverse(const WeylElement& a) const
    {
        // a^{-1} = a^{order-1}
        const long long n = element_order(a);
        WeylElement acc = identity();
        for (long long k = 0; k + 1 < n; ++k) acc = multiply(acc, a);
        return acc;
    }

    /// Word in the simple reflections whose product is `w`.
    const std::vector<std::size_t>& word_of(const WeylElement& w) const
    {
        return elements_[index_of(w)].word;
    }

    static long long element_order(const WeylElement& w)
    {
        const std::size_t l = w.matrix.size();
        const IntMat id = identity_matrix<long long>(l);
        IntMat acc = w.matrix;
        long long n = 1;
        while (acc != id) {
            acc = mat_mul(acc, w.matrix);
            ++n;
            if (n > 1000000) throw std::logic_error("element_order: not of finite order");
        }
        return n;
    }

private:
    explicit WeylGroup(const RootSystem& rs) : rs_(&rs) {}

    void push(WeylElement w)
    {
        index_.emplace(w.matrix, elements_.size());
        elements_.push_back(std::move(w));
    }

    const RootSystem* rs_;
    std::vector<WeylElement> elements_;
    std::unordered_map<IntMat, std::size_t, detail::MatHash> index_;
};

/// Applies a Weyl element to a coweight-side vector.
inline RatVec act(const WeylElement& w, const RatVec& v)
{
    return mat_vec(to_rational(w.matrix), v);
}

/**
 * Characteristic polynomial det(t*I - M) of the coroot-coordinate
 * matrix, by the Faddeev-LeVerrier recurrence; coefficients ascending,
 * always integral for a finite-order integer matrix.
 */
inline IntVec char_poly(const WeylElement& w)
{
    const std::size_t l = w.matrix.size();
    const RatMat m = to_rational(w.matrix);
    RatVec coeff(l + 1, Rational(0));
    coeff[l] = Rational(1);
    RatMat aux;
    for (std::size_t k = 1; k <= l; ++k) {
        if (k == 1) {
            aux = m;
        } else {
            // aux = M * (aux + c_{l-k+1} * I)
            for (std::size_t i = 0; i < l; ++i) aux[i][i] += coeff[l - k + 1];
            aux = mat_mul(m, aux);
        }
        Rational tr(0);
        for (std::size_t i = 0; i < l; ++i) tr += aux[i][i];
        coeff[l - k] = -(tr / Rational(static_cast<long long>(k)));
    }
    IntVec out(l + 1);
    for (std::size_t i = 0; i <= l; ++i) {
        if (!coeff[i].is_integer()) throw std::logic_error("char_poly: non-integral coefficient");
        out[i] = coeff[i].num();
    }
    return out;
}

/**
 * Decides conjugacy inside a fully enumerated group by breadth-first
 * closure of {w1} under conjugation by the simple reflections.
 */
inline bool are_conjugate(const WeylElement& w1, const WeylElement& w2, const WeylGroup& group)
{
    if (!group.contains(w1) || !group.contains(w2))
        throw std::invalid_argument("are_conjugate: element not in group");
    if (w1.matrix == w2.matrix) return true;

    const RootSystem& rs = group.root_system();
    const std::size_t l = rs.rank();
    std::vector<IntMat> gens(l);
    for (std::size_t i = 0; i < l; ++i) gens[i] = rs.simple_reflection_coroot(i);

    std::unordered_map<IntMat, bool, detail::MatHash> seen;
    std::deque<IntMat> queue;
    seen.emplace(w1.matrix, true);
    queue.push_back(w1.matrix);
    while (!queue.empty()) {
        IntMat m = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < l; ++i) {
            IntMat c = mat_mul(gens[i], mat_mul(m, gens[i]));
            if (c == w2.matrix) return true;
            if (seen.emplace(c, true).second) queue.push_back(std::move(c));
        }
    }
    return false;
}

/// Conjugacy class of `w` as indices into the enumerated group.
inline std::vector<std::size_t> conjugacy_class_of(const WeylElement& w, const WeylGroup& group)
{
    const RootSystem& rs = group.root_system();
    const std::size_t l = rs.rank();
    std::vector<IntMat> gens(l);
    for (std::size_t i = 0; i < l; ++i) gens[i] = rs.simple_reflection_coroot(i);

    std::unordered_map<IntMat, bool, detail::MatHash> seen;
    std::deque<IntMat> queue;
    std::vector<std::size_t> members;
    seen.emplace(w.matrix, true);
    queue.push_back(w.matrix);
    members.push_back(group.index_of(w));
    while (!queue.empty()) {
        IntMat m = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < l; ++i) {
            IntMat c = mat_mul(gens[i], mat_mul(m, gens[i]));
            if (seen.emplace(c, true).second) {
                members.push_back(group.index_of(WeylElement{c, {}}));
                queue.push_back(std::move(c));
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace strata
