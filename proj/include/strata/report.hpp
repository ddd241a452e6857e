#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "strata/alcove.hpp"
#include "strata/ambient.hpp"
#include "strata/newton.hpp"
#include "strata/puiseux.hpp"
#include "strata/rootsys.hpp"
#include "strata/springer.hpp"
#include "strata/weyl.hpp"
#include "strata/witness.hpp"

namespace strata::report {

using ordered_json = nlohmann::ordered_json;

inline ordered_json rat_vec(const RatVec& v)
{
    ordered_json a = ordered_json::array();
    for (const auto& r : v) a.push_back(r.str());
    return a;
}

inline ordered_json int_vec(const IntVec& v)
{
    ordered_json a = ordered_json::array();
    for (long long x : v) a.push_back(x);
    return a;
}

inline ordered_json int_mat(const IntMat& m)
{
    ordered_json a = ordered_json::array();
    for (const auto& row : m) a.push_back(int_vec(row));
    return a;
}

inline ordered_json word_json(const std::vector<std::size_t>& word)
{
    ordered_json a = ordered_json::array();
    for (std::size_t i : word) a.push_back(i + 1);  // 1-based generator labels
    return a;
}

/// Monic integer polynomial (ascending coefficients) as "t^2+t+1".
inline std::string poly_str(const IntVec& coeffs)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const long long c = coeffs[k];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? "+" : "-");
        else if (c < 0) os << "-";
        const long long a = std::abs(c);
        if (k == 0)
            os << a;
        else {
            if (a != 1) os << a << "*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

inline ordered_json cyclo_json(const CycloNumber& c)
{
    ordered_json j;
    j["level"] = c.level();
    ordered_json coeffs = ordered_json::array();
    for (const auto& r : c.coeffs()) coeffs.push_back(r.str());
    j["coeffs"] = coeffs;
    return j;
}

/// A series as [[exponent, coefficient-level, coefficient-vector], ...].
inline ordered_json series_json(const PuiseuxSeries& s)
{
    ordered_json a = ordered_json::array();
    for (const auto& [e, c] : s.terms()) {
        ordered_json term = ordered_json::array();
        term.push_back(e.str());
        term.push_back(c.level());
        ordered_json coeffs = ordered_json::array();
        for (const auto& r : c.coeffs()) coeffs.push_back(r.str());
        term.push_back(coeffs);
        a.push_back(term);
    }
    return a;
}

inline ordered_json cycle_type_json(const std::vector<long long>& ct)
{
    ordered_json a = ordered_json::array();
    for (long long c : ct) a.push_back(c);
    return a;
}

// ---------------------------------------------------------------------------
// psi
// ---------------------------------------------------------------------------

inline ordered_json psi_report(const RootSystem& rs, const WeylGroup& group, bool& ok)
{
    ordered_json j;
    j["command"] = "psi";
    j["type"] = rs.kind();
    j["rank"] = rs.rank();
    j["weyl_order"] = group.size();
    j["center_order"] = rs.index();
    j["barycenter"] = rat_vec(barycenter(rs).coords);

    const auto reps = coset_representatives(rs);
    std::vector<WeylElement> images;
    ordered_json rows = ordered_json::array();
    bool all_valid = true;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const WeylElement& w = psi(rs, group, reps[i]);
        images.push_back(w);
        const bool fixed = act(w, barycenter(rs).coords) ==
                           vec_sub(barycenter(rs).coords, reps[i].rep);
        const bool valid = validate_alcove_automorphism(rs, group, reps[i]);
        all_valid = all_valid && fixed && valid;
        ordered_json row;
        row["index"] = i;
        row["rep"] = rat_vec(reps[i].rep);
        row["order_in_center"] = reps[i].order();
        row["psi_order"] = WeylGroup::element_order(w);
        row["word"] = word_json(group.word_of(w));
        row["matrix"] = int_mat(w.matrix);
        const IntVec cp = char_poly(w);
        row["char_poly"] = int_vec(cp);
        row["char_poly_str"] = poly_str(cp);
        row["fixed_point_identity"] = fixed;
        row["alcove_automorphism"] = valid;
        rows.push_back(std::move(row));
    }
    j["cosets"] = std::move(rows);

    bool homomorphism = true, injective = true, orders = true;
    for (std::size_t a = 0; a < reps.size(); ++a) {
        for (std::size_t b = 0; b < reps.size(); ++b) {
            const CentralClass sum = central_add(rs, reps[a], reps[b]);
            const auto it = std::find_if(reps.begin(), reps.end(),
                                         [&](const CentralClass& c) { return c.rep == sum.rep; });
            const WeylElement& ws = psi(rs, group, *it);
            if (mat_mul(images[a].matrix, images[b].matrix) != ws.matrix) homomorphism = false;
        }
        for (std::size_t b = a + 1; b < reps.size(); ++b)
            if (images[a].matrix == images[b].matrix) injective = false;
        IntMat pow = identity_matrix<long long>(rs.rank());
        for (long long k = 0; k < reps[a].order(); ++k) pow = mat_mul(pow, images[a].matrix);
        if (pow != identity_matrix<long long>(rs.rank())) orders = false;
    }
    j["checks"] = {{"homomorphism", homomorphism},
                   {"injective", injective},
                   {"order_divides_center_order", orders},
                   {"alcove_automorphisms", all_valid}};
    ok = homomorphism && injective && orders && all_valid;
    j["ok"] = ok;
    return j;
}

// ---------------------------------------------------------------------------
// alcove
// ---------------------------------------------------------------------------

inline ordered_json alcove_report(const RootSystem& rs, const WeylGroup& group, bool& ok)
{
    ordered_json j;
    j["command"] = "alcove";
    j["type"] = rs.kind();
    j["rank"] = rs.rank();
    j["marks"] = int_vec(rs.marks());
    ordered_json js = ordered_json::array();
    for (std::size_t i : rs.minuscule_indices()) js.push_back(i + 1);
    j["minuscule"] = js;

    ordered_json vs = ordered_json::array();
    for (const auto& v : fundamental_alcove_vertices(rs)) vs.push_back(rat_vec(v.coords));
    j["vertices"] = vs;
    const AlcovePoint e = barycenter(rs);
    j["barycenter"] = rat_vec(e.coords);
    const bool interior = in_open_alcove(rs, e);
    const bool regular = is_regular(rs, reduce_torus(e.coords));
    j["barycenter_interior"] = interior;
    j["barycenter_regular"] = regular;

    bool valid = true;
    for (const auto& mu : coset_representatives(rs))
        valid = valid && validate_alcove_automorphism(rs, group, mu);
    j["alcove_automorphisms"] = valid;
    ok = interior && regular && valid;
    j["ok"] = ok;
    return j;
}

// ---------------------------------------------------------------------------
// springer
// ---------------------------------------------------------------------------

inline ordered_json springer_report(const RootSystem& rs, const WeylGroup& group,
                                    std::optional<std::size_t> only_x, long long denom_bound,
                                    std::size_t samples, unsigned long long seed, bool& ok)
{
    ordered_json j;
    j["command"] = "springer";
    j["type"] = rs.kind();
    j["rank"] = rs.rank();
    j["weyl_order"] = group.size();
    j["center_order"] = rs.index();

    const TorusPoint u = reduce_torus(barycenter(rs).coords);
    const bool u_regular = is_regular(rs, u);
    j["barycenter_regular"] = u_regular;

    const auto reps = coset_representatives(rs);
    ordered_json rows = ordered_json::array();
    ordered_json failures = ordered_json::array();
    ok = u_regular;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (only_x && *only_x != i) continue;
        const CentralClass& x = reps[i];
        const WeylElement& px = psi(rs, group, x);

        const bool barycenter_identity = verifies_twist(rs, px, x, u);
        const std::size_t ax = a_of(rs, x);
        const auto hits = regular_twist_set(rs, x, group);
        // Both index lists are sorted, so set equality decides "exactly
        // the conjugacy class of psi(x)" in one pass.
        const std::vector<std::size_t> cls = conjugacy_class_of(px, group);
        const bool contains_psi =
            std::binary_search(hits.begin(), hits.end(), group.index_of(px));
        const bool single_class = hits == cls;
        const bool eigen = eigenvalue_check(rs, px, x);

        // Regular points exist in the solution set exactly on the class.
        bool witness_found = true;
        if (!hits.empty()) {
            const auto found =
                find_regular_solution(rs, group[hits.front()], x, denom_bound, samples, seed);
            witness_found = found.has_value() && is_regular(rs, *found) &&
                            verifies_twist(rs, group[hits.front()], x, *found);
        }

        const bool row_ok = barycenter_identity && !hits.empty() && contains_psi && single_class &&
                            eigen && witness_found;
        ok = ok && row_ok;
        if (!row_ok) {
            ordered_json f;
            f["type"] = rs.kind();
            f["x"] = i;
            f["rep"] = rat_vec(x.rep);
            f["psi_matrix"] = int_mat(px.matrix);
            failures.push_back(std::move(f));
        }

        ordered_json row;
        row["x"] = i;
        row["rep"] = rat_vec(x.rep);
        row["order"] = x.order();
        row["a_x"] = ax;
        row["psi_word"] = word_json(group.word_of(px));
        row["barycenter_identity"] = barycenter_identity;
        row["class_size"] = hits.size();
        row["expected_class_size"] = cls.size();
        row["single_class"] = single_class;
        row["contains_psi"] = contains_psi;
        row["eigenvalue_check"] = eigen;
        row["regular_witness"] = witness_found;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["failures"] = std::move(failures);
    j["ok"] = ok;
    return j;
}

// ---------------------------------------------------------------------------
// newton / witness
// ---------------------------------------------------------------------------

inline ordered_json levi_json(const LeviDecomposition& levi)
{
    ordered_json comps = ordered_json::array();
    for (const auto& c : levi.components) {
        ordered_json cj;
        ordered_json idx = ordered_json::array();
        for (std::size_t i : c.simple_indices) idx.push_back(i + 1);
        cj["simple_indices"] = idx;
        cj["rank"] = c.sub.rank();
        cj["mu_rep"] = rat_vec(c.mu.rep);
        cj["mu_order"] = c.mu.order();
        comps.push_back(std::move(cj));
    }
    ordered_json j;
    j["components"] = std::move(comps);
    j["lift"] = rat_vec(levi.lift);
    return j;
}

inline ordered_json twist_json(const NewtonTwist& tw)
{
    ordered_json j;
    j["matrix"] = int_mat(tw.w.matrix);
    j["ambient_matrix"] = int_mat(tw.ambient_matrix);
    j["word"] = word_json(tw.w.word);
    j["order"] = tw.order;
    j["char_poly"] = int_vec(tw.charpoly);
    j["char_poly_str"] = poly_str(tw.charpoly);
    if (!tw.cycle_type.empty()) j["cycle_type"] = cycle_type_json(tw.cycle_type);
    j["centralizer"] = "A^w";
    return j;
}

inline ordered_json polygon_json(const NewtonPolygon& poly)
{
    ordered_json blocks = ordered_json::array();
    for (const auto& b : poly.blocks) {
        ordered_json bj;
        bj["slope"] = b.slope.str();
        bj["size"] = b.size;
        blocks.push_back(std::move(bj));
    }
    ordered_json j;
    j["n"] = poly.n;
    j["blocks"] = std::move(blocks);
    return j;
}

inline ordered_json newton_report(const RootSystem& rs, const AmbientLattice& amb, const RatVec& nu,
                                  const NewtonPolygon* poly, std::size_t cap, bool& ok)
{
    ordered_json j;
    j["command"] = "newton";
    j["type"] = amb.label;
    j["nu"] = rat_vec(nu);
    const NewtonPoint np = levi_of(rs, amb, nu);
    const NewtonTwist tw = newton_twist(rs, amb, np, cap);
    ordered_json levi_indices = ordered_json::array();
    for (std::size_t i : np.levi) levi_indices.push_back(i + 1);
    j["levi_simple_indices"] = std::move(levi_indices);
    j["levi"] = levi_json(tw.levi);
    j["twist"] = twist_json(tw);
    j["m_nu"] = m_nu_ambient(rs, amb, nu).str();

    ok = true;
    if (poly) {
        j["polygon"] = polygon_json(*poly);
        const auto oracle = gl_cycle_type(*poly);
        j["oracle_cycle_type"] = cycle_type_json(oracle);
        const bool match = oracle == tw.cycle_type;
        j["cycle_type_match"] = match;
        ok = match;
    }
    j["ok"] = ok;
    return j;
}

inline ordered_json witness_json(const WitnessReport& rep, const std::string& type_label,
                                 const RatVec& nu, const std::string& construction, bool& ok)
{
    ordered_json j;
    j["command"] = "witness";
    j["type"] = type_label;
    j["nu"] = rat_vec(nu);
    j["construction"] = construction;
    ordered_json coords = ordered_json::array();
    for (const auto& s : rep.coords) coords.push_back(series_json(s));
    j["coordinates"] = coords;
    ordered_json h;
    h["ambient_matrix"] = int_mat(rep.h_ambient);
    h["matrix"] = int_mat(rep.h.matrix);
    const auto ct = permutation_cycle_type(rep.h_ambient);
    if (!ct.empty()) h["cycle_type"] = cycle_type_json(ct);
    j["h"] = std::move(h);
    ordered_json checks;
    for (const auto& [k, v] : rep.checks) checks[k] = v;
    j["checks"] = std::move(checks);
    j["m_nu"] = rep.m_nu.str();
    j["val_omega"] = rep.val_omega ? ordered_json(rep.val_omega->str()) : ordered_json(nullptr);
    if (!rep.failure_detail.empty()) j["failure_detail"] = rep.failure_detail;
    ok = rep.ok();
    j["ok"] = ok;
    return j;
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

inline std::vector<std::string> supported_types(std::size_t max_rank)
{
    std::vector<std::string> kinds;
    const auto add = [&](char f, std::size_t lo, std::size_t hi) {
        for (std::size_t l = lo; l <= hi && l <= max_rank; ++l)
            kinds.push_back(std::string(1, f) + std::to_string(l));
    };
    add('A', 1, 8);
    add('B', 2, 6);
    add('C', 2, 6);
    add('D', 4, 6);
    add('E', 6, 8);
    add('F', 4, 4);
    add('G', 2, 2);
    return kinds;
}

inline ordered_json table_report(std::size_t max_rank, std::size_t cap, std::size_t twist_cap,
                                 bool& ok)
{
    ordered_json j;
    j["command"] = "table";
    j["max_rank"] = max_rank;
    ordered_json rows = ordered_json::array();
    ok = true;
    for (const auto& kind : supported_types(max_rank)) {
        const RootSystem rs = build_root_system(kind);
        const long long classical = classical_weyl_order(kind);
        ordered_json row;
        row["type"] = kind;
        row["rank"] = rs.rank();
        row["weyl_order"] = classical;
        row["root_count"] = rs.roots().size();
        row["cartan_det"] = rs.index();
        const auto reps = coset_representatives(rs);
        row["coset_count"] = reps.size();
        const bool det_ok = static_cast<long long>(reps.size()) == rs.index();
        ok = ok && det_ok;
        row["coset_count_matches_det"] = det_ok;
        if (static_cast<std::size_t>(classical) <= cap) {
            const WeylGroup group = WeylGroup::enumerate(rs, cap, classical);
            const bool order_ok = static_cast<long long>(group.size()) == classical;
            ok = ok && order_ok;
            row["enumerated_order"] = group.size();
            row["order_matches_classical"] = order_ok;
            ordered_json psis = ordered_json::array();
            bool eigen_all = true;
            for (const auto& mu : reps) {
                const WeylElement& w = psi(rs, group, mu);
                ordered_json p;
                p["rep"] = rat_vec(mu.rep);
                p["order"] = WeylGroup::element_order(w);
                const IntVec cp = char_poly(w);
                p["char_poly"] = int_vec(cp);
                p["char_poly_str"] = poly_str(cp);
                const bool eigen = eigenvalue_check(rs, w, mu);
                eigen_all = eigen_all && eigen;
                p["eigenvalue_check"] = eigen;
                psis.push_back(std::move(p));
            }
            row["psi"] = std::move(psis);
            row["eigenvalue_checks"] = eigen_all;
            ok = ok && eigen_all;
            if (group.size() <= twist_cap) {
                ordered_json sizes = ordered_json::array();
                bool twists_ok = true;
                for (const auto& mu : reps) {
                    const auto hits = regular_twist_set(rs, mu, group);
                    sizes.push_back(hits.size());
                    const auto cls = conjugacy_class_of(psi(rs, group, mu), group);
                    twists_ok = twists_ok && hits.size() == cls.size();
                }
                row["twist_class_sizes"] = std::move(sizes);
                row["twist_classes_ok"] = twists_ok;
                ok = ok && twists_ok;
            }
        } else {
            row["enumerated_order"] = nullptr;
        }
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["ok"] = ok;
    return j;
}

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

namespace detail {

inline std::string scalar_str(const ordered_json& v)
{
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

inline void render_text(const ordered_json& j, std::ostream& os, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array()))) {
                os << pad << k << ":\n";
                render_text(v, os, indent + 1);
            } else if (v.is_array()) {
                os << pad << k << ": [";
                for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << scalar_str(v[i]);
                os << "]\n";
            } else {
                os << pad << k << ": " << scalar_str(v) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            os << pad << "- [" << i << "]\n";
            render_text(j[i], os, indent + 1);
        }
    } else {
        os << pad << scalar_str(j) << "\n";
    }
}

}  // namespace detail

/// Text rendering is a direct projection of the JSON document.
inline std::string to_text(const ordered_json& j)
{
    std::ostringstream os;
    detail::render_text(j, os, 0);
    return os.str();
}

/// CSV rendering of a table report: one line per row, lists flattened.
inline std::string to_csv(const ordered_json& table)
{
    std::ostringstream os;
    os << "type,rank,weyl_order,root_count,cartan_det,coset_count,psi_orders,psi_char_polys,"
          "twist_class_sizes,eigenvalue_checks\n";
    for (const auto& row : table.at("rows")) {
        os << row.at("type").get<std::string>() << "," << row.at("rank").get<std::size_t>() << ","
           << row.at("weyl_order").get<long long>() << "," << row.at("root_count").get<std::size_t>()
           << "," << row.at("cartan_det").get<long long>() << ","
           << row.at("coset_count").get<std::size_t>() << ",";
        std::string orders, polys, sizes, eigen;
        if (row.contains("psi")) {
            for (const auto& p : row.at("psi")) {
                orders += (orders.empty() ? "" : ";") + std::to_string(p.at("order").get<long long>());
                polys += (polys.empty() ? "" : ";") + p.at("char_poly_str").get<std::string>();
            }
            eigen = row.at("eigenvalue_checks").get<bool>() ? "true" : "false";
        }
        if (row.contains("twist_class_sizes"))
            for (const auto& s : row.at("twist_class_sizes"))
                sizes += (sizes.empty() ? "" : ";") + std::to_string(s.get<std::size_t>());
        os << orders << "," << polys << "," << sizes << "," << eigen << "\n";
    }
    return os.str();
}

}  // namespace strata::report
