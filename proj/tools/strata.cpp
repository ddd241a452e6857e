// Command-line verification surface: exact computations around root
// systems, alcoves, twisted torus fixed points, Newton strata and
// Puiseux witnesses, reported as deterministic JSON.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "strata/report.hpp"

namespace {

using strata::report::ordered_json;

struct RunConfig {
    std::string type;
    std::string nu_arg;
    std::optional<std::size_t> x_index;
    std::string poly_path;
    std::size_t cap = strata::WeylGroup::kDefaultCap;
    std::size_t twist_cap = 1200;
    long long denom_bound = 60;
    std::size_t samples = 100;
    unsigned long long seed = 0;
    std::size_t max_rank = 4;
    std::string format = "json";
    std::string out_path;
};

struct TypeContext {
    strata::RootSystem rs;
    strata::AmbientLattice amb;
    bool is_gl = false;
};

TypeContext resolve_type(const std::string& type)
{
    if (type.rfind("GL", 0) == 0) {
        std::size_t used = 0;
        const std::size_t n = std::stoul(type.substr(2), &used);
        if (used != type.size() - 2)
            throw std::invalid_argument("unknown type string '" + type + "'");
        strata::RootSystem rs = strata::build_root_system("A" + std::to_string(n - 1));
        strata::AmbientLattice amb = strata::ambient_gl(n);
        strata::validate_ambient(rs, amb);
        return TypeContext{std::move(rs), std::move(amb), true};
    }
    strata::RootSystem rs = strata::build_root_system(type);
    strata::AmbientLattice amb = strata::ambient_simply_connected(rs);
    return TypeContext{std::move(rs), std::move(amb), false};
}

strata::RatVec parse_nu(const std::string& arg, std::size_t expected)
{
    strata::RatVec nu;
    std::string cur;
    for (const char c : arg + ",") {
        if (c == ',') {
            if (!cur.empty()) nu.push_back(strata::Rational::parse(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (nu.size() != expected)
        throw std::invalid_argument("--nu: expected " + std::to_string(expected) + " entries, got " +
                                    std::to_string(nu.size()));
    return nu;
}

struct PolyInput {
    std::size_t n = 0;
    std::vector<std::optional<long long>> orders;
    ordered_json echo;
};

/// Polynomial file: {"n": int, "coeffs": [[[exp, re, im], ...] per c_0..c_{n-1}]}.
/// Only the coefficient orders feed the polygon; the terms are echoed in
/// the report.
PolyInput parse_poly_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open polynomial file: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("polynomial file is not valid JSON: " + std::string(e.what()));
    }
    PolyInput p;
    if (!j.contains("n") || !j.contains("coeffs") || !j["n"].is_number_unsigned())
        throw std::invalid_argument("polynomial file: expected an object with \"n\" and \"coeffs\"");
    p.n = j["n"].get<std::size_t>();
    const auto& coeffs = j["coeffs"];
    if (coeffs.size() != p.n)
        throw std::invalid_argument("polynomial file: expected n coefficient entries");
    for (const auto& terms : coeffs) {
        std::map<long long, std::pair<strata::Rational, strata::Rational>> combined;
        for (const auto& term : terms) {
            if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer() ||
                !term[1].is_string() || !term[2].is_string())
                throw std::invalid_argument(
                    "polynomial file: each term must be [exponent, \"re\", \"im\"]");
            const long long e = term[0].get<long long>();
            const strata::Rational re = strata::Rational::parse(term[1].get<std::string>());
            const strata::Rational im = strata::Rational::parse(term[2].get<std::string>());
            auto& slot = combined[e];
            slot.first += re;
            slot.second += im;
        }
        std::optional<long long> ord;
        for (const auto& [e, c] : combined)
            if (!c.first.is_zero() || !c.second.is_zero()) {
                ord = ord ? std::min(*ord, e) : e;
            }
        p.orders.push_back(ord);
    }
    p.echo = j;
    return p;
}

int emit(const RunConfig& cfg, const ordered_json& j, bool ok)
{
    std::string body;
    if (cfg.format == "json")
        body = j.dump(2) + "\n";
    else if (cfg.format == "text")
        body = strata::report::to_text(j);
    else if (cfg.format == "csv" && j.at("command") == "table")
        body = strata::report::to_csv(j);
    else
        throw std::invalid_argument("unsupported --format for this subcommand: " + cfg.format);
    if (cfg.out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(cfg.out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file: " + cfg.out_path);
        out << body;
    }
    return ok ? 0 : 1;
}

int run_psi(const RunConfig& cfg)
{
    const TypeContext ctx = resolve_type(cfg.type);
    const strata::WeylGroup group =
        strata::WeylGroup::enumerate(ctx.rs, cfg.cap, strata::classical_weyl_order(ctx.rs.kind()));
    bool ok = false;
    const ordered_json j = strata::report::psi_report(ctx.rs, group, ok);
    return emit(cfg, j, ok);
}

int run_alcove(const RunConfig& cfg)
{
    const TypeContext ctx = resolve_type(cfg.type);
    const strata::WeylGroup group =
        strata::WeylGroup::enumerate(ctx.rs, cfg.cap, strata::classical_weyl_order(ctx.rs.kind()));
    bool ok = false;
    const ordered_json j = strata::report::alcove_report(ctx.rs, group, ok);
    return emit(cfg, j, ok);
}

int run_springer(const RunConfig& cfg)
{
    const TypeContext ctx = resolve_type(cfg.type);
    const strata::WeylGroup group =
        strata::WeylGroup::enumerate(ctx.rs, cfg.cap, strata::classical_weyl_order(ctx.rs.kind()));
    if (cfg.x_index && *cfg.x_index >= strata::coset_representatives(ctx.rs).size())
        throw std::invalid_argument("--x: index out of range");
    bool ok = false;
    const ordered_json j = strata::report::springer_report(ctx.rs, group, cfg.x_index,
                                                           cfg.denom_bound, cfg.samples, cfg.seed, ok);
    return emit(cfg, j, ok);
}

int run_newton(const RunConfig& cfg)
{
    const TypeContext ctx = resolve_type(cfg.type);
    bool ok = false;
    ordered_json j;
    if (!cfg.poly_path.empty()) {
        if (!ctx.is_gl) throw std::invalid_argument("--poly requires a GLn type");
        const PolyInput p = parse_poly_file(cfg.poly_path);
        if (p.n != ctx.amb.n) throw std::invalid_argument("--poly: degree does not match the type");
        const strata::NewtonPolygon poly = strata::gl_newton_polygon(p.orders);
        const strata::RatVec nu = strata::nu_of_polygon(poly);
        j = strata::report::newton_report(ctx.rs, ctx.amb, nu, &poly, cfg.cap, ok);
        j["polynomial"] = p.echo;
    } else {
        const strata::RatVec nu = parse_nu(cfg.nu_arg, ctx.amb.n);
        j = strata::report::newton_report(ctx.rs, ctx.amb, nu, nullptr, cfg.cap, ok);
    }
    return emit(cfg, j, ok);
}

/// Slope blocks of a dominant GL Newton point (entries descending).
strata::NewtonPolygon polygon_of_nu(const strata::RatVec& nu)
{
    strata::NewtonPolygon poly;
    poly.n = nu.size();
    for (std::size_t i = 0; i < nu.size(); ++i) {
        if (i > 0 && nu[i] > nu[i - 1])
            throw std::invalid_argument("--nu: not dominant (entries must be descending)");
        if (i > 0 && nu[i] == nu[i - 1])
            poly.blocks.back().size += 1;
        else
            poly.blocks.push_back({nu[i], 1});
    }
    std::reverse(poly.blocks.begin(), poly.blocks.end());
    for (const auto& b : poly.blocks)
        if (!(b.slope * strata::Rational(b.size)).is_integer())
            throw std::invalid_argument("--nu: block slope*size must be integral for GL");
    return poly;
}

int run_witness(const RunConfig& cfg)
{
    const TypeContext ctx = resolve_type(cfg.type);
    bool ok = false;
    ordered_json j;
    if (ctx.is_gl) {
        strata::NewtonPolygon poly;
        ordered_json echo;
        if (!cfg.poly_path.empty()) {
            const PolyInput p = parse_poly_file(cfg.poly_path);
            if (p.n != ctx.amb.n) throw std::invalid_argument("--poly: degree does not match the type");
            poly = strata::gl_newton_polygon(p.orders);
            echo = p.echo;
        } else {
            poly = polygon_of_nu(parse_nu(cfg.nu_arg, ctx.amb.n));
        }
        const strata::RatVec nu = strata::nu_of_polygon(poly);
        const strata::WitnessReport rep = strata::build_witness_gl(poly);
        j = strata::report::witness_json(rep, cfg.type, nu, "gl-diagonal", ok);
        j["polygon"] = strata::report::polygon_json(poly);
        if (!echo.is_null()) j["polynomial"] = echo;

        // Certify the twist class: h must be conjugate to w(nu).
        const long long classical = strata::classical_weyl_order(ctx.rs.kind());
        if (static_cast<std::size_t>(classical) <= cfg.cap) {
            const strata::WeylGroup group = strata::WeylGroup::enumerate(ctx.rs, cfg.cap, classical);
            const strata::NewtonTwist tw =
                strata::newton_twist(ctx.rs, ctx.amb, strata::levi_of(ctx.rs, ctx.amb, nu), cfg.cap);
            const bool conj = strata::are_conjugate(rep.h, tw.w, group);
            j["conjugate_to_twist"] = conj;
            ok = ok && conj;
            j["ok"] = ok;
        }
    } else {
        const strata::RatVec nu = parse_nu(cfg.nu_arg, ctx.amb.n);
        const strata::WeylGroup group = strata::WeylGroup::enumerate(
            ctx.rs, cfg.cap, strata::classical_weyl_order(ctx.rs.kind()));
        const strata::WitnessReport rep = strata::build_witness_central(ctx.rs, ctx.amb, nu, group);
        j = strata::report::witness_json(rep, cfg.type, nu, "central-barycenter", ok);
    }
    return emit(cfg, j, ok);
}

int run_table(const RunConfig& cfg)
{
    bool ok = false;
    const ordered_json j = strata::report::table_report(cfg.max_rank, cfg.cap, cfg.twist_cap, ok);
    return emit(cfg, j, ok);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact alcove / twisted-torus / Newton-stratum computations"};
    app.require_subcommand(1);
    RunConfig cfg;

    const auto add_common = [&](CLI::App* sub, bool needs_type) {
        if (needs_type) sub->add_option("--type", cfg.type, "type string A1..E8 or GLn")->required();
        sub->add_option("--cap", cfg.cap, "group enumeration cap");
        sub->add_option("--seed", cfg.seed, "seed for sampled searches");
        sub->add_option("--format", cfg.format, "json | text | csv (table only)");
        sub->add_option("--out", cfg.out_path, "write the report to a file");
    };

    CLI::App* psi = app.add_subcommand("psi", "alcove homomorphism table with verification");
    add_common(psi, true);
    CLI::App* alc = app.add_subcommand("alcove", "fundamental alcove data");
    add_common(alc, true);
    CLI::App* spr = app.add_subcommand("springer", "twisted fixed-point verification report");
    add_common(spr, true);
    std::size_t x_arg = 0;
    CLI::Option* x_opt = spr->add_option("--x", x_arg, "restrict to one central class index");
    spr->add_option("--denom-bound", cfg.denom_bound, "denominator bound for regular-point search");
    spr->add_option("--samples", cfg.samples, "sample budget for regular-point search");
    CLI::App* nwt = app.add_subcommand("newton", "Newton-stratum twist w(nu)");
    add_common(nwt, true);
    nwt->add_option("--nu", cfg.nu_arg, "dominant Newton point, e.g. \"1/2,1/2\"");
    nwt->add_option("--poly", cfg.poly_path, "polynomial JSON file (GLn)");
    CLI::App* wit = app.add_subcommand("witness", "Puiseux witness construction and checks");
    add_common(wit, true);
    wit->add_option("--nu", cfg.nu_arg, "Newton point");
    wit->add_option("--poly", cfg.poly_path, "polynomial JSON file (GLn)");
    CLI::App* tab = app.add_subcommand("table", "aggregated verification tables");
    add_common(tab, false);
    tab->add_option("--max-rank", cfg.max_rank, "largest rank to include");
    tab->add_option("--twist-cap", cfg.twist_cap, "largest |W| for the twisted-class sweep");

    CLI11_PARSE(app, argc, argv);

    try {
        if (psi->parsed()) return run_psi(cfg);
        if (alc->parsed()) return run_alcove(cfg);
        if (spr->parsed()) {
            if (x_opt->count() > 0) cfg.x_index = x_arg;
            return run_springer(cfg);
        }
        if (nwt->parsed()) {
            if (cfg.nu_arg.empty() == cfg.poly_path.empty())
                throw std::invalid_argument("newton: exactly one of --nu / --poly is required");
            return run_newton(cfg);
        }
        if (wit->parsed()) {
            if (cfg.nu_arg.empty() == cfg.poly_path.empty())
                throw std::invalid_argument("witness: exactly one of --nu / --poly is required");
            return run_witness(cfg);
        }
        if (tab->parsed()) return run_table(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const strata::EnumerationCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
