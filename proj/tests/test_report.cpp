#include <catch2/catch_amalgamated.hpp>

#include "strata/report.hpp"

using namespace strata;
using report::ordered_json;

TEST_CASE("psi report for A2 lists the three cosets with orders 1,3,3")
{
    const RootSystem rs = build_root_system("A2");
    const WeylGroup g = WeylGroup::enumerate(rs);
    bool ok = false;
    const ordered_json j = report::psi_report(rs, g, ok);
    CHECK(ok);
    REQUIRE(j["cosets"].size() == 3);
    CHECK(j["cosets"][0]["psi_order"] == 1);
    CHECK(j["cosets"][1]["psi_order"] == 3);
    CHECK(j["cosets"][2]["psi_order"] == 3);
    CHECK(j["checks"]["homomorphism"] == true);
    CHECK(j["checks"]["injective"] == true);
}

TEST_CASE("springer report for G2 has a single passing row")
{
    const RootSystem rs = build_root_system("G2");
    const WeylGroup g = WeylGroup::enumerate(rs);
    bool ok = false;
    const ordered_json j = report::springer_report(rs, g, std::nullopt, 60, 100, 0, ok);
    CHECK(ok);
    REQUIRE(j["rows"].size() == 1);  // trivial center
    CHECK(j["rows"][0]["class_size"] == 1);
    CHECK(j["rows"][0]["eigenvalue_check"] == true);
    CHECK(j["failures"].empty());
}

TEST_CASE("reports are byte-identical across repeated runs")
{
    const auto once = [] {
        const RootSystem rs = build_root_system("B2");
        const WeylGroup g = WeylGroup::enumerate(rs);
        bool ok = false;
        const ordered_json p = report::psi_report(rs, g, ok);
        const ordered_json s = report::springer_report(rs, g, std::nullopt, 60, 100, 0, ok);
        bool tok = false;
        const ordered_json t = report::table_report(2, WeylGroup::kDefaultCap, 1200, tok);
        return p.dump(2) + s.dump(2) + t.dump(2);
    };
    CHECK(once() == once());
}

TEST_CASE("table report rows")
{
    bool ok = false;
    const ordered_json j = report::table_report(4, WeylGroup::kDefaultCap, 1200, ok);
    CHECK(ok);
    // Types of rank <= 4: A1..A4, B2..B4, C2..C4, D4, F4, G2.
    REQUIRE(j["rows"].size() == 13);
    for (const auto& row : j["rows"]) {
        CHECK(row["coset_count_matches_det"] == true);
        CHECK(row["order_matches_classical"] == true);
        const std::string type = row["type"].get<std::string>();
        if (type[0] == 'A')
            CHECK(row["cartan_det"].get<long long>() ==
                  static_cast<long long>(row["rank"].get<std::size_t>()) + 1);
        if (type == "F4") CHECK(row["cartan_det"] == 1);
        if (type == "D4") CHECK(row["cartan_det"] == 4);
    }
}

TEST_CASE("csv and text renderings derive from the json")
{
    bool ok = false;
    const ordered_json j = report::table_report(2, WeylGroup::kDefaultCap, 1200, ok);
    const std::string csv = report::to_csv(j);
    // Header plus one line per row.
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + static_cast<long>(j["rows"].size()));
    CHECK(csv.find("A1,1,2,") != std::string::npos);

    const std::string text = report::to_text(j);
    CHECK(text.find("command: table") != std::string::npos);
    CHECK(text.find("type: G2") != std::string::npos);
}

TEST_CASE("newton report cross-checks the cycle type for polygons")
{
    const RootSystem rs = build_root_system("A3");
    const AmbientLattice amb = ambient_gl(4);
    const NewtonPolygon poly = gl_newton_polygon({2LL, 1LL, 1LL, 0LL});
    bool ok = false;
    const ordered_json j =
        report::newton_report(rs, amb, nu_of_polygon(poly), &poly, WeylGroup::kDefaultCap, ok);
    CHECK(ok);
    CHECK(j["cycle_type_match"] == true);
    CHECK(j["twist"]["centralizer"] == "A^w");
}

TEST_CASE("witness json carries series triples and checks")
{
    NewtonPolygon poly;
    poly.n = 2;
    poly.blocks = {{Rational(1, 2), 2}};
    const WitnessReport rep = build_witness_gl(poly);
    bool ok = false;
    const ordered_json j = report::witness_json(rep, "GL2", nu_of_polygon(poly), "gl-diagonal", ok);
    CHECK(ok);
    REQUIRE(j["coordinates"].size() == 2);
    // Each term is [exponent, coefficient-level, coefficient-vector].
    const auto& term = j["coordinates"][0][0];
    CHECK(term.size() == 3);
    CHECK(term[0] == "1/2");
    CHECK(j["checks"]["galois"] == true);
    CHECK(j["h"]["cycle_type"][0] == 2);
}
