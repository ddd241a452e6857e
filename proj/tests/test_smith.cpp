#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "strata/smith.hpp"

using namespace strata;

namespace {

bool is_unimodular(const IntMat& m)
{
    const long long d = int_det(m);
    return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("smith normal form factors with unimodular transforms")
{
    const IntMat m{{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
    const SmithForm s = smith_normal_form(m);
    CHECK(mat_mul(mat_mul(s.u, m), s.v) == s.d);
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
    for (std::size_t i = 0; i + 1 < s.rank; ++i) {
        CHECK(s.diag(i) > 0);
        CHECK(s.diag(i + 1) % s.diag(i) == 0);
    }
}

TEST_CASE("identity system has only the trivial solution")
{
    const CongruenceSolution sol = smith_solve(identity_matrix<long long>(2), RatVec{Rational(0), Rational(0)});
    REQUIRE(sol.solvable);
    CHECK(sol.dim() == 0);
    CHECK(sol.torsion.size() == 1);
    CHECK(all_integral(sol.particular));
}

TEST_CASE("zero map cannot hit a non-integral target")
{
    const CongruenceSolution sol = smith_solve(IntMat{{0}}, RatVec{Rational(1, 2)});
    CHECK_FALSE(sol.solvable);
}

TEST_CASE("-2y = 1/2 mod Z has the two solutions -1/4 and 1/4")
{
    const CongruenceSolution sol = smith_solve(IntMat{{-2}}, RatVec{Rational(1, 2)});
    REQUIRE(sol.solvable);
    CHECK(sol.dim() == 0);
    REQUIRE(sol.torsion.size() == 2);
    std::set<Rational> residues;
    for (const auto& t : sol.torsion) residues.insert(t[0].frac());
    CHECK(residues == std::set<Rational>{Rational(1, 4), Rational(3, 4)});
}

TEST_CASE("solver agrees with exhaustive search over bounded denominators")
{
    // Oracle: direct congruence membership on the grid of vectors whose
    // coordinates have denominator q <= 12.
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t k = trial % 2 == 0 ? 2 : 3;
        IntMat m(k, IntVec(k, 0));
        for (auto& row : m)
            for (auto& v : row) v = static_cast<long long>(rng() % 13) - 6;
        RatVec b(k);
        for (auto& v : b)
            v = Rational(static_cast<long long>(rng() % 25) - 12, 1 + static_cast<long long>(rng() % 12));

        const CongruenceSolution sol = smith_solve(m, b);

        // Soundness: everything the descriptor claims verifies directly.
        if (sol.solvable) {
            CHECK(satisfies_congruence(m, b, sol.particular));
            for (const auto& t : sol.torsion) CHECK(satisfies_congruence(m, b, t));
            for (const auto& kv : sol.kernel_basis) {
                const RatVec mk = mat_vec(to_rational(m), kv);
                for (const auto& c : mk) CHECK(c == Rational(0));
            }
            CHECK(sol.dim() == k - rat_rank(to_rational(m)));
        }

        // Completeness on nonsingular instances: every grid solution must
        // be one of the listed components (mod Z^k).
        if (int_det(m) != 0) {
            std::set<RatVec> components;
            for (const auto& t : sol.torsion) {
                RatVec red(k);
                for (std::size_t i = 0; i < k; ++i) red[i] = t[i].frac();
                components.insert(red);
            }
            std::vector<RatVec> grid;
            for (long long q = 1; q <= 12; ++q) {
                std::vector<RatVec> pts(1, RatVec{});
                for (std::size_t c = 0; c < k; ++c) {
                    std::vector<RatVec> next;
                    for (const auto& p : pts)
                        for (long long num = 0; num < q; ++num) {
                            RatVec ex = p;
                            ex.push_back(Rational(num, q));
                            next.push_back(ex);
                        }
                    pts = std::move(next);
                }
                grid.insert(grid.end(), pts.begin(), pts.end());
            }
            for (const auto& y : grid) {
                if (!satisfies_congruence(m, b, y)) continue;
                CHECK(sol.solvable);
                CHECK(components.count(y) == 1);
            }
            if (!sol.solvable)
                for (const auto& y : grid) CHECK_FALSE(satisfies_congruence(m, b, y));
        }
    }
}

TEST_CASE("shape mismatch is rejected")
{
    CHECK_THROWS_AS(smith_solve(IntMat{{1, 2}}, RatVec{Rational(0), Rational(0)}),
                    std::invalid_argument);
}

TEST_CASE("rectangular systems")
{
    SECTION("wide: one equation, two unknowns")
    {
        const CongruenceSolution sol = smith_solve(IntMat{{2, 4}}, RatVec{Rational(1, 3)});
        REQUIRE(sol.solvable);
        CHECK(sol.dim() == 1);
        CHECK(satisfies_congruence(IntMat{{2, 4}}, RatVec{Rational(1, 3)}, sol.particular));
    }
    SECTION("tall: overdetermined but compatible")
    {
        const IntMat m{{1, 0}, {0, 2}, {1, 2}};
        const RatVec b{Rational(1, 2), Rational(1, 2), Rational(0)};
        const CongruenceSolution sol = smith_solve(m, b);
        REQUIRE(sol.solvable);
        for (const auto& t : sol.torsion) CHECK(satisfies_congruence(m, b, t));
    }
    SECTION("tall: incompatible rows")
    {
        const IntMat m{{2, 0}, {2, 0}};
        const RatVec b{Rational(1, 2), Rational(1, 3)};
        CHECK_FALSE(smith_solve(m, b).solvable);
    }
    SECTION("zero matrix with integral target is everything")
    {
        const CongruenceSolution sol = smith_solve(IntMat{{0, 0}, {0, 0}}, RatVec{Rational(2), Rational(-1)});
        REQUIRE(sol.solvable);
        CHECK(sol.dim() == 2);
    }
}
