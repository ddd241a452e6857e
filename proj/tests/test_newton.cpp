#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "strata/newton.hpp"

using namespace strata;

namespace {

RatVec rv(std::initializer_list<Rational> cs) { return RatVec(cs); }

}  // namespace

TEST_CASE("ambient presets")
{
    SECTION("GL preset: identity basis, adjacent-difference coroots")
    {
        const AmbientLattice amb = ambient_gl(4);
        CHECK(amb.basis == identity_matrix<long long>(4));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t r = 0; r < 4; ++r) {
                const long long expect = r == i ? 1 : (r == i + 1 ? -1 : 0);
                CHECK(amb.coroot_embed[r][i] == expect);
            }
        validate_ambient(build_root_system("A3"), amb);
    }
    SECTION("simply connected preset validates for every type")
    {
        for (const char* kind : {"A2", "B3", "C4", "D4", "F4", "G2", "E6"}) {
            const RootSystem rs = build_root_system(kind);
            validate_ambient(rs, ambient_simply_connected(rs));
        }
    }
    SECTION("mismatched data is rejected")
    {
        AmbientLattice amb = ambient_gl(3);
        amb.root_covectors[0][0] = 5;
        CHECK_THROWS_AS(validate_ambient(build_root_system("A2"), amb), std::invalid_argument);
    }
}

TEST_CASE("levi selection")
{
    const RootSystem a3 = build_root_system("A3");
    const AmbientLattice gl4 = ambient_gl(4);
    validate_ambient(a3, gl4);

    SECTION("two GL2 blocks")
    {
        const NewtonPoint np = levi_of(a3, gl4, rv({Rational(1), Rational(1), Rational(0), Rational(0)}));
        CHECK(np.levi == std::vector<std::size_t>{0, 2});
    }
    SECTION("regular dominant gives the torus")
    {
        const NewtonPoint np = levi_of(a3, gl4, rv({Rational(3), Rational(2), Rational(1), Rational(0)}));
        CHECK(np.levi.empty());
    }
    SECTION("central nu gives the whole group")
    {
        const NewtonPoint np = levi_of(a3, gl4, rv({Rational(0), Rational(0), Rational(0), Rational(0)}));
        CHECK(np.levi == std::vector<std::size_t>{0, 1, 2});
    }
    SECTION("non-dominant input is rejected")
    {
        CHECK_THROWS_AS(levi_of(a3, gl4, rv({Rational(0), Rational(1), Rational(0), Rational(0)})),
                        std::invalid_argument);
    }
}

TEST_CASE("mu_class on GL2")
{
    const RootSystem a1 = build_root_system("A1");
    const AmbientLattice gl2 = ambient_gl(2);
    const NewtonPoint np = levi_of(a1, gl2, rv({Rational(1, 2), Rational(1, 2)}));
    const LeviDecomposition levi = mu_class(a1, gl2, np);
    REQUIRE(levi.components.size() == 1);
    CHECK(levi.components[0].mu.rep == a1.fund_coweight(0));
    CHECK(levi.components[0].mu.order() == 2);

    // The lift projects to nu: x - nu must span the Levi coroots.
    const RatVec diff = vec_sub(levi.lift, np.nu);
    CHECK(diff[0] + diff[1] == Rational(0));
    CHECK(all_integral(levi.lift));
}

TEST_CASE("mu_class is independent of the lift")
{
    const RootSystem a5 = build_root_system("A5");
    const AmbientLattice gl6 = ambient_gl(6);
    const RatVec nu(6, Rational(1, 3));
    const NewtonPoint np = levi_of(a5, gl6, nu);
    const LeviDecomposition levi = mu_class(a5, gl6, np);
    REQUIRE(levi.components.size() == 1);
    const RootSystem& sub = levi.components[0].sub;

    CHECK(levi.components[0].mu.order() == 3);
    CHECK(levi.components[0].mu.rep == sub.fund_coweight(1));  // class of 2*omega_1

    // Recompute from the second lift: the class must not change.
    CHECK(levi.lift != levi.second_lift);
    RatVec rep2(sub.rank(), Rational(0));
    for (std::size_t a = 0; a < 5; ++a) {
        const Rational c = ambient_root_pairing(gl6, a, levi.second_lift) -
                           ambient_root_pairing(gl6, a, nu);
        rep2 = vec_add(rep2, vec_scale(c, sub.fund_coweight(a)));
    }
    CHECK(normalize_central(sub, rep2).rep == levi.components[0].mu.rep);
}

TEST_CASE("integral nu with integral block sums has trivial mu")
{
    const RootSystem a3 = build_root_system("A3");
    const AmbientLattice gl4 = ambient_gl(4);
    const NewtonPoint np = levi_of(a3, gl4, rv({Rational(2), Rational(2), Rational(1), Rational(1)}));
    const LeviDecomposition levi = mu_class(a3, gl4, np);
    for (const auto& comp : levi.components) CHECK(comp.mu.is_zero());
}

TEST_CASE("mu_class rejects nu outside the lattice image")
{
    // The simply connected lattice only carries central nu = 0.
    const RootSystem a1 = build_root_system("A1");
    const AmbientLattice sc = ambient_simply_connected(a1);
    const NewtonPoint np{rv({Rational(1, 3)}), {}};
    CHECK_THROWS_AS(mu_class(a1, sc, np), std::invalid_argument);
}

TEST_CASE("newton twist")
{
    SECTION("empty Levi gives the identity")
    {
        const RootSystem a3 = build_root_system("A3");
        const AmbientLattice gl4 = ambient_gl(4);
        const NewtonTwist tw =
            newton_twist(a3, gl4, levi_of(a3, gl4, rv({Rational(3), Rational(2), Rational(1), Rational(0)})));
        CHECK(tw.w.matrix == identity_matrix<long long>(3));
        CHECK(tw.cycle_type == std::vector<long long>{1, 1, 1, 1});
        CHECK(tw.order == 1);
    }
    SECTION("GL2 half-slope gives the transposition")
    {
        const RootSystem a1 = build_root_system("A1");
        const AmbientLattice gl2 = ambient_gl(2);
        const NewtonTwist tw =
            newton_twist(a1, gl2, levi_of(a1, gl2, rv({Rational(1, 2), Rational(1, 2)})));
        CHECK(tw.cycle_type == std::vector<long long>{2});
        CHECK(tw.w.matrix == a1.simple_reflection_coroot(0));
    }
    SECTION("GL6 slope one-third gives two 3-cycles")
    {
        const RootSystem a5 = build_root_system("A5");
        const AmbientLattice gl6 = ambient_gl(6);
        const NewtonTwist tw = newton_twist(a5, gl6, levi_of(a5, gl6, RatVec(6, Rational(1, 3))));
        CHECK(tw.cycle_type == std::vector<long long>{3, 3});
        CHECK(tw.order == 3);
    }
}

TEST_CASE("newton polygon from coefficient orders")
{
    SECTION("t^2 - eps")
    {
        const NewtonPolygon p = gl_newton_polygon({1LL, std::nullopt});
        REQUIRE(p.blocks.size() == 1);
        CHECK(p.blocks[0].slope == Rational(1, 2));
        CHECK(p.blocks[0].size == 2);
    }
    SECTION("t^2 - (1+eps)t + eps")
    {
        const NewtonPolygon p = gl_newton_polygon({1LL, 0LL});
        REQUIRE(p.blocks.size() == 2);
        CHECK(p.blocks[0].slope == Rational(0));
        CHECK(p.blocks[0].size == 1);
        CHECK(p.blocks[1].slope == Rational(1));
        CHECK(p.blocks[1].size == 1);
    }
    SECTION("t^n - 1 is flat")
    {
        const NewtonPolygon p = gl_newton_polygon(
            {0LL, std::nullopt, std::nullopt, std::nullopt, std::nullopt});
        REQUIRE(p.blocks.size() == 1);
        CHECK(p.blocks[0].slope == Rational(0));
        CHECK(p.blocks[0].size == 5);
    }
    SECTION("vanishing constant term is rejected")
    {
        CHECK_THROWS_AS(gl_newton_polygon({std::nullopt, 0LL}), std::invalid_argument);
    }
}

TEST_CASE("cycle type oracle")
{
    const NewtonPolygon half = gl_newton_polygon({1LL, std::nullopt});
    CHECK(gl_cycle_type(half) == std::vector<long long>{2});

    const NewtonPolygon split = gl_newton_polygon({1LL, 0LL});
    CHECK(gl_cycle_type(split) == std::vector<long long>{1, 1});

    NewtonPolygon thirds;
    thirds.n = 6;
    thirds.blocks = {{Rational(1, 3), 6}};
    CHECK(gl_cycle_type(thirds) == std::vector<long long>{3, 3});
}

TEST_CASE("oracle equivalence on a seeded sample")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t n = 2 + rng() % 5;
        std::vector<std::optional<long long>> orders(n);
        for (auto& o : orders) o = static_cast<long long>(rng() % 13);
        const NewtonPolygon poly = gl_newton_polygon(orders);
        const RatVec nu = nu_of_polygon(poly);
        const RootSystem rs = build_root_system("A" + std::to_string(n - 1));
        const AmbientLattice amb = ambient_gl(n);
        const NewtonTwist tw = newton_twist(rs, amb, levi_of(rs, amb, nu));
        INFO("trial " << trial);
        CHECK(tw.cycle_type == gl_cycle_type(poly));
    }
}

TEST_CASE("non-A Levi: the B3 factor inside B4 carries a nontrivial class")
{
    // nu = first fundamental coweight: the Levi drops alpha_1 and is a
    // B3 chain whose central class is the order-two coset.
    const RootSystem b4 = build_root_system("B4");
    const AmbientLattice sc = ambient_simply_connected(b4);
    const RatVec nu = b4.fund_coweight(0);
    const NewtonPoint np = levi_of(b4, sc, nu);
    CHECK(np.levi == std::vector<std::size_t>{1, 2, 3});

    const LeviDecomposition levi = mu_class(b4, sc, np);
    REQUIRE(levi.components.size() == 1);
    CHECK(levi.components[0].sub.rank() == 3);
    CHECK(levi.components[0].mu.order() == 2);
    CHECK(levi.components[0].mu.rep == levi.components[0].sub.fund_coweight(0));

    const NewtonTwist tw = newton_twist(b4, sc, np);
    CHECK(tw.order == 2);
    // The reflection through alpha_2 + alpha_3 + alpha_4.
    CHECK(tw.w.word == std::vector<std::size_t>{1, 2, 3, 2, 1});
    // w(nu) lies in the Levi, so it fixes nu.
    CHECK(act(tw.w, nu) == nu);
    // Its fixed space is three-dimensional: char poly (t-1)^3 (t+1).
    CHECK(tw.charpoly == IntVec{-1, 2, 0, -2, 1});
}

TEST_CASE("type A twists are Coxeter-cycle powers for every class")
{
    // One block of slope k/n and size n: the class of k*omega_1, whose
    // twist must split into gcd(k,n) cycles of length n/gcd(k,n).
    for (std::size_t n = 2; n <= 8; ++n) {
        const RootSystem rs = build_root_system("A" + std::to_string(n - 1));
        const AmbientLattice amb = ambient_gl(n);
        for (long long k = 0; k < static_cast<long long>(n); ++k) {
            const RatVec nu(n, Rational(k, static_cast<long long>(n)));
            const NewtonTwist tw = newton_twist(rs, amb, levi_of(rs, amb, nu));
            const long long g = std::gcd(k, static_cast<long long>(n));
            std::vector<long long> expect(static_cast<std::size_t>(g),
                                          static_cast<long long>(n) / g);
            INFO("n=" << n << " k=" << k);
            CHECK(tw.cycle_type == expect);
            CHECK(tw.order == static_cast<long long>(n) / g);
        }
    }
}

TEST_CASE("m_nu agrees with the 2-rho pairing")
{
    std::mt19937_64 rng(11);
    for (const char* kind : {"A2", "B3", "C3", "D4", "G2"}) {
        const RootSystem rs = build_root_system(kind);
        INFO(kind);
        for (int t = 0; t < 10; ++t) {
            // Random dominant nu = sum of nonnegative multiples of coweights.
            RatVec nu(rs.rank(), Rational(0));
            for (std::size_t i = 0; i < rs.rank(); ++i)
                nu = vec_add(nu, vec_scale(Rational(static_cast<long long>(rng() % 5),
                                                    1 + static_cast<long long>(rng() % 3)),
                                           rs.fund_coweight(i)));
            CHECK(m_nu(rs, nu) == rs.pairing(to_rational(rs.two_rho()), nu));
        }
        // Central nu pairs to zero with every root.
        CHECK(m_nu(rs, RatVec(rs.rank(), Rational(0))) == Rational(0));
    }
}

TEST_CASE("permutation cycle type guards non-permutations")
{
    CHECK(permutation_cycle_type(IntMat{{0, 1}, {1, 0}}) == std::vector<long long>{2});
    CHECK(permutation_cycle_type(IntMat{{1, 1}, {0, 1}}).empty());
    CHECK(permutation_cycle_type(IntMat{{-1}}).empty());
}
