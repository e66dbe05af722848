#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syzrank/local_invariants.hpp"
#include "test_util.hpp"

using namespace syzrank;
using testutil::mk;

using Q = RationalField;
using P = Polynomial<Q>;

static RingPtr<Q> germ_ring() { return make_ring(Q{}, {"x", "y"}); }

static Point<Q> proj(std::vector<long> cs) {
    Q K;
    Point<Q> p{PointKind::Projective, {}};
    for (long c : cs) p.coords.push_back(K.from_int(c));
    return p;
}

TEST_CASE("milnor numbers of plane germs") {
    auto R = germ_ring();
    CHECK(milnor(mk(R, {{{2, 0}, 1}, {{0, 2}, 1}})) == ExtendedNat::of(1));
    CHECK(milnor(mk(R, {{{3, 0}, 1}, {{0, 2}, -1}})) == ExtendedNat::of(2));
    CHECK(milnor(mk(R, {{{5, 0}, 1}, {{0, 5}, 1}, {{2, 2}, 1}})) == ExtendedNat::of(11));
}

TEST_CASE("tjurina numbers of plane germs") {
    auto R = germ_ring();
    CHECK(tjurina(mk(R, {{{2, 0}, 1}, {{0, 2}, 1}})) == ExtendedNat::of(1));
    CHECK(tjurina(mk(R, {{{3, 0}, 1}, {{0, 2}, -1}})) == ExtendedNat::of(2));
    CHECK(tjurina(mk(R, {{{5, 0}, 1}, {{0, 5}, 1}, {{2, 2}, 1}})) == ExtendedNat::of(10));
}

TEST_CASE("germs must vanish at the origin") {
    auto R = germ_ring();
    auto g = mk(R, {{{0, 0}, 1}, {{2, 0}, 1}});
    CHECK_THROWS_AS(milnor(g), std::invalid_argument);
    CHECK_THROWS_AS(tjurina(g), std::invalid_argument);
}

TEST_CASE("non-isolated germ is INFINITE") {
    auto R = germ_ring();
    auto g = mk(R, {{{2, 0}, 1}});  // x^2: singular along the y-axis
    CHECK(milnor(g) == ExtendedNat::inf());
    CHECK(tjurina(g) == ExtendedNat::inf());
    auto inv = local_germ_invariants(g);
    CHECK(!inv.mu.finite);
    CHECK(!inv.tau.finite);
}

TEST_CASE("truncation oracle") {
    auto R = germ_ring();
    auto x = P::variable(R, 0), y = P::variable(R, 1);

    auto o1 = truncation_oracle<Q>({x, y}, 8);
    CHECK(o1.stable);
    CHECK(o1.value == 1);
    CHECK(o1.n_stable <= 3);

    auto o2 = truncation_oracle<Q>({mk(R, {{{2, 0}, 3}}), mk(R, {{{0, 1}, 2}})}, 12);
    CHECK(o2.stable);
    CHECK(o2.value == 2);

    auto t55 = mk(R, {{{5, 0}, 1}, {{0, 5}, 1}, {{2, 2}, 1}});
    auto o3 = truncation_oracle<Q>({t55.partial(0), t55.partial(1)}, 53);
    CHECK(o3.stable);
    CHECK(o3.value == 11);
    // the global affine quotient is larger (nonzero critical points), so the
    // truncated corank, not a global dimension, is the right local count
    auto global = buchberger<Q>({t55.partial(0), t55.partial(1)}, MonomialOrder::grevlex());
    auto gd = quotient_dimension(global);
    REQUIRE(gd.finite);
    CHECK(gd.value > 11);

    auto unstable = truncation_oracle<Q>({mk(R, {{{2, 0}, 1}})}, 5);
    CHECK(!unstable.stable);
}

TEST_CASE("invariants_at on the frozen corpus") {
    auto R3 = make_ring(Q{}, {"x", "y", "z"});
    auto nodal = mk(R3, {{{0, 2, 1}, 1}, {{3, 0, 0}, -1}, {{2, 0, 1}, -1}});
    auto cusp = mk(R3, {{{3, 0, 0}, 1}, {{0, 2, 1}, -1}});
    auto t55 = mk(R3, {{{5, 0, 0}, 1}, {{0, 5, 0}, 1}, {{2, 2, 1}, 1}});

    auto a = invariants_at(nodal, proj({0, 0, 1}));
    CHECK(a.mu == ExtendedNat::of(1));
    CHECK(a.tau == ExtendedNat::of(1));
    CHECK(a.method == "standard-basis");

    auto b = invariants_at(cusp, proj({0, 0, 1}));
    CHECK(b.mu == ExtendedNat::of(2));
    CHECK(b.tau == ExtendedNat::of(2));

    auto c = invariants_at(t55, proj({0, 0, 1}));
    CHECK(c.mu == ExtendedNat::of(11));
    CHECK(c.tau == ExtendedNat::of(10));

    CHECK_THROWS_AS(invariants_at(nodal, proj({0, 1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(invariants_at(nodal, proj({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("Brieskorn germs x^a + y^b are quasi-homogeneous: mu == tau") {
    auto R = germ_ring();
    for (long a = 2; a <= 5; ++a) {
        for (long b = 2; b <= 5; ++b) {
            P g = mk(R, {{{std::uint32_t(a), 0}, 1}, {{0, std::uint32_t(b)}, 1}});
            auto inv = local_germ_invariants(g);
            REQUIRE(inv.mu.finite);
            CHECK(inv.mu.value == std::uint64_t((a - 1) * (b - 1)));
            CHECK(inv.tau == inv.mu);
        }
    }
}

TEST_CASE("tau <= mu on assorted finite germs") {
    auto R = germ_ring();
    std::vector<P> germs{
        mk(R, {{{4, 0}, 1}, {{0, 4}, 1}, {{2, 2}, 1}}),
        mk(R, {{{3, 0}, 1}, {{1, 3}, 1}}),
        mk(R, {{{2, 1}, 1}, {{0, 4}, 1}}),
        mk(R, {{{5, 0}, 2}, {{0, 5}, 3}, {{2, 2}, -1}}),
    };
    for (const auto& g : germs) {
        auto inv = local_germ_invariants(g);
        REQUIRE(inv.mu.finite);
        REQUIRE(inv.tau.finite);
        CHECK(inv.tau.value <= inv.mu.value);
    }
}

TEST_CASE("chart and coordinate-change invariance") {
    auto R3 = make_ring(Q{}, {"x", "y", "z"});
    Q K;
    auto cusp = mk(R3, {{{3, 0, 0}, 1}, {{0, 2, 1}, -1}});

    // moved(q) = cusp(Aq) and A(1,1,1) = (0,0,1), so the cusp sits at [1:1:1]
    std::vector<std::vector<Rational>> A{{1, -1, 0}, {0, 1, -1}, {0, 0, 1}};
    auto moved = cusp.substitute_linear(A);
    auto inv = invariants_at(moved, proj({1, 1, 1}));
    CHECK(inv.mu == ExtendedNat::of(2));
    CHECK(inv.tau == ExtendedNat::of(2));

    // same point read in the z-chart instead of the leading x-chart
    auto q = normalize_projective(K, proj({1, 1, 1}));
    auto g2 = moved.dehomogenize(2).translate({q.coords[0], q.coords[1]});
    CHECK(milnor(g2) == ExtendedNat::of(2));
    CHECK(tjurina(g2) == ExtendedNat::of(2));
}
