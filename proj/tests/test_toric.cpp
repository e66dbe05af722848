#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syzrank/toric.hpp"
#include "test_util.hpp"

using namespace syzrank;
using testutil::mk;

using Q = RationalField;
using P = Polynomial<Q>;

static Point<Q> cox(std::vector<long> cs) {
    Q K;
    Point<Q> p{PointKind::Cox, {}};
    for (long c : cs) p.coords.push_back(K.from_int(c));
    return p;
}

static RingPtr<Q> cox_ring(const std::vector<std::string>& vars, const PicData& pic) {
    return make_cox_ring(Q{}, vars, pic.degrees);
}

TEST_CASE("validate_fan on the builtin fans") {
    auto p1 = validate_fan(fan_projective(1));
    CHECK(p1.r == 1);
    CHECK(p1.degrees == std::vector<DegreeVector>{{1}, {1}});
    CHECK_FALSE(p1.completeness_warning);

    auto p2 = validate_fan(fan_projective(2));
    CHECK(p2.r == 1);
    CHECK(p2.degrees == std::vector<DegreeVector>{{1}, {1}, {1}});
    CHECK(p2.basis_rays == std::vector<std::size_t>{0});
    CHECK_FALSE(p2.completeness_warning);

    auto p3 = validate_fan(fan_projective(3));
    CHECK(p3.r == 1);
    CHECK(p3.degrees == std::vector<DegreeVector>{{1}, {1}, {1}, {1}});
    CHECK(p3.completeness_warning);

    auto pp = validate_fan(fan_product(1, 1));
    CHECK(pp.r == 2);
    CHECK(pp.degrees == std::vector<DegreeVector>{{1, 0}, {1, 0}, {0, 1}, {0, 1}});
    CHECK(pp.basis_rays == std::vector<std::size_t>{0, 2});
    CHECK_FALSE(pp.completeness_warning);

    auto f1 = validate_fan(fan_hirzebruch(1));
    CHECK(f1.r == 2);
    CHECK(f1.degrees == std::vector<DegreeVector>{{1, -1}, {0, 1}, {1, 0}, {0, 1}});
    CHECK(f1.basis_rays == std::vector<std::size_t>{2, 3});

    auto f0 = validate_fan(fan_hirzebruch(0));
    CHECK(f0.r == 2);
}

TEST_CASE("validate_fan rejects broken fans") {
    Fan f;
    f.rays = {{2, 0}, {0, 1}, {-1, -1}};
    f.max_cones = {{0, 1}, {1, 2}, {2, 0}};
    CHECK_THROWS_AS(validate_fan(f), std::invalid_argument);  // non-primitive ray

    f.rays = {{1, 0}, {1, 0}, {0, 1}};
    CHECK_THROWS_AS(validate_fan(f), std::invalid_argument);  // duplicate ray

    f.rays = {{1, 0}, {0, 1}};
    f.max_cones = {{0, 1}};
    CHECK_THROWS_AS(validate_fan(f), std::invalid_argument);  // too few rays

    f.rays = {{1, 0}, {1, 2}, {-1, -1}};
    f.max_cones = {{0, 1}, {1, 2}, {2, 0}};
    CHECK_THROWS_AS(validate_fan(f), std::invalid_argument);  // |det| = 2 cone

    f = fan_projective(2);
    f.max_cones.pop_back();
    CHECK_THROWS_AS(validate_fan(f), std::invalid_argument);  // not complete

    f = fan_projective(2);
    f.max_cones.push_back(f.max_cones.front());
    CHECK_THROWS_AS(validate_fan(f), std::invalid_argument);  // duplicate cone

    f = fan_projective(2);
    f.max_cones[0] = {1};
    CHECK_THROWS_AS(validate_fan(f), std::invalid_argument);  // wrong cone size

    f = fan_projective(2);
    f.max_cones[0] = {1, 7};
    CHECK_THROWS_AS(validate_fan(f), std::invalid_argument);  // index out of range

    f = fan_projective(3);
    f.asserted_complete = false;
    CHECK_THROWS_AS(validate_fan(f), std::invalid_argument);  // n >= 3 needs the assertion
}

TEST_CASE("irrelevant_check examples") {
    Q K;
    auto p2 = fan_projective(2);
    CHECK(irrelevant_check(K, cox({1, 0, 0}), p2));
    CHECK(irrelevant_check(K, cox({0, 0, 5}), p2));
    CHECK_FALSE(irrelevant_check(K, cox({0, 0, 0}), p2));

    auto pp = fan_product(1, 1);
    CHECK(irrelevant_check(K, cox({1, 0, 0, 1}), pp));
    CHECK(irrelevant_check(K, cox({1, 0, 1, 0}), pp));
    CHECK_FALSE(irrelevant_check(K, cox({1, 0, 0, 0}), pp));
    CHECK_FALSE(irrelevant_check(K, cox({0, 0, 1, 1}), pp));

    CHECK_THROWS_AS(irrelevant_check(K, cox({1, 0}), p2), std::invalid_argument);
}

TEST_CASE("euler columns on P2 and P1xP1") {
    auto fan = fan_projective(2);
    auto pic = validate_fan(fan);
    auto R = cox_ring({"x", "y", "z"}, pic);
    auto f = mk(R, {{{3, 0, 0}, 1}, {{0, 2, 1}, -1}});  // cuspidal cubic
    ToricHypersurface<Q> T(fan, pic, f);
    CHECK(T.alpha() == DegreeVector{3});
    REQUIRE(T.matrices().euler_columns.size() == 1);
    const auto& col = T.matrices().euler_columns[0].components;
    CHECK(col[0] == P::variable(R, 0));
    CHECK(col[1] == P::variable(R, 1));
    CHECK(col[2] == P::variable(R, 2));
    CHECK(T.matrices().euler_degrees == std::vector<DegreeVector>{{3}});

    auto pfan = fan_product(1, 1);
    auto ppic = validate_fan(pfan);
    auto S = cox_ring({"x0", "x1", "y0", "y1"}, ppic);
    auto g = mk(S, {{{0, 2, 0, 2}, 1}, {{2, 0, 2, 0}, -1}});
    ToricHypersurface<Q> TP(pfan, ppic, g);
    CHECK(TP.alpha() == DegreeVector{2, 2});
    REQUIRE(TP.matrices().euler_columns.size() == 2);
    const auto& c0 = TP.matrices().euler_columns[0].components;
    const auto& c1 = TP.matrices().euler_columns[1].components;
    CHECK(c0[0] == P::variable(S, 0));
    CHECK(c0[1] == P::variable(S, 1));
    CHECK(c0[2].is_zero());
    CHECK(c0[3].is_zero());
    CHECK(c1[0].is_zero());
    CHECK(c1[1].is_zero());
    CHECK(c1[2] == P::variable(S, 2));
    CHECK(c1[3] == P::variable(S, 3));
}

TEST_CASE("constructor validation") {
    auto fan = fan_product(1, 1);
    auto pic = validate_fan(fan);
    auto S = cox_ring({"x0", "x1", "y0", "y1"}, pic);

    CHECK_THROWS_AS(ToricHypersurface<Q>(fan, pic, P::constant(S, Q{}.from_int(1))),
                    std::invalid_argument);  // class of D is zero
    auto inhom = mk(S, {{{1, 0, 0, 0}, 1}, {{0, 0, 1, 0}, 1}});
    CHECK_THROWS_AS(ToricHypersurface<Q>(fan, pic, inhom), std::invalid_argument);

    auto std_ring = make_ring(Q{}, {"x0", "x1", "y0", "y1"});
    auto h = mk(std_ring, {{{0, 2, 0, 2}, 1}, {{2, 0, 2, 0}, -1}});
    CHECK_THROWS_AS(ToricHypersurface<Q>(fan, pic, h), std::invalid_argument);

    auto swapped = pic;
    std::swap(swapped.degrees[0], swapped.degrees[2]);
    auto S2 = cox_ring({"x0", "x1", "y0", "y1"}, swapped);
    auto g2 = mk(S2, {{{2, 0, 0, 2}, 1}});
    CHECK_THROWS_AS(ToricHypersurface<Q>(fan, pic, g2), std::invalid_argument);

    auto fan3 = fan_projective(2);
    auto pic3 = validate_fan(fan3);
    auto R3 = cox_ring({"x", "y", "z"}, pic3);
    auto cubic = mk(R3, {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}, {{0, 0, 3}, 1}});
    CHECK_THROWS_AS(ToricHypersurface<Q>(fan, pic, cubic), std::invalid_argument);  // arity
}

// On the projective fan the toric pipeline must reproduce the projective one.
TEST_CASE("P2 fan degenerates to the projective classifier") {
    auto fan = fan_projective(2);
    auto pic = validate_fan(fan);
    auto RC = cox_ring({"x", "y", "z"}, pic);
    auto RS = make_ring(Q{}, {"x", "y", "z"});

    std::vector<std::vector<std::pair<std::vector<std::uint32_t>, long>>> curves = {
        {{{3, 0, 0}, 1}, {{0, 2, 1}, -1}},                   // cusp
        {{{0, 2, 1}, 1}, {{3, 0, 0}, -1}, {{2, 0, 1}, -1}},  // node
        {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}, {{0, 0, 3}, 1}},    // Fermat
    };
    std::vector<std::vector<long>> pts = {{0, 0, 1}, {0, 0, 1}, {1, -1, 0}};

    for (std::size_t i = 0; i < curves.size(); ++i) {
        ToricHypersurface<Q> T(fan, pic, mk(RC, curves[i]));
        ProjectiveHypersurface<Q> D(mk(RS, curves[i]));
        auto tp = cox(pts[i]);
        Point<Q> qp{PointKind::Projective, tp.coords};
        auto trep = T.classify(tp);
        auto prep = D.classify(qp, true);
        CHECK(trep.status == prep.status);
        CHECK(trep.rk_Mprime == prep.rk_Mprime);
        CHECK(trep.rk_M == prep.rk_M);
        CHECK(trep.seh == prep.seh);
        CHECK(trep.defect == 0);
        auto orc = T.torus_chart_oracle(tp);
        CHECK(orc.rk_j == prep.oracle->rk_j);
        CHECK(orc.rk_jprime == prep.oracle->rk_jprime);
    }
}

TEST_CASE("node on P1xP1") {
    auto fan = fan_product(1, 1);
    auto pic = validate_fan(fan);
    auto S = cox_ring({"x0", "x1", "y0", "y1"}, pic);
    auto f = mk(S, {{{0, 2, 0, 2}, 1}, {{2, 0, 2, 0}, -1}});
    ToricHypersurface<Q> T(fan, pic, f);
    CHECK(T.picard_rank() == 2);

    auto pnt = cox({1, 0, 0, 1});
    CHECK(T.point_status(pnt) == PointStatus::Singular);
    auto rep = T.classify(pnt);
    CHECK(rep.rk_M == 2);
    CHECK(rep.rk_M == T.picard_rank());
    CHECK(rep.seh);
    CHECK(rep.rk_Mprime + rep.defect == rep.rk_M);

    auto germ = T.torus_chart_germ(pnt);
    CHECK(germ.total_degree() == 2);
    CHECK(milnor(germ) == ExtendedNat::of(1));
    CHECK(tjurina(germ) == ExtendedNat::of(1));

    auto orc = T.torus_chart_oracle(pnt);
    CHECK(orc.rk_j == 0);
    CHECK(orc.rk_jprime == 1);
    CHECK((orc.rk_jprime == orc.rk_j + 1) == rep.seh);

    // same point, another torus representative
    auto rep2 = T.classify(cox({3, 0, 0, 5}));
    CHECK(rep2.rk_Mprime == rep.rk_Mprime);
    CHECK(rep2.rk_M == rep.rk_M);
    CHECK(rep2.defect == rep.defect);
    CHECK(rep2.seh == rep.seh);

    // smooth point on the same curve
    auto sm = cox({1, 1, 1, 1});
    CHECK(T.point_status(sm) == PointStatus::Smooth);
    auto srep = T.classify(sm);
    CHECK(srep.seh);
    CHECK(srep.rk_Mprime + srep.defect == srep.rk_M);
    auto sorc = T.torus_chart_oracle(sm);
    CHECK(sorc.rk_jprime == sorc.rk_j + 1);
}

TEST_CASE("non quasi-homogeneous bidegree (5,5) germ is not SEH") {
    auto fan = fan_product(1, 1);
    auto pic = validate_fan(fan);
    auto S = cox_ring({"x0", "x1", "y0", "y1"}, pic);
    auto f = mk(S, {{{0, 5, 5, 0}, 1}, {{5, 0, 0, 5}, 1}, {{3, 2, 3, 2}, 1}});
    ToricHypersurface<Q> T(fan, pic, f);

    auto pnt = cox({1, 0, 1, 0});
    CHECK(T.point_status(pnt) == PointStatus::Singular);
    auto germ = T.torus_chart_germ(pnt);
    CHECK(milnor(germ) == ExtendedNat::of(11));
    CHECK(tjurina(germ) == ExtendedNat::of(10));

    auto rep = T.classify(pnt);
    CHECK(rep.rk_M == 2);
    CHECK_FALSE(rep.seh);
    CHECK(rep.rk_Mprime + rep.defect < rep.rk_M);

    auto orc = T.torus_chart_oracle(pnt);
    CHECK((orc.rk_jprime == orc.rk_j + 1) == rep.seh);
}

TEST_CASE("smooth curve on a Hirzebruch surface") {
    auto fan = fan_hirzebruch(1);
    auto pic = validate_fan(fan);
    auto S = cox_ring({"x0", "x1", "x2", "x3"}, pic);
    auto f = mk(S, {{{1, 1, 0, 0}, 1}, {{0, 0, 1, 0}, 1}});  // x0 x1 + x2, degree (1,0)
    ToricHypersurface<Q> T(fan, pic, f);
    CHECK(T.alpha() == DegreeVector{1, 0});

    auto pnt = cox({1, 1, -1, 1});
    CHECK(T.point_status(pnt) == PointStatus::Smooth);
    auto rep = T.classify(pnt);
    CHECK(rep.seh);
    CHECK(rep.rk_Mprime + rep.defect == rep.rk_M);
    auto orc = T.torus_chart_oracle(pnt);
    CHECK(orc.rk_jprime == orc.rk_j + 1);
}

TEST_CASE("rank agreement over a prime field") {
    using Fp = PrimeField;
    Fp K(1000003);
    auto fan = fan_product(1, 1);
    auto pic = validate_fan(fan);
    auto S = make_cox_ring(K, {"x0", "x1", "y0", "y1"}, pic.degrees);
    auto f = testutil::mk<Fp>(S, {{{0, 2, 0, 2}, 1}, {{2, 0, 2, 0}, -1}});
    ToricHypersurface<Fp> T(fan, pic, f);
    Point<Fp> pnt{PointKind::Cox, {K.from_int(1), K.from_int(0), K.from_int(0), K.from_int(1)}};
    auto rep = T.classify(pnt);
    CHECK(rep.rk_M == 2);
    CHECK(rep.rk_Mprime + rep.defect == rep.rk_M);
    CHECK(rep.seh);
}

TEST_CASE("point validation on toric hypersurfaces") {
    auto fan = fan_product(1, 1);
    auto pic = validate_fan(fan);
    auto S = cox_ring({"x0", "x1", "y0", "y1"}, pic);
    auto f = mk(S, {{{0, 2, 0, 2}, 1}, {{2, 0, 2, 0}, -1}});
    ToricHypersurface<Q> T(fan, pic, f);

    CHECK_THROWS_AS(T.classify(cox({1, 0, 0, 0})), std::invalid_argument);   // irrelevant
    CHECK_THROWS_AS(T.classify(cox({1, 1, 1, 1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(T.classify(cox({1, 2, 1, 1})), std::invalid_argument);   // not on D
    CHECK(T.point_status(cox({1, 2, 1, 1})) == PointStatus::NotOnD);
    CHECK_THROWS_AS(T.torus_chart_germ(cox({0, 1, 1, 0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(T.logarithmic_defect(cox({1, 2, 1, 1})), std::invalid_argument);
}
