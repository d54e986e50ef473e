#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "kstab/error.hpp"
#include "kstab/random_instances.hpp"
#include "kstab/stability.hpp"
#include "slice_quadrature.hpp"

using namespace kstab;
using fx::q;
using fx::vec;


TEST_CASE("criterion") {
    auto v = criterion(fx::dsl2(), fx::one(fx::dsl2()));
    CHECK(v.status == Status::CriterionHolds);
    CHECK(*v.coefficients == vec({q(1, 6)}));
    CHECK(v.barycenter == vec({q(4, 3)}));
    CHECK(criterion(fx::dp1(), fx::one(fx::dp1())).status == Status::CriterionHolds);
    CHECK(criterion(fx::blp2(), fx::one(fx::blp2())).status == Status::Fails);
    auto bd = fx::dsl2();
    bd.kappa_p = vec({q(4, 3)});
    bd.facets[0].n_D = q(4, 3);
    bd.facets[1].n_D = q(2, 3);
    CHECK(criterion(bd, fx::one(bd)).status == Status::Boundary);
}

TEST_CASE("destabilizer") {
    auto w = destabilizer(fx::blp2(), fx::one(fx::blp2()));
    REQUIRE(w);
    CHECK(w->v == vec({1, 1}));
    CHECK(w->D == q(-1, 6));
    CHECK(!destabilizer(fx::dp1(), fx::one(fx::dp1())));
    CHECK(!destabilizer(fx::dsl2(), fx::one(fx::dsl2())));
    auto v = check(fx::blp2(), fx::one(fx::blp2()));
    REQUIRE(v.witness);
}

TEST_CASE("verdict consistency on random data") {
    Rng rng(77);
    for (int i = 0; i < 25; ++i) {
        auto inst = random_instance(rng);
        auto v = check(inst.datum, inst.weight);
        auto w = destabilizer(inst.datum, inst.weight);
        if (v.status == Status::CriterionHolds) CHECK(!w);
        if (v.status == Status::Fails) {
            REQUIRE(w);
            CHECK(w->D <= 0);
            CHECK(!(w->D == 0 && is_central(inst.datum, w->v)));
            // the affine configuration built from the witness has D = -v.(b - kappa)
            auto rep = evaluate(inst.datum, affine_tc(inst.datum, w->v), inst.weight);
            CHECK(rep.D == w->D);
        }
        // central twists leave the verdict inputs alone
        auto again = criterion(inst.datum, inst.weight);
        CHECK(again.barycenter == v.barycenter);
    }
}

TEST_CASE("ratio scan") {
    RatioFamily fam;
    fam.default_grid = false;
    fam.extra.push_back(fx::tc({{0, vec({0})}, {q(1, 2), vec({-1})}}));
    auto r = ratio_scan(fx::dp1(), fx::one(fx::dp1()), fam);
    REQUIRE(r.min_ratio);
    CHECK(*r.min_ratio == 1);

    auto sl = ratio_scan(fx::dsl2(), fx::one(fx::dsl2()));
    REQUIRE(sl.min_ratio);
    CHECK(*sl.min_ratio > 0);
    CHECK(sl.evaluated > 0);

    RatioFamily empty;
    empty.default_grid = false;
    empty.extra.push_back(fx::tc({{0, vec({q(1, 2)})}}));
    try {
        ratio_scan(fx::dp1(), fx::one(fx::dp1()), empty);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyFamily);
    }

    auto bl = ratio_scan(fx::blp2(), fx::one(fx::blp2()));
    CHECK(bl.destabilizer);
}

TEST_CASE("soliton solve") {
    std::vector<double> one{1.0};
    auto r = soliton_solve(fx::dp1(), one);
    CHECK(std::abs(r.c) < 1e-12);
    auto b = fx::blp2();
    std::vector<double> dir{1.0, 1.0};
    auto s = soliton_solve(b, dir);
    CHECK(s.c > -5);
    CHECK(s.c < 0);
    CHECK(std::abs(s.residual) < 1e-8);
    CHECK(std::abs(oracle::diagonal_moment(b.polytope(), s.c)) < 1e-4);
    SolitonOptions bracket;
    bracket.lo = 1;
    bracket.hi = 2;
    try {
        soliton_solve(fx::dp1(), one, bracket);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoSignChange);
    }
}

TEST_CASE("exp-affine criterion carries a guard") {
    auto b = fx::blp2();
    auto v = criterion(b, WeightFunction(ExpAffine{{0.0, 0.0}, 0.0}));
    CHECK(v.status == Status::Fails);
    auto p = criterion(fx::dp1(), WeightFunction(ExpAffine{{0.0}, 0.0}));
    CHECK(p.status == Status::Boundary);
    CHECK(!p.warning.empty());
}
