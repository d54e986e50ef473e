#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "kstab/error.hpp"

using namespace kstab;
using fx::q;
using fx::vec;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("validate_tc") {
    CHECK_NOTHROW(validate_tc(fx::dp1(), fx::f1().pieces));
    CHECK_NOTHROW(validate_tc(fx::dsl2(), fx::sl2_tc().pieces));
    CHECK(kind_of([] { validate_tc(fx::dsl2(), fx::tc({{1, vec({0})}, {0, vec({1})}}).pieces); }) ==
          ErrorKind::GradientOutsideValuationCone);
    CHECK(kind_of([] { validate_tc(fx::dp1(), fx::tc({{q(-1), vec({0})}}).pieces); }) == ErrorKind::NegativeSomewhere);
    CHECK(kind_of([] { validate_tc(fx::dp1(), fx::tc({{1, vec({0})}, {5, vec({-1})}}).pieces); }) ==
          ErrorKind::RedundantPiece);
    CHECK(kind_of([] { validate_tc(fx::dp1(), fx::tc({{1, vec({0})}, {1, vec({0})}}).pieces); }) ==
          ErrorKind::RedundantPiece);
}

TEST_CASE("regions and multiplicities") {
    auto d = fx::dp1();
    auto r1 = regions(d, fx::f1());
    CHECK(vertices(r1.regions[0].omega) == std::vector<Vec>{vec({-1}), vec({q(1, 2)})});
    CHECK(vertices(r1.regions[1].omega) == std::vector<Vec>{vec({q(1, 2)}), vec({1})});
    CHECK(r1.reduced_central_fibre());
    auto r2 = regions(d, fx::f2());
    CHECK(vertices(r2.regions[0].omega) == std::vector<Vec>{vec({-1}), vec({0})});
    CHECK(r2.regions[1].m == 2);
    CHECK(!r2.reduced_central_fibre());
    auto r3 = regions(d, fx::f3());
    CHECK(r3.regions.size() == 1);
    CHECK(r3.regions[0].m == 2);
}

TEST_CASE("normalize") {
    auto d = fx::dp1();
    auto n1 = normalize(d, fx::f1());
    for (const Vec& x : {vec({-1}), vec({0}), vec({q(3, 4)}), vec({1})}) CHECK(n1.value(x) == fx::f1().value(x) - 1);
    auto n3 = normalize(d, fx::f3());
    for (const Vec& x : {vec({-1}), vec({q(1, 3)}), vec({1})}) CHECK(n3.value(x) == 0);
    auto s = fx::dsl2();
    auto ns = normalize(s, fx::sl2_tc());
    for (const Vec& x : {vec({0}), vec({q(3, 2)}), vec({2})}) CHECK(ns.value(x) == fx::sl2_tc().value(x) - 1);
    // max over the interior kink, not just the vertices
    auto tent = fx::tc({{1, vec({1})}, {1, vec({-1})}});
    CHECK(max_value(d, tent) == 1);
}

TEST_CASE("twist") {
    auto d = fx::dp1();
    auto t = twist(d, fx::f3(), vec({q(1, 2)}));
    CHECK(t.value(vec({q(-2, 3)})) == 1);
    CHECK(t.value(vec({1})) == 1);
    auto same = twist(d, fx::f1(), vec({0}));
    CHECK(same.pieces[1].Lambda == fx::f1().pieces[1].Lambda);
    CHECK(kind_of([] { twist(fx::dsl2(), fx::sl2_tc(), vec({1})); }) == ErrorKind::NotCentral);
}

TEST_CASE("regions tile the polytope") {
    auto b = fx::blp2();
    auto tc = fx::tc({{1, vec({0, 0})}, {2, vec({-1, 0})}, {2, vec({0, -1})}, {q(3, 4), vec({q(1, 2), q(1, 2)})}});
    tc = validate_tc(b, tc.pieces);
    Rat total = 0;
    for (const auto& r : regions(b, tc).regions) total += volume(r.omega);
    CHECK(total == volume(b.polytope()));

    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> c(-12, 12);
    for (int i = 0; i < 100; ++i) {
        Vec x = vec({Rat(c(rng), 7), Rat(c(rng), 7)});
        if (!b.polytope().contains(x)) continue;
        Rat via_region;
        bool found = false;
        for (const auto& r : regions(b, tc).regions) {
            if (!found && r.omega.contains(x)) {
                via_region = r.piece.eval(x);
                found = true;
            }
        }
        CHECK(found);
        CHECK(via_region == tc.value(x));
    }
}

TEST_CASE("normalized output is stable under further central twists") {
    auto b = fx::blp2();
    auto tc = fx::tc({{2, vec({0, 0})}, {3, vec({-1, 0})}, {3, vec({q(1, 3), -1})}});
    auto n = normalize(b, twist(b, tc, vec({q(1, 2), -2})));
    auto again = normalize(b, twist(b, n, vec({3, q(-1, 5)})));
    for (const auto& v : vertices(b.polytope())) CHECK(again.value(v) == n.value(v));
    CHECK(again.value(b.kappa_p) == n.value(b.kappa_p));
}

TEST_CASE("test configuration files") {
    auto t = load_test_config_file(fx::data_path("f1.json"), 1);
    CHECK(t.pieces.size() == 2);
    CHECK(t.pieces[1].C == q(3, 2));
    CHECK(kind_of([] { load_test_config(R"({"pieces":[{"c":"1","lambda":["0","1"]}]})", 1); }) ==
          ErrorKind::DimensionMismatch);
    CHECK(kind_of([] { load_test_config(R"({"pieces":[]})", 1); }) == ErrorKind::ParseError);
}
