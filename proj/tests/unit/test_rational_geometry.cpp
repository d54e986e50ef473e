#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "kstab/error.hpp"
#include "kstab/geometry.hpp"

using namespace kstab;
using fx::q;
using fx::vec;

TEST_CASE("rationals are canonical") {
    CHECK(to_string(parse_rat("7/21")) == "1/3");
    CHECK(to_string(parse_rat("-4/-8")) == "1/2");
    CHECK(parse_rat("-0.25") == q(-1, 4));
    CHECK(parse_rat(" 5 ") == q(5));
    CHECK_THROWS_AS(parse_rat("1/0"), Error);
    CHECK_THROWS_AS(parse_rat("abc"), Error);
    CHECK(to_string(q(6, 3)) == "2");
}

TEST_CASE("primitive form keeps the scale") {
    auto pf = primitive_form(vec({q(1, 2), q(-3, 4)}));
    CHECK(pf.primitive == vec({2, -3}));
    CHECK(pf.scale == 4);
    auto z = primitive_form(vec({0, 6}));
    CHECK(z.primitive == vec({0, 1}));
    CHECK(z.scale == q(1, 6));
}

TEST_CASE("vertices") {
    CHECK(vertices(fx::interval(-1, 1)) == std::vector<Vec>{vec({-1}), vec({1})});
    auto v = vertices(fx::blp2_polytope());
    CHECK(v == std::vector<Vec>{vec({-1, 0}), vec({-1, 2}), vec({0, -1}), vec({2, -1})});
    HPolytope bad(1, {{vec({1}), -1}, {vec({-1}), 0}});
    try {
        vertices(bad);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Infeasible);
    }
    HPolytope ray(1, {{vec({1}), 0}});
    try {
        vertices(ray);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Unbounded);
    }
}

TEST_CASE("triangulate and volume") {
    HPolytope square(2, {{vec({1, 0}), 0}, {vec({-1, 0}), 1}, {vec({0, 1}), 0}, {vec({0, -1}), 1}});
    auto cells = triangulate(square);
    CHECK(cells.size() == 2);
    Rat total = 0;
    for (const auto& s : cells) total += simplex_volume(s);
    CHECK(total == 1);
    CHECK(volume(fx::interval(-1, 1)) == 2);
    CHECK(volume(fx::blp2_polytope()) == 4);
    HPolytope flat(2, {{vec({1, 0}), 0}, {vec({-1, 0}), 0}, {vec({0, 1}), 0}, {vec({0, -1}), 1}});
    try {
        triangulate(flat);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegeneratePolytope);
    }
}

TEST_CASE("simplicial cone coefficients") {
    CHECK(*simplicial_cone_coefficients(vec({q(1, 3)}), {vec({2})}) == vec({q(1, 6)}));
    auto empty = simplicial_cone_coefficients(vec({0}), {});
    REQUIRE(empty);
    CHECK(empty->empty());
    CHECK(!simplicial_cone_coefficients(vec({1, -1}), {vec({1, 0})}));
    try {
        simplicial_cone_coefficients(vec({1, 1}), {vec({1, 1}), vec({2, 2})});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DependentGenerators);
    }
}

namespace {

HPolytope random_polytope(std::mt19937_64& rng, std::size_t d) {
    std::uniform_int_distribution<int> coord(-4, 4);
    std::vector<Vec> pts;
    while (true) {
        pts.clear();
        for (int i = 0; i < 6; ++i) {
            Vec p(d);
            for (auto& x : p) x = Rat(coord(rng), 2);
            pts.push_back(p);
        }
        if (affine_dimension(pts) == d) return hull_of_points(pts);
    }
}

}  // namespace

TEST_CASE("vertex round trip through the hull") {
    std::mt19937_64 rng(7);
    for (std::size_t d = 1; d <= 3; ++d) {
        for (int t = 0; t < 8; ++t) {
            auto p = random_polytope(rng, d);
            auto v = vertices(p);
            CHECK(vertices(hull_of_points(v)) == v);
        }
    }
}

TEST_CASE("triangulation volume does not depend on the apex") {
    std::mt19937_64 rng(11);
    for (std::size_t d = 1; d <= 3; ++d) {
        for (int t = 0; t < 8; ++t) {
            auto p = random_polytope(rng, d);
            Rat a = 0, b = 0;
            for (const auto& s : triangulate(p, Apex::LexFirst)) a += simplex_volume(s);
            for (const auto& s : triangulate(p, Apex::LexLast)) b += simplex_volume(s);
            CHECK(a == b);
        }
    }
}

TEST_CASE("positive cone coefficients agree with a grid search") {
    // 2-dim cones: v is a strictly positive combination iff some grid point
    // a, b in (0, 4] with step 1/4 reproduces it.
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int t = 0; t < 60; ++t) {
        Vec g1 = vec({c(rng), c(rng)}), g2 = vec({c(rng), c(rng)});
        if (rank({g1, g2}) < 2) continue;
        Rat a0(c(rng) + 4, 4), b0(c(rng), 4);
        Vec v = add(scale(a0, g1), scale(b0, g2));
        auto coef = simplicial_cone_coefficients(v, {g1, g2});
        REQUIRE(coef);
        bool positive = (*coef)[0] > 0 && (*coef)[1] > 0;
        bool found = false;
        for (int i = 1; i <= 16 && !found; ++i)
            for (int j = 1; j <= 16 && !found; ++j) found = add(scale(Rat(i, 4), g1), scale(Rat(j, 4), g2)) == v;
        CHECK(positive == found);
    }
}
