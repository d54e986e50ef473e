#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "kstab/error.hpp"
#include "kstab/integration.hpp"

using namespace kstab;
using fx::q;
using fx::vec;

namespace {

HPolytope unit_square() {
    return HPolytope(2, {{vec({1, 0}), 0}, {vec({-1, 0}), 1}, {vec({0, 1}), 0}, {vec({0, -1}), 1}});
}

HPolytope std_triangle(Rat s = 1) { return HPolytope(2, {{vec({1, 0}), 0}, {vec({0, 1}), 0}, {vec({-1, -1}), s}}); }

Polynomial x(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

}  // namespace

TEST_CASE("exact integrals") {
    CHECK(integrate_polynomial(std_triangle(), x(2, 0)) == q(1, 6));
    CHECK(integrate_polynomial(unit_square(), x(2, 0) * x(2, 1)) == q(1, 4));
    CHECK(integrate_polynomial(fx::interval(-1, 1), x(1, 0).pow(2)) == q(2, 3));
    CHECK(standard_simplex_moment({1, 2}) == q(2, 120));
}

TEST_CASE("facet integrals in the lattice measure") {
    // facet x1 = 1 of the square is row 1
    CHECK(facet_integral_lattice(unit_square(), 1, x(2, 1)) == q(1, 2));
    // row 1 of [-1,1] is lambda = 1
    CHECK(facet_integral_lattice(fx::interval(-1, 1), 1, x(1, 0).pow(2)) == 1);
    CHECK(facet_integral_lattice(std_triangle(2), 2, Polynomial::constant(2, 1)) == 2);
    HPolytope with_redundant = unit_square().with({vec({1, 1}), 5});
    try {
        facet_integral_lattice(with_redundant, 4, Polynomial::constant(2, 1));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAFacet);
    }
}

TEST_CASE("numeric quadrature") {
    auto r = integrate_numeric(fx::interval(-1, 1), [](std::span<const double>) { return std::exp(0.0); });
    CHECK(std::abs(r.value - 2.0) < 1e-12);
    auto e = integrate_numeric(fx::interval(0, 1), [](std::span<const double> p) { return std::exp(p[0]); });
    CHECK(std::abs(e.value - (std::exp(1.0) - 1)) < 1e-10);
    auto s = integrate_numeric(fx::interval(-1, 1), [](std::span<const double> p) { return p[0] * p[0]; });
    CHECK(std::abs(s.value - 2.0 / 3) < 1e-12);
    NumericOptions tight;
    tight.max_cells = 4;
    tight.abs_tol = 0;
    tight.rel_tol = 0;
    try {
        integrate_numeric(fx::interval(0, 1), [](std::span<const double> p) { return std::sqrt(p[0]); }, tight);
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::NoConvergence);
    }
}

TEST_CASE("Grundmann-Moller weights") {
    for (unsigned n = 1; n <= 4; ++n) {
        auto rule = grundmann_moller(n, 4);
        double sum = 0;
        for (double w : rule.weights) sum += w;
        CHECK(sum == doctest::Approx(1.0 / std::tgamma(n + 1.0)).epsilon(1e-13));
    }
}

TEST_CASE("additivity over a subdivision") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-3, 3);
    const auto tri = std_triangle(2);
    for (int t = 0; t < 20; ++t) {
        Polynomial p(2);
        for (int k = 0; k < 4; ++k) p.add_term(Rat(c(rng), 2), {static_cast<unsigned>(c(rng) + 3) % 3, static_cast<unsigned>(c(rng) + 3) % 4});
        // cut by a random line through the interior
        Vec n = vec({c(rng), c(rng)});
        if (is_zero(n)) continue;
        Rat off = -dot(n, vec({q(1, 2), q(1, 2)}));
        Halfspace h{n, off}, g{scale(Rat(-1), n), -off};
        Rat whole = integrate_polynomial(tri, p);
        CHECK(whole == integrate_polynomial(tri.with(h), p) + integrate_polynomial(tri.with(g), p));
    }
}

TEST_CASE("unimodular change of variables") {
    // A = [[1,1],[0,1]], det 1: integral over A(P) of p equals integral over P of p o A.
    const auto P = std_triangle(1);
    Matrix A{vec({1, 1}), vec({0, 1})};
    // A(P) as inequalities: n . A^{-1} y + b >= 0
    Matrix Ainv{vec({1, -1}), vec({0, 1})};
    std::vector<Halfspace> rows;
    for (const auto& h : P.rows()) {
        Vec n(2);
        for (std::size_t j = 0; j < 2; ++j) n[j] = h.normal[0] * Ainv[0][j] + h.normal[1] * Ainv[1][j];
        rows.push_back({n, h.offset});
    }
    HPolytope AP(2, rows);
    Polynomial p = x(2, 0).pow(2) * x(2, 1) + Polynomial::constant(2, 3) * x(2, 1);
    std::vector<Polynomial> subs{Polynomial::affine(A[0], 0), Polynomial::affine(A[1], 0)};
    CHECK(integrate_polynomial(AP, p) == integrate_polynomial(P, p.compose(subs)));
}

TEST_CASE("numeric and exact paths agree within the reported error") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> c(-3, 3);
    const auto P = fx::blp2_polytope();
    for (int t = 0; t < 10; ++t) {
        Polynomial p(2);
        for (int k = 0; k < 4; ++k) p.add_term(Rat(c(rng), 3), {static_cast<unsigned>(c(rng) + 3), static_cast<unsigned>(c(rng) + 3) % 3});
        auto exact = to_double(integrate_polynomial(P, p));
        auto num = integrate_numeric(P, [&](std::span<const double> y) { return p.eval(y); });
        CHECK(std::abs(num.value - exact) <= num.error + 1e-9 * std::max(1.0, std::abs(exact)));
    }
}
