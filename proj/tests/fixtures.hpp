#ifndef KSTAB_TESTS_FIXTURES_HPP
#define KSTAB_TESTS_FIXTURES_HPP

#include <string>

#include "kstab/datum.hpp"
#include "kstab/test_config.hpp"
#include "kstab/weights.hpp"

namespace fx {

using namespace kstab;

inline Rat q(long p, long d = 1) { return Rat(p, d); }

inline Vec vec(std::initializer_list<Rat> xs) { return Vec(xs); }

inline HPolytope interval(Rat lo, Rat hi) { return HPolytope(1, {{vec({1}), -lo}, {vec({-1}), hi}}); }

inline HPolytope blp2_polytope() {
    return HPolytope(2, {{vec({1, 0}), 1}, {vec({0, 1}), 1}, {vec({-1, -1}), 1}, {vec({1, 1}), 1}});
}

inline SphericalDatum dp1() { return toric_datum(interval(-1, 1), "P1"); }

inline SphericalDatum dsl2() {
    SphericalDatum d;
    d.name = "SL2";
    d.n = 2;
    d.r0 = 1;
    d.facets = {{vec({1}), 1, DivisorKind::Colour}, {vec({-1}), 1, DivisorKind::GDivisor}};
    d.roots = {{vec({1}), 0, 1}};
    d.kappa_p = vec({1});
    d.spherical_roots = {vec({2})};
    return d;
}

inline SphericalDatum blp2() { return toric_datum(blp2_polytope(), "BlpP2"); }

inline WeightFunction one(const SphericalDatum& d) { return WeightFunction::one(d.torus_rank()); }

/// Polynomial weight in one torus variable from coefficients c_0 + c_1 t + ...
inline WeightFunction univariate(std::initializer_list<Rat> coeffs) {
    Polynomial p(1);
    unsigned k = 0;
    for (const auto& c : coeffs) p.add_term(c, {k++});
    return WeightFunction(p);
}

inline TestConfig tc(std::initializer_list<std::pair<Rat, Vec>> pieces) {
    TestConfig t;
    for (const auto& [c, l] : pieces) t.pieces.push_back({c, l});
    return t;
}

inline TestConfig f1() { return tc({{q(1), vec({0})}, {q(3, 2), vec({-1})}}); }
inline TestConfig f2() { return tc({{q(1), vec({0})}, {q(1), vec({q(-1, 2)})}}); }
inline TestConfig f3() { return tc({{q(1), vec({q(1, 2)})}}); }
inline TestConfig kink() { return tc({{q(1), vec({0})}, {q(1), vec({-1})}}); }
inline TestConfig sl2_tc() { return tc({{q(1), vec({0})}, {q(4), vec({-2})}}); }

inline std::string data_path(const std::string& name) { return std::string(KSTAB_DATA_DIR) + "/" + name; }

}  // namespace fx

#endif
