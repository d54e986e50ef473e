#include "kstab/random_instances.hpp"

#include <algorithm>
#include <set>

#include "kstab/error.hpp"

namespace kstab {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Vec unit(std::size_t r, std::size_t i, int s = 1) {
    Vec e(r, Rat(0));
    e[i] = s;
    return e;
}

// Keeps only rows that support facets.
void prune_facets(SphericalDatum& d) {
    std::vector<FacetData> kept;
    const HPolytope P = d.polytope();
    for (std::size_t i = 0; i < d.facets.size(); ++i) {
        try {
            triangulate_facet(P, i);
            kept.push_back(d.facets[i]);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotAFacet) throw;
        }
    }
    d.facets = std::move(kept);
}

}  // namespace

Rat random_rat(Rng& rng, int lo, int hi, int max_den) {
    const int q = uniform(rng, 1, max_den);
    return Rat(uniform(rng, lo * q, hi * q), q);
}

SphericalDatum random_datum(Rng& rng, std::size_t r) {
    SphericalDatum d;
    d.name = "random";
    d.r0 = r;
    std::set<Vec> used;
    auto add_facet = [&](Vec normal, Rat n_D) {
        normal = primitive_form(normal).primitive;
        if (!used.insert(normal).second) return;
        d.facets.push_back({std::move(normal), std::move(n_D), DivisorKind::GDivisor});
    };
    const bool with_roots = uniform(rng, 0, 1) == 1;
    const std::size_t nroots = with_roots ? static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(r))) : 0;
    d.kappa_p = Vec(r, Rat(0));
    for (std::size_t i = 0; i < nroots; ++i) {
        d.kappa_p[i] = Rat(uniform(rng, 1, 3), 2);
        d.roots.push_back({unit(r, i), Rat(0), Rat(uniform(rng, 1, 2))});
        add_facet(unit(r, i), d.kappa_p[i]);  // the root vanishes on this facet
    }
    for (std::size_t i = 0; i < r; ++i) {
        add_facet(unit(r, i, -1), Rat(uniform(rng, 1, 4), 2));
        if (i >= nroots) add_facet(unit(r, i), Rat(uniform(rng, 1, 4), 2));
    }
    const int extra = uniform(rng, 0, 2);
    for (int k = 0; k < extra; ++k) {
        Vec w(r);
        for (auto& x : w) x = uniform(rng, -2, 2);
        if (is_zero(w)) continue;
        add_facet(w, Rat(uniform(rng, 1, 4), 2));
    }
    prune_facets(d);
    d.n = r + nroots;

    if (uniform(rng, 0, 2) == 0) {
        // One spherical root along the last coordinate; the torus is its complement.
        d.spherical_roots.push_back(unit(r, r - 1));
        for (std::size_t i = 0; i + 1 < r; ++i) d.torus.push_back(unit(r, i));
    } else {
        for (std::size_t i = 0; i < r; ++i) d.torus.push_back(unit(r, i));
    }
    const auto verts = vertices(d.polytope());
    for (const auto& xi : d.torus) {
        Rat lo = dot(xi, verts.front());
        for (const auto& v : verts) lo = std::min(lo, dot(xi, v));
        d.chi.push_back(-lo + Rat(uniform(rng, 0, 2), 2));
    }
    d.chi_canonical = false;
    return d;
}

WeightFunction random_weight(Rng& rng, const SphericalDatum& d, unsigned max_degree, bool monomial) {
    const std::size_t t = d.torus_rank();
    Polynomial g(t);
    auto random_exponents = [&] {
        Exponents e(t, 0);
        const unsigned deg = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(max_degree)));
        for (unsigned k = 0; k < deg && t > 0; ++k) ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(t) - 1))];
        return e;
    };
    if (monomial) {
        g.add_term(Rat(uniform(rng, 1, 3)), random_exponents());
        return WeightFunction(std::move(g));
    }
    g.add_term(Rat(uniform(rng, 1, 4), 2), Exponents(t, 0));
    const int terms = uniform(rng, 0, 3);
    for (int k = 0; k < terms; ++k) g.add_term(random_rat(rng, 1, 2, 3), random_exponents());
    return WeightFunction(std::move(g));
}

TestConfig random_tc(Rng& rng, const SphericalDatum& d, std::size_t max_pieces) {
    const std::size_t r = d.r0;
    const std::size_t want = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_pieces)));
    TestConfig tc;
    for (int attempts = 0; tc.pieces.size() < want && attempts < 200; ++attempts) {
        Piece p{random_rat(rng, 0, 3, 3), Vec(r)};
        for (auto& x : p.Lambda) x = random_rat(rng, -2, 2, 3);
        if (!in_valuation_cone(d, p.Lambda)) continue;
        TestConfig trial = tc;
        trial.pieces.push_back(p);
        const auto base = regions(d, trial);
        bool ok = true;
        for (const auto& reg : base.regions) ok = ok && is_full_dimensional(reg.omega);
        if (ok) tc = std::move(trial);
    }
    if (tc.pieces.empty()) tc.pieces.push_back({Rat(1), Vec(r, Rat(0))});
    Rat lo = tc.value(vertices(d.polytope()).front());
    for (const auto& v : vertices(d.polytope())) lo = std::min(lo, tc.value(v));
    const Rat shift = -lo + Rat(uniform(rng, 0, 2), 2);
    for (auto& p : tc.pieces) p.C += shift;
    return validate_tc(d, std::move(tc.pieces));
}

Instance random_instance(Rng& rng, const InstanceOptions& opt) {
    const auto r = static_cast<std::size_t>(uniform(rng, static_cast<int>(opt.min_rank), static_cast<int>(opt.max_rank)));
    SphericalDatum d = random_datum(rng, r);
    WeightFunction g = random_weight(rng, d, opt.max_weight_degree, uniform(rng, 0, 2) == 0);
    TestConfig tc = random_tc(rng, d, opt.max_pieces);
    return {std::move(d), std::move(tc), std::move(g)};
}

}  // namespace kstab
