#include "kstab/datum.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json_util.hpp"
#include "kstab/error.hpp"
#include "kstab/integration.hpp"

namespace kstab {

HPolytope SphericalDatum::polytope() const {
    std::vector<Halfspace> rows;
    rows.reserve(facets.size());
    for (const auto& f : facets) rows.push_back({f.normal, f.n_D - dot(kappa_p, f.normal)});
    return HPolytope(r0, std::move(rows));
}

Vec canonical_character(const SphericalDatum& d) {
    Vec chi;
    for (const auto& xi : d.torus) chi.push_back(-dot(xi, d.kappa_p));
    return chi;
}

void check_shapes(const SphericalDatum& d) {
    auto need = [&](std::size_t got, const std::string& what) {
        if (got != d.r0) {
            throw Error(ErrorKind::DimensionMismatch,
                        what + " has length " + std::to_string(got) + ", rank is " + std::to_string(d.r0));
        }
    };
    need(d.kappa_p.size(), "kappa_p");
    for (std::size_t i = 0; i < d.facets.size(); ++i) need(d.facets[i].normal.size(), "facet " + std::to_string(i) + " normal");
    for (std::size_t i = 0; i < d.roots.size(); ++i) need(d.roots[i].linear.size(), "root " + std::to_string(i));
    for (std::size_t i = 0; i < d.spherical_roots.size(); ++i) need(d.spherical_roots[i].size(), "spherical root " + std::to_string(i));
    for (std::size_t i = 0; i < d.torus.size(); ++i) need(d.torus[i].size(), "torus generator " + std::to_string(i));
    if (d.chi.size() != d.torus.size()) {
        throw Error(ErrorKind::DimensionMismatch, "chi has " + std::to_string(d.chi.size()) + " entries for " +
                                                      std::to_string(d.torus.size()) + " torus generators");
    }
    if (d.n != d.r0 + d.roots.size()) {
        throw Error(ErrorKind::DimensionMismatch, "n != rank + #roots (" + std::to_string(d.n) + " != " +
                                                      std::to_string(d.r0) + " + " + std::to_string(d.roots.size()) + ")");
    }
}

SphericalDatum load_datum(std::string_view document) {
    using detail::child;
    using detail::index;
    const auto doc = detail::parse_document(document);
    if (!doc.is_object()) throw Error(ErrorKind::ParseError, "<root>: expected an object");

    SphericalDatum d;
    if (auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string()) throw Error(ErrorKind::ParseError, "name: expected a string");
        d.name = it->get<std::string>();
    }
    auto dim = detail::int_from_json(detail::require(doc, "dimension", ""), "dimension");
    auto rank = detail::int_from_json(detail::require(doc, "rank", ""), "rank");
    if (dim < 0 || rank < 0) throw Error(ErrorKind::ParseError, "dimension and rank must be non-negative");
    d.n = static_cast<std::size_t>(dim);
    d.r0 = static_cast<std::size_t>(rank);

    const auto& facets = detail::require(detail::require(doc, "polytope", ""), "facets", "polytope");
    if (!facets.is_array()) throw Error(ErrorKind::ParseError, "polytope.facets: expected an array");
    for (std::size_t i = 0; i < facets.size(); ++i) {
        const std::string p = index("polytope.facets", i);
        FacetData f;
        f.normal = detail::vec_from_json(detail::require(facets[i], "normal", p), child(p, "normal"));
        f.n_D = detail::rat_from_json(detail::require(facets[i], "n_D", p), child(p, "n_D"));
        if (auto it = facets[i].find("kind"); it != facets[i].end()) {
            const std::string kind = it->is_string() ? it->get<std::string>() : "";
            if (kind == "g-divisor") f.kind = DivisorKind::GDivisor;
            else if (kind == "colour" || kind == "color") f.kind = DivisorKind::Colour;
            else throw Error(ErrorKind::ParseError, child(p, "kind") + ": expected \"g-divisor\" or \"colour\"");
        }
        d.facets.push_back(std::move(f));
    }

    if (auto it = doc.find("roots"); it != doc.end()) {
        if (!it->is_array()) throw Error(ErrorKind::ParseError, "roots: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string p = index("roots", i);
            const auto& r = (*it)[i];
            RootFunctional root;
            root.linear = detail::vec_from_json(detail::require(r, "linear", p), child(p, "linear"));
            root.constant = detail::rat_from_json(detail::require(r, "constant", p), child(p, "constant"));
            root.rho_pairing = detail::rat_from_json(detail::require(r, "rho_pairing", p), child(p, "rho_pairing"));
            d.roots.push_back(std::move(root));
        }
    }

    d.kappa_p = detail::vec_from_json(detail::require(doc, "kappa_p", ""), "kappa_p");

    if (auto it = doc.find("spherical_roots"); it != doc.end()) {
        if (!it->is_array()) throw Error(ErrorKind::ParseError, "spherical_roots: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            d.spherical_roots.push_back(detail::vec_from_json((*it)[i], index("spherical_roots", i)));
        }
    }

    bool canonical = true;
    Vec explicit_chi;
    if (auto it = doc.find("torus"); it != doc.end()) {
        const auto& xi = detail::require(*it, "xi", "torus");
        if (!xi.is_array()) throw Error(ErrorKind::ParseError, "torus.xi: expected an array");
        for (std::size_t i = 0; i < xi.size(); ++i) d.torus.push_back(detail::vec_from_json(xi[i], index("torus.xi", i)));
        if (auto c = it->find("chi"); c != it->end()) {
            if (c->is_string()) {
                if (c->get<std::string>() != "canonical") {
                    throw Error(ErrorKind::ParseError, "torus.chi: expected \"canonical\" or an array");
                }
            } else {
                canonical = false;
                explicit_chi = detail::vec_from_json(*c, "torus.chi");
            }
        }
    }
    d.chi_canonical = canonical;
    if (canonical) {
        if (d.kappa_p.size() != d.r0) throw Error(ErrorKind::DimensionMismatch, "kappa_p length differs from rank");
        for (const auto& xi : d.torus) {
            if (xi.size() != d.r0) throw Error(ErrorKind::DimensionMismatch, "torus generator length differs from rank");
        }
        d.chi = canonical_character(d);
    } else {
        d.chi = std::move(explicit_chi);
    }
    check_shapes(d);
    return d;
}

SphericalDatum load_datum_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_datum(ss.str());
}

bool ValidationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

ValidationReport validate(const SphericalDatum& d) {
    ValidationReport rep;
    auto record = [&](std::string name, bool passed, std::string detail = {}) {
        rep.checks.push_back({std::move(name), passed, std::move(detail)});
    };

    try {
        check_shapes(d);
        record("shapes", true);
    } catch (const Error& e) {
        record("shapes", false, e.what());
        return rep;  // nothing below is meaningful with inconsistent lengths
    }

    const HPolytope poly = d.polytope();
    std::vector<Vec> verts;
    try {
        verts = vertices(poly);
        if (affine_dimension(verts) != d.r0) {
            record("polytope", false, "moment polytope is not full-dimensional");
        } else {
            record("polytope", true, std::to_string(verts.size()) + " vertices");
        }
    } catch (const Error& e) {
        record("polytope", false, e.what());
    }

    auto dups = poly.duplicate_rows();
    record("distinct facets", dups.empty(), dups.empty() ? "" : "facet " + std::to_string(dups.front()) + " repeats an earlier one");

    record("kappa_p interior", poly.strictly_inside(d.kappa_p), "kappa_p = " + to_string(d.kappa_p));

    if (!verts.empty()) {
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < d.facets.size() && ok; ++i) {
            const auto& f = d.facets[i];
            std::vector<Vec> on;
            for (const auto& v : verts) {
                if (poly.rows()[i].eval(v) == 0) on.push_back(v);
            }
            if (on.empty() || affine_dimension(on) + 1 != d.r0) {
                ok = false;
                detail = "facet " + std::to_string(i) + " does not support a facet of the polytope";
                break;
            }
            const Rat level = dot(d.kappa_p, f.normal) - f.n_D;
            for (const auto& v : on) {
                if (dot(f.normal, v) != level) {
                    ok = false;
                    detail = "facet " + std::to_string(i) + ": w.lambda not constant at " + to_string(v);
                    break;
                }
            }
        }
        record("Q-reflexive facets", ok, detail);

        bool rho_ok = true, nonneg = true, interior_pos = true;
        std::string rdetail;
        Vec centre(d.r0, Rat(0));
        for (const auto& v : verts) centre = kstab::add(centre, v);
        centre = scale(Rat(1, static_cast<long>(verts.size())), centre);
        for (std::size_t i = 0; i < d.roots.size(); ++i) {
            const auto& r = d.roots[i];
            if (r.rho_pairing <= 0) {
                rho_ok = false;
                rdetail = "root " + std::to_string(i) + " has non-positive rho pairing";
            }
            for (const auto& v : verts) {
                if (r.eval(v) < 0) {
                    nonneg = false;
                    rdetail = "root " + std::to_string(i) + " negative at vertex " + to_string(v);
                }
            }
            if (r.eval(centre) <= 0) {
                interior_pos = false;
                rdetail = "root " + std::to_string(i) + " not positive at interior point " + to_string(centre);
            }
        }
        record("root positivity", rho_ok && nonneg && interior_pos, rdetail);
    }

    record("spherical roots independent", rank(d.spherical_roots) == d.spherical_roots.size());

    {
        bool ok = true;
        std::string detail;
        for (std::size_t a = 0; a < d.torus.size() && ok; ++a) {
            for (std::size_t j = 0; j < d.spherical_roots.size(); ++j) {
                if (dot(d.spherical_roots[j], d.torus[a]) != 0) {
                    ok = false;
                    detail = "sigma_" + std::to_string(j) + " . xi_" + std::to_string(a) + " != 0";
                    break;
                }
            }
        }
        record("torus orthogonal to spherical roots", ok, detail);
    }
    record("torus generators independent", rank(d.torus) == d.torus.size());
    return rep;
}

Polynomial pi_polynomial(const SphericalDatum& d) {
    Polynomial pi = Polynomial::constant(d.r0, 1);
    for (const auto& r : d.roots) pi = pi * (Polynomial::affine(r.linear, r.constant) * (1 / r.rho_pairing));
    return pi;
}

Rat degree(const SphericalDatum& d) {
    return factorial(static_cast<unsigned>(d.n)) * integrate_polynomial(d.polytope(), pi_polynomial(d));
}

SphericalDatum toric_datum(const HPolytope& p, std::string name) {
    SphericalDatum d;
    d.name = std::move(name);
    d.n = d.r0 = p.dim();
    d.kappa_p = Vec(p.dim(), Rat(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& h = p.rows()[i];
        if (h.offset <= 0) {
            throw Error(ErrorKind::NotReflexive, "row " + std::to_string(i) + ": origin is not interior");
        }
        Vec w = scale(1 / h.offset, h.normal);
        if (is_zero(w) || primitive_form(w).scale != 1) {
            throw Error(ErrorKind::NotReflexive, "row " + std::to_string(i) + ": facet is not at lattice distance one");
        }
        d.facets.push_back({std::move(w), Rat(1), DivisorKind::GDivisor});
    }
    for (std::size_t a = 0; a < p.dim(); ++a) {
        Vec e(p.dim(), Rat(0));
        e[a] = 1;
        d.torus.push_back(std::move(e));
    }
    d.chi = canonical_character(d);
    d.chi_canonical = true;
    return d;
}

Vec project_central(const SphericalDatum& d, std::span<const Rat> v) {
    const auto& s = d.spherical_roots;
    if (s.empty()) return Vec(v.begin(), v.end());
    Matrix gram(s.size(), Vec(s.size()));
    Vec rhs(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) gram[i][j] = dot(s[i], s[j]);
        rhs[i] = dot(s[i], v);
    }
    auto y = solve_square(gram, rhs);
    if (!y) throw Error(ErrorKind::DependentGenerators, "spherical roots are linearly dependent");
    Vec out(v.begin(), v.end());
    for (std::size_t i = 0; i < s.size(); ++i) out = sub(out, scale((*y)[i], s[i]));
    return out;
}

bool is_central(const SphericalDatum& d, std::span<const Rat> v) {
    return std::all_of(d.spherical_roots.begin(), d.spherical_roots.end(),
                       [&](const Vec& s) { return dot(s, v) == 0; });
}

bool in_valuation_cone(const SphericalDatum& d, std::span<const Rat> v) {
    return std::all_of(d.spherical_roots.begin(), d.spherical_roots.end(),
                       [&](const Vec& s) { return dot(s, v) <= 0; });
}

}  // namespace kstab
