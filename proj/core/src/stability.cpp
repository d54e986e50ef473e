#include "kstab/stability.hpp"

#include <algorithm>
#include <cmath>

#include "kstab/error.hpp"

namespace kstab {

std::string_view to_string(Status s) {
    switch (s) {
        case Status::CriterionHolds: return "CriterionHolds";
        case Status::Boundary: return "Boundary";
        case Status::Fails: return "Fails";
    }
    return "?";
}

namespace {

Verdict classify_exact(const SphericalDatum& d, Vec b) {
    Verdict out;
    const Vec diff = sub(b, d.kappa_p);
    out.barycenter = std::move(b);
    out.coefficients = simplicial_cone_coefficients(diff, d.spherical_roots);
    if (!out.coefficients) {
        out.status = Status::Fails;
        return out;
    }
    const auto& c = *out.coefficients;
    if (std::all_of(c.begin(), c.end(), [](const Rat& x) { return x > 0; })) {
        out.status = Status::CriterionHolds;
    } else if (std::all_of(c.begin(), c.end(), [](const Rat& x) { return x >= 0; })) {
        out.status = Status::Boundary;
    } else {
        out.status = Status::Fails;
    }
    return out;
}

// Least squares coefficients of diff in the spherical roots, with the residual norm.
std::pair<std::vector<double>, double> numeric_coefficients(const SphericalDatum& d, const std::vector<double>& diff) {
    const auto& s = d.spherical_roots;
    const std::size_t m = s.size();
    std::vector<double> c(m, 0.0);
    if (m > 0) {
        Matrix gram(m, Vec(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) gram[i][j] = dot(s[i], s[j]);
        // Invert the exact Gram matrix column by column, then apply in doubles.
        for (std::size_t j = 0; j < m; ++j) {
            Vec e(m, Rat(0));
            e[j] = 1;
            auto col = solve_square(gram, e);
            if (!col) throw Error(ErrorKind::DependentGenerators, "spherical roots are linearly dependent");
            double rhs = 0;
            for (std::size_t k = 0; k < d.r0; ++k) rhs += to_double(s[j][k]) * diff[k];
            for (std::size_t i = 0; i < m; ++i) c[i] += to_double((*col)[i]) * rhs;
        }
    }
    double res = 0;
    for (std::size_t k = 0; k < d.r0; ++k) {
        double r = diff[k];
        for (std::size_t i = 0; i < m; ++i) r -= c[i] * to_double(s[i][k]);
        res = std::max(res, std::abs(r));
    }
    return {c, res};
}

Verdict classify_numeric(const SphericalDatum& d, const NumericBarycenter& nb) {
    Verdict out;
    out.numeric_barycenter = nb.value;
    out.numeric_error = nb.error;
    std::vector<double> diff(d.r0);
    for (std::size_t i = 0; i < d.r0; ++i) diff[i] = nb.value[i] - to_double(d.kappa_p[i]);
    auto [c, res] = numeric_coefficients(d, diff);
    out.numeric_coefficients = c;
    const double guard = 10 * std::max(nb.error, 1e-14);
    if (res > guard) {
        out.status = Status::Fails;
        return out;
    }
    if (std::any_of(c.begin(), c.end(), [&](double x) { return x < -guard; })) {
        out.status = Status::Fails;
        return out;
    }
    if (!c.empty() && std::all_of(c.begin(), c.end(), [&](double x) { return x > guard; })) {
        out.status = Status::CriterionHolds;
        return out;
    }
    out.status = Status::Boundary;
    out.warning = "residual within quadrature tolerance";
    return out;
}

}  // namespace

Verdict criterion(const SphericalDatum& d, const WeightFunction& g) {
    if (g.is_polynomial()) return classify_exact(d, barycenter(d, g));
    return classify_numeric(d, barycenter_numeric(d, g));
}

std::optional<Destabilizer> destabilizer(const SphericalDatum& d, std::span<const Rat> b) {
    const std::size_t r = d.r0;
    const Vec diff = sub(b, d.kappa_p);
    std::vector<Halfspace> rows;
    for (const auto& s : d.spherical_roots) rows.push_back({scale(Rat(-1), s), Rat(0)});
    for (std::size_t i = 0; i < r; ++i) {
        Vec e(r, Rat(0));
        e[i] = 1;
        rows.push_back({e, Rat(1)});
        rows.push_back({scale(Rat(-1), e), Rat(1)});
    }
    const auto verts = vertices(HPolytope(r, std::move(rows)));
    std::optional<Rat> best;
    for (const auto& v : verts) {
        Rat x = dot(v, diff);
        if (!best || x > *best) best = x;
    }
    if (!best || *best < 0) return std::nullopt;
    for (const auto& v : verts) {
        if (dot(v, diff) != *best) continue;
        if (*best > 0 || !is_central(d, v)) return Destabilizer{v, -*best};
    }
    return std::nullopt;
}

std::optional<Destabilizer> destabilizer(const SphericalDatum& d, const WeightFunction& g) {
    if (g.is_polynomial()) return destabilizer(d, barycenter(d, g));
    Vec b;
    for (double x : barycenter_numeric(d, g).value) b.push_back(Rat(x));
    return destabilizer(d, b);
}

Verdict check(const SphericalDatum& d, const WeightFunction& g) {
    Verdict v = criterion(d, g);
    if (v.status == Status::Fails) {
        if (g.is_polynomial()) {
            v.witness = destabilizer(d, v.barycenter);
        } else {
            Vec b;
            for (double x : v.numeric_barycenter) b.push_back(Rat(x));
            v.witness = destabilizer(d, b);
        }
    }
    return v;
}

TestConfig affine_tc(const SphericalDatum& d, std::span<const Rat> v) {
    Piece p{-dot(v, d.kappa_p), Vec(v.begin(), v.end())};
    std::optional<Rat> lo;
    for (const auto& x : vertices(d.polytope())) {
        Rat y = p.eval(x);
        if (!lo || y < *lo) lo = y;
    }
    p.C -= *lo;
    return TestConfig{{p}};
}

RatioScan ratio_scan(const SphericalDatum& d, const WeightFunction& g, const RatioFamily& family) {
    RatioScan out;
    const Verdict v = criterion(d, g);
    if (v.status == Status::Fails) {
        out.destabilizer = g.is_polynomial() ? destabilizer(d, v.barycenter) : destabilizer(d, g);
        if (out.destabilizer) return out;
    }
    const std::size_t r = d.r0;
    std::vector<TestConfig> members = family.extra;
    if (family.default_grid) {
        std::vector<Vec> dirs = family.directions;
        if (dirs.empty()) {
            for (std::size_t i = 0; i < r; ++i) {
                Vec e(r, Rat(0));
                e[i] = 1;
                dirs.push_back(e);
                dirs.push_back(scale(Rat(-1), e));
            }
            for (const auto& s : d.spherical_roots) dirs.push_back(s);
        }
        const auto verts = vertices(d.polytope());
        for (const auto& L : dirs) {
            if (!in_valuation_cone(d, scale(Rat(-1), L))) continue;
            Rat lo = dot(L, d.kappa_p), hi = lo;
            for (const auto& x : verts) hi = std::max(hi, dot(L, x));
            if (hi == lo) continue;
            for (const auto& t : family.t_values) {
                for (const auto& s : family.s_values) {
                    const Rat h = lo + s * (hi - lo);
                    members.push_back(TestConfig{{Piece{Rat(0), Vec(r, Rat(0))}, Piece{t * h, scale(-t, L)}}});
                }
            }
        }
        // Affine members along the vertices of the LP box inside the valuation cone.
        std::vector<Halfspace> rows;
        for (const auto& s : d.spherical_roots) rows.push_back({scale(Rat(-1), s), Rat(0)});
        for (std::size_t i = 0; i < r; ++i) {
            Vec e(r, Rat(0));
            e[i] = 1;
            rows.push_back({e, Rat(1)});
            rows.push_back({scale(Rat(-1), e), Rat(1)});
        }
        for (const auto& w : vertices(HPolytope(r, std::move(rows)))) {
            if (!is_zero(w)) members.push_back(affine_tc(d, w));
        }
    }
    for (const auto& tc : members) {
        TestConfig norm;
        FunctionalReport rep;
        try {
            check_structure(d, tc);
            norm = normalize(d, tc);
            rep = evaluate(d, norm, g);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::RedundantPiece || e.kind() == ErrorKind::GradientOutsideValuationCone) continue;
            throw;
        }
        if (rep.J == 0) continue;
        ++out.evaluated;
        const Rat ratio = rep.D / rep.J;
        if (!out.min_ratio || ratio < *out.min_ratio) {
            out.min_ratio = ratio;
            out.argmin = norm;
        }
    }
    if (out.evaluated == 0) throw Error(ErrorKind::EmptyFamily, "no member of the family has J > 0");
    return out;
}

double soliton_residual(const SphericalDatum& d, std::span<const double> direction, double c, const NumericOptions& opt) {
    if (direction.size() != d.torus_rank()) throw Error(ErrorKind::RankMismatch, "direction length differs from torus rank");
    ExpAffine e;
    for (double x : direction) e.coeffs.push_back(c * x);
    const auto nb = barycenter_numeric(d, WeightFunction(e), opt);
    double val = 0;
    for (std::size_t a = 0; a < direction.size(); ++a) {
        for (std::size_t i = 0; i < d.r0; ++i) {
            val += direction[a] * to_double(d.torus[a][i]) * (nb.value[i] - to_double(d.kappa_p[i]));
        }
    }
    return val;
}

SolitonResult soliton_solve(const SphericalDatum& d, std::span<const double> direction, const SolitonOptions& opt) {
    double lo = opt.lo, hi = opt.hi;
    double flo = soliton_residual(d, direction, lo, opt.quadrature);
    if (std::abs(flo) < opt.tol) return {lo, flo, 0};
    double fhi = soliton_residual(d, direction, hi, opt.quadrature);
    if (std::abs(fhi) < opt.tol) return {hi, fhi, 0};
    if ((flo > 0) == (fhi > 0)) {
        throw Error(ErrorKind::NoSignChange, "residual has the same sign at c=" + std::to_string(lo) + " and c=" +
                                                 std::to_string(hi));
    }
    SolitonResult res;
    for (res.iterations = 1; res.iterations <= opt.max_iter; ++res.iterations) {
        const double mid = 0.5 * (lo + hi);
        const double fm = soliton_residual(d, direction, mid, opt.quadrature);
        res.c = mid;
        res.residual = fm;
        if (std::abs(fm) < opt.tol || hi - lo < 1e-15) return res;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    throw Error(ErrorKind::NoConvergence, "bisection did not reach the tolerance");
}

}  // namespace kstab
