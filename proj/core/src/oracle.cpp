#include "kstab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kstab/error.hpp"
#include "kstab/integration.hpp"

namespace kstab {

std::vector<Vec> lattice_points(const HPolytope& p, unsigned k) {
    const std::size_t d = p.dim();
    if (k == 0) return {Vec(d, Rat(0))};
    const auto verts = vertices(p);
    std::vector<Int> lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
        Rat mn = verts.front()[i], mx = mn;
        for (const auto& v : verts) {
            mn = std::min(mn, v[i]);
            mx = std::max(mx, v[i]);
        }
        lo[i] = ceil(mn * k);
        hi[i] = floor(mx * k);
    }
    std::vector<Vec> out;
    Vec x(d);
    std::vector<Int> cur = lo;
    if (d == 0) return {Vec{}};
    for (std::size_t i = 0; i < d; ++i)
        if (lo[i] > hi[i]) return out;
    while (true) {
        for (std::size_t i = 0; i < d; ++i) x[i] = Rat(cur[i]);
        bool inside = true;
        for (const auto& h : p.rows()) {
            if (dot(h.normal, x) + k * h.offset < 0) {
                inside = false;
                break;
            }
        }
        if (inside) out.push_back(x);
        std::size_t i = d;
        while (i > 0) {
            --i;
            if (cur[i] < hi[i]) {
                ++cur[i];
                break;
            }
            cur[i] = lo[i];
            if (i == 0) return out;
        }
    }
}

LevelWeights level_weights(const SphericalDatum& d, unsigned k) {
    const Vec base = scale(Rat(k), d.kappa_p);
    for (const auto& x : base) {
        if (denominator(x) != 1) {
            throw Error(ErrorKind::NonIntegralLevel, "k*kappa_p = " + to_string(base) + " is not integral for k=" + std::to_string(k));
        }
    }
    LevelWeights out;
    out.k = k;
    for (auto& lam : lattice_points(d.polytope(), k)) {
        Rat dim = 1;
        for (const auto& r : d.roots) dim *= (dot(r.linear, lam) + k * r.constant + r.rho_pairing) / r.rho_pairing;
        out.entries.push_back({std::move(lam), std::move(dim)});
    }
    return out;
}

Rat hilbert(const SphericalDatum& d, unsigned k) {
    Rat h = 0;
    for (const auto& e : level_weights(d, k).entries) h += e.dim;
    return h;
}

SSums s_sums(const SphericalDatum& d, const TestConfig& tc, const WeightFunction& g, unsigned k) {
    if (k == 0) throw Error(ErrorKind::NonIntegralLevel, "level 0 has no rescaled weights");
    const Polynomial& gp = g.polynomial();
    if (gp.nvars() != d.torus_rank()) throw Error(ErrorKind::RankMismatch, "weight rank differs from torus rank");
    std::vector<Polynomial> dg;
    for (std::size_t a = 0; a < gp.nvars(); ++a) dg.push_back(gp.derivative(a));
    SSums s{0, 0};
    Rat half_sum = 0;
    for (const auto& e : level_weights(d, k).entries) {
        const Vec x = scale(Rat(1, k), e.lambda);
        Vec theta;
        for (std::size_t a = 0; a < d.torus.size(); ++a) theta.push_back(dot(d.torus[a], x) + d.chi[a]);
        const Rat w = Rat(floor(k * tc.value(x)));
        s.S1 += gp.eval(theta) * w * e.dim;
        Rat inner = 0;
        for (std::size_t a = 0; a < dg.size(); ++a) inner += dg[a].eval(theta) * theta[a];
        half_sum += inner * (w / k) * e.dim;
    }
    s.S2 = half_sum / 2;
    return s;
}

std::vector<unsigned> geometric_levels(unsigned first, unsigned last) {
    std::vector<unsigned> out;
    for (unsigned k = first; k <= last && k > 0; k *= 2) out.push_back(k);
    return out;
}

FutakiEstimate futaki_estimate(const SphericalDatum& d, const TestConfig& tc, const WeightFunction& g,
                               const std::vector<unsigned>& k_list, const FutakiOptions& opt) {
    if (k_list.size() < 4) throw Error(ErrorKind::InvalidInput, "need at least four levels");
    for (std::size_t i = 1; i < k_list.size(); ++i) {
        if (k_list[i] != 2 * k_list[i - 1]) throw Error(ErrorKind::InvalidInput, "levels must double");
    }
    const auto pb = pullback(g, d);
    const Polynomial gp = *pb.poly * pi_polynomial(d);
    Rat If = 0;
    for (const auto& reg : regions(d, tc).regions) {
        If += integrate_polynomial(reg.omega, Polynomial::affine(reg.piece.Lambda, reg.piece.C) * gp);
    }
    const Rat nf = factorial(static_cast<unsigned>(d.n));
    FutakiEstimate out;
    out.F0 = to_double(-nf * If / degree(d));

    std::vector<double> e;
    for (unsigned k : k_list) {
        const auto s = s_sums(d, tc, g, k);
        const Rat h0 = hilbert(d, k);
        FutakiRow row;
        row.k = k;
        row.ratio = to_double((s.S2 - s.S1) / (Rat(k) * h0));
        // Form k (ratio - F0) exactly before rounding: the difference is O(1/k).
        row.estimate = to_double(Rat(k) * ((s.S2 - s.S1) / (Rat(k) * h0) + nf * If / degree(d)));
        row.richardson = std::numeric_limits<double>::quiet_NaN();
        row.cauchy = std::numeric_limits<double>::quiet_NaN();
        e.push_back(row.estimate);
        out.table.push_back(row);
    }
    // R1(k) = 2 e(2k) - e(k); R2(k) = (4 R1(2k) - R1(k)) / 3
    std::vector<double> r1;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) r1.push_back(2 * e[i + 1] - e[i]);
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i + 1 < r1.size(); ++i) {
        const double r2 = (4 * r1[i + 1] - r1[i]) / 3;
        auto& row = out.table[i + 2];
        row.richardson = r2;
        if (!std::isnan(prev)) row.cauchy = std::abs(r2 - prev);
        prev = r2;
    }
    out.F1 = prev;
    const auto& last = out.table.back();
    out.converged = !std::isnan(last.cauchy) && last.cauchy < opt.tolerance * std::max(1.0, std::abs(out.F1));
    if (!out.converged && opt.throw_on_divergence) {
        throw Error(ErrorKind::NotConverged, "successive extrapolants differ by " + std::to_string(last.cauchy));
    }
    return out;
}

HPolytope lift_polytope(const SphericalDatum& d, const std::vector<unsigned>& k, const Vec& chi) {
    const std::size_t r = d.r0;
    const std::size_t t = d.torus_rank();
    if (k.size() != t || chi.size() != t) throw Error(ErrorKind::RankMismatch, "k and chi must have one entry per torus generator");
    const HPolytope P = d.polytope();
    for (const auto& v : vertices(P)) {
        for (std::size_t a = 0; a < t; ++a) {
            if (dot(d.torus[a], v) + chi[a] < 0) {
                throw Error(ErrorKind::QuadrantViolation, "theta_" + std::to_string(a) + " < 0 at vertex " + to_string(v));
            }
        }
    }
    std::size_t total = r;
    for (unsigned ka : k) total += ka;
    std::vector<Halfspace> rows;
    for (const auto& h : P.rows()) {
        Vec n = h.normal;
        n.resize(total, Rat(0));
        rows.push_back({std::move(n), h.offset});
    }
    std::size_t col = r;
    for (std::size_t a = 0; a < t; ++a) {
        for (unsigned i = 0; i < k[a]; ++i) {
            Vec n(total, Rat(0));
            n[col + i] = 1;
            rows.push_back({std::move(n), Rat(0)});
        }
        if (k[a] > 0) {
            Vec n(total, Rat(0));
            for (std::size_t j = 0; j < r; ++j) n[j] = d.torus[a][j];
            for (unsigned i = 0; i < k[a]; ++i) n[col + i] = -1;
            rows.push_back({std::move(n), chi[a]});
        }
        col += k[a];
    }
    return HPolytope(total, std::move(rows));
}

FibreIdentity fibre_identity(const SphericalDatum& d, const std::vector<unsigned>& k, const Vec& chi) {
    const HPolytope lift = lift_polytope(d, k, chi);
    const Polynomial pi = pi_polynomial(d);
    FibreIdentity out;
    Rat fact = 1;
    for (unsigned ka : k) fact *= factorial(ka);
    out.lifted = fact * integrate_polynomial(lift, pi.extend(lift.dim()));
    Polynomial integrand = pi;
    for (std::size_t a = 0; a < k.size(); ++a) integrand = integrand * Polynomial::affine(d.torus[a], chi[a]).pow(k[a]);
    out.direct = integrate_polynomial(d.polytope(), integrand);
    return out;
}

bool fibre_identity_check(const SphericalDatum& d, const std::vector<unsigned>& k, const Vec& chi) {
    return fibre_identity(d, k, chi).holds();
}

namespace {

Rat binomial(const Rat& top, unsigned k) {
    Rat out = 1;
    for (unsigned i = 0; i < k; ++i) out *= (top - i) / Rat(i + 1);
    return out;
}

}  // namespace

LatticeCount lattice_dimension_count(const SphericalDatum& d, const std::vector<unsigned>& k, const Vec& chi) {
    const HPolytope lift = lift_polytope(d, k, chi);
    auto dim_of = [&](std::span<const Rat> lam) {
        Rat dim = 1;
        for (const auto& r : d.roots) dim *= (dot(r.linear, lam.first(d.r0)) + r.constant + r.rho_pairing) / r.rho_pairing;
        return dim;
    };
    LatticeCount out{0, 0};
    for (const auto& e : level_weights(d, 1).entries) {
        Rat w = e.dim;
        for (std::size_t a = 0; a < k.size(); ++a) w *= binomial(Rat(k[a]) + dot(d.torus[a], e.lambda) + chi[a], k[a]);
        out.weighted += w;
    }
    for (const auto& x : lattice_points(lift, 1)) out.lifted += dim_of(x);
    return out;
}

}  // namespace kstab
