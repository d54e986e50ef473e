#include "kstab/functionals.hpp"

#include <algorithm>
#include <cmath>

#include "kstab/error.hpp"

namespace kstab {

namespace {

Rat nfact(const SphericalDatum& d) { return factorial(static_cast<unsigned>(d.n)); }

}  // namespace

FunctionalReport evaluate(const SphericalDatum& d, const TestConfig& tc, const WeightFunction& g) {
    check_shapes(d);
    check_structure(d, tc);
    const auto pb = pullback(g, d);
    if (!pb.poly) throw Error(ErrorKind::NonPolynomial, "exact evaluation needs a polynomial weight");
    const Polynomial pi = pi_polynomial(d);
    const Polynomial gp = *pb.poly * pi;
    const Polynomial eu = *euler_pairing(g, d).poly * pi;
    const HPolytope P = d.polytope();
    const Rat nf = nfact(d);
    const std::size_t r = d.r0;

    FunctionalReport rep;
    rep.V = nf * integrate_polynomial(P, pi);

    Rat I = 0, If = 0, Igrad = 0, Ikappa = 0, Ieuler = 0, Icorr = 0, boundary = 0;
    Vec moments(r, Rat(0));
    const auto dec = regions(d, tc);
    for (const auto& reg : dec.regions) {
        const auto& pc = reg.piece;
        const Polynomial l = Polynomial::affine(pc.Lambda, pc.C);
        const Polynomial grad = Polynomial::affine(pc.Lambda, -dot(pc.Lambda, d.kappa_p));
        std::vector<Polynomial> fs{gp, l * gp, grad * gp, l * eu};
        for (std::size_t i = 0; i < r; ++i) fs.push_back(Polynomial::variable(r, i) * gp);
        const auto vals = integrate_polynomials(triangulate(reg.omega), fs);
        I += vals[0];
        If += vals[1];
        Igrad += vals[2];
        Ikappa += dot(d.kappa_p, pc.Lambda) * vals[0];
        Ieuler += vals[3];
        Icorr += (1 - Rat(1) / Rat(reg.m)) * vals[0];
        for (std::size_t i = 0; i < r; ++i) moments[i] += vals[4 + i];

        const Polynomial lgp = l * gp;
        for (std::size_t row = 0; row < d.facets.size(); ++row) {
            const auto& h = P.rows()[row];
            if (h.offset == 0) continue;
            // The facet may meet this region in a lower-dimensional face only.
            try {
                boundary += h.offset * primitive_form(h.normal).scale * facet_integral_lattice(reg.omega, row, lgp);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::NotAFacet) throw;
            }
        }
        rep.multiplicities.push_back(reg.m);
    }
    rep.reduced_central_fibre = dec.reduced_central_fibre();

    rep.Vg = nf * I;
    rep.E = nf * If / rep.Vg;
    rep.J = max_value(d, tc) - rep.E;
    rep.L = tc.value(d.kappa_p);
    rep.D = rep.L - rep.E;
    rep.M = -nf * Igrad / rep.Vg;
    const Rat n = static_cast<long>(d.n);
    // (Vg / n!) * M_boundary
    const Rat bracket = -(boundary - Ikappa - n * If - Ieuler);
    rep.M_boundary = nf * bracket / rep.Vg;
    rep.Fut = rep.Vg / rep.V * (rep.M + nf * Icorr / rep.Vg);
    rep.Fut_closed = rep.Vg / (2 * rep.V) * nf * (bracket + Icorr);
    rep.barycenter = scale(nf / rep.Vg, moments);
    return rep;
}

NumericReport evaluate_numeric(const SphericalDatum& d, const TestConfig& tc, const WeightFunction& g,
                               const NumericOptions& opt) {
    check_shapes(d);
    check_structure(d, tc);
    const auto pb = pullback(g, d);
    const Polynomial pi = pi_polynomial(d);
    const Evaluator euler = euler_pairing_numeric(g, d, d.chi);
    const HPolytope P = d.polytope();
    const double nf = to_double(nfact(d));
    const std::size_t r = d.r0;
    const auto kappa = to_double(d.kappa_p);

    NumericReport rep;
    rep.V = nf * to_double(integrate_polynomial(P, pi));

    double I = 0, If = 0, Igrad = 0, Ikappa = 0, Ieuler = 0, Icorr = 0, boundary = 0, err = 0;
    std::vector<double> moments(r, 0.0);
    auto run = [&](const HPolytope& poly, const Evaluator& h) {
        auto res = integrate_numeric(poly, h, opt);
        err += res.error;
        return res.value;
    };
    const auto dec = regions(d, tc);
    for (const auto& reg : dec.regions) {
        const auto lam = to_double(reg.piece.Lambda);
        const double c = to_double(reg.piece.C);
        auto l = [lam, c](std::span<const double> x) {
            double s = c;
            for (std::size_t i = 0; i < x.size(); ++i) s += lam[i] * x[i];
            return s;
        };
        auto gpi = [&pb, &pi](std::span<const double> x) { return pb.eval(x) * pi.eval(x); };
        const double i0 = run(reg.omega, gpi);
        I += i0;
        If += run(reg.omega, [&](std::span<const double> x) { return l(x) * gpi(x); });
        Igrad += run(reg.omega, [&](std::span<const double> x) {
            double s = 0;
            for (std::size_t i = 0; i < x.size(); ++i) s += lam[i] * (x[i] - kappa[i]);
            return s * gpi(x);
        });
        double kl = 0;
        for (std::size_t i = 0; i < r; ++i) kl += kappa[i] * lam[i];
        Ikappa += kl * i0;
        Ieuler += run(reg.omega, [&](std::span<const double> x) { return l(x) * euler(x) * pi.eval(x); });
        Icorr += (1.0 - 1.0 / reg.m.convert_to<double>()) * i0;
        for (std::size_t i = 0; i < r; ++i) {
            moments[i] += run(reg.omega, [&](std::span<const double> x) { return x[i] * gpi(x); });
        }
        for (std::size_t row = 0; row < d.facets.size(); ++row) {
            const auto& h = P.rows()[row];
            if (h.offset == 0) continue;
            try {
                auto res = integrate_numeric_facet(reg.omega, row, [&](std::span<const double> x) { return l(x) * gpi(x); }, opt);
                err += res.error;
                boundary += to_double(h.offset * primitive_form(h.normal).scale) * res.value;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::NotAFacet) throw;
            }
        }
        if (reg.m != 1) rep.reduced_central_fibre = false;
    }
    rep.Vg = nf * I;
    rep.E = nf * If / rep.Vg;
    rep.J = to_double(max_value(d, tc)) - rep.E;
    rep.L = to_double(tc.value(d.kappa_p));
    rep.D = rep.L - rep.E;
    rep.M = -nf * Igrad / rep.Vg;
    const double bracket = -(boundary - Ikappa - static_cast<double>(d.n) * If - Ieuler);
    rep.M_boundary = nf * bracket / rep.Vg;
    rep.Fut = rep.Vg / rep.V * (rep.M + nf * Icorr / rep.Vg);
    rep.Fut_closed = rep.Vg / (2 * rep.V) * nf * (bracket + Icorr);
    for (double& m : moments) m *= nf / rep.Vg;
    rep.barycenter = std::move(moments);
    rep.error = err;
    return rep;
}

Vec barycenter(const SphericalDatum& d, const WeightFunction& g) {
    const auto pb = pullback(g, d);
    if (!pb.poly) throw Error(ErrorKind::NonPolynomial, "exact barycenter needs a polynomial weight");
    const Polynomial gp = *pb.poly * pi_polynomial(d);
    std::vector<Polynomial> fs{gp};
    for (std::size_t i = 0; i < d.r0; ++i) fs.push_back(Polynomial::variable(d.r0, i) * gp);
    const auto vals = integrate_polynomials(triangulate(d.polytope()), fs);
    Vec b;
    for (std::size_t i = 0; i < d.r0; ++i) b.push_back(vals[i + 1] / vals[0]);
    return b;
}

NumericBarycenter barycenter_numeric(const SphericalDatum& d, const WeightFunction& g, const NumericOptions& opt) {
    const auto pb = pullback(g, d);
    const Polynomial pi = pi_polynomial(d);
    const HPolytope P = d.polytope();
    auto gpi = [&](std::span<const double> x) { return pb.eval(x) * pi.eval(x); };
    const auto mass = integrate_numeric(P, gpi, opt);
    NumericBarycenter out;
    for (std::size_t i = 0; i < d.r0; ++i) {
        const auto mom = integrate_numeric(P, [&](std::span<const double> x) { return x[i] * gpi(x); }, opt);
        const double b = mom.value / mass.value;
        out.value.push_back(b);
        const double e = (mom.error + std::abs(b) * mass.error) / std::abs(mass.value);
        out.error = std::max(out.error, e);
    }
    return out;
}

Rat max_deviation(const FunctionalReport& a, const FunctionalReport& b) {
    Rat dev = 0;
    auto upd = [&](const Rat& x, const Rat& y) { dev = std::max(dev, Rat(abs(x - y))); };
    upd(a.V, b.V);
    upd(a.Vg, b.Vg);
    upd(a.E, b.E);
    upd(a.J, b.J);
    upd(a.D, b.D);
    upd(a.L, b.L);
    upd(a.M, b.M);
    upd(a.M_boundary, b.M_boundary);
    upd(a.Fut, b.Fut);
    upd(a.Fut_closed, b.Fut_closed);
    for (std::size_t i = 0; i < a.barycenter.size(); ++i) upd(a.barycenter[i], b.barycenter.at(i));
    return dev;
}

Rat lifting_invariance_check(const SphericalDatum& d, const TestConfig& tc, const WeightFunction& g,
                             std::span<const Rat> shift) {
    if (shift.size() != d.torus_rank()) throw Error(ErrorKind::RankMismatch, "character shift length differs from torus rank");
    const auto base = evaluate(d, tc, g);
    SphericalDatum moved = d;
    moved.chi = add(d.chi, shift);
    moved.chi_canonical = false;
    const auto other = evaluate(moved, tc, shifted(g, shift));
    return max_deviation(base, other);
}

}  // namespace kstab
