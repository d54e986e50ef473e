#include "kstab/weights.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json_util.hpp"
#include "kstab/error.hpp"

namespace kstab {

const Polynomial& WeightFunction::polynomial() const {
    if (!is_polynomial()) throw Error(ErrorKind::NonPolynomial, "weight is exp-affine");
    return std::get<Polynomial>(kind_);
}

const ExpAffine& WeightFunction::exp_affine() const {
    if (is_polynomial()) throw Error(ErrorKind::InvalidInput, "weight is polynomial");
    return std::get<ExpAffine>(kind_);
}

std::size_t WeightFunction::rank() const {
    return is_polynomial() ? polynomial().nvars() : exp_affine().coeffs.size();
}

double WeightFunction::eval(std::span<const double> theta) const {
    if (is_polynomial()) return polynomial().eval(theta);
    const auto& e = exp_affine();
    double s = e.constant;
    for (std::size_t a = 0; a < e.coeffs.size(); ++a) s += e.coeffs[a] * theta[a];
    return std::exp(s);
}

std::vector<Polynomial> theta_polynomials(const SphericalDatum& d, const Vec& chi) {
    std::vector<Polynomial> out;
    for (std::size_t a = 0; a < d.torus.size(); ++a) out.push_back(Polynomial::affine(d.torus[a], chi.at(a)));
    return out;
}

namespace {

void check_rank(const WeightFunction& g, const SphericalDatum& d, const Vec& chi) {
    if (g.rank() != d.torus_rank()) {
        throw Error(ErrorKind::RankMismatch, "weight has " + std::to_string(g.rank()) + " variables, torus rank is " +
                                                 std::to_string(d.torus_rank()));
    }
    if (chi.size() != d.torus_rank()) throw Error(ErrorKind::RankMismatch, "character length differs from torus rank");
}

// theta(lambda) in doubles
struct ThetaMap {
    std::vector<std::vector<double>> xi;
    std::vector<double> chi;

    ThetaMap(const SphericalDatum& d, const Vec& c) : chi(to_double(c)) {
        for (const auto& x : d.torus) xi.push_back(to_double(x));
    }

    std::vector<double> operator()(std::span<const double> lambda) const {
        std::vector<double> theta(xi.size());
        for (std::size_t a = 0; a < xi.size(); ++a) {
            double s = chi[a];
            for (std::size_t i = 0; i < lambda.size(); ++i) s += xi[a][i] * lambda[i];
            theta[a] = s;
        }
        return theta;
    }
};

Evaluator poly_evaluator(Polynomial p) {
    return [p = std::move(p)](std::span<const double> x) { return p.eval(x); };
}

}  // namespace

PulledBackWeight pullback(const WeightFunction& g, const SphericalDatum& d) { return pullback(g, d, d.chi); }

PulledBackWeight pullback(const WeightFunction& g, const SphericalDatum& d, const Vec& chi) {
    check_rank(g, d, chi);
    PulledBackWeight out;
    out.chi = chi;
    if (g.is_polynomial()) {
        Polynomial p = g.rank() == 0 ? Polynomial::constant(d.r0, g.polynomial().eval(Vec{}))
                                     : g.polynomial().compose(theta_polynomials(d, chi));
        out.eval = poly_evaluator(p);
        out.poly = std::move(p);
    } else {
        ThetaMap theta(d, chi);
        out.eval = [g, theta](std::span<const double> lambda) { return g.eval(theta(lambda)); };
    }
    return out;
}

PulledBackWeight euler_pairing(const WeightFunction& g, const SphericalDatum& d) { return euler_pairing(g, d, d.chi); }

PulledBackWeight euler_pairing(const WeightFunction& g, const SphericalDatum& d, const Vec& chi) {
    check_rank(g, d, chi);
    if (!g.is_polynomial()) throw Error(ErrorKind::NonPolynomial, "euler pairing needs a polynomial weight");
    const auto thetas = theta_polynomials(d, chi);
    Polynomial out(d.r0);
    for (std::size_t a = 0; a < d.torus.size(); ++a) {
        Polynomial dg = g.polynomial().derivative(a).compose(thetas);
        out += Polynomial::affine(d.torus[a], Rat(0)) * dg;
    }
    PulledBackWeight pb;
    pb.chi = chi;
    pb.eval = poly_evaluator(out);
    pb.poly = std::move(out);
    return pb;
}

Evaluator euler_pairing_numeric(const WeightFunction& g, const SphericalDatum& d, const Vec& chi) {
    check_rank(g, d, chi);
    if (g.is_polynomial()) return euler_pairing(g, d, chi).eval;
    // exp(c . theta + c0) has lambda-gradient g * sum_A c_A xi_A.
    std::vector<double> grad(d.r0, 0.0);
    const auto& e = g.exp_affine();
    for (std::size_t a = 0; a < d.torus.size(); ++a) {
        for (std::size_t i = 0; i < d.r0; ++i) grad[i] += e.coeffs[a] * to_double(d.torus[a][i]);
    }
    ThetaMap theta(d, chi);
    return [g, theta, grad](std::span<const double> lambda) {
        double s = 0;
        for (std::size_t i = 0; i < lambda.size(); ++i) s += grad[i] * lambda[i];
        return s * g.eval(theta(lambda));
    };
}

WeightFunction shifted(const WeightFunction& g, std::span<const Rat> shift) {
    if (shift.size() != g.rank()) throw Error(ErrorKind::RankMismatch, "shift length differs from weight rank");
    if (g.is_polynomial()) {
        const std::size_t r = g.rank();
        if (r == 0) return g;
        std::vector<Polynomial> subs;
        for (std::size_t a = 0; a < r; ++a) {
            Vec unit(r, Rat(0));
            unit[a] = 1;
            subs.push_back(Polynomial::affine(unit, -shift[a]));
        }
        return WeightFunction(g.polynomial().compose(subs));
    }
    ExpAffine e = g.exp_affine();
    for (std::size_t a = 0; a < e.coeffs.size(); ++a) e.constant -= e.coeffs[a] * to_double(shift[a]);
    return WeightFunction(e);
}

PositivityAudit audit_positivity(const WeightFunction& g, const SphericalDatum& d, unsigned grid) {
    PositivityAudit audit;
    auto pb = pullback(g, d);
    const auto verts = vertices(d.polytope());
    auto check = [&](const Vec& x) {
        ++audit.samples;
        bool pos = pb.poly ? pb.poly->eval(x) > 0 : pb.eval(to_double(x)) > 0;
        if (!pos && audit.positive) {
            audit.positive = false;
            audit.witness = x;
        }
    };
    for (const auto& v : verts) check(v);
    // Points kappa + (j/grid)(v - kappa) for every vertex v, j = 1..grid-1,
    // plus pairwise midpoints of those rays.
    for (unsigned j = 1; j < grid; ++j) {
        Rat t(j, grid);
        for (std::size_t a = 0; a < verts.size(); ++a) {
            Vec pa = add(d.kappa_p, scale(t, sub(verts[a], d.kappa_p)));
            check(pa);
            for (std::size_t b = a + 1; b < verts.size(); ++b) {
                Vec pb2 = add(d.kappa_p, scale(t, sub(verts[b], d.kappa_p)));
                check(scale(Rat(1, 2), add(pa, pb2)));
            }
        }
    }
    check(d.kappa_p);
    return audit;
}

WeightFunction load_weight(std::string_view document) {
    const auto doc = detail::parse_document(document);
    const auto& type = detail::require(doc, "type", "");
    if (!type.is_string()) throw Error(ErrorKind::ParseError, "type: expected a string");
    const std::string t = type.get<std::string>();
    if (t == "polynomial") {
        const auto& terms = detail::require(doc, "terms", "");
        if (!terms.is_array()) throw Error(ErrorKind::ParseError, "terms: expected an array");
        std::optional<std::size_t> nvars;
        if (auto it = doc.find("rank"); it != doc.end()) nvars = static_cast<std::size_t>(detail::int_from_json(*it, "rank"));
        std::vector<std::pair<Rat, Exponents>> parsed;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            const std::string p = detail::index("terms", i);
            Rat c = detail::rat_from_json(detail::require(terms[i], "coef", p), detail::child(p, "coef"));
            const auto& pw = detail::require(terms[i], "powers", p);
            if (!pw.is_array()) throw Error(ErrorKind::ParseError, detail::child(p, "powers") + ": expected an array");
            Exponents e;
            for (std::size_t k = 0; k < pw.size(); ++k) {
                auto v = detail::int_from_json(pw[k], detail::index(detail::child(p, "powers"), k));
                if (v < 0) throw Error(ErrorKind::ParseError, detail::child(p, "powers") + ": negative exponent");
                e.push_back(static_cast<unsigned>(v));
            }
            if (nvars && e.size() != *nvars) throw Error(ErrorKind::ParseError, p + ": powers length differs from rank");
            if (!nvars) nvars = e.size();
            if (e.size() != *nvars) throw Error(ErrorKind::ParseError, p + ": inconsistent number of variables");
            parsed.emplace_back(std::move(c), std::move(e));
        }
        Polynomial poly(nvars.value_or(0));
        for (auto& [c, e] : parsed) poly.add_term(c, e);
        return WeightFunction(std::move(poly));
    }
    if (t == "exp_affine") {
        const auto& coeffs = detail::require(doc, "coeffs", "");
        if (!coeffs.is_array()) throw Error(ErrorKind::ParseError, "coeffs: expected an array");
        ExpAffine e;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (!coeffs[i].is_number()) throw Error(ErrorKind::ParseError, detail::index("coeffs", i) + ": expected a number");
            e.coeffs.push_back(coeffs[i].get<double>());
        }
        if (auto it = doc.find("constant"); it != doc.end()) {
            if (!it->is_number()) throw Error(ErrorKind::ParseError, "constant: expected a number");
            e.constant = it->get<double>();
        }
        return WeightFunction(std::move(e));
    }
    throw Error(ErrorKind::ParseError, "type: expected \"polynomial\" or \"exp_affine\"");
}

WeightFunction load_weight_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_weight(ss.str());
}

}  // namespace kstab
