#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kstab/datum.hpp"
#include "kstab/error.hpp"
#include "kstab/functionals.hpp"
#include "kstab/io.hpp"
#include "kstab/oracle.hpp"
#include "kstab/random_instances.hpp"
#include "kstab/stability.hpp"

using namespace kstab;

namespace {

struct Options {
    std::string datum, tc, weight, format = "text", out;
    std::string validate_path;
    unsigned k = 1, k_min = 64, k_max = 4096, bins = 20;
    std::size_t axis = 0;
    std::string kvec, chi, direction;
    std::uint64_t seed = 1;
    std::size_t cases = 100;
    double lo = -5, hi = 5, tol = 1e-3;
};

// A constant weight file is accepted for any torus rank.
WeightFunction load_weight_for(const std::string& path, const SphericalDatum& d) {
    WeightFunction g = load_weight_file(path);
    if (g.is_polynomial() && g.rank() != d.torus_rank() && g.polynomial().degree() == 0) {
        Rat c = g.polynomial().is_zero() ? Rat(0) : g.polynomial().terms().begin()->second;
        return WeightFunction(Polynomial::constant(d.torus_rank(), c));
    }
    return g;
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

Vec parse_vec(const std::string& s) {
    Vec v;
    for (const auto& x : split(s)) v.push_back(parse_rat(x));
    return v;
}

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError:
        case ErrorKind::Io: return 2;
        case ErrorKind::NotConverged:
        case ErrorKind::NoConvergence: return 3;
        default: return 1;
    }
}

int cmd_validate(const Options& o) {
    const auto d = load_datum_file(o.validate_path);
    const auto rep = validate(d);
    std::cout << (o.format == "json" ? to_json(rep) + "\n" : to_text(rep));
    return rep.ok() ? 0 : 1;
}

int cmd_functionals(const Options& o) {
    const auto d = load_datum_file(o.datum);
    const auto tc = load_test_config_file(o.tc, d.r0);
    const auto g = load_weight_for(o.weight, d);
    check_structure(d, tc);
    if (g.is_polynomial()) {
        const auto rep = evaluate(d, tc, g);
        if (o.format == "json") std::cout << to_json(rep) << "\n";
        else if (o.format == "csv") std::cout << csv_header(rep) << "\n" << csv_row(rep) << "\n";
        else std::cout << to_text(rep);
    } else {
        const auto rep = evaluate_numeric(d, tc, g);
        if (o.format == "csv") std::cout << csv_header(rep) << "\n" << csv_row(rep) << "\n";
        else std::cout << to_json(rep) << "\n";
    }
    return 0;
}

int cmd_barycenter(const Options& o) {
    const auto d = load_datum_file(o.datum);
    const auto g = load_weight_for(o.weight, d);
    if (g.is_polynomial()) {
        const Vec b = barycenter(d, g);
        std::cout << "b_g = " << to_string(b) << "\n";
        std::cout << "b_g - kappa_p = " << to_string(sub(b, d.kappa_p)) << "\n";
    } else {
        const auto nb = barycenter_numeric(d, g);
        std::cout.precision(15);
        std::cout << "b_g =";
        for (double x : nb.value) std::cout << " " << x;
        std::cout << "\nb_g - kappa_p =";
        for (std::size_t i = 0; i < nb.value.size(); ++i) std::cout << " " << nb.value[i] - to_double(d.kappa_p[i]);
        std::cout << "\nerror <= " << nb.error << "\n";
    }
    return 0;
}

int cmd_check(const Options& o) {
    const auto d = load_datum_file(o.datum);
    const auto g = load_weight_for(o.weight, d);
    const auto v = check(d, g);
    std::cout << (o.format == "json" ? to_json(v) : to_text(v)) << "\n";
    return 0;
}

int cmd_destabilize(const Options& o) {
    const auto d = load_datum_file(o.datum);
    const auto g = load_weight_for(o.weight, d);
    const auto w = destabilizer(d, g);
    if (!w) std::cout << "none\n";
    else std::cout << "v=" << to_string(w->v) << ", D=" << to_string(w->D) << "\n";
    return 0;
}

int cmd_hilbert(const Options& o) {
    const auto d = load_datum_file(o.datum);
    std::cout << "k,h0\n";
    for (unsigned k = o.k_min; k <= o.k_max; ++k) std::cout << k << "," << to_string(hilbert(d, k)) << "\n";
    return 0;
}

int cmd_ssums(const Options& o) {
    const auto d = load_datum_file(o.datum);
    const auto tc = load_test_config_file(o.tc, d.r0);
    const auto g = load_weight_for(o.weight, d);
    std::cout << "k,S1,S2\n";
    for (unsigned k = o.k_min; k <= o.k_max; ++k) {
        const auto s = s_sums(d, tc, g, k);
        std::cout << k << "," << to_string(s.S1) << "," << to_string(s.S2) << "\n";
    }
    return 0;
}

int cmd_futaki(const Options& o) {
    const auto d = load_datum_file(o.datum);
    const auto tc = load_test_config_file(o.tc, d.r0);
    const auto g = load_weight_for(o.weight, d);
    FutakiOptions fo;
    fo.tolerance = o.tol;
    fo.throw_on_divergence = false;
    const auto est = futaki_estimate(d, tc, g, geometric_levels(o.k_min, o.k_max), fo);
    std::printf("k,ratio,k*(ratio-F0),richardson,cauchy\n");
    for (const auto& r : est.table) {
        std::printf("%u,%.15g,%.15g,%.15g,%.3g\n", r.k, r.ratio, r.estimate, r.richardson, r.cauchy);
    }
    std::printf("F0 = %.15g\nF1 = %.15g\nconverged = %s\n", est.F0, est.F1, est.converged ? "true" : "false");
    if (g.is_polynomial()) {
        const auto rep = evaluate(d, tc, g);
        std::printf("Fut = %s (%.15g)\nFut_closed = %s (%.15g)\n", to_string(rep.Fut).c_str(), to_double(rep.Fut),
                    to_string(rep.Fut_closed).c_str(), to_double(rep.Fut_closed));
    }
    if (!est.converged) throw Error(ErrorKind::NotConverged, "extrapolants did not settle");
    return 0;
}

int cmd_fibre(const Options& o) {
    const auto d = load_datum_file(o.datum);
    std::vector<unsigned> k;
    for (const auto& x : split(o.kvec)) k.push_back(static_cast<unsigned>(std::stoul(x)));
    const Vec chi = o.chi.empty() ? d.chi : parse_vec(o.chi);
    const auto id = fibre_identity(d, k, chi);
    std::cout << "lifted = " << to_string(id.lifted) << "\n"
              << "direct = " << to_string(id.direct) << "\n"
              << (id.holds() ? "holds" : "differs") << "\n";
    return id.holds() ? 0 : 1;
}

int cmd_dh(const Options& o) {
    const auto d = load_datum_file(o.datum);
    const auto g = load_weight_for(o.weight, d);
    if (o.axis >= d.torus_rank()) throw Error(ErrorKind::InvalidInput, "axis out of range");
    if (o.bins == 0) throw Error(ErrorKind::InvalidInput, "need at least one bin");
    const auto pb = pullback(g, d);
    const Polynomial pi = pi_polynomial(d);
    const HPolytope P = d.polytope();
    const Vec& xi = d.torus[o.axis];
    const auto verts = vertices(P);
    Rat lo = dot(xi, verts.front()), hi = lo;
    for (const auto& v : verts) {
        lo = std::min(lo, dot(xi, v));
        hi = std::max(hi, dot(xi, v));
    }
    const double nf = to_double(factorial(static_cast<unsigned>(d.n)));
    const Rat chi = d.chi[o.axis];
    std::ostringstream csv;
    csv << "theta_lo,theta_hi,mass,density\n";
    csv.precision(15);
    for (unsigned b = 0; b < o.bins; ++b) {
        const Rat a = lo + (hi - lo) * Rat(b, o.bins);
        const Rat c = lo + (hi - lo) * Rat(b + 1, o.bins);
        double mass = 0;
        if (hi > lo) {
            HPolytope slab = P.with({xi, -a}).with({scale(Rat(-1), xi), c});
            if (is_full_dimensional(slab)) {
                mass = nf * integrate_numeric(slab, [&](std::span<const double> x) { return pb.eval(x) * pi.eval(x); }).value;
            }
        }
        const double width = to_double(c - a);
        csv << to_double(a + chi) << "," << to_double(c + chi) << "," << mass << "," << (width > 0 ? mass / width : 0.0)
            << "\n";
    }
    if (o.out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream f(o.out);
        if (!f) throw Error(ErrorKind::Io, "cannot write " + o.out);
        f << csv.str();
    }
    return 0;
}

int cmd_soliton(const Options& o) {
    const auto d = load_datum_file(o.datum);
    std::vector<double> dir;
    for (const auto& x : split(o.direction)) dir.push_back(std::stod(x));
    SolitonOptions so;
    so.lo = o.lo;
    so.hi = o.hi;
    const auto r = soliton_solve(d, dir, so);
    std::printf("c* = %.15g\nresidual = %.3g\niterations = %u\n", r.c, r.residual, r.iterations);
    return 0;
}

int cmd_selfcheck(const Options& o) {
    Rng rng(o.seed);
    std::size_t m_forms = 0, fut_rel = 0, ding = 0, shift = 0, lifting = 0;
    for (std::size_t i = 0; i < o.cases; ++i) {
        const auto inst = random_instance(rng);
        const auto rep = evaluate(inst.datum, inst.tc, inst.weight);
        if (rep.M == rep.M_boundary) ++m_forms;
        if (rep.Fut_closed == rep.Vg / 2 * rep.Fut) ++fut_rel;
        if (rep.M >= rep.D) ++ding;
        TestConfig moved = inst.tc;
        for (auto& p : moved.pieces) p.C += Rat(1, 3);
        const auto rep2 = evaluate(inst.datum, moved, inst.weight);
        if (rep2.E == rep.E + Rat(1, 3) && rep2.J == rep.J && rep2.D == rep.D && rep2.M == rep.M && rep2.Fut == rep.Fut) ++shift;
        Vec chi_shift(inst.datum.torus_rank());
        for (auto& x : chi_shift) x = random_rat(rng, -2, 2, 2);
        if (lifting_invariance_check(inst.datum, inst.tc, inst.weight, chi_shift) == 0) ++lifting;
    }
    const std::size_t n = o.cases;
    std::printf("M = M_boundary        %zu/%zu\n", m_forms, n);
    std::printf("Fut_closed = Vg/2 Fut %zu/%zu\n", fut_rel, n);
    std::printf("M >= D                %zu/%zu\n", ding, n);
    std::printf("f + c invariance      %zu/%zu\n", shift, n);
    std::printf("lifting invariance    %zu/%zu\n", lifting, n);
    const bool ok = m_forms == n && fut_rel == n && ding == n && shift == n && lifting == n;
    std::printf("%s\n", ok ? "all passed" : "FAILED");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted K-stability of Q-Fano spherical varieties from combinatorial data"};
    app.require_subcommand(1);
    Options o;

    auto* validate_cmd = app.add_subcommand("validate", "Check a datum file");
    validate_cmd->add_option("datum", o.validate_path, "Datum JSON")->required();
    validate_cmd->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto add_dw = [&](CLI::App* c) {
        c->add_option("--datum", o.datum, "Datum JSON")->required();
        c->add_option("--weight", o.weight, "Weight JSON")->required();
    };
    auto* functionals_cmd = app.add_subcommand("functionals", "Evaluate E, J, D, L, M, Fut on a test configuration");
    add_dw(functionals_cmd);
    functionals_cmd->add_option("--tc", o.tc, "Test configuration JSON")->required();
    functionals_cmd->add_option("--format", o.format,
                                "text|json|csv; CSV columns: V,Vg,E,J,D,L,M,M_boundary,Fut,Fut_closed,b1..br,"
                                "reduced_central_fibre")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* bary_cmd = app.add_subcommand("barycenter", "Weighted barycenter and its offset from kappa_p");
    add_dw(bary_cmd);

    auto* check_cmd = app.add_subcommand("check", "Barycenter criterion verdict");
    add_dw(check_cmd);
    check_cmd->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* destab_cmd = app.add_subcommand("destabilize", "Exact LP destabilizing direction");
    add_dw(destab_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle", "Lattice-point oracles");
    oracle_cmd->require_subcommand(1);
    auto* hilbert_cmd = oracle_cmd->add_subcommand("hilbert", "h0(k) for k in [k-min, k-max]; CSV k,h0");
    hilbert_cmd->add_option("--datum", o.datum)->required();
    hilbert_cmd->add_option("--k-min", o.k_min)->default_val(0);
    hilbert_cmd->add_option("--k-max", o.k_max)->default_val(10);
    auto* ssums_cmd = oracle_cmd->add_subcommand("ssums", "S1(k), S2(k); CSV k,S1,S2");
    add_dw(ssums_cmd);
    ssums_cmd->add_option("--tc", o.tc)->required();
    ssums_cmd->add_option("--k-min", o.k_min)->default_val(1);
    ssums_cmd->add_option("--k-max", o.k_max)->default_val(8);
    auto* futaki_cmd = oracle_cmd->add_subcommand("futaki", "Extrapolated k^-1 coefficient over doubling levels");
    add_dw(futaki_cmd);
    futaki_cmd->add_option("--tc", o.tc)->required();
    futaki_cmd->add_option("--k-min", o.k_min)->default_val(64);
    futaki_cmd->add_option("--k-max", o.k_max)->default_val(4096);
    futaki_cmd->add_option("--tol", o.tol)->default_val(1e-3);
    auto* fibre_cmd = oracle_cmd->add_subcommand("fibre", "Lifted-polytope integral identity");
    fibre_cmd->add_option("--datum", o.datum)->required();
    fibre_cmd->add_option("--k", o.kvec, "Comma-separated k_A")->required();
    fibre_cmd->add_option("--chi", o.chi, "Comma-separated character (default: the datum's)");

    auto* dh_cmd = app.add_subcommand("dh", "Marginal of the weighted DH density along a torus axis; CSV theta_lo,theta_hi,mass,density");
    add_dw(dh_cmd);
    dh_cmd->add_option("--axis", o.axis)->default_val(0);
    dh_cmd->add_option("--bins", o.bins)->default_val(20);
    dh_cmd->add_option("--out", o.out, "CSV path (stdout when omitted)");

    auto* soliton_cmd = app.add_subcommand("soliton", "Solve for the exp-affine soliton parameter along a direction");
    soliton_cmd->add_option("--datum", o.datum)->required();
    soliton_cmd->add_option("--direction", o.direction, "Comma-separated floats")->required();
    soliton_cmd->add_option("--lo", o.lo)->default_val(-5.0);
    soliton_cmd->add_option("--hi", o.hi)->default_val(5.0);

    auto* self_cmd = app.add_subcommand("selfcheck", "Randomized identity suites");
    self_cmd->add_option("--seed", o.seed)->default_val(1);
    self_cmd->add_option("--cases", o.cases)->default_val(100);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*validate_cmd) return cmd_validate(o);
        if (*functionals_cmd) return cmd_functionals(o);
        if (*bary_cmd) return cmd_barycenter(o);
        if (*check_cmd) return cmd_check(o);
        if (*destab_cmd) return cmd_destabilize(o);
        if (*hilbert_cmd) return cmd_hilbert(o);
        if (*ssums_cmd) return cmd_ssums(o);
        if (*futaki_cmd) return cmd_futaki(o);
        if (*fibre_cmd) return cmd_fibre(o);
        if (*dh_cmd) return cmd_dh(o);
        if (*soliton_cmd) return cmd_soliton(o);
        if (*self_cmd) return cmd_selfcheck(o);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
