#ifndef KSTAB_STABILITY_HPP
#define KSTAB_STABILITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kstab/datum.hpp"
#include "kstab/functionals.hpp"
#include "kstab/test_config.hpp"
#include "kstab/weights.hpp"

namespace kstab {

enum class Status { CriterionHolds, Boundary, Fails };
std::string_view to_string(Status s);

struct Destabilizer {
    Vec v;   // affine test configuration lambda -> v . (lambda - kappa_p)
    Rat D;   // its Ding invariant, -v . (b_g - kappa_p)
};

struct Verdict {
    Status status = Status::Fails;
    std::optional<Vec> coefficients;          // b_g - kappa_p in the spherical roots
    std::optional<Destabilizer> witness;      // filled by check()
    Vec barycenter;
    // numeric path only
    std::vector<double> numeric_coefficients;
    std::vector<double> numeric_barycenter;
    double numeric_error = 0;
    std::string warning;
};

/// Exact for polynomial weights; exp-affine weights go through quadrature and
/// report Boundary with a warning when the residual is within 10x the error estimate.
Verdict criterion(const SphericalDatum& d, const WeightFunction& g);

/// Exact LP over {sigma_j . v <= 0, -1 <= v_i <= 1}.
std::optional<Destabilizer> destabilizer(const SphericalDatum& d, const WeightFunction& g);
std::optional<Destabilizer> destabilizer(const SphericalDatum& d, std::span<const Rat> barycenter);

/// criterion() plus destabilizer() when the criterion fails.
Verdict check(const SphericalDatum& d, const WeightFunction& g);

/// Affine test configuration C + v . (lambda - kappa_p) with C making min f = 0.
TestConfig affine_tc(const SphericalDatum& d, std::span<const Rat> v);

struct RatioFamily {
    bool default_grid = true;
    std::vector<Rat> t_values{Rat(1, 2), Rat(1), Rat(2)};
    std::vector<Rat> s_values{Rat(1, 4), Rat(1, 2), Rat(3, 4)};
    std::vector<Vec> directions;  // kink directions; empty means +-e_i and the spherical roots
    std::vector<TestConfig> extra;
};

struct RatioScan {
    std::optional<Rat> min_ratio;  // an upper bound for the optimal constant
    std::optional<TestConfig> argmin;
    std::size_t evaluated = 0;
    std::optional<Destabilizer> destabilizer;  // set instead when the criterion fails
};

/// Throws EmptyFamily when no member has J > 0.
RatioScan ratio_scan(const SphericalDatum& d, const WeightFunction& g, const RatioFamily& family = {});

struct SolitonOptions {
    double lo = -5;
    double hi = 5;
    double tol = 1e-10;
    unsigned max_iter = 200;
    NumericOptions quadrature{};
};

struct SolitonResult {
    double c = 0;
    double residual = 0;
    unsigned iterations = 0;
};

/// (b_{g_c} - kappa_p) . w for g_c = exp(c sum_A dir_A theta_A), w = sum_A dir_A xi_A.
double soliton_residual(const SphericalDatum& d, std::span<const double> direction, double c,
                        const NumericOptions& opt = {});

/// Bisection in c. Throws NoSignChange.
SolitonResult soliton_solve(const SphericalDatum& d, std::span<const double> direction, const SolitonOptions& opt = {});

}  // namespace kstab

#endif
