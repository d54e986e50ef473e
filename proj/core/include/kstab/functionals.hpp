#ifndef KSTAB_FUNCTIONALS_HPP
#define KSTAB_FUNCTIONALS_HPP

#include <vector>

#include "kstab/datum.hpp"
#include "kstab/integration.hpp"
#include "kstab/test_config.hpp"
#include "kstab/weights.hpp"

namespace kstab {

struct FunctionalReport {
    Rat V, Vg, E, J, D, L, M, M_boundary, Fut, Fut_closed;
    Vec barycenter;
    bool reduced_central_fibre = true;
    std::vector<Int> multiplicities;
};

/// Floating-point counterpart for exp-affine weights. `error` bounds the
/// accumulated quadrature error estimates, not the propagated error of the
/// derived quantities.
struct NumericReport {
    double V = 0, Vg = 0, E = 0, J = 0, D = 0, L = 0, M = 0, M_boundary = 0, Fut = 0, Fut_closed = 0;
    std::vector<double> barycenter;
    bool reduced_central_fibre = true;
    double error = 0;
};

/// Exact evaluation; needs a polynomial weight (NonPolynomial otherwise).
FunctionalReport evaluate(const SphericalDatum& d, const TestConfig& tc, const WeightFunction& g);

NumericReport evaluate_numeric(const SphericalDatum& d, const TestConfig& tc, const WeightFunction& g,
                               const NumericOptions& opt = {});

Vec barycenter(const SphericalDatum& d, const WeightFunction& g);

struct NumericBarycenter {
    std::vector<double> value;
    double error = 0;  // max over coordinates of the propagated quadrature error
};
NumericBarycenter barycenter_numeric(const SphericalDatum& d, const WeightFunction& g, const NumericOptions& opt = {});

/// Largest absolute difference over all report fields between the original
/// run and the run with character chi + shift and weight g(. - shift).
Rat lifting_invariance_check(const SphericalDatum& d, const TestConfig& tc, const WeightFunction& g,
                             std::span<const Rat> shift);

/// Largest absolute difference between two reports, field by field.
Rat max_deviation(const FunctionalReport& a, const FunctionalReport& b);

}  // namespace kstab

#endif
