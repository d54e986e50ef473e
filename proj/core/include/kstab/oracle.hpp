#ifndef KSTAB_ORACLE_HPP
#define KSTAB_ORACLE_HPP

#include <vector>

#include "kstab/datum.hpp"
#include "kstab/test_config.hpp"
#include "kstab/weights.hpp"

namespace kstab {

/// Weights of H^0(X, kL): lattice points of k*Delta in k*kappa_p + Z^rank,
/// each with its Weyl dimension.
struct LevelWeights {
    unsigned k = 0;
    struct Entry {
        Vec lambda;
        Rat dim;
    };
    std::vector<Entry> entries;
};

/// Throws NonIntegralLevel when k*kappa_p is not integral.
LevelWeights level_weights(const SphericalDatum& d, unsigned k);

Rat hilbert(const SphericalDatum& d, unsigned k);

struct SSums {
    Rat S1;
    Rat S2;
};
SSums s_sums(const SphericalDatum& d, const TestConfig& tc, const WeightFunction& g, unsigned k);

struct FutakiRow {
    unsigned k = 0;
    double ratio = 0;        // (S2 - S1) / (k h0)
    double estimate = 0;     // k (ratio - F0)
    double richardson = 0;   // order-2 extrapolant ending at this k (NaN until available)
    double cauchy = 0;       // difference to the previous extrapolant
};

struct FutakiEstimate {
    double F0 = 0;
    double F1 = 0;
    bool converged = false;
    std::vector<FutakiRow> table;
};

struct FutakiOptions {
    double tolerance = 1e-3;  // relative difference of successive extrapolants
    bool throw_on_divergence = true;
};

/// k_list must be geometric with ratio 2 and hold at least four levels.
/// Throws NotConverged.
FutakiEstimate futaki_estimate(const SphericalDatum& d, const TestConfig& tc, const WeightFunction& g,
                               const std::vector<unsigned>& k_list, const FutakiOptions& opt = {});

std::vector<unsigned> geometric_levels(unsigned first, unsigned last);

/// Polytope in (lambda, mu_{A,0..k_A-1}) with mu_{A,k_A} eliminated.
/// Throws QuadrantViolation.
HPolytope lift_polytope(const SphericalDatum& d, const std::vector<unsigned>& k, const Vec& chi);

struct FibreIdentity {
    Rat lifted;  // (prod k_A!) * integral of pi over the lift
    Rat direct;  // integral of prod theta_A^{k_A} pi over the moment polytope
    bool holds() const { return lifted == direct; }
};
FibreIdentity fibre_identity(const SphericalDatum& d, const std::vector<unsigned>& k, const Vec& chi);
bool fibre_identity_check(const SphericalDatum& d, const std::vector<unsigned>& k, const Vec& chi);

/// Level-one counts: sum dim * prod binom(k_A + theta_A, k_A) against the
/// dim-weighted number of lattice points of the lift.
struct LatticeCount {
    Rat weighted;
    Rat lifted;
};
LatticeCount lattice_dimension_count(const SphericalDatum& d, const std::vector<unsigned>& k, const Vec& chi);

/// Integer points of k*P (bounded P).
std::vector<Vec> lattice_points(const HPolytope& p, unsigned k = 1);

}  // namespace kstab

#endif
