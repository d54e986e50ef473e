#ifndef KSTAB_RANDOM_INSTANCES_HPP
#define KSTAB_RANDOM_INSTANCES_HPP

#include <random>

#include "kstab/datum.hpp"
#include "kstab/test_config.hpp"
#include "kstab/weights.hpp"

namespace kstab {

using Rng = std::mt19937_64;

struct InstanceOptions {
    std::size_t min_rank = 1;
    std::size_t max_rank = 3;
    std::size_t max_pieces = 5;
    unsigned max_weight_degree = 3;
};

/// Generated data: polytopes with kappa_p interior, roots vanishing at the
/// origin, and a lifting character making every theta_A >= 0 on the polytope.
SphericalDatum random_datum(Rng& rng, std::size_t rank);

/// Positive-coefficient polynomial in the torus variables; a single monomial
/// when `monomial` is set.
WeightFunction random_weight(Rng& rng, const SphericalDatum& d, unsigned max_degree, bool monomial);

/// Valid test configuration with at most `max_pieces` pieces.
TestConfig random_tc(Rng& rng, const SphericalDatum& d, std::size_t max_pieces);

struct Instance {
    SphericalDatum datum;
    TestConfig tc;
    WeightFunction weight;
};
Instance random_instance(Rng& rng, const InstanceOptions& opt = {});

Rat random_rat(Rng& rng, int lo, int hi, int max_den);

}  // namespace kstab

#endif
