#ifndef KSTAB_TEST_CONFIG_HPP
#define KSTAB_TEST_CONFIG_HPP

#include <string>
#include <string_view>
#include <vector>

#include "kstab/datum.hpp"

namespace kstab {

/// l_a(lambda) = C + Lambda . lambda
struct Piece {
    Rat C;
    Vec Lambda;

    Rat eval(std::span<const Rat> x) const { return C + dot(Lambda, x); }
};

/// f = min_a l_a, a rational concave piecewise-linear function on the moment polytope.
struct TestConfig {
    std::vector<Piece> pieces;

    Rat value(std::span<const Rat> x) const;
    /// Lowest index among the pieces attaining the minimum at x.
    std::size_t active_piece(std::span<const Rat> x) const;
    bool is_affine() const { return pieces.size() == 1; }
};

struct Region {
    HPolytope omega;  // rows: the moment polytope's rows first, then l_b - l_a >= 0
    Piece piece;
    Int m;            // least positive integer with m * Lambda integral
};

struct RegionDecomposition {
    std::vector<Region> regions;
    bool reduced_central_fibre() const;
};

/// Checks f >= 0 on the polytope, gradients in the valuation cone and
/// irredundancy. Throws NegativeSomewhere, GradientOutsideValuationCone or
/// RedundantPiece.
TestConfig validate_tc(const SphericalDatum& d, std::vector<Piece> pieces);

/// Gradient and irredundancy checks only (normalized configurations are <= 0).
void check_structure(const SphericalDatum& d, const TestConfig& tc);

/// True when the inequalities cut out a full-dimensional set.
bool is_full_dimensional(const HPolytope& p);

RegionDecomposition regions(const SphericalDatum& d, const TestConfig& tc);

/// max f over the polytope, attained at a vertex of some region.
Rat max_value(const SphericalDatum& d, const TestConfig& tc);

/// Removes the central part of the gradient at kappa_p and shifts so max f = 0.
TestConfig normalize(const SphericalDatum& d, const TestConfig& tc);

/// Pieces (C_a, Lambda_a - Lambda). Throws NotCentral.
TestConfig twist(const SphericalDatum& d, const TestConfig& tc, std::span<const Rat> Lambda);

/// {"pieces":[{"c":rat,"lambda":[rat]}]}; shapes checked against `rank`.
TestConfig load_test_config(std::string_view document, std::size_t rank);
TestConfig load_test_config_file(const std::string& path, std::size_t rank);

std::string to_string(const TestConfig& tc);

}  // namespace kstab

#endif
