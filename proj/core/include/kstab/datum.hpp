#ifndef KSTAB_DATUM_HPP
#define KSTAB_DATUM_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "kstab/geometry.hpp"
#include "kstab/polynomial.hpp"

namespace kstab {

enum class DivisorKind { GDivisor, Colour };

/// One facet of the moment polytope: normal . lambda >= kappa_p . normal - n_D.
struct FacetData {
    Vec normal;  // u_D for a G-stable divisor, rho_D for a colour
    Rat n_D;
    DivisorKind kind = DivisorKind::GDivisor;
};

/// Affine functional lambda -> <alpha, lambda> in the chosen coordinates,
/// together with <alpha, rho>.
struct RootFunctional {
    Vec linear;
    Rat constant;
    Rat rho_pairing;

    Rat eval(std::span<const Rat> x) const { return dot(linear, x) + constant; }
};

/// Combinatorial model of a Q-Fano spherical variety with its anticanonical
/// polarization. All vectors are expressed in one fixed basis of M = Z^rank.
struct SphericalDatum {
    std::string name;
    std::size_t n = 0;   // dimension of X
    std::size_t r0 = 0;  // rank
    std::vector<FacetData> facets;
    std::vector<RootFunctional> roots;
    Vec kappa_p;
    std::vector<Vec> spherical_roots;
    std::vector<Vec> torus;  // generators xi_A of the central torus
    Vec chi;                 // lifting character, already expanded
    bool chi_canonical = true;

    /// The moment polytope as inequalities, one row per facet, in facet order.
    HPolytope polytope() const;
    std::size_t torus_rank() const { return torus.size(); }
};

/// chi_A = -xi_A . kappa_p
Vec canonical_character(const SphericalDatum& d);

/// Parses a datum document (JSON). Throws ParseError or DimensionMismatch.
SphericalDatum load_datum(std::string_view document);
SphericalDatum load_datum_file(const std::string& path);

/// Throws DimensionMismatch when vector lengths disagree with the rank or
/// n != rank + #roots.
void check_shapes(const SphericalDatum& d);

struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool ok() const;
};

ValidationReport validate(const SphericalDatum& d);

/// prod_roots (linear . lambda + constant) / rho_pairing, in r0 variables.
Polynomial pi_polynomial(const SphericalDatum& d);

/// n! * integral of pi over the moment polytope.
Rat degree(const SphericalDatum& d);

/// Toric datum of a reflexive polytope {w . lambda >= -1} with w primitive.
/// Throws NotReflexive.
SphericalDatum toric_datum(const HPolytope& p, std::string name = "toric");

/// Projection onto V_z = {v : sigma_j . v = 0 for all j} under the coordinate
/// dot product.
Vec project_central(const SphericalDatum& d, std::span<const Rat> v);
bool is_central(const SphericalDatum& d, std::span<const Rat> v);
bool in_valuation_cone(const SphericalDatum& d, std::span<const Rat> v);

}  // namespace kstab

#endif
