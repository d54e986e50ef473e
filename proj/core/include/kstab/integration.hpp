#ifndef KSTAB_INTEGRATION_HPP
#define KSTAB_INTEGRATION_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "kstab/geometry.hpp"
#include "kstab/polynomial.hpp"

namespace kstab {

// Interior integrals use Lebesgue measure normalized so that the unit cell of
// Z^d has volume one. Facet integrals use d(sigma_0)/|u| with u the primitive
// integer normal of the facet, which keeps everything rational.

/// Integral over a full-dimensional simplex, exact.
Rat integrate_polynomial(const Simplex& s, const Polynomial& p);

Rat integrate_polynomial(const HPolytope& p, const Polynomial& f);

/// Integrates several polynomials over the same triangulation.
std::vector<Rat> integrate_polynomials(const std::vector<Simplex>& cells, const std::vector<Polynomial>& fs);

/// Integral of f over the facet cut out by `row`, with measure d(sigma_0)/|u|.
/// Throws NotAFacet.
Rat facet_integral_lattice(const HPolytope& p, std::size_t row, const Polynomial& f);
std::vector<Rat> facet_integrals_lattice(const HPolytope& p, std::size_t row, const std::vector<Polynomial>& fs);

/// Integral of the monomial t^alpha over the standard simplex {t >= 0, sum t <= 1}.
Rat standard_simplex_moment(const Exponents& alpha);

// ---- numeric quadrature -----------------------------------------------------

using Evaluator = std::function<double(std::span<const double>)>;

struct NumericOptions {
    unsigned gm_order = 4;           // Grundmann-Moller s; exact for degree 2s+1
    double abs_tol = 1e-13;
    double rel_tol = 1e-12;
    std::size_t max_cells = 200000;  // refinement budget before NoConvergence
};

struct NumericResult {
    double value = 0;
    double error = 0;
    std::size_t cells = 0;
};

/// Adaptive longest-edge bisection driven by the difference between a cell's
/// rule and the sum over its two children. Throws NoConvergence.
NumericResult integrate_numeric(const HPolytope& p, const Evaluator& h, const NumericOptions& opt = {});

NumericResult integrate_numeric_facet(const HPolytope& p, std::size_t row, const Evaluator& h,
                                      const NumericOptions& opt = {});

/// Grundmann-Moller rule on the standard n-simplex: barycentric points and
/// weights (weights sum to 1/n!).
struct SimplexRule {
    std::vector<std::vector<double>> barycentric;
    std::vector<double> weights;
};
SimplexRule grundmann_moller(unsigned n, unsigned s);

}  // namespace kstab

#endif
