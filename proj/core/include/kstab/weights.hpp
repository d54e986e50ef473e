#ifndef KSTAB_WEIGHTS_HPP
#define KSTAB_WEIGHTS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kstab/datum.hpp"
#include "kstab/integration.hpp"
#include "kstab/polynomial.hpp"

namespace kstab {

/// g = exp(sum_A c_A theta_A + constant)
struct ExpAffine {
    std::vector<double> coeffs;
    double constant = 0;
};

/// Weight g on the torus moment polytope, in the variables theta_1..theta_r.
class WeightFunction {
public:
    explicit WeightFunction(Polynomial p) : kind_(std::move(p)) {}
    explicit WeightFunction(ExpAffine e) : kind_(std::move(e)) {}

    /// The constant weight 1 for a torus of rank r.
    static WeightFunction one(std::size_t r) { return WeightFunction(Polynomial::constant(r, 1)); }

    bool is_polynomial() const { return std::holds_alternative<Polynomial>(kind_); }
    const Polynomial& polynomial() const;
    const ExpAffine& exp_affine() const;
    std::size_t rank() const;

    double eval(std::span<const double> theta) const;

private:
    std::variant<Polynomial, ExpAffine> kind_;
};

/// g composed with theta_A(lambda) = xi_A . lambda + chi_A.
struct PulledBackWeight {
    std::optional<Polynomial> poly;  // exact path
    Evaluator eval;                  // always available
    Vec chi;
};

/// Uses the datum's own lifting character.
PulledBackWeight pullback(const WeightFunction& g, const SphericalDatum& d);
PulledBackWeight pullback(const WeightFunction& g, const SphericalDatum& d, const Vec& chi);

/// sum_A (xi_A . lambda) (dg/dtheta_A)(theta(lambda)), i.e. <lambda, grad> of
/// the pulled-back weight. Throws NonPolynomial for exp-affine weights.
PulledBackWeight euler_pairing(const WeightFunction& g, const SphericalDatum& d);
PulledBackWeight euler_pairing(const WeightFunction& g, const SphericalDatum& d, const Vec& chi);

/// Numeric counterpart valid for every weight kind.
Evaluator euler_pairing_numeric(const WeightFunction& g, const SphericalDatum& d, const Vec& chi);

/// theta -> g(theta - shift)
WeightFunction shifted(const WeightFunction& g, std::span<const Rat> shift);

/// theta_A(lambda) as affine polynomials in the rank-many lambda variables.
std::vector<Polynomial> theta_polynomials(const SphericalDatum& d, const Vec& chi);

/// Sampled positivity of g on the moment polytope: every vertex plus a
/// rational grid of barycentric combinations. A pass is evidence, not a proof.
struct PositivityAudit {
    bool positive = true;
    std::size_t samples = 0;
    std::optional<Vec> witness;  // a sample where the pulled-back weight is <= 0
};
PositivityAudit audit_positivity(const WeightFunction& g, const SphericalDatum& d, unsigned grid = 4);

/// {"type":"polynomial","terms":[{"coef":rat,"powers":[int]}]} or
/// {"type":"exp_affine","coeffs":[float],"constant":float}
WeightFunction load_weight(std::string_view document);
WeightFunction load_weight_file(const std::string& path);

}  // namespace kstab

#endif
