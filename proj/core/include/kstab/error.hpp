#ifndef KSTAB_ERROR_HPP
#define KSTAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace kstab {

enum class ErrorKind {
    Infeasible,
    Unbounded,
    DegeneratePolytope,
    DependentGenerators,
    NotAFacet,
    NoConvergence,
    ParseError,
    DimensionMismatch,
    NotReflexive,
    RankMismatch,
    NonPolynomial,
    NegativeSomewhere,
    GradientOutsideValuationCone,
    RedundantPiece,
    NotCentral,
    EmptyFamily,
    NoSignChange,
    NonIntegralLevel,
    QuadrantViolation,
    NotConverged,
    InvalidInput,
    Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (and the CLI exit-code mapping) can dispatch without parsing text.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace kstab

#endif
