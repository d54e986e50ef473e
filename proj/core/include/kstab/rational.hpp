#ifndef KSTAB_RATIONAL_HPP
#define KSTAB_RATIONAL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace kstab {

/// Exact rational number, always canonical (lowest terms, positive denominator).
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

/// A point of the weight side or a direction of the N side; which one is
/// meant is decided by context. Pairing is the coordinate dot product.
using Vec = std::vector<Rat>;

/// Parses "p/q", "p" or a finite decimal such as "-0.25". Throws ParseError.
Rat parse_rat(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rat& x);
std::string to_string(std::span<const Rat> v);

double to_double(const Rat& x);
std::vector<double> to_double(std::span<const Rat> v);

Rat dot(std::span<const Rat> a, std::span<const Rat> b);
Vec add(std::span<const Rat> a, std::span<const Rat> b);
Vec sub(std::span<const Rat> a, std::span<const Rat> b);
Vec scale(const Rat& s, std::span<const Rat> a);
bool is_zero(std::span<const Rat> v);

Int floor(const Rat& x);
Int ceil(const Rat& x);
Int lcm_of_denominators(std::span<const Rat> v);

/// Scales a nonzero rational vector by a positive factor s so that the result
/// is an integer vector with coprime entries. Returns {primitive, s}.
struct PrimitiveForm {
    Vec primitive;
    Rat scale;  // primitive = scale * v
};
PrimitiveForm primitive_form(std::span<const Rat> v);

Rat factorial(unsigned n);

/// Lexicographic comparison of equal-length vectors.
bool lex_less(std::span<const Rat> a, std::span<const Rat> b);

}  // namespace kstab

#endif
