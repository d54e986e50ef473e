#ifndef KSTAB_POLYNOMIAL_HPP
#define KSTAB_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

using Exponents = std::vector<unsigned>;

/// Sparse multivariate polynomial with rational coefficients in a fixed
/// number of variables. Terms are kept in lexicographic exponent order and
/// zero coefficients are pruned.
class Polynomial {
public:
    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rat& c);
    static Polynomial variable(std::size_t nvars, std::size_t i);
    /// a . x + b
    static Polynomial affine(std::span<const Rat> a, const Rat& b);
    static Polynomial monomial(const Rat& c, Exponents e);

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned degree() const;

    void add_term(const Rat& c, const Exponents& e);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rat& s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rat& s) { return a *= s; }
    friend Polynomial operator*(const Rat& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Polynomial pow(unsigned k) const;
    Polynomial derivative(std::size_t var) const;

    Rat eval(std::span<const Rat> x) const;
    double eval(std::span<const double> x) const;

    /// p(q_1, ..., q_m) where m == nvars(); all q_i share one variable count.
    Polynomial compose(const std::vector<Polynomial>& subs) const;

    /// Same polynomial viewed in `total` variables, this polynomial's
    /// variables occupying the first nvars() slots.
    Polynomial extend(std::size_t total) const;

private:
    std::size_t nvars_;
    std::map<Exponents, Rat> terms_;
};

std::string to_string(const Polynomial& p);

}  // namespace kstab

#endif
