#include "kstab/polynomial.hpp"

#include <cmath>
#include <numeric>

#include "kstab/error.hpp"

namespace kstab {

Polynomial Polynomial::constant(std::size_t nvars, const Rat& c) {
    Polynomial p(nvars);
    p.add_term(c, Exponents(nvars, 0));
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e.at(i) = 1;
    p.add_term(1, e);
    return p;
}

Polynomial Polynomial::affine(std::span<const Rat> a, const Rat& b) {
    Polynomial p = constant(a.size(), b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Exponents e(a.size(), 0);
        e[i] = 1;
        p.add_term(a[i], e);
    }
    return p;
}

Polynomial Polynomial::monomial(const Rat& c, Exponents e) {
    Polynomial p(e.size());
    p.add_term(c, e);
    return p;
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
}

void Polynomial::add_term(const Rat& c, const Exponents& e) {
    if (e.size() != nvars_) throw Error(ErrorKind::DimensionMismatch, "exponent vector length");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.nvars_ != nvars_) throw Error(ErrorKind::DimensionMismatch, "polynomial variable counts differ");
    for (const auto& [e, c] : o.terms_) add_term(c, e);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.nvars_ != nvars_) throw Error(ErrorKind::DimensionMismatch, "polynomial variable counts differ");
    for (const auto& [e, c] : o.terms_) add_term(-c, e);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rat& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw Error(ErrorKind::DimensionMismatch, "polynomial variable counts differ");
    Polynomial out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(ca * cb, e);
        }
    }
    return out;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = constant(nvars_, 1);
    Polynomial base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e.at(var) == 0) continue;
        Exponents d = e;
        --d[var];
        out.add_term(c * e[var], d);
    }
    return out;
}

Rat Polynomial::eval(std::span<const Rat> x) const {
    Rat s = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
        }
        s += t;
    }
    return s;
}

double Polynomial::eval(std::span<const double> x) const {
    double s = 0;
    for (const auto& [e, c] : terms_) {
        double t = to_double(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i]) t *= std::pow(x[i], static_cast<int>(e[i]));
        }
        s += t;
    }
    return s;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& subs) const {
    if (subs.size() != nvars_) throw Error(ErrorKind::DimensionMismatch, "composition arity");
    const std::size_t m = subs.empty() ? 0 : subs.front().nvars();
    // Cache powers of each substituted polynomial.
    std::vector<std::vector<Polynomial>> powers(nvars_);
    Polynomial out(m);
    for (const auto& [e, c] : terms_) {
        Polynomial t = constant(m, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(constant(m, 1));
            while (pw.size() <= e[i]) pw.push_back(pw.back() * subs[i]);
            t = t * pw[e[i]];
        }
        out += t;
    }
    return out;
}

Polynomial Polynomial::extend(std::size_t total) const {
    if (total < nvars_) throw Error(ErrorKind::DimensionMismatch, "cannot shrink polynomial variables");
    Polynomial out(total);
    for (const auto& [e, c] : terms_) {
        Exponents x = e;
        x.resize(total, 0);
        out.add_term(c, x);
    }
    return out;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        if (!out.empty()) out += " + ";
        out += to_string(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            out += "*x" + std::to_string(i + 1);
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

}  // namespace kstab
