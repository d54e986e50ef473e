#include "kstab/rational.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "kstab/error.hpp"

namespace kstab {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Infeasible: return "Infeasible";
        case ErrorKind::Unbounded: return "Unbounded";
        case ErrorKind::DegeneratePolytope: return "DegeneratePolytope";
        case ErrorKind::DependentGenerators: return "DependentGenerators";
        case ErrorKind::NotAFacet: return "NotAFacet";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotReflexive: return "NotReflexive";
        case ErrorKind::RankMismatch: return "RankMismatch";
        case ErrorKind::NonPolynomial: return "NonPolynomial";
        case ErrorKind::NegativeSomewhere: return "NegativeSomewhere";
        case ErrorKind::GradientOutsideValuationCone: return "GradientOutsideValuationCone";
        case ErrorKind::RedundantPiece: return "RedundantPiece";
        case ErrorKind::NotCentral: return "NotCentral";
        case ErrorKind::EmptyFamily: return "EmptyFamily";
        case ErrorKind::NoSignChange: return "NoSignChange";
        case ErrorKind::NonIntegralLevel: return "NonIntegralLevel";
        case ErrorKind::QuadrantViolation: return "QuadrantViolation";
        case ErrorKind::NotConverged: return "NotConverged";
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Int parse_int(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw Error(ErrorKind::ParseError, "not a rational: \"" + std::string(whole) + "\"");
    }
    Int v{std::string(s)};
    return neg ? Int(-v) : v;
}

}  // namespace

Rat parse_rat(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Int p = parse_int(s.substr(0, slash), text);
        Int q = parse_int(s.substr(slash + 1), text);
        if (q == 0) throw Error(ErrorKind::ParseError, "zero denominator in \"" + std::string(text) + "\"");
        return Rat(p, q);
    }
    if (auto dot_pos = s.find('.'); dot_pos != std::string_view::npos) {
        std::string_view head = s.substr(0, dot_pos);
        std::string_view frac = s.substr(dot_pos + 1);
        bool neg = !head.empty() && head.front() == '-';
        if (!head.empty() && (head.front() == '-' || head.front() == '+')) head.remove_prefix(1);
        if (head.empty()) head = "0";
        if (!all_digits(head) || !all_digits(frac)) {
            throw Error(ErrorKind::ParseError, "not a rational: \"" + std::string(text) + "\"");
        }
        Int denom = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) denom *= 10;
        Int numer = Int(std::string(head)) * denom + Int(std::string(frac));
        return Rat(neg ? Int(-numer) : numer, denom);
    }
    return Rat(parse_int(s, text), Int(1));
}

std::string to_string(const Rat& x) {
    std::ostringstream os;
    if (denominator(x) == 1) {
        os << numerator(x);
    } else {
        os << numerator(x) << '/' << denominator(x);
    }
    return os.str();
}

std::string to_string(std::span<const Rat> v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += to_string(v[i]);
    }
    return out + ")";
}

double to_double(const Rat& x) { return x.convert_to<double>(); }

std::vector<double> to_double(std::span<const Rat> v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_double(x));
    return out;
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec add(std::span<const Rat> a, std::span<const Rat> b) {
    Vec out(a.begin(), a.end());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

Vec sub(std::span<const Rat> a, std::span<const Rat> b) {
    Vec out(a.begin(), a.end());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

Vec scale(const Rat& s, std::span<const Rat> a) {
    Vec out(a.begin(), a.end());
    for (auto& x : out) x *= s;
    return out;
}

bool is_zero(std::span<const Rat> v) {
    for (const auto& x : v) {
        if (x != 0) return false;
    }
    return true;
}

Int floor(const Rat& x) {
    Int q = numerator(x) / denominator(x);  // truncates toward zero
    if (x < 0 && Rat(q) != x) q -= 1;
    return q;
}

Int ceil(const Rat& x) {
    Int f = floor(x);
    return Rat(f) == x ? f : Int(f + 1);
}

Int lcm_of_denominators(std::span<const Rat> v) {
    Int l = 1;
    for (const auto& x : v) l = boost::multiprecision::lcm(l, Int(denominator(x)));
    return l;
}

PrimitiveForm primitive_form(std::span<const Rat> v) {
    Int l = lcm_of_denominators(v);
    Int g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, Int(numerator(Rat(x * Rat(l)))));
    if (g == 0) throw Error(ErrorKind::InvalidInput, "primitive form of the zero vector");
    Rat s(l, g);
    return {scale(s, v), s};
}

Rat factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return Rat(f);
}

bool lex_less(std::span<const Rat> a, std::span<const Rat> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace kstab
