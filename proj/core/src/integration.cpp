#include "kstab/integration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include "kstab/error.hpp"

namespace kstab {

Rat standard_simplex_moment(const Exponents& alpha) {
    Rat num = 1;
    unsigned total = 0;
    for (unsigned a : alpha) {
        num *= factorial(a);
        total += a;
    }
    return num / factorial(total + static_cast<unsigned>(alpha.size()));
}

namespace {

// Integral over the standard k-simplex of f(v0 + sum_j t_j (v_j - v0)).
Rat pulled_back_moment(const Simplex& s, const Polynomial& f) {
    const std::size_t k = s.vertices.size() - 1;
    const std::size_t d = s.vertices.front().size();
    std::vector<Polynomial> subs;
    subs.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        Vec a(k);
        for (std::size_t j = 0; j < k; ++j) a[j] = s.vertices[j + 1][i] - s.vertices[0][i];
        subs.push_back(Polynomial::affine(a, s.vertices[0][i]));
    }
    Polynomial g = f.compose(subs);
    Rat total = 0;
    for (const auto& [e, c] : g.terms()) total += c * standard_simplex_moment(e);
    return total;
}

Rat full_jacobian(const Simplex& s) {
    Matrix e;
    for (std::size_t i = 1; i < s.vertices.size(); ++i) e.push_back(sub(s.vertices[i], s.vertices[0]));
    return abs(determinant(std::move(e)));
}

struct FacetFrame {
    std::size_t dropped;  // coordinate removed by the projection
    Rat inv_weight;       // 1/|u_dropped|
};

FacetFrame facet_frame(const HPolytope& p, std::size_t row) {
    const auto& n = p.rows().at(row).normal;
    auto u = primitive_form(n).primitive;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] != 0) return {i, 1 / abs(u[i])};
    }
    throw Error(ErrorKind::NotAFacet, "zero normal");
}

// |det| of the edge matrix with one coordinate dropped.
Rat projected_jacobian(const Simplex& s, std::size_t dropped) {
    Matrix e;
    for (std::size_t i = 1; i < s.vertices.size(); ++i) {
        Vec row;
        for (std::size_t c = 0; c < s.vertices[i].size(); ++c) {
            if (c != dropped) row.push_back(s.vertices[i][c] - s.vertices[0][c]);
        }
        e.push_back(std::move(row));
    }
    return abs(determinant(std::move(e)));
}

}  // namespace

Rat integrate_polynomial(const Simplex& s, const Polynomial& p) {
    return full_jacobian(s) * pulled_back_moment(s, p);
}

Rat integrate_polynomial(const HPolytope& p, const Polynomial& f) {
    return integrate_polynomials(triangulate(p), {f}).front();
}

std::vector<Rat> integrate_polynomials(const std::vector<Simplex>& cells, const std::vector<Polynomial>& fs) {
    std::vector<Rat> out(fs.size(), Rat(0));
    for (const auto& s : cells) {
        Rat jac = full_jacobian(s);
        for (std::size_t i = 0; i < fs.size(); ++i) out[i] += jac * pulled_back_moment(s, fs[i]);
    }
    return out;
}

std::vector<Rat> facet_integrals_lattice(const HPolytope& p, std::size_t row, const std::vector<Polynomial>& fs) {
    auto cells = triangulate_facet(p, row);
    auto frame = facet_frame(p, row);
    std::vector<Rat> out(fs.size(), Rat(0));
    for (const auto& s : cells) {
        Rat jac = projected_jacobian(s, frame.dropped) * frame.inv_weight;
        for (std::size_t i = 0; i < fs.size(); ++i) out[i] += jac * pulled_back_moment(s, fs[i]);
    }
    return out;
}

Rat facet_integral_lattice(const HPolytope& p, std::size_t row, const Polynomial& f) {
    return facet_integrals_lattice(p, row, {f}).front();
}

// ---- numeric ------------------------------------------------------------------

SimplexRule grundmann_moller(unsigned n, unsigned s) {
    SimplexRule rule;
    const unsigned d = 2 * s + 1;
    for (unsigned i = 0; i <= s; ++i) {
        const double denom = static_cast<double>(d + n - 2 * i);
        double w = std::pow(denom, static_cast<double>(d)) * std::pow(2.0, -2.0 * s);
        w /= std::tgamma(static_cast<double>(i) + 1) * std::tgamma(static_cast<double>(d + n - i) + 1);
        if (i % 2) w = -w;
        // All compositions beta of s - i into n + 1 non-negative parts.
        const unsigned total = s - i;
        std::vector<unsigned> beta(n + 1, 0);
        std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned left) {
            if (pos == n) {
                beta[n] = left;
                std::vector<double> bary(n + 1);
                for (unsigned j = 0; j <= n; ++j) bary[j] = (2.0 * beta[j] + 1.0) / denom;
                rule.barycentric.push_back(std::move(bary));
                rule.weights.push_back(w);
                return;
            }
            for (unsigned b = 0; b <= left; ++b) {
                beta[pos] = b;
                rec(pos + 1, left - b);
            }
        };
        rec(0, total);
    }
    return rule;
}

namespace {

struct Cell {
    std::vector<std::vector<double>> verts;
    double measure;  // factor relative to the standard simplex
    double coarse = 0;
    double fine = 0;
    double error() const { return std::abs(fine - coarse); }
};

class AdaptiveQuadrature {
public:
    AdaptiveQuadrature(unsigned n, const Evaluator& h, const NumericOptions& opt)
        : rule_(grundmann_moller(n, opt.gm_order)), h_(h), opt_(opt) {}

    double apply(const Cell& c) const {
        const std::size_t d = c.verts.front().size();
        std::vector<double> x(d);
        double sum = 0;
        for (std::size_t q = 0; q < rule_.weights.size(); ++q) {
            std::fill(x.begin(), x.end(), 0.0);
            for (std::size_t j = 0; j < c.verts.size(); ++j) {
                for (std::size_t i = 0; i < d; ++i) x[i] += rule_.barycentric[q][j] * c.verts[j][i];
            }
            sum += rule_.weights[q] * h_(x);
        }
        return sum * c.measure;
    }

    std::pair<Cell, Cell> split(const Cell& c) const {
        std::size_t a = 0, b = 1;
        double best = -1;
        for (std::size_t i = 0; i < c.verts.size(); ++i) {
            for (std::size_t j = i + 1; j < c.verts.size(); ++j) {
                double len = 0;
                for (std::size_t k = 0; k < c.verts[i].size(); ++k) {
                    double t = c.verts[i][k] - c.verts[j][k];
                    len += t * t;
                }
                if (len > best) {
                    best = len;
                    a = i;
                    b = j;
                }
            }
        }
        std::vector<double> mid(c.verts[a].size());
        for (std::size_t k = 0; k < mid.size(); ++k) mid[k] = 0.5 * (c.verts[a][k] + c.verts[b][k]);
        Cell left{c.verts, 0.5 * c.measure};
        Cell right{c.verts, 0.5 * c.measure};
        left.verts[a] = mid;
        right.verts[b] = mid;
        return {std::move(left), std::move(right)};
    }

    void estimate(Cell& c) const {
        c.coarse = apply(c);
        if (c.verts.size() == 1) {  // a point: evaluation is exact
            c.fine = c.coarse;
            return;
        }
        auto [l, r] = split(c);
        c.fine = apply(l) + apply(r);
    }

    NumericResult run(std::vector<Cell> cells) const {
        auto cmp = [](const Cell& x, const Cell& y) { return x.error() < y.error(); };
        std::priority_queue<Cell, std::vector<Cell>, decltype(cmp)> heap(cmp);
        double value = 0, error = 0;
        for (auto& c : cells) {
            estimate(c);
            value += c.fine;
            error += c.error();
            heap.push(std::move(c));
        }
        std::size_t count = heap.size();
        while (error > std::max(opt_.abs_tol, opt_.rel_tol * std::abs(value))) {
            if (count >= opt_.max_cells) {
                throw Error(ErrorKind::NoConvergence, "quadrature error " + std::to_string(error) +
                                                          " after " + std::to_string(count) + " cells");
            }
            Cell worst = heap.top();
            heap.pop();
            value -= worst.fine;
            error -= worst.error();
            auto [l, r] = split(worst);
            for (Cell* c : {&l, &r}) {
                estimate(*c);
                value += c->fine;
                error += c->error();
                heap.push(std::move(*c));
            }
            ++count;
            // Guard against drift in the running error sum.
            if (error < 0) error = 0;
        }
        return {value, error, count};
    }

private:
    SimplexRule rule_;
    const Evaluator& h_;
    NumericOptions opt_;
};

std::vector<std::vector<double>> to_double_verts(const Simplex& s) {
    std::vector<std::vector<double>> out;
    for (const auto& v : s.vertices) out.push_back(to_double(v));
    return out;
}

}  // namespace

NumericResult integrate_numeric(const HPolytope& p, const Evaluator& h, const NumericOptions& opt) {
    std::vector<Cell> cells;
    for (const auto& s : triangulate(p)) cells.push_back({to_double_verts(s), to_double(full_jacobian(s))});
    return AdaptiveQuadrature(static_cast<unsigned>(p.dim()), h, opt).run(std::move(cells));
}

NumericResult integrate_numeric_facet(const HPolytope& p, std::size_t row, const Evaluator& h,
                                      const NumericOptions& opt) {
    auto frame = facet_frame(p, row);
    std::vector<Cell> cells;
    for (const auto& s : triangulate_facet(p, row)) {
        cells.push_back({to_double_verts(s), to_double(projected_jacobian(s, frame.dropped) * frame.inv_weight)});
    }
    return AdaptiveQuadrature(static_cast<unsigned>(p.dim() - 1), h, opt).run(std::move(cells));
}

}  // namespace kstab
