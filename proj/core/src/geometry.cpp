#include "kstab/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "kstab/error.hpp"

namespace kstab {

HPolytope::HPolytope(std::size_t dim, std::vector<Halfspace> rows) : dim_(dim), rows_(std::move(rows)) {
    for (const auto& r : rows_) {
        if (r.normal.size() != dim_) {
            throw Error(ErrorKind::DimensionMismatch, "inequality normal has wrong length");
        }
    }
}

bool HPolytope::contains(std::span<const Rat> x) const {
    return std::all_of(rows_.begin(), rows_.end(), [&](const Halfspace& h) { return h.eval(x) >= 0; });
}

bool HPolytope::strictly_inside(std::span<const Rat> x) const {
    return std::all_of(rows_.begin(), rows_.end(), [&](const Halfspace& h) { return h.eval(x) > 0; });
}

HPolytope HPolytope::with(Halfspace extra) const {
    auto rows = rows_;
    rows.push_back(std::move(extra));
    return HPolytope(dim_, std::move(rows));
}

namespace {

// Canonical representative of the ray of (normal, offset) under positive scaling.
Vec ray_key(const Halfspace& h) {
    Vec v = h.normal;
    v.push_back(h.offset);
    if (is_zero(v)) return v;
    return primitive_form(v).primitive;
}

}  // namespace

std::vector<std::size_t> HPolytope::duplicate_rows() const {
    std::vector<std::size_t> dups;
    std::vector<Vec> seen;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Vec key = ray_key(rows_[i]);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
            dups.push_back(i);
        } else {
            seen.push_back(std::move(key));
        }
    }
    return dups;
}

// ---- linear algebra ---------------------------------------------------------

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        Rat inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        f(std::as_const(idx));
        if (k == 0) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::size_t rank(Matrix m) {
    if (m.empty()) return 0;
    return rref(m, m.front().size()).size();
}

Rat determinant(Matrix m) {
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

std::optional<Vec> solve_square(Matrix a, Vec b) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    auto piv = rref(a, n);
    if (piv.size() < n) return std::nullopt;
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

Matrix nullspace(Matrix m, std::size_t cols) {
    auto piv = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : piv) is_pivot[c] = true;
    Matrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t affine_dimension(std::span<const Vec> points) {
    if (points.empty()) return 0;
    Matrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
    return rank(std::move(diffs));
}

// ---- feasibility (Fourier-Motzkin) ------------------------------------------

namespace {

// Rows are (coeffs..., constant) meaning coeffs . x + constant >= 0.
bool fm_feasible(std::vector<Vec> rows, std::size_t dim) {
    auto normalize = [](Vec& r) {
        Rat m = 0;
        for (const auto& x : r) m = std::max(m, Rat(abs(x)));
        if (m != 0) {
            for (auto& x : r) x /= m;
        }
    };
    for (auto& r : rows) normalize(r);
    for (std::size_t var = 0; var < dim; ++var) {
        std::vector<Vec> pos, neg, next;
        for (auto& r : rows) {
            if (r[var] > 0) pos.push_back(r);
            else if (r[var] < 0) neg.push_back(r);
            else next.push_back(r);
        }
        for (const auto& p : pos) {
            for (const auto& n : neg) {
                Vec c(p.size());
                for (std::size_t j = 0; j < p.size(); ++j) c[j] = p[j] * (-n[var]) + n[j] * p[var];
                c[var] = 0;
                normalize(c);
                next.push_back(std::move(c));
            }
        }
        std::sort(next.begin(), next.end(), [](const Vec& a, const Vec& b) { return lex_less(a, b); });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        rows = std::move(next);
    }
    return std::all_of(rows.begin(), rows.end(), [](const Vec& r) { return r.back() >= 0; });
}

std::vector<Vec> as_rows(const HPolytope& p) {
    std::vector<Vec> rows;
    for (const auto& h : p.rows()) {
        Vec r = h.normal;
        r.push_back(h.offset);
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

bool is_feasible(const HPolytope& p) { return fm_feasible(as_rows(p), p.dim()); }

// ---- vertices ---------------------------------------------------------------

std::vector<Vec> vertices(const HPolytope& p) {
    const std::size_t d = p.dim();
    const auto& rows = p.rows();
    if (d == 0) {
        if (!p.contains(Vec{})) throw Error(ErrorKind::Infeasible, "empty polytope");
        return {Vec{}};
    }

    std::vector<std::size_t> active;
    Matrix normals;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (is_zero(rows[i].normal)) {
            if (rows[i].offset < 0) throw Error(ErrorKind::Infeasible, "contradictory constant inequality");
            continue;
        }
        active.push_back(i);
        normals.push_back(rows[i].normal);
    }
    if (rank(normals) < d) {
        if (is_feasible(p)) throw Error(ErrorKind::Unbounded, "polyhedron contains a line");
        throw Error(ErrorKind::Infeasible, "empty polytope");
    }

    std::vector<Vec> out;
    for_each_combination(active.size(), d, [&](const std::vector<std::size_t>& idx) {
        Matrix a;
        Vec b;
        for (auto k : idx) {
            a.push_back(rows[active[k]].normal);
            b.push_back(-rows[active[k]].offset);
        }
        auto x = solve_square(std::move(a), std::move(b));
        if (x && p.contains(*x)) out.push_back(std::move(*x));
    });
    if (out.empty()) throw Error(ErrorKind::Infeasible, "empty polytope");

    // The recession cone {r : A r >= 0} is pointed; it is nontrivial iff it has
    // an extreme ray, i.e. a nonzero solution of d-1 independent tight rows.
    for_each_combination(active.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
        Matrix a;
        for (auto k : idx) a.push_back(rows[active[k]].normal);
        auto ns = nullspace(a, d);
        if (ns.size() != 1) return;
        for (int sign : {1, -1}) {
            Vec r = scale(Rat(sign), ns[0]);
            bool in_cone = std::all_of(active.begin(), active.end(),
                                       [&](std::size_t i) { return dot(rows[i].normal, r) >= 0; });
            if (in_cone) throw Error(ErrorKind::Unbounded, "recession direction " + to_string(r));
        }
    });

    std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) { return lex_less(a, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---- triangulation ----------------------------------------------------------

namespace {

struct FaceLattice {
    std::vector<Vec> verts;
    std::vector<std::vector<int>> tight;  // tight[row] = sorted vertex indices
    Apex apex;

    FaceLattice(const HPolytope& p, Apex a) : verts(vertices(p)), apex(a) {
        for (const auto& h : p.rows()) {
            std::vector<int> t;
            for (std::size_t v = 0; v < verts.size(); ++v) {
                if (h.eval(verts[v]) == 0) t.push_back(static_cast<int>(v));
            }
            tight.push_back(std::move(t));
        }
    }

    std::size_t dim_of(const std::vector<int>& face) const {
        std::vector<Vec> pts;
        for (int v : face) pts.push_back(verts[v]);
        return affine_dimension(pts);
    }

    std::vector<std::vector<int>> facets_of(const std::vector<int>& face, std::size_t k) const {
        std::vector<std::vector<int>> out;
        for (const auto& t : tight) {
            std::vector<int> sub;
            std::set_intersection(face.begin(), face.end(), t.begin(), t.end(), std::back_inserter(sub));
            if (sub.size() == face.size() || sub.size() < k) continue;
            if (dim_of(sub) + 1 != k) continue;
            if (std::find(out.begin(), out.end(), sub) == out.end()) out.push_back(std::move(sub));
        }
        return out;
    }

    void fan(const std::vector<int>& face, std::size_t k, std::vector<int>& suffix,
             std::vector<std::vector<int>>& out) const {
        if (k == 0) {
            std::vector<int> s{face.front()};
            s.insert(s.end(), suffix.rbegin(), suffix.rend());
            out.push_back(std::move(s));
            return;
        }
        int top = apex == Apex::LexFirst ? face.front() : face.back();
        suffix.push_back(top);
        for (const auto& f : facets_of(face, k)) {
            if (std::binary_search(f.begin(), f.end(), top)) continue;
            fan(f, k - 1, suffix, out);
        }
        suffix.pop_back();
    }

    std::vector<Simplex> to_simplices(const std::vector<std::vector<int>>& idx) const {
        std::vector<Simplex> out;
        out.reserve(idx.size());
        for (const auto& s : idx) {
            Simplex sx;
            for (int v : s) sx.vertices.push_back(verts[v]);
            out.push_back(std::move(sx));
        }
        return out;
    }
};

}  // namespace

std::vector<Simplex> triangulate(const HPolytope& p, Apex apex) {
    FaceLattice fl(p, apex);
    if (fl.dim_of([&] {
            std::vector<int> all(fl.verts.size());
            for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
            return all;
        }()) != p.dim()) {
        throw Error(ErrorKind::DegeneratePolytope, "polytope is not full-dimensional");
    }
    std::vector<int> all(fl.verts.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    std::vector<int> suffix;
    std::vector<std::vector<int>> idx;
    fl.fan(all, p.dim(), suffix, idx);
    return fl.to_simplices(idx);
}

std::vector<Vec> face_vertices(const HPolytope& p, std::size_t row) {
    std::vector<Vec> out;
    for (auto& v : vertices(p)) {
        if (p.rows().at(row).eval(v) == 0) out.push_back(std::move(v));
    }
    return out;
}

std::vector<Simplex> triangulate_facet(const HPolytope& p, std::size_t row) {
    FaceLattice fl(p, Apex::LexFirst);
    const auto& face = fl.tight.at(row);
    if (p.dim() == 0 || face.empty() || fl.dim_of(face) + 1 != p.dim()) {
        throw Error(ErrorKind::NotAFacet, "row " + std::to_string(row) + " does not support a facet");
    }
    std::vector<int> suffix;
    std::vector<std::vector<int>> idx;
    fl.fan(face, p.dim() - 1, suffix, idx);
    return fl.to_simplices(idx);
}

Rat simplex_volume(const Simplex& s) {
    const std::size_t d = s.vertices.size() - 1;
    Matrix e;
    for (std::size_t i = 1; i <= d; ++i) e.push_back(sub(s.vertices[i], s.vertices[0]));
    Rat det = determinant(std::move(e));
    return abs(det) / factorial(static_cast<unsigned>(d));
}

Rat volume(const HPolytope& p) {
    Rat v = 0;
    for (const auto& s : triangulate(p)) v += simplex_volume(s);
    return v;
}

std::optional<Vec> simplicial_cone_coefficients(std::span<const Rat> v, const std::vector<Vec>& generators) {
    const std::size_t m = generators.size();
    const std::size_t d = v.size();
    if (m == 0) {
        if (is_zero(v)) return Vec{};
        return std::nullopt;
    }
    if (rank(generators) < m) {
        throw Error(ErrorKind::DependentGenerators, "generators are linearly dependent");
    }
    // Augmented system: columns are generators, right-hand side v.
    Matrix a(d, Vec(m + 1));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < m; ++j) a[i][j] = generators[j].at(i);
        a[i][m] = v[i];
    }
    auto piv = rref(a, m + 1);
    if (!piv.empty() && piv.back() == m) return std::nullopt;  // inconsistent
    Vec c(m);
    for (std::size_t r = 0; r < piv.size(); ++r) c[piv[r]] = a[r][m];
    return c;
}

HPolytope hull_of_points(const std::vector<Vec>& points) {
    if (points.empty()) throw Error(ErrorKind::InvalidInput, "hull of no points");
    const std::size_t d = points.front().size();
    if (affine_dimension(points) != d) throw Error(ErrorKind::DegeneratePolytope, "points span a lower-dimensional set");
    std::vector<Halfspace> rows;
    std::vector<Vec> keys;
    for_each_combination(points.size(), d, [&](const std::vector<std::size_t>& idx) {
        // Hyperplane through the chosen points: normal in the nullspace of the differences.
        Matrix diffs;
        for (std::size_t k = 1; k < idx.size(); ++k) diffs.push_back(sub(points[idx[k]], points[idx[0]]));
        Matrix ns = d == 1 ? Matrix{Vec{Rat(1)}} : nullspace(diffs, d);
        if (ns.size() != 1) return;
        Vec n = ns[0];
        Rat off = -dot(n, points[idx[0]]);
        bool pos = true, neg = true;
        for (const auto& q : points) {
            Rat s = dot(n, q) + off;
            if (s < 0) pos = false;
            if (s > 0) neg = false;
        }
        if (!pos && !neg) return;
        if (!pos) {
            n = scale(Rat(-1), n);
            off = -off;
        }
        Halfspace h{n, off};
        Vec key = ray_key(h);
        if (std::find(keys.begin(), keys.end(), key) != keys.end()) return;
        keys.push_back(key);
        auto pf = primitive_form(n);
        rows.push_back({pf.primitive, off * pf.scale});
    });
    return HPolytope(d, std::move(rows));
}

}  // namespace kstab
