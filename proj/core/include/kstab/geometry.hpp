#ifndef KSTAB_GEOMETRY_HPP
#define KSTAB_GEOMETRY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

using Matrix = std::vector<Vec>;  // row-major

/// normal . x + offset >= 0
struct Halfspace {
    Vec normal;
    Rat offset;

    Rat eval(std::span<const Rat> x) const { return dot(normal, x) + offset; }
};

/// Convex polyhedron given by inequalities. Boundedness and full
/// dimensionality are not enforced at construction; the operations that need
/// them raise Unbounded / DegeneratePolytope.
class HPolytope {
public:
    HPolytope() = default;
    HPolytope(std::size_t dim, std::vector<Halfspace> rows);

    std::size_t dim() const { return dim_; }
    const std::vector<Halfspace>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }

    bool contains(std::span<const Rat> x) const;
    bool strictly_inside(std::span<const Rat> x) const;

    /// Same polytope with one more inequality.
    HPolytope with(Halfspace extra) const;

    /// Indices of rows that are positive multiples of an earlier row.
    std::vector<std::size_t> duplicate_rows() const;

private:
    std::size_t dim_ = 0;
    std::vector<Halfspace> rows_;
};

struct Simplex {
    std::vector<Vec> vertices;  // k+1 points spanning a k-simplex
};

// ---- linear algebra over Q ------------------------------------------------

std::size_t rank(Matrix m);
Rat determinant(Matrix m);
/// Unique solution of a square system, or nullopt when singular.
std::optional<Vec> solve_square(Matrix a, Vec b);
/// Basis of {x : m x = 0}; `cols` is the number of unknowns.
Matrix nullspace(Matrix m, std::size_t cols);
std::size_t affine_dimension(std::span<const Vec> points);

// ---- polytope operations --------------------------------------------------

/// Exact vertex set, deduplicated, lexicographically sorted.
/// Throws Infeasible or Unbounded.
std::vector<Vec> vertices(const HPolytope& p);

bool is_feasible(const HPolytope& p);

enum class Apex { LexFirst, LexLast };

/// Fan triangulation: cone from the apex vertex over the recursively
/// triangulated facets not containing it. Throws DegeneratePolytope when the
/// polytope is not full-dimensional.
std::vector<Simplex> triangulate(const HPolytope& p, Apex apex = Apex::LexFirst);

/// Vertices of P on which row `row` is tight.
std::vector<Vec> face_vertices(const HPolytope& p, std::size_t row);

/// (d-1)-dimensional triangulation of the facet cut out by `row`.
/// Throws NotAFacet when that face has lower dimension.
std::vector<Simplex> triangulate_facet(const HPolytope& p, std::size_t row);

Rat simplex_volume(const Simplex& s);
Rat volume(const HPolytope& p);

/// Coefficients c with v = sum c_i g_i, or nullopt when v is outside the span.
/// Throws DependentGenerators.
std::optional<Vec> simplicial_cone_coefficients(std::span<const Rat> v,
                                                 const std::vector<Vec>& generators);

/// H-representation of the convex hull of full-dimensional point sets
/// (used for round-trip checks; desk-scale only).
HPolytope hull_of_points(const std::vector<Vec>& points);

}  // namespace kstab

#endif
