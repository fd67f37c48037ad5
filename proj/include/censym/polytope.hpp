#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "censym/configs.hpp"
#include "censym/matrix.hpp"
#include "censym/numeric.hpp"
#include "censym/toric.hpp"

namespace censym {

/// Invertible affine lattice map psi from the span lattice of a point set
/// onto Z^dim: psi(x) = coordinates of (x - base) in the columns of basis.
struct AffineMap {
    std::vector<Int> base;
    IntMatrix basis = IntMatrix(1, 1);  ///< ambient_dim x dim lattice basis of the direction lattice
    std::vector<std::vector<Rat>> left_inverse;  ///< dim x ambient_dim, left_inverse * basis = I

    std::size_t ambient_dim() const { return base.size(); }
    std::size_t dim() const { return basis.cols(); }

    /// Exact image of a lattice point of the span; nullopt when x is not on
    /// the span lattice.
    std::optional<std::vector<Int>> try_apply(const std::vector<Int>& x) const;
    std::vector<Int> apply(const std::vector<Int>& x) const;
    std::optional<std::vector<Rat>> try_apply_rational(const std::vector<Rat>& x) const;
    /// base + basis * y.
    std::vector<Int> unapply(const std::vector<Int>& y) const;
};

/// Facet inequality <normal, y> <= rhs in standard-form coordinates, with a
/// primitive integer normal and the indices of the points it is tight on.
struct FacetIneq {
    std::vector<Int> normal;
    Int rhs;
    std::vector<std::size_t> tight;
};

struct PolytopeLimits {
    std::size_t max_dim = 8;
    std::size_t max_points = 60;
};

struct PolytopeRep {
    std::vector<std::vector<Int>> points;      ///< generators, ambient coordinates
    AffineMap map;                             ///< ambient -> standard form
    std::vector<std::vector<Int>> std_points;  ///< psi(points), same order
    std::size_t dim = 0;
    std::vector<FacetIneq> facets;             ///< irredundant, in std coordinates

    /// Indices of points that are vertices (tight facets span full rank).
    std::vector<std::size_t> vertex_indices() const;
};

std::size_t affine_dim(const std::vector<std::vector<Int>>& points);

/// Standard form of the point set: identity when full dimensional,
/// last-coordinate deletion for height-1 configurations (the A± case),
/// otherwise an HNF basis of the saturated direction lattice.
AffineMap standard_form_map(const std::vector<std::vector<Int>>& points);

/// Facet enumeration by exhaustive supporting-hyperplane search over point
/// subsets, exact rational arithmetic. Throws SizeLimitError over budget.
std::vector<FacetIneq> facet_enumeration(const std::vector<std::vector<Int>>& std_points,
                                         std::size_t dim, const PolytopeLimits& limits = {});

/// Builds points + standard form + facets in one step.
PolytopeRep build_polytope(std::vector<std::vector<Int>> points, const PolytopeLimits& limits = {});

/// Strict satisfaction of every facet, within the affine span.
bool interior_contains(const PolytopeRep& p, const std::vector<Rat>& x_ambient);

struct FanoVerdict {
    bool gorenstein_fano = false;
    bool origin_interior = false;  ///< false explains the verdict: OriginNotInterior
};

/// True iff every dual-polytope vertex (facet normal over rhs) is integral;
/// requires the standard-form origin in the interior.
FanoVerdict is_gorenstein_fano(const PolytopeRep& p);

/// Dual-polytope vertices c/rhs as exact rational vectors (std coordinates).
std::vector<std::vector<Rat>> dual_vertices(const PolytopeRep& p);

struct Triangulation {
    std::vector<std::vector<Int>> points;  ///< deduplicated A± columns, ambient
    std::vector<std::vector<std::size_t>> simplices;
    std::vector<Int> volumes;  ///< normalized volume [ZA± : Z sigma] per simplex

    Int total_volume() const;
};

/// Pulling triangulation of Conv(A±) arising from a center-smallest revlex
/// order: recursively pull the smallest-ranked point, recurse on the facets
/// avoiding it. Requires rank(base) = rows(base).
Triangulation pulling_triangulation(const CscMatrix& csc, const TermOrder& order,
                                    const PolytopeLimits& limits = {});

/// All lattice points of the N-th dilate, returned in ambient coordinates.
std::vector<std::vector<Int>> dilate_lattice_points(const PolytopeRep& p, int n,
                                                    std::size_t point_budget = 5000000);

}  // namespace censym
