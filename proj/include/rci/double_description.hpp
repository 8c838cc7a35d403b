#pragma once

#include "rci/linalg.hpp"

#include <cstddef>
#include <vector>

namespace rci {

/// Extreme rays of the pointed cone { y in Q^dim : row . y >= 0 for every row }.
///
/// Double description method. Constraints are inserted in the given order, starting
/// from the first `dim` linearly independent rows; rays are returned primitive
/// (integral, gcd 1) and sorted lexicographically. The rows must have rank `dim`.
std::vector<Vector> extreme_rays(const std::vector<Vector>& rows, std::size_t dim);

/// Facets of the convex hull of full-dimensional `points` in Q^dim, as (normal, rhs)
/// with normal . x <= rhs, normals primitive integral. Sorted lexicographically.
struct FacetEquation {
    Vector normal;
    Rational rhs;
};
std::vector<FacetEquation> hull_facets(const std::vector<Vector>& points, std::size_t dim);

}  // namespace rci
