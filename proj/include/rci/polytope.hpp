#pragma once

#include "rci/linalg.hpp"
#include "rci/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace rci {

/// A point of Q^n. Coordinates are always in lowest terms (an mpq invariant).
class RationalVector {
public:
    RationalVector() = default;
    explicit RationalVector(std::size_t dim) : coords_(dim) {}
    explicit RationalVector(Vector coords) : coords_(std::move(coords)) {}
    RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {}

    std::size_t dim() const { return coords_.size(); }
    const Vector& coords() const { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }

    RationalVector& operator+=(const RationalVector& o);
    RationalVector& operator-=(const RationalVector& o);
    RationalVector& operator*=(const Rational& t);

    friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
    friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
    friend RationalVector operator*(const Rational& t, RationalVector a) { return a *= t; }

    bool operator==(const RationalVector& o) const { return coords_ == o.coords_; }
    std::strong_ordering operator<=>(const RationalVector& o) const;

private:
    Vector coords_;
};

Rational dot(const RationalVector& a, const RationalVector& b);

/// Convex hull of finitely many points, stored as its extreme points in lexicographic order.
class VPolytope {
public:
    /// Builds the hull of `points` (duplicates and non-extreme points are dropped).
    explicit VPolytope(const std::vector<RationalVector>& points);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t affine_dim() const { return affine_dim_; }
    const std::vector<RationalVector>& vertices() const { return vertices_; }
    bool full_dimensional() const { return affine_dim_ == ambient_dim_; }

    bool operator==(const VPolytope& o) const { return vertices_ == o.vertices_; }

private:
    VPolytope() = default;

    std::size_t ambient_dim_ = 0;
    std::size_t affine_dim_ = 0;
    std::vector<RationalVector> vertices_;
};

/// normal . x <= rhs
struct Inequality {
    RationalVector normal;
    Rational rhs;

    bool operator==(const Inequality&) const = default;
};

/// Bounded polyhedron { x : normal_i . x <= rhs_i }.
///
/// Inequalities are scaled so the first nonzero normal entry has absolute value 1,
/// deduplicated, and stored sorted lexicographically by (normal, rhs). Boundedness
/// is checked on construction; an unbounded system throws UnboundedPolytope.
class HPolytope {
public:
    HPolytope(std::size_t ambient_dim, std::vector<Inequality> inequalities);

    std::size_t ambient_dim() const { return ambient_dim_; }
    const std::vector<Inequality>& inequalities() const { return inequalities_; }

    bool contains(const RationalVector& x) const;

private:
    std::size_t ambient_dim_;
    std::vector<Inequality> inequalities_;
};

VPolytope convex_hull(const std::vector<RationalVector>& points);

/// Vertex enumeration. Throws InvalidInput when the system is infeasible.
VPolytope hrep_to_vrep(const HPolytope& h);

/// Facet description. For a lower-dimensional polytope the affine hull is encoded as
/// pairs of opposite inequalities.
HPolytope vrep_to_hrep(const VPolytope& v);

VPolytope minkowski_sum(const VPolytope& a, const VPolytope& b);
VPolytope scale(const VPolytope& a, const Rational& t);
VPolytope translate(const VPolytope& a, const RationalVector& shift);

/// Image under x -> M x with M a square matrix (used for unimodular changes of coordinates).
VPolytope linear_image(const VPolytope& a, const Matrix& m);

/// Dimension of the affine hull of a point set; the empty set has dimension -1.
int affine_dimension(const std::vector<RationalVector>& points);

/// Exact Lebesgue volume in the ambient dimension.
Rational volume(const VPolytope& a);

/// Mixed volume V(K_1, ..., K_n), normalized so that V(K, ..., K) = volume(K).
Rational mixed_volume(const std::vector<VPolytope>& bodies);

/// n! * V(bodies[0]^mult[0], ..., bodies[s-1]^mult[s-1]) with sum(mult) = n.
/// Partial Minkowski sums are shared across the polarization terms.
Rational mixed_volume_multiplicity(const std::vector<VPolytope>& bodies,
                                   const std::vector<unsigned>& multiplicities);

}  // namespace rci
