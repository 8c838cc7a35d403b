#include "rci/polytope.hpp"

#include "rci/double_description.hpp"
#include "rci/error.hpp"

#include <algorithm>

namespace rci {

RationalVector& RationalVector::operator+=(const RationalVector& o) {
    require(dim() == o.dim(), "vector dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& o) {
    require(dim() == o.dim(), "vector dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

RationalVector& RationalVector::operator*=(const Rational& t) {
    for (auto& x : coords_) x *= t;
    return *this;
}

std::strong_ordering RationalVector::operator<=>(const RationalVector& o) const {
    const std::size_t n = std::min(dim(), o.dim());
    for (std::size_t i = 0; i < n; ++i)
        if (auto c = compare(coords_[i], o.coords_[i]); c != 0) return c;
    return dim() <=> o.dim();
}

Rational dot(const RationalVector& a, const RationalVector& b) { return dot(a.coords(), b.coords()); }

namespace {

// Reduced direction space of the affine hull: rref rows spanning {p - p0}.
Matrix direction_basis(const std::vector<RationalVector>& pts, std::vector<std::size_t>& pivots) {
    const std::size_t n = pts.front().dim();
    Matrix diff(pts.size() - 1, n);
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (std::size_t c = 0; c < n; ++c) diff(i - 1, c) = pts[i][c] - pts[0][c];
    Matrix r = rref(diff, &pivots);
    Matrix out(pivots.size(), n);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t c = 0; c < n; ++c) out(i, c) = r(i, c);
    return out;
}

Vector project(const RationalVector& p, const std::vector<std::size_t>& coords) {
    Vector out;
    out.reserve(coords.size());
    for (auto c : coords) out.push_back(p[c]);
    return out;
}

void check_uniform(const std::vector<RationalVector>& points) {
    require(!points.empty(), "empty point set");
    const std::size_t n = points.front().dim();
    require(n > 0, "ambient dimension must be positive");
    for (const auto& p : points) require(p.dim() == n, "points of mixed dimensions");
}

}  // namespace

int affine_dimension(const std::vector<RationalVector>& points) {
    if (points.empty()) return -1;
    std::vector<std::size_t> piv;
    direction_basis(points, piv);
    return static_cast<int>(piv.size());
}

VPolytope::VPolytope(const std::vector<RationalVector>& points) {
    check_uniform(points);
    ambient_dim_ = points.front().dim();

    std::vector<RationalVector> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<std::size_t> piv;
    direction_basis(pts, piv);
    affine_dim_ = piv.size();
    if (affine_dim_ == 0) {
        vertices_ = std::move(pts);
        return;
    }

    // The projection onto the pivot coordinates is injective on the affine hull.
    std::vector<Vector> proj;
    proj.reserve(pts.size());
    for (const auto& p : pts) proj.push_back(project(p, piv));
    const auto facets = hull_facets(proj, affine_dim_);

    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<Vector> tight;
        for (const auto& f : facets)
            if (dot(f.normal, proj[i]) == f.rhs) tight.push_back(f.normal);
        if (tight.size() >= affine_dim_ && rank(Matrix::from_rows(tight, affine_dim_)) == affine_dim_)
            vertices_.push_back(pts[i]);
    }
}

VPolytope convex_hull(const std::vector<RationalVector>& points) { return VPolytope(points); }

HPolytope::HPolytope(std::size_t ambient_dim, std::vector<Inequality> inequalities)
    : ambient_dim_(ambient_dim) {
    require(ambient_dim > 0, "ambient dimension must be positive");
    for (auto& ineq : inequalities) {
        require(ineq.normal.dim() == ambient_dim, "inequality normal has wrong dimension");
        std::size_t lead = 0;
        while (lead < ambient_dim && ineq.normal[lead] == 0) ++lead;
        if (lead == ambient_dim) {
            if (ineq.rhs < 0) fail(ErrorKind::InvalidInput, "infeasible inequality 0 <= negative");
            continue;
        }
        Rational s = abs(ineq.normal[lead]);
        if (s != 1) {
            ineq.normal *= 1 / s;
            ineq.rhs /= s;
        }
        inequalities_.push_back(std::move(ineq));
    }
    std::sort(inequalities_.begin(), inequalities_.end(), [](const Inequality& a, const Inequality& b) {
        if (auto c = a.normal <=> b.normal; c != 0) return c < 0;
        return a.rhs < b.rhs;
    });
    // Parallel duplicates keep only the tightest bound.
    std::vector<Inequality> kept;
    for (auto& ineq : inequalities_)
        if (kept.empty() || kept.back().normal != ineq.normal) kept.push_back(std::move(ineq));
    inequalities_ = std::move(kept);

    // Bounded iff the recession cone { x : A x <= 0 } is {0}.
    std::vector<Vector> rows;
    for (const auto& ineq : inequalities_) {
        Vector r = ineq.normal.coords();
        for (auto& x : r) x = -x;
        rows.push_back(std::move(r));
    }
    if (rows.empty() || rank(Matrix::from_rows(rows, ambient_dim_)) < ambient_dim_)
        fail(ErrorKind::UnboundedPolytope, "inequality system has a nontrivial lineality space");
    if (!extreme_rays(rows, ambient_dim_).empty())
        fail(ErrorKind::UnboundedPolytope, "inequality system has an unbounded recession direction");
}

bool HPolytope::contains(const RationalVector& x) const {
    for (const auto& ineq : inequalities_)
        if (dot(ineq.normal, x) > ineq.rhs) return false;
    return true;
}

VPolytope hrep_to_vrep(const HPolytope& h) {
    const std::size_t n = h.ambient_dim();
    // Homogenized cone { (t, x) : t >= 0, rhs t - normal.x >= 0 }.
    std::vector<Vector> rows;
    Vector t_row(n + 1);
    t_row[0] = 1;
    rows.push_back(std::move(t_row));
    for (const auto& ineq : h.inequalities()) {
        Vector r(n + 1);
        r[0] = ineq.rhs;
        for (std::size_t i = 0; i < n; ++i) r[i + 1] = -ineq.normal[i];
        rows.push_back(std::move(r));
    }
    std::vector<RationalVector> verts;
    for (const auto& ray : extreme_rays(rows, n + 1)) {
        if (ray[0] == 0) fail(ErrorKind::UnboundedPolytope, "unbounded direction found during vertex enumeration");
        RationalVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = ray[i + 1] / ray[0];
        verts.push_back(std::move(v));
    }
    if (verts.empty()) fail(ErrorKind::InvalidInput, "inequality system is infeasible");
    return VPolytope(verts);
}

HPolytope vrep_to_hrep(const VPolytope& v) {
    const std::size_t n = v.ambient_dim();
    const auto& verts = v.vertices();
    std::vector<std::size_t> piv;
    const Matrix dir = direction_basis(verts, piv);
    std::vector<Inequality> out;

    // Affine hull equations as opposite inequality pairs.
    for (auto& w : nullspace(dir)) {
        RationalVector normal(std::move(w));
        Rational rhs = dot(normal, verts.front());
        out.push_back({normal, rhs});
        out.push_back({Rational(-1) * normal, Rational(-rhs)});
    }
    if (!piv.empty()) {
        std::vector<Vector> proj;
        for (const auto& p : verts) proj.push_back(project(p, piv));
        for (const auto& f : hull_facets(proj, piv.size())) {
            RationalVector normal(n);
            for (std::size_t i = 0; i < piv.size(); ++i) normal[piv[i]] = f.normal[i];
            out.push_back({std::move(normal), f.rhs});
        }
    }
    return HPolytope(n, std::move(out));
}

VPolytope minkowski_sum(const VPolytope& a, const VPolytope& b) {
    require(a.ambient_dim() == b.ambient_dim(), "Minkowski sum of polytopes in different dimensions");
    std::vector<RationalVector> sums;
    sums.reserve(a.vertices().size() * b.vertices().size());
    for (const auto& p : a.vertices())
        for (const auto& q : b.vertices()) sums.push_back(p + q);
    return VPolytope(sums);
}

VPolytope scale(const VPolytope& a, const Rational& t) {
    require(t >= 0, "negative scale factor");
    std::vector<RationalVector> pts;
    for (const auto& p : a.vertices()) pts.push_back(t * p);
    return VPolytope(pts);
}

VPolytope translate(const VPolytope& a, const RationalVector& shift) {
    std::vector<RationalVector> pts;
    for (const auto& p : a.vertices()) pts.push_back(p + shift);
    return VPolytope(pts);
}

VPolytope linear_image(const VPolytope& a, const Matrix& m) {
    const std::size_t n = a.ambient_dim();
    require(m.rows() == n && m.cols() == n, "linear map has wrong shape");
    std::vector<RationalVector> pts;
    for (const auto& p : a.vertices()) {
        RationalVector q(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) q[r] += m(r, c) * p[c];
        pts.push_back(std::move(q));
    }
    return VPolytope(pts);
}

}  // namespace rci
