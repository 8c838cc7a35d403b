#include "rci/double_description.hpp"

#include "rci/error.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>

namespace rci {

namespace {

struct Ray {
    Vector v;
    boost::dynamic_bitset<> zeros;  // constraints (by input index) tight at v
};

// Scale to the primitive integral representative with the same direction.
void make_primitive(Vector& v) {
    Integer l = 1;
    for (const auto& x : v)
        if (x != 0) l = boost::multiprecision::lcm(l, Integer(denominator(x)));
    Integer g = 0;
    for (auto& x : v) {
        x *= l;
        if (x != 0) g = boost::multiprecision::gcd(g, Integer(numerator(x)));
    }
    if (g > 1)
        for (auto& x : v) x /= g;
}

bool lex_less(const Vector& a, const Vector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Rational& x, const Rational& y) { return x < y; });
}

}  // namespace

std::vector<Vector> extreme_rays(const std::vector<Vector>& rows, std::size_t dim) {
    const std::size_t m = rows.size();
    const Matrix mat = Matrix::from_rows(rows, dim);
    const auto basis = independent_rows(mat);
    require(basis.size() == dim, "double description: constraint matrix is rank deficient");

    // Initial simplicial cone { y : M_B y >= 0 }; its rays are the columns of M_B^{-1}.
    Matrix aug(dim, 2 * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t c = 0; c < dim; ++c) aug(i, c) = rows[basis[i]][c];
        aug(i, dim + i) = 1;
    }
    const Matrix inv = rref(aug);

    std::vector<bool> inserted(m, false);
    std::vector<Ray> rays;
    for (std::size_t j = 0; j < dim; ++j) {
        Ray r{Vector(dim), boost::dynamic_bitset<>(m)};
        for (std::size_t i = 0; i < dim; ++i) r.v[i] = inv(i, dim + j);
        make_primitive(r.v);
        for (std::size_t i = 0; i < dim; ++i)
            if (i != j) r.zeros.set(basis[i]);
        rays.push_back(std::move(r));
    }
    for (auto b : basis) inserted[b] = true;

    for (std::size_t c = 0; c < m; ++c) {
        if (inserted[c]) continue;
        inserted[c] = true;

        std::vector<Rational> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            val[k] = dot(rows[c], rays[k].v);
            if (val[k] > 0) pos.push_back(k);
            else if (val[k] < 0) neg.push_back(k);
        }
        if (neg.empty()) {
            for (std::size_t k = 0; k < rays.size(); ++k)
                if (val[k] == 0) rays[k].zeros.set(c);
            continue;
        }

        std::vector<Ray> next;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            if (val[k] < 0) continue;
            Ray r = rays[k];
            if (val[k] == 0) r.zeros.set(c);
            next.push_back(std::move(r));
        }
        for (auto p : pos) {
            for (auto q : neg) {
                boost::dynamic_bitset<> common = rays[p].zeros & rays[q].zeros;
                if (dim >= 2 && common.count() + 2 < dim) continue;
                // Combinatorial adjacency: no third ray is tight on all common constraints.
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (k == p || k == q) continue;
                    if (common.is_subset_of(rays[k].zeros)) adjacent = false;
                }
                if (!adjacent) continue;
                Ray r{Vector(dim), common};
                for (std::size_t i = 0; i < dim; ++i)
                    r.v[i] = val[p] * rays[q].v[i] - val[q] * rays[p].v[i];
                make_primitive(r.v);
                r.zeros.set(c);
                next.push_back(std::move(r));
            }
        }
        rays = std::move(next);
    }

    std::vector<Vector> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.v));
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<FacetEquation> hull_facets(const std::vector<Vector>& points, std::size_t dim) {
    // Valid inequalities (rhs, a) with rhs - a.p >= 0 form a pointed cone whose
    // extreme rays are exactly the facets of a full-dimensional hull.
    std::vector<Vector> rows;
    rows.reserve(points.size());
    for (const auto& p : points) {
        Vector r(dim + 1);
        r[0] = 1;
        for (std::size_t i = 0; i < dim; ++i) r[i + 1] = -p[i];
        rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end(), lex_less);
    std::vector<FacetEquation> facets;
    for (auto& ray : extreme_rays(rows, dim + 1)) {
        FacetEquation f{Vector(ray.begin() + 1, ray.end()), ray[0]};
        facets.push_back(std::move(f));
    }
    std::sort(facets.begin(), facets.end(), [](const FacetEquation& a, const FacetEquation& b) {
        if (a.normal != b.normal) return lex_less(a.normal, b.normal);
        return a.rhs < b.rhs;
    });
    return facets;
}

}  // namespace rci
