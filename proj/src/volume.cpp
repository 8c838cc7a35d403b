#include "rci/polytope.hpp"

#include "rci/double_description.hpp"
#include "rci/error.hpp"

#include <boost/dynamic_bitset.hpp>

#include <map>
#include <set>
#include <utility>

namespace rci {

namespace {

using Bits = boost::dynamic_bitset<>;

// Cone decomposition over faces. A k-face F is cut into cones from its vertex
// centroid over the facets of F; each cone volume is height times the volume of
// the facet projected along one coordinate, so the recursion stays in coordinate
// subspaces and exact arithmetic never needs a Euclidean norm.
class FaceVolume {
public:
    explicit FaceVolume(const VPolytope& p) : verts_(p.vertices()), n_(p.ambient_dim()) {
        std::vector<Vector> pts;
        for (const auto& v : verts_) pts.push_back(v.coords());
        for (const auto& f : hull_facets(pts, n_)) {
            Bits inc(verts_.size());
            for (std::size_t i = 0; i < verts_.size(); ++i)
                if (dot(f.normal, pts[i]) == f.rhs) inc.set(i);
            facets_.push_back(std::move(inc));
        }
    }

    Rational total() {
        Bits all(verts_.size());
        all.set();
        return face_volume(all, n_, Bits(n_));
    }

private:
    int face_dim(const Bits& face) {
        auto it = dims_.find(face);
        if (it != dims_.end()) return it->second;
        std::vector<RationalVector> pts;
        for (auto i = face.find_first(); i != Bits::npos; i = face.find_next(i)) pts.push_back(verts_[i]);
        int d = affine_dimension(pts);
        dims_.emplace(face, d);
        return d;
    }

    Vector projected(std::size_t vertex, const std::vector<std::size_t>& kept) const {
        Vector out;
        for (auto c : kept) out.push_back(verts_[vertex][c]);
        return out;
    }

    // Volume of `face` (dimension k) after deleting the coordinates in `dropped`.
    Rational face_volume(const Bits& face, std::size_t k, const Bits& dropped) {
        auto key = std::make_pair(face, dropped);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::vector<std::size_t> kept;
        for (std::size_t c = 0; c < n_; ++c)
            if (!dropped.test(c)) kept.push_back(c);

        Rational result = 0;
        if (k == 1) {
            bool first = true;
            Rational lo, hi;
            for (auto i = face.find_first(); i != Bits::npos; i = face.find_next(i)) {
                const Rational& x = verts_[i][kept[0]];
                if (first || x < lo) lo = x;
                if (first || x > hi) hi = x;
                first = false;
            }
            result = hi - lo;
        } else {
            Vector centroid(k);
            std::size_t count = 0;
            for (auto i = face.find_first(); i != Bits::npos; i = face.find_next(i), ++count)
                for (std::size_t j = 0; j < k; ++j) centroid[j] += verts_[i][kept[j]];
            for (auto& x : centroid) x /= count;

            std::set<Bits> subfaces;
            for (const auto& g : facets_) {
                Bits t = face & g;
                if (t != face && t.any() && face_dim(t) == static_cast<int>(k) - 1) subfaces.insert(t);
            }

            for (const auto& t : subfaces) {
                // Hyperplane a.y = b through the subface, in the kept coordinates.
                std::vector<Vector> rows;
                for (auto i = t.find_first(); i != Bits::npos; i = t.find_next(i)) {
                    Vector r = projected(i, kept);
                    r.push_back(-1);
                    rows.push_back(std::move(r));
                }
                auto ns = nullspace(Matrix::from_rows(rows, k + 1));
                if (ns.size() != 1) fail(ErrorKind::InvalidInput, "volume: degenerate facet hyperplane");
                Vector a(ns[0].begin(), ns[0].begin() + k);
                Rational b = ns[0][k];
                Rational gap = b - dot(a, centroid);
                if (gap < 0) gap = -gap;
                std::size_t j = 0;
                while (a[j] == 0) ++j;
                Bits next = dropped;
                next.set(kept[j]);
                result += gap / abs(a[j]) * face_volume(t, k - 1, next) / k;
            }
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

    const std::vector<RationalVector>& verts_;
    std::size_t n_;
    std::vector<Bits> facets_;
    std::map<Bits, int> dims_;
    std::map<std::pair<Bits, Bits>, Rational> memo_;
};

}  // namespace

Rational volume(const VPolytope& a) {
    if (!a.full_dimensional()) return 0;
    return FaceVolume(a).total();
}

}  // namespace rci
