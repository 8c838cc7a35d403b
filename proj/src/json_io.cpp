#include "rci/json_io.hpp"

#include "rci/error.hpp"

#include <limits>

namespace rci::io {

namespace {

const json& field(const json& j, const char* key) {
    require(j.is_object(), std::string("expected an object with key '") + key + "'");
    auto it = j.find(key);
    require(it != j.end(), std::string("missing key '") + key + "'");
    return *it;
}

std::size_t positive_size(const json& j, const char* what) {
    require(j.is_number_integer() && j.get<std::int64_t>() > 0, std::string(what) + " must be a positive integer");
    return j.get<std::size_t>();
}

std::vector<std::int64_t> int_list(const json& j, std::size_t dim, const char* what) {
    require(j.is_array() && j.size() == dim, std::string(what) + " must be an array of length " + std::to_string(dim));
    std::vector<std::int64_t> out;
    for (const auto& x : j) {
        require(x.is_number_integer(), std::string(what) + " entries must be integers");
        out.push_back(x.get<std::int64_t>());
    }
    return out;
}

Monomial monomial_from_json(const json& j, std::size_t s) {
    Monomial m;
    for (auto e : int_list(j, s, "exponent")) {
        require(e >= 0, "exponents of forms must be nonnegative");
        m.push_back(static_cast<unsigned>(e));
    }
    return m;
}

json monomial_to_json(const Monomial& m) {
    json a = json::array();
    for (auto e : m) a.push_back(e);
    return a;
}

}  // namespace

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    require(j.is_string(), "rational values must be strings \"p/q\" or integers");
    return parse_rational(j.get<std::string>());
}

json to_json(const Rational& q) { return to_string(q); }

json integer_to_json(const Integer& z) {
    if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
        return z.convert_to<std::int64_t>();
    return z.str();
}

RationalVector vector_from_json(const json& j, std::size_t dim) {
    require(j.is_array() && j.size() == dim, "point must be an array of length " + std::to_string(dim));
    RationalVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = rational_from_json(j[i]);
    return v;
}

json to_json(const RationalVector& v) {
    json a = json::array();
    for (const auto& x : v.coords()) a.push_back(to_json(x));
    return a;
}

VPolytope vpolytope_from_json(const json& j) {
    const std::size_t dim = positive_size(field(j, "dim"), "dim");
    const json& pts = j.contains("vertices") ? j["vertices"] : field(j, "points");
    require(pts.is_array() && !pts.empty(), "a polytope needs at least one point");
    std::vector<RationalVector> v;
    for (const auto& p : pts) v.push_back(vector_from_json(p, dim));
    return VPolytope(v);
}

json to_json(const VPolytope& p) {
    json verts = json::array();
    for (const auto& v : p.vertices()) verts.push_back(to_json(v));
    return {{"dim", p.ambient_dim()}, {"vertices", verts}};
}

HPolytope hpolytope_from_json(const json& j) {
    const std::size_t dim = positive_size(field(j, "dim"), "dim");
    const json& list = field(j, "inequalities");
    require(list.is_array(), "inequalities must be an array");
    std::vector<Inequality> ineqs;
    for (const auto& q : list) ineqs.push_back({vector_from_json(field(q, "normal"), dim), rational_from_json(field(q, "rhs"))});
    return HPolytope(dim, std::move(ineqs));
}

json to_json(const HPolytope& h) {
    json list = json::array();
    for (const auto& q : h.inequalities()) list.push_back({{"normal", to_json(q.normal)}, {"rhs", to_json(q.rhs)}});
    return {{"dim", h.ambient_dim()}, {"inequalities", list}};
}

VPolytope polytope_from_json(const json& j) {
    require(j.is_object(), "polytope must be an object");
    if (j.contains("inequalities")) return hrep_to_vrep(hpolytope_from_json(j));
    return vpolytope_from_json(j);
}

LaurentPolynomial laurent_from_json(const json& j) {
    const std::size_t dim = positive_size(field(j, "dim"), "dim");
    const json& terms = field(j, "terms");
    require(terms.is_array(), "terms must be an array");
    std::map<Exponent, Rational> map;
    for (const auto& t : terms) map[int_list(field(t, "exponent"), dim, "exponent")] += rational_from_json(field(t, "coefficient"));
    return LaurentPolynomial(dim, std::move(map));
}

json to_json(const LaurentPolynomial& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back({{"exponent", e}, {"coefficient", to_json(c)}});
    return {{"dim", f.dim()}, {"terms", terms}};
}

std::vector<Exponent> support_from_json(const json& j, std::size_t& dim) {
    dim = positive_size(field(j, "dim"), "dim");
    if (j.contains("terms")) return laurent_from_json(j).support();
    const json& pts = field(j, "points");
    require(pts.is_array() && !pts.empty(), "a support needs at least one point");
    std::vector<Exponent> out;
    for (const auto& p : pts) out.push_back(int_list(p, dim, "support point"));
    return out;
}

DominantWeight weight_from_json(const json& j) {
    if (j.contains("group")) require(j["group"] == "GL", "only the group GL is supported");
    const json& lam = field(j, "lambda");
    require(lam.is_array() && !lam.empty(), "lambda must be a nonempty array");
    if (j.contains("m")) require(positive_size(j["m"], "m") == lam.size(), "m must equal the length of lambda");
    return DominantWeight(int_list(lam, lam.size(), "lambda"));
}

HomogeneousForm homogeneous_from_json(const json& j) {
    const std::size_t s = positive_size(field(j, "variables"), "variables");
    const json& deg = field(j, "degree");
    require(deg.is_number_integer() && deg.get<std::int64_t>() >= 0, "degree must be a nonnegative integer");
    const json& terms = field(j, "terms");
    require(terms.is_array(), "terms must be an array");
    std::map<Monomial, Rational> coeffs;
    for (const auto& t : terms) coeffs[monomial_from_json(field(t, "exponent"), s)] += rational_from_json(field(t, "coefficient"));
    return HomogeneousForm(s, deg.get<unsigned>(), coeffs);
}

json to_json(const HomogeneousForm& p) {
    json terms = json::array();
    for (const auto& [a, c] : p.coeffs()) terms.push_back({{"exponent", monomial_to_json(a)}, {"coefficient", to_json(c)}});
    return {{"variables", p.variables()}, {"degree", p.degree()}, {"terms", terms}};
}

SymmetricForm symmetric_from_json(const json& j) {
    const std::size_t s = positive_size(field(j, "generators"), "generators");
    const json& deg = field(j, "degree");
    require(deg.is_number_integer() && deg.get<std::int64_t>() >= 0, "degree must be a nonnegative integer");
    const json& values = field(j, "values");
    require(values.is_array(), "values must be an array");
    std::map<Monomial, Rational> map;
    for (const auto& v : values) map[monomial_from_json(field(v, "index"), s)] = rational_from_json(field(v, "value"));
    return SymmetricForm(s, deg.get<unsigned>(), map);
}

json to_json(const SymmetricForm& f) {
    json values = json::array();
    for (const auto& [a, v] : f.values()) values.push_back({{"index", monomial_to_json(a)}, {"value", to_json(v)}});
    return {{"generators", f.generators()}, {"degree", f.degree()}, {"values", values}};
}

json to_json(const GradedPDAlgebra& a) {
    const unsigned n = a.top_degree();
    json bases = json::array();
    json pairings = json::array();
    json structure = json::array();
    for (unsigned k = 0; k <= n; ++k) {
        json b = json::array();
        for (const auto& m : a.basis(k)) b.push_back(monomial_to_json(m));
        bases.push_back(b);

        const Matrix& p = a.pairing(k);
        json rows = json::array();
        for (std::size_t r = 0; r < p.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < p.cols(); ++c) row.push_back(to_json(p(r, c)));
            rows.push_back(row);
        }
        pairings.push_back(rows);
    }
    // Sparse entries [k, i, l, j, m, c]: basis(k)[i] * basis(l)[j] has coefficient c on basis(k+l)[m].
    for (unsigned k = 0; k <= n; ++k)
        for (unsigned l = k; k + l <= n; ++l)
            for (std::size_t i = 0; i < a.basis(k).size(); ++i)
                for (std::size_t j = 0; j < a.basis(l).size(); ++j) {
                    const Vector& sc = a.structure_constant(k, i, l, j);
                    for (std::size_t m = 0; m < sc.size(); ++m)
                        if (sc[m] != 0) structure.push_back({k, i, l, j, m, to_json(sc[m])});
                }
    json hilbert = json::array();
    for (auto h : a.hilbert()) hilbert.push_back(h);
    return {{"generators", a.generators()},
            {"top_degree", n},
            {"hilbert", hilbert},
            {"bases", bases},
            {"pairings", pairings},
            {"structure_constants", structure},
            {"top_form", json::array({to_json(a.top_form_value())})}};
}

json to_json(const DualityReport& r) {
    return {{"dim_A0_is_1", r.unit_degree_zero},
            {"dim_An_is_1", r.unit_top_degree},
            {"palindromic", r.palindromic},
            {"pairings_invertible", r.pairings_invertible},
            {"generated_in_degree_one", r.generated_in_degree_one}};
}

}  // namespace rci::io
