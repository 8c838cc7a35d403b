#include "rci/laurent.hpp"

#include "rci/error.hpp"

namespace rci {

LaurentPolynomial::LaurentPolynomial(std::size_t dim, std::map<Exponent, Rational> terms) : dim_(dim) {
    require(dim > 0, "Laurent polynomial needs at least one variable");
    for (auto& [e, c] : terms) {
        require(e.size() == dim, "exponent length differs from the number of variables");
        if (c != 0) terms_.emplace(e, c);
    }
    require(!terms_.empty(), "zero polynomial has no Newton polytope");
}

LaurentPolynomial LaurentPolynomial::from_support(std::size_t dim, const std::vector<Exponent>& points) {
    std::map<Exponent, Rational> terms;
    for (const auto& p : points) terms[p] = 1;
    return LaurentPolynomial(dim, std::move(terms));
}

std::vector<Exponent> LaurentPolynomial::support() const {
    std::vector<Exponent> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
}

VPolytope support_polytope(std::size_t dim, const std::vector<Exponent>& support) {
    require(!support.empty(), "empty support");
    std::vector<RationalVector> pts;
    for (const auto& e : support) {
        require(e.size() == dim, "exponent length differs from the ambient dimension");
        RationalVector p(dim);
        for (std::size_t i = 0; i < dim; ++i) p[i] = e[i];
        pts.push_back(std::move(p));
    }
    return VPolytope(pts);
}

VPolytope newton_polytope(const LaurentPolynomial& f) { return support_polytope(f.dim(), f.support()); }

SupportSystem::SupportSystem(std::size_t dim, std::vector<std::vector<Exponent>> supports)
    : dim_(dim), supports_(std::move(supports)) {
    require(dim > 0, "system dimension must be positive");
    require(supports_.size() == dim, "a square system needs exactly n supports in Z^n");
    for (const auto& s : supports_) {
        require(!s.empty(), "empty support in system");
        for (const auto& e : s) require(e.size() == dim, "exponent length differs from the system dimension");
    }
}

SupportSystem SupportSystem::from_polynomials(const std::vector<LaurentPolynomial>& polys) {
    require(!polys.empty(), "empty system");
    std::vector<std::vector<Exponent>> supports;
    for (const auto& p : polys) {
        require(p.dim() == polys.front().dim(), "polynomials in different numbers of variables");
        supports.push_back(p.support());
    }
    return SupportSystem(polys.front().dim(), std::move(supports));
}

Integer bkk_number(const SupportSystem& sys) {
    std::vector<VPolytope> polys;
    for (const auto& s : sys.supports()) polys.push_back(support_polytope(sys.dim(), s));
    Rational count = mixed_volume(polys) * Rational(factorial(static_cast<unsigned>(sys.dim())));
    if (!is_integer(count) || count < 0)
        fail(ErrorKind::NonIntegerDegree, "n! times the mixed volume is not a nonnegative integer: " + to_string(count));
    return numerator(count);
}

}  // namespace rci
