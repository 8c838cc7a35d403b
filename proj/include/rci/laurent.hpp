#pragma once

#include "rci/polytope.hpp"
#include "rci/rational.hpp"
#include "rci/upoly.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace rci {

using Exponent = std::vector<std::int64_t>;

/// Finite sum of c_a x^a with integer (possibly negative) exponents and nonzero c_a.
class LaurentPolynomial {
public:
    /// Drops zero coefficients; the zero polynomial is rejected with InvalidInput.
    LaurentPolynomial(std::size_t dim, std::map<Exponent, Rational> terms);
    /// All coefficients equal to one.
    static LaurentPolynomial from_support(std::size_t dim, const std::vector<Exponent>& points);

    std::size_t dim() const { return dim_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    std::vector<Exponent> support() const;

private:
    std::size_t dim_;
    std::map<Exponent, Rational> terms_;
};

VPolytope newton_polytope(const LaurentPolynomial& f);
VPolytope support_polytope(std::size_t dim, const std::vector<Exponent>& support);

/// n supports in Z^n: one per equation of a square Laurent system.
class SupportSystem {
public:
    SupportSystem(std::size_t dim, std::vector<std::vector<Exponent>> supports);
    static SupportSystem from_polynomials(const std::vector<LaurentPolynomial>& polys);

    std::size_t dim() const { return dim_; }
    const std::vector<std::vector<Exponent>>& supports() const { return supports_; }

private:
    std::size_t dim_;
    std::vector<std::vector<Exponent>> supports_;
};

/// n! V(Newton polytopes): the generic number of solutions in the torus.
Integer bkk_number(const SupportSystem& sys);

struct OracleOptions {
    std::uint64_t seed = 20200320;
    unsigned trials = 5;
    unsigned retries = 16;
    std::int64_t coeff_bound = 16;
};

/// Distinct roots in C^* of a random-coefficient polynomial on the support of f (n = 1).
std::int64_t oracle_roots_univariate(const LaurentPolynomial& f, const OracleOptions& opt = {});
std::int64_t oracle_roots_univariate(const std::vector<std::int64_t>& support, const OracleOptions& opt = {});

/// Solutions in (C^*)^2 of a random-coefficient system on two supports, counted by a
/// Sylvester resultant in the second variable. Non-generic draws are redrawn; every
/// redraw also applies a torus automorphism (u = x y^-k) so that solutions sharing an
/// x-coordinate by symmetry separate.
std::int64_t oracle_roots_bivariate(const std::vector<Exponent>& first, const std::vector<Exponent>& second,
                                    const OracleOptions& opt = {});

/// Sylvester resultant of f and g with respect to y, where f[j] is the coefficient of y^j.
UPoly sylvester_resultant(const std::vector<UPoly>& f, const std::vector<UPoly>& g);

}  // namespace rci
