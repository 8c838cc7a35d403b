#pragma once

#include "rci/polytope.hpp"
#include "rci/rational.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace rci {

/// Exponent vector over s symbols (nonnegative).
using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);

/// All degree-k monomials in s symbols, graded-lex order (x1^k first).
std::vector<Monomial> monomials(std::size_t s, unsigned k);

/// n! / (alpha_1! ... alpha_s!)
Integer multinomial(const Monomial& alpha);

/// alpha_1! ... alpha_s!
Integer monomial_factorial(const Monomial& alpha);

/// Symmetric n-linear form on Q^s, stored by multiset: values()[alpha] = F(e_1^alpha_1, ..., e_s^alpha_s).
class SymmetricForm {
public:
    /// Throws ZeroForm when every value vanishes.
    SymmetricForm(std::size_t generators, unsigned degree, const std::map<Monomial, Rational>& values);

    std::size_t generators() const { return s_; }
    unsigned degree() const { return n_; }
    const std::map<Monomial, Rational>& values() const { return values_; }
    Rational value(const Monomial& alpha) const;

    /// F(x, ..., x)
    Rational diagonal(const Vector& x) const;

private:
    std::size_t s_;
    unsigned n_;
    std::map<Monomial, Rational> values_;
};

/// Homogeneous polynomial sum c_alpha x^alpha in s variables. May be zero.
class HomogeneousForm {
public:
    HomogeneousForm(std::size_t variables, unsigned degree, const std::map<Monomial, Rational>& coeffs);

    std::size_t variables() const { return s_; }
    unsigned degree() const { return d_; }
    const std::map<Monomial, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(const Monomial& alpha) const;
    bool is_zero() const { return coeffs_.empty(); }

    Rational operator()(const Vector& x) const;
    bool operator==(const HomogeneousForm&) const = default;

private:
    std::size_t s_;
    unsigned d_;
    std::map<Monomial, Rational> coeffs_;
};

/// The constant-coefficient operator d^beta = d1^beta_1 ... ds^beta_s.
struct DiffOperatorMonomial {
    Monomial beta;
};

/// d^beta applied to p. The result has degree deg(p) - |beta|, or is the zero form of
/// degree 0 when |beta| exceeds deg(p).
HomogeneousForm apply_operator(const DiffOperatorMonomial& op, const HomogeneousForm& p);

/// Intersection numbers F_alpha = n! V(generator_1^alpha_1, ..., generator_s^alpha_s).
/// Throws ZeroForm when all of them vanish.
SymmetricForm mixed_volume_tensor(const std::vector<VPolytope>& generators);

/// P(x) = (1/n!) sum_alpha (n choose alpha) F_alpha x^alpha, so that n! P(x) = F(x, ..., x).
HomogeneousForm volume_polynomial(const SymmetricForm& f);

}  // namespace rci
