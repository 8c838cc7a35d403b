#pragma once

#include "rci/rational.hpp"

#include <cstddef>
#include <vector>

namespace rci {

/// Dense univariate polynomial over Q; coeffs()[i] multiplies x^i, no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    static UPoly constant(const Rational& c) { return UPoly({c}); }
    static UPoly monomial(const Rational& c, std::size_t degree);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const { return c_.back(); }

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly operator-() const;
    bool operator==(const UPoly&) const = default;

    Rational operator()(const Rational& x) const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder of a by nonzero b.
void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
/// a / b, requiring the division to be exact.
UPoly div_exact(const UPoly& a, const UPoly& b);
/// Monic gcd (zero when both are zero).
UPoly gcd(UPoly a, UPoly b);
UPoly derivative(const UPoly& a);
/// Divides out the largest power of x.
UPoly strip_x_powers(const UPoly& a);
/// Scales to a monic polynomial (content removal over Q).
UPoly make_monic(const UPoly& a);
/// Number of distinct complex roots, i.e. the degree of the squarefree part.
long distinct_root_count(const UPoly& a);

}  // namespace rci
