#pragma once

#include "rci/forms.hpp"
#include "rci/linalg.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <vector>

namespace rci {

/// Homogeneous element: coordinates over the chosen basis of A_degree.
struct AlgebraElement {
    unsigned degree = 0;
    Vector coords;

    bool operator==(const AlgebraElement&) const = default;
};

/// Graded Artinian algebra A = Q[d_1..d_s] / I with Poincare duality, where I is the
/// annihilator of a homogeneous polynomial or the radical of a symmetric form.
///
/// Each A_k is spanned by monomial classes picked greedily in graded-lex order; every
/// degree-k monomial is stored with its coordinates in that basis, so products are
/// table lookups.
class GradedPDAlgebra {
public:
    /// Canonical image of a degree-k operator monomial; two operators agree in A iff
    /// their images agree. Images for k = top degree are length-one vectors holding
    /// the top form.
    using ImageFn = std::function<Vector(unsigned k, const Monomial&)>;

    GradedPDAlgebra(std::size_t generators, unsigned top_degree, const ImageFn& image);

    std::size_t generators() const { return s_; }
    unsigned top_degree() const { return n_; }
    std::vector<std::size_t> hilbert() const;

    const std::vector<Monomial>& basis(unsigned k) const { return degrees_.at(k).basis; }
    const std::vector<Monomial>& monomials_of(unsigned k) const { return degrees_.at(k).monomials; }
    /// Row-reduced basis of I_k, vectors over monomials_of(k).
    const Matrix& ideal_slice(unsigned k) const { return degrees_.at(k).ideal; }
    /// B_k(a, b) = top_form(a b) on basis(k) x basis(n - k).
    const Matrix& pairing(unsigned k) const { return pairings_.at(k); }
    /// Top form of the single basis class of A_n.
    const Rational& top_form_value() const { return top_value_; }

    AlgebraElement one() const;
    AlgebraElement zero(unsigned degree) const;
    AlgebraElement class_of(const Monomial& m) const;
    /// Degree-1 class of sum x_i d_i.
    AlgebraElement linear_class(const Vector& x) const;
    AlgebraElement basis_element(unsigned k, std::size_t i) const;

    /// Product; degrees beyond the top give the zero element of that degree.
    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement power(const AlgebraElement& a, unsigned e) const;
    Rational top_form(const AlgebraElement& a) const;

    /// Product of basis(k)[i] and basis(l)[j] in the basis of A_{k+l}.
    const Vector& structure_constant(unsigned k, std::size_t i, unsigned l, std::size_t j) const;

private:
    struct Degree {
        std::vector<Monomial> monomials;
        std::map<Monomial, std::size_t> index;
        std::vector<Monomial> basis;
        std::vector<Vector> normal_forms;  // per monomial
        Matrix ideal;
    };

    std::size_t s_;
    unsigned n_;
    std::vector<Degree> degrees_;
    std::vector<Matrix> pairings_;
    std::map<std::array<std::size_t, 4>, Vector> structure_;
    Rational top_value_;
};

/// Annihilator construction: I_P = { D : D(P) = 0 }.
GradedPDAlgebra build_algebra_from_polynomial(const HomogeneousForm& p);

/// Symmetric-form construction: I = { a : F_s(a b) = 0 for all b }.
GradedPDAlgebra build_algebra_from_form(const SymmetricForm& f);

/// Degreewise equality of the two ideals. Throws ShapeMismatch on different s or n.
bool check_equivalence(const GradedPDAlgebra& from_polynomial, const GradedPDAlgebra& from_form);

/// top_form(d^n) for a degree-one element d.
Rational self_intersection(const GradedPDAlgebra& alg, const AlgebraElement& d);

struct DualityReport {
    bool unit_degree_zero = false;    // dim A_0 = 1
    bool unit_top_degree = false;     // dim A_n = 1
    bool palindromic = false;
    bool pairings_invertible = false;
    bool generated_in_degree_one = false;

    bool ok() const {
        return unit_degree_zero && unit_top_degree && palindromic && pairings_invertible && generated_in_degree_one;
    }
};

DualityReport verify_poincare_duality(const GradedPDAlgebra& alg);

}  // namespace rci
