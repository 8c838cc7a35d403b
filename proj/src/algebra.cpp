#include "rci/algebra.hpp"

#include "rci/error.hpp"

namespace rci {

namespace {

Monomial add(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

}  // namespace

GradedPDAlgebra::GradedPDAlgebra(std::size_t generators, unsigned top_degree, const ImageFn& image)
    : s_(generators), n_(top_degree) {
    require(generators > 0, "an algebra needs at least one generator");
    degrees_.resize(n_ + 1);
    for (unsigned k = 0; k <= n_; ++k) {
        Degree& d = degrees_[k];
        d.monomials = monomials(s_, k);
        for (std::size_t i = 0; i < d.monomials.size(); ++i) d.index.emplace(d.monomials[i], i);

        std::vector<Vector> images;
        for (const auto& m : d.monomials) images.push_back(image(k, m));
        const std::size_t width = images.front().size();
        const Matrix image_matrix = Matrix::from_rows(images, width);

        // Greedy pivot rows in graded-lex order give monomial representatives.
        const auto pivots = independent_rows(image_matrix);
        std::vector<Vector> basis_images;
        for (auto p : pivots) {
            d.basis.push_back(d.monomials[p]);
            basis_images.push_back(images[p]);
        }
        const Matrix basis_matrix = Matrix::from_rows(basis_images, width);
        for (const auto& img : images) {
            Vector x;
            if (!solve_row_combination(basis_matrix, img, x))
                fail(ErrorKind::InvalidInput, "algebra: image outside the span of the chosen basis");
            d.normal_forms.push_back(std::move(x));
        }

        // Degree-k slice of the ideal: left kernel of the image matrix.
        d.ideal = canonical_span(nullspace(image_matrix.transpose()), d.monomials.size());
    }

    if (degrees_[n_].basis.empty()) fail(ErrorKind::ZeroForm, "top degree vanishes: the defining data is zero");
    top_value_ = image(n_, degrees_[n_].basis.front()).front();

    for (unsigned k = 0; k <= n_; ++k)
        for (unsigned l = 0; k + l <= n_; ++l)
            for (std::size_t i = 0; i < degrees_[k].basis.size(); ++i)
                for (std::size_t j = 0; j < degrees_[l].basis.size(); ++j) {
                    const Degree& out = degrees_[k + l];
                    const auto idx = out.index.at(add(degrees_[k].basis[i], degrees_[l].basis[j]));
                    structure_.emplace(std::array<std::size_t, 4>{k, i, l, j}, out.normal_forms[idx]);
                }

    for (unsigned k = 0; k <= n_; ++k) {
        const auto& left = degrees_[k].basis;
        const auto& right = degrees_[n_ - k].basis;
        Matrix b(left.size(), right.size());
        for (std::size_t i = 0; i < left.size(); ++i)
            for (std::size_t j = 0; j < right.size(); ++j)
                b(i, j) = structure_.at({k, i, n_ - k, j}).front() * top_value_;
        pairings_.push_back(std::move(b));
    }
}

std::vector<std::size_t> GradedPDAlgebra::hilbert() const {
    std::vector<std::size_t> h;
    for (const auto& d : degrees_) h.push_back(d.basis.size());
    return h;
}

AlgebraElement GradedPDAlgebra::zero(unsigned degree) const {
    const std::size_t dim = degree <= n_ ? degrees_[degree].basis.size() : 0;
    return {degree, Vector(dim)};
}

AlgebraElement GradedPDAlgebra::one() const { return class_of(Monomial(s_, 0)); }

AlgebraElement GradedPDAlgebra::class_of(const Monomial& m) const {
    require(m.size() == s_, "monomial has the wrong number of symbols");
    const unsigned k = total_degree(m);
    if (k > n_) return zero(k);
    const Degree& d = degrees_[k];
    return {k, d.normal_forms[d.index.at(m)]};
}

AlgebraElement GradedPDAlgebra::linear_class(const Vector& x) const {
    require(x.size() == s_, "one coefficient per generator expected");
    AlgebraElement out = zero(1);
    if (n_ == 0) return out;
    for (std::size_t i = 0; i < s_; ++i) {
        Monomial e(s_, 0);
        e[i] = 1;
        const auto c = class_of(e);
        for (std::size_t j = 0; j < out.coords.size(); ++j) out.coords[j] += x[i] * c.coords[j];
    }
    return out;
}

AlgebraElement GradedPDAlgebra::basis_element(unsigned k, std::size_t i) const {
    AlgebraElement e = zero(k);
    require(i < e.coords.size(), "basis index out of range");
    e.coords[i] = 1;
    return e;
}

const Vector& GradedPDAlgebra::structure_constant(unsigned k, std::size_t i, unsigned l, std::size_t j) const {
    auto it = structure_.find({k, i, l, j});
    require(it != structure_.end(), "no structure constant for these indices");
    return it->second;
}

AlgebraElement GradedPDAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement out = zero(a.degree + b.degree);
    if (out.degree > n_) return out;
    require(a.coords.size() == degrees_[a.degree].basis.size(), "left factor has wrong coordinate count");
    require(b.coords.size() == degrees_[b.degree].basis.size(), "right factor has wrong coordinate count");
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] == 0) continue;
        for (std::size_t j = 0; j < b.coords.size(); ++j) {
            if (b.coords[j] == 0) continue;
            const Vector& sc = structure_.at({a.degree, i, b.degree, j});
            const Rational w = a.coords[i] * b.coords[j];
            for (std::size_t m = 0; m < sc.size(); ++m) out.coords[m] += w * sc[m];
        }
    }
    return out;
}

AlgebraElement GradedPDAlgebra::power(const AlgebraElement& a, unsigned e) const {
    AlgebraElement r = one();
    for (unsigned i = 0; i < e; ++i) r = multiply(r, a);
    return r;
}

Rational GradedPDAlgebra::top_form(const AlgebraElement& a) const {
    require(a.degree == n_, "top form is defined on the top degree only");
    return a.coords.front() * top_value_;
}

GradedPDAlgebra build_algebra_from_polynomial(const HomogeneousForm& p) {
    if (p.is_zero()) fail(ErrorKind::ZeroForm, "the zero polynomial defines no algebra");
    const unsigned n = p.degree();
    const std::size_t s = p.variables();
    // Catalecticant row of D_beta: coefficients of D_beta(P) on the degree n-k monomials.
    return GradedPDAlgebra(s, n, [&p, n, s](unsigned k, const Monomial& beta) {
        const HomogeneousForm q = apply_operator({beta}, p);
        const auto targets = monomials(s, n - k);
        Vector row;
        row.reserve(targets.size());
        for (const auto& gamma : targets) row.push_back(q.coeff(gamma));
        return row;
    });
}

GradedPDAlgebra build_algebra_from_form(const SymmetricForm& f) {
    const unsigned n = f.degree();
    const std::size_t s = f.generators();
    // Row of beta in the pairing Sym^k x Sym^{n-k} -> Q: F_{beta + gamma}.
    return GradedPDAlgebra(s, n, [&f, n, s](unsigned k, const Monomial& beta) {
        const auto targets = monomials(s, n - k);
        Vector row;
        row.reserve(targets.size());
        for (const auto& gamma : targets) row.push_back(f.value(add(beta, gamma)));
        return row;
    });
}

bool check_equivalence(const GradedPDAlgebra& from_polynomial, const GradedPDAlgebra& from_form) {
    if (from_polynomial.generators() != from_form.generators() ||
        from_polynomial.top_degree() != from_form.top_degree())
        fail(ErrorKind::ShapeMismatch, "algebras have different generator counts or top degrees");
    for (unsigned k = 0; k <= from_polynomial.top_degree(); ++k)
        if (!(from_polynomial.ideal_slice(k) == from_form.ideal_slice(k))) return false;
    return true;
}

Rational self_intersection(const GradedPDAlgebra& alg, const AlgebraElement& d) {
    require(d.degree == 1, "self-intersection takes a degree-one class");
    return alg.top_form(alg.power(d, alg.top_degree()));
}

DualityReport verify_poincare_duality(const GradedPDAlgebra& alg) {
    DualityReport r;
    const auto h = alg.hilbert();
    const unsigned n = alg.top_degree();
    r.unit_degree_zero = h.front() == 1;
    r.unit_top_degree = h.back() == 1;
    r.palindromic = true;
    for (unsigned k = 0; k <= n; ++k)
        if (h[k] != h[n - k]) r.palindromic = false;

    r.pairings_invertible = true;
    for (unsigned k = 0; k <= n; ++k) {
        const Matrix& b = alg.pairing(k);
        if (b.rows() != b.cols() || determinant(b) == 0) r.pairings_invertible = false;
    }

    // Rank of A_1 x A_{k-1} -> A_k must be dim A_k.
    r.generated_in_degree_one = true;
    for (unsigned k = 2; k <= n; ++k) {
        std::vector<Vector> products;
        for (std::size_t i = 0; i < h[1]; ++i)
            for (std::size_t j = 0; j < h[k - 1]; ++j) products.push_back(alg.structure_constant(1, i, k - 1, j));
        const std::size_t rk = products.empty() ? 0 : rank(Matrix::from_rows(products, h[k]));
        if (rk != h[k]) r.generated_in_degree_one = false;
    }
    return r;
}

}  // namespace rci
