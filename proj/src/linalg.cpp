#include "rci/linalg.hpp"

#include "rci/error.hpp"

#include <utility>

namespace rci {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        require(r.size() == cols_, "ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == cols, "row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix rref(Matrix m, std::vector<std::size_t>* pivots) {
    std::size_t lead = 0;
    if (pivots) pivots->clear();
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t p = lead;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != lead)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead, k));
        Rational inv = 1 / m(lead, c);
        for (std::size_t k = c; k < m.cols(); ++k) m(lead, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m(r, c) == 0) continue;
            Rational f = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(lead, k);
        }
        if (pivots) pivots->push_back(c);
        ++lead;
    }
    return m;
}

std::size_t rank(const Matrix& m) {
    std::vector<std::size_t> piv;
    rref(m, &piv);
    return piv.size();
}

Rational determinant(Matrix m) {
    require(m.rows() == m.cols(), "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Rational prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(k, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Rational(-m(n - 1, n - 1));
}

std::vector<Vector> nullspace(const Matrix& m) {
    std::vector<std::size_t> piv;
    Matrix r = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::size_t> independent_rows(const Matrix& m) {
    // Incremental elimination: keep an echelon copy of accepted rows.
    std::vector<Vector> echelon;
    std::vector<std::size_t> lead_col;
    std::vector<std::size_t> accepted;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Vector v = m.row(r);
        for (std::size_t e = 0; e < echelon.size(); ++e) {
            const Rational f = v[lead_col[e]];
            if (f == 0) continue;
            for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * echelon[e][c];
        }
        std::size_t lc = 0;
        while (lc < v.size() && v[lc] == 0) ++lc;
        if (lc == v.size()) continue;
        Rational inv = 1 / v[lc];
        for (auto& x : v) x *= inv;
        for (std::size_t e = 0; e < echelon.size(); ++e) {
            const Rational f = echelon[e][lc];
            if (f == 0) continue;
            for (std::size_t c = 0; c < v.size(); ++c) echelon[e][c] -= f * v[c];
        }
        echelon.push_back(std::move(v));
        lead_col.push_back(lc);
        accepted.push_back(r);
    }
    return accepted;
}

Matrix canonical_span(const std::vector<Vector>& vectors, std::size_t dim) {
    std::vector<std::size_t> piv;
    Matrix r = rref(Matrix::from_rows(vectors, dim), &piv);
    Matrix out(piv.size(), dim);
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t c = 0; c < dim; ++c) out(i, c) = r(i, c);
    return out;
}

bool solve_row_combination(const Matrix& basis, const Vector& target, Vector& x) {
    // Columns of [basis^T | target]: solve basis^T x = target.
    const std::size_t k = basis.rows();
    const std::size_t n = basis.cols();
    require(target.size() == n, "target length mismatch");
    Matrix aug(n, k + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug(i, j) = basis(j, i);
        aug(i, k) = target[i];
    }
    std::vector<std::size_t> piv;
    Matrix r = rref(aug, &piv);
    if (!piv.empty() && piv.back() == k) return false;
    x.assign(k, Rational(0));
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, k);
    return true;
}

Rational dot(const Vector& a, const Vector& b) {
    require(a.size() == b.size(), "dot product length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace rci
