#include "rci/error.hpp"
#include "rci/flag.hpp"

#include <functional>

namespace rci {

DominantWeight::DominantWeight(std::vector<std::int64_t> lambda) : lambda_(std::move(lambda)) {
    require(!lambda_.empty(), "a weight needs at least one entry");
    for (std::size_t i = 0; i + 1 < lambda_.size(); ++i)
        if (lambda_[i] < lambda_[i + 1]) fail(ErrorKind::NotDominant, "weight is not weakly decreasing");
}

bool DominantWeight::strictly_dominant() const {
    for (std::size_t i = 0; i + 1 < lambda_.size(); ++i)
        if (lambda_[i] == lambda_[i + 1]) return false;
    return true;
}

std::size_t gt_coordinate(std::size_t m, std::size_t row, std::size_t i) {
    require(row >= 1 && row < m && i >= 1 && i <= row, "GT index out of range");
    // Rows m-1, m-2, ..., row+1 come first.
    std::size_t offset = 0;
    for (std::size_t r = m - 1; r > row; --r) offset += r;
    return offset + (i - 1);
}

HPolytope gt_hrep(const DominantWeight& w) {
    const std::size_t m = w.m();
    require(m >= 2, "GT polytopes need m >= 2");
    const std::size_t dim = w.flag_dimension();
    std::vector<Inequality> ineqs;
    // upper - lower >= 0 where either side may be a fixed top-row entry.
    auto add = [&](std::size_t row, std::size_t i, bool entry_is_upper, std::size_t top_row, std::size_t j) {
        Inequality q{RationalVector(dim), 0};
        const Rational sign = entry_is_upper ? -1 : 1;  // entry <= other  or  entry >= other
        q.normal[gt_coordinate(m, row, i)] = sign;
        if (top_row == m) {
            q.rhs = sign * Rational(w.lambda()[j - 1]);
        } else {
            q.normal[gt_coordinate(m, top_row, j)] = -sign;
        }
        ineqs.push_back(std::move(q));
    };
    for (std::size_t r = m - 1; r >= 1; --r) {
        for (std::size_t i = 1; i <= r; ++i) {
            add(r, i, false, r + 1, i);     // x_{r,i} <= x_{r+1,i}
            add(r, i, true, r + 1, i + 1);  // x_{r,i} >= x_{r+1,i+1}
        }
    }
    return HPolytope(dim, std::move(ineqs));
}

Integer flag_degree_via_gt(const DominantWeight& w) {
    if (!w.strictly_dominant()) fail(ErrorKind::NotAmple, "degree formula needs a strictly dominant weight");
    const std::size_t n = w.flag_dimension();
    if (n == 0) return 1;
    const Rational deg = Rational(factorial(static_cast<unsigned>(n))) * volume(hrep_to_vrep(gt_hrep(w)));
    if (!is_integer(deg)) fail(ErrorKind::NonIntegerDegree, "N! vol(GT) is not an integer: " + to_string(deg));
    return numerator(deg);
}

Integer flag_degree_via_weyl(const DominantWeight& w) {
    if (!w.strictly_dominant()) fail(ErrorKind::NotAmple, "degree formula needs a strictly dominant weight");
    const auto& l = w.lambda();
    Rational prod = 1;
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j)
            prod *= Rational(l[i] - l[j], static_cast<std::int64_t>(j - i));
    prod *= Rational(factorial(static_cast<unsigned>(w.flag_dimension())));
    if (!is_integer(prod)) fail(ErrorKind::NonIntegerDegree, "Weyl leading term is not an integer: " + to_string(prod));
    return numerator(prod);
}

Integer count_lattice_points(const DominantWeight& w) {
    // Row-by-row: every integral row interlacing the previous one.
    std::function<Integer(const std::vector<std::int64_t>&)> below = [&](const std::vector<std::int64_t>& upper) {
        if (upper.size() == 1) return Integer(1);
        Integer total = 0;
        std::vector<std::int64_t> row(upper.size() - 1);
        std::function<void(std::size_t)> fill = [&](std::size_t i) {
            if (i == row.size()) {
                total += below(row);
                return;
            }
            for (std::int64_t v = upper[i + 1]; v <= upper[i]; ++v) {
                row[i] = v;
                fill(i + 1);
            }
        };
        fill(0);
        return total;
    };
    return below(w.lambda());
}

Integer weyl_dim(const DominantWeight& w) {
    const auto& l = w.lambda();
    Rational prod = 1;
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j)
            prod *= Rational(l[i] - l[j] + static_cast<std::int64_t>(j - i), static_cast<std::int64_t>(j - i));
    return to_integer(prod);
}

}  // namespace rci
