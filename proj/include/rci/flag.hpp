#pragma once

#include "rci/polytope.hpp"
#include "rci/rational.hpp"

#include <cstdint>
#include <vector>

namespace rci {

/// Highest weight lambda_1 >= ... >= lambda_m of GL(m).
class DominantWeight {
public:
    /// Throws NotDominant unless lambda is weakly decreasing; requires m >= 1.
    explicit DominantWeight(std::vector<std::int64_t> lambda);

    std::size_t m() const { return lambda_.size(); }
    const std::vector<std::int64_t>& lambda() const { return lambda_; }
    bool strictly_dominant() const;
    /// N = m(m-1)/2, the dimension of the flag variety.
    std::size_t flag_dimension() const { return m() * (m() - 1) / 2; }

private:
    std::vector<std::int64_t> lambda_;
};

/// Index of the free entry x_{row,i} (1 <= i <= row < m) in the GT coordinate vector.
/// Rows are listed from m-1 down to 1.
std::size_t gt_coordinate(std::size_t m, std::size_t row, std::size_t i);

/// Interlacing inequalities x_{r+1,i} >= x_{r,i} >= x_{r+1,i+1} with the top row fixed to lambda.
HPolytope gt_hrep(const DominantWeight& w);

/// N! vol(GT(lambda)). Throws NotAmple unless lambda is strictly dominant.
Integer flag_degree_via_gt(const DominantWeight& w);

/// N! prod_{i<j} (lambda_i - lambda_j) / (j - i). Throws NotAmple unless strictly dominant.
Integer flag_degree_via_weyl(const DominantWeight& w);

/// Integral GT patterns with top row lambda.
Integer count_lattice_points(const DominantWeight& w);

/// prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i)
Integer weyl_dim(const DominantWeight& w);

}  // namespace rci
