#include "rci/error.hpp"
#include "rci/polytope.hpp"

#include <map>
#include <optional>

namespace rci {

Rational mixed_volume(const std::vector<VPolytope>& bodies) {
    const std::size_t n = bodies.size();
    require(n > 0, "mixed volume of an empty list");
    require(n <= 16, "mixed volume supports at most 16 bodies");
    for (const auto& k : bodies)
        require(k.ambient_dim() == n, "mixed volume needs n polytopes in R^n");

    // Partial sums indexed by subset mask, each built from a smaller one.
    std::vector<std::optional<VPolytope>> sums(std::size_t{1} << n);
    Rational total = 0;
    for (std::size_t mask = 1; mask < sums.size(); ++mask) {
        std::size_t low = 0;
        while (!(mask >> low & 1)) ++low;
        std::size_t rest = mask & (mask - 1);
        sums[mask] = rest ? minkowski_sum(*sums[rest], bodies[low]) : bodies[low];
        const int size = __builtin_popcountll(mask);
        Rational v = volume(*sums[mask]);
        if ((n - size) % 2) total -= v;
        else total += v;
    }
    return total / Rational(factorial(static_cast<unsigned>(n)));
}

Rational mixed_volume_multiplicity(const std::vector<VPolytope>& bodies,
                                   const std::vector<unsigned>& multiplicities) {
    require(!bodies.empty(), "no bodies");
    require(bodies.size() == multiplicities.size(), "one multiplicity per body");
    const std::size_t n = bodies.front().ambient_dim();
    unsigned total_mult = 0;
    for (auto m : multiplicities) total_mult += m;
    require(total_mult == n, "multiplicities must sum to the ambient dimension");
    for (const auto& k : bodies) require(k.ambient_dim() == n, "bodies in different dimensions");

    // sum over 0 != beta <= alpha of (-1)^{n-|beta|} prod C(alpha_i, beta_i) vol(sum beta_i K_i)
    const std::size_t s = bodies.size();
    std::vector<unsigned> beta(s, 0);
    Rational total = 0;
    while (true) {
        std::size_t i = 0;
        while (i < s && beta[i] == multiplicities[i]) beta[i++] = 0;
        if (i == s) break;
        ++beta[i];

        std::optional<VPolytope> sum;
        Integer weight = 1;
        unsigned size = 0;
        for (std::size_t j = 0; j < s; ++j) {
            if (beta[j] == 0) continue;
            weight *= binomial(multiplicities[j], beta[j]);
            size += beta[j];
            VPolytope part = scale(bodies[j], beta[j]);
            sum = sum ? minkowski_sum(*sum, part) : part;
        }
        Rational term = Rational(weight) * volume(*sum);
        if ((n - size) % 2) total -= term;
        else total += term;
    }
    return total;
}

}  // namespace rci
