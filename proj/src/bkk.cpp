#include "rci/error.hpp"
#include "rci/laurent.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace rci {

namespace {

std::mt19937_64 trial_stream(std::uint64_t seed, unsigned trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    return std::mt19937_64(seq);
}

std::int64_t draw_coefficient(std::mt19937_64& rng, std::int64_t bound) {
    std::uniform_int_distribution<std::int64_t> dist(1, 2 * bound);
    std::int64_t v = dist(rng);
    return v <= bound ? v - bound - 1 : v - bound;  // [-bound, -1] or [1, bound]
}

// Most frequent count; ties go to the larger count since degenerate draws only lose roots.
std::int64_t modal(const std::vector<std::int64_t>& counts) {
    std::map<std::int64_t, unsigned> freq;
    for (auto c : counts) ++freq[c];
    std::int64_t best = 0;
    unsigned best_n = 0;
    for (auto [c, k] : freq)
        if (k >= best_n) {
            best = c;
            best_n = k;
        }
    return best;
}

void check_options(const OracleOptions& opt) {
    require(opt.trials > 0, "at least one trial is required");
    require(opt.retries > 0, "at least one draw per trial is required");
    require(opt.coeff_bound > 0, "coefficient bound must be positive");
}

// k = 0, 1, -1, 2, -2, ...
std::int64_t shear_for_attempt(unsigned attempt) {
    std::int64_t k = (attempt + 1) / 2;
    return attempt % 2 ? k : -k;
}

// Coefficients of y^j as polynomials in x, after shifting exponents to start at 0.
std::vector<UPoly> as_poly_in_y(const std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>& terms) {
    std::int64_t min_i = terms.begin()->first.first, min_j = terms.begin()->first.second;
    std::int64_t max_j = min_j;
    for (const auto& [e, c] : terms) {
        min_i = std::min(min_i, e.first);
        min_j = std::min(min_j, e.second);
        max_j = std::max(max_j, e.second);
    }
    std::vector<UPoly> out(static_cast<std::size_t>(max_j - min_j + 1));
    for (const auto& [e, c] : terms)
        out[e.second - min_j] = out[e.second - min_j] + UPoly::monomial(c, static_cast<std::size_t>(e.first - min_i));
    return out;
}

}  // namespace

std::int64_t oracle_roots_univariate(const std::vector<std::int64_t>& support, const OracleOptions& opt) {
    check_options(opt);
    require(!support.empty(), "empty support");
    std::vector<std::int64_t> s = support;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    const std::int64_t lo = s.front();

    std::vector<std::int64_t> counts;
    for (unsigned t = 0; t < opt.trials; ++t) {
        auto rng = trial_stream(opt.seed, t);
        for (unsigned attempt = 0; attempt < opt.retries; ++attempt) {
            std::vector<Rational> c(static_cast<std::size_t>(s.back() - lo + 1));
            for (auto e : s) c[e - lo] = draw_coefficient(rng, opt.coeff_bound);
            UPoly f = strip_x_powers(UPoly(std::move(c)));
            UPoly g = gcd(f, derivative(f));
            if (g.degree() > 0) continue;
            counts.push_back(f.degree());
            break;
        }
    }
    if (counts.empty()) fail(ErrorKind::RetriesExhausted, "every univariate draw was degenerate");
    return modal(counts);
}

std::int64_t oracle_roots_univariate(const LaurentPolynomial& f, const OracleOptions& opt) {
    require(f.dim() == 1, "univariate oracle needs a polynomial in one variable");
    std::vector<std::int64_t> s;
    for (const auto& e : f.support()) s.push_back(e[0]);
    return oracle_roots_univariate(s, opt);
}

UPoly sylvester_resultant(const std::vector<UPoly>& f, const std::vector<UPoly>& g) {
    require(!f.empty() && !g.empty(), "resultant of an empty coefficient list");
    const std::size_t df = f.size() - 1, dg = g.size() - 1;
    const std::size_t size = df + dg;
    if (size == 0) return UPoly::constant(1);

    // Rows: dg shifted copies of f, then df shifted copies of g (highest y-degree first).
    std::vector<std::vector<UPoly>> m(size, std::vector<UPoly>(size));
    for (std::size_t r = 0; r < dg; ++r)
        for (std::size_t j = 0; j <= df; ++j) m[r][r + j] = f[df - j];
    for (std::size_t r = 0; r < df; ++r)
        for (std::size_t j = 0; j <= dg; ++j) m[dg + r][r + j] = g[dg - j];

    // Fraction-free (Bareiss) elimination over Q[x]; every division is exact.
    UPoly prev = UPoly::constant(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < size && m[p][k].is_zero()) ++p;
            if (p == size) return {};
            std::swap(m[p], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j)
                m[i][j] = div_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    return negate ? -m[size - 1][size - 1] : m[size - 1][size - 1];
}

namespace {

struct Lattice2 {
    // Row basis (p, q), (0, s) in Hermite form; p > 0 and s > 0 when full rank.
    std::int64_t p = 0, q = 0, s = 0;

    void insert(std::int64_t x, std::int64_t y) {
        if (x == 0) {
            s = std::gcd(s, y);
            return;
        }
        if (p == 0) {
            p = x;
            q = y;
        } else {
            // Extended Euclid on the first coordinates.
            std::int64_t a = p, b = x, ua = 1, ub = 0, va = 0, vb = 1;
            while (b != 0) {
                const std::int64_t t = a / b;
                std::swap(a, b);
                b -= t * a;
                std::swap(ua, ub);
                ub -= t * ua;
                std::swap(va, vb);
                vb -= t * va;
            }
            const std::int64_t rest = (x / a) * q - (p / a) * y;
            q = ua * q + va * y;
            p = a;
            s = std::gcd(s, rest);
        }
        if (p < 0) {
            p = -p;
            q = -q;
        }
        if (s != 0) q = ((q % s) + s) % s;
    }

    bool full_rank() const { return p != 0 && s != 0; }
    std::int64_t index() const { return p * s; }
    Exponent coordinates(const Exponent& e) const {
        const std::int64_t c1 = e[0] / p;
        return {c1, (e[1] - c1 * q) / s};
    }
};

}  // namespace

std::int64_t oracle_roots_bivariate(const std::vector<Exponent>& first_in, const std::vector<Exponent>& second_in,
                                    const OracleOptions& opt) {
    check_options(opt);
    require(!first_in.empty() && !second_in.empty(), "empty support");
    for (const auto* s : {&first_in, &second_in})
        for (const auto& e : *s) require(e.size() == 2, "bivariate oracle needs exponents in Z^2");

    // Rewrite both equations in a basis of the lattice spanned by their exponent differences.
    // The torus map attached to that basis is an index-to-one cover, so counts multiply by
    // the index; solution orbits under the cover's kernel would otherwise never separate.
    Lattice2 lattice;
    std::vector<Exponent> first, second;
    for (const auto* s : {&first_in, &second_in})
        for (const auto& e : *s) lattice.insert(e[0] - s->front()[0], e[1] - s->front()[1]);
    std::int64_t cover = 1;
    if (lattice.full_rank()) {
        cover = lattice.index();
        for (const auto& [in, out] : {std::pair{&first_in, &first}, std::pair{&second_in, &second}})
            for (const auto& e : *in) out->push_back(lattice.coordinates({e[0] - in->front()[0], e[1] - in->front()[1]}));
    } else {
        first = first_in;
        second = second_in;
    }

    std::vector<std::int64_t> counts;
    for (unsigned t = 0; t < opt.trials; ++t) {
        auto rng = trial_stream(opt.seed, t);
        for (unsigned attempt = 0; attempt < opt.retries; ++attempt) {
            // x^i y^j = u^i v^(j + k i) with u = x y^-k, v = y.
            const std::int64_t k = shear_for_attempt(attempt);
            std::vector<UPoly> polys[2];
            for (int which = 0; which < 2; ++which) {
                std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> terms;
                for (const auto& e : which == 0 ? first : second) terms[{e[0], e[1] + k * e[0]}] = 0;
                for (auto& [e, c] : terms) c = draw_coefficient(rng, opt.coeff_bound);
                polys[which] = as_poly_in_y(terms);
            }
            UPoly res = sylvester_resultant(polys[0], polys[1]);
            if (res.is_zero()) continue;
            res = make_monic(strip_x_powers(res));
            if (gcd(res, derivative(res)).degree() > 0) continue;
            counts.push_back(res.degree());
            break;
        }
    }
    if (counts.empty()) fail(ErrorKind::RetriesExhausted, "every bivariate draw was degenerate");
    return cover * modal(counts);
}

}  // namespace rci
