#include "oracles.hpp"

#include "rci/error.hpp"
#include "rci/laurent.hpp"

#include <doctest.h>

#include <random>

using namespace rci;

namespace {

std::vector<Exponent> dense_support(int d) {
    std::vector<Exponent> s;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) s.push_back({i, j});
    return s;
}

std::vector<Exponent> random_support(std::mt19937_64& rng, std::size_t n, std::size_t count, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<Exponent> s;
    for (std::size_t c = 0; c < count; ++c) {
        Exponent e(n);
        for (auto& x : e) x = d(rng);
        s.push_back(e);
    }
    return s;
}

Rational planar_mv(const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
    std::vector<std::pair<Rational, Rational>> ra, rb;
    for (const auto& e : a) ra.push_back({Rational(e[0]), Rational(e[1])});
    for (const auto& e : b) rb.push_back({Rational(e[0]), Rational(e[1])});
    return oracle::planar_mixed_volume(ra, rb);
}

}  // namespace

TEST_CASE("Newton polytope of a Laurent polynomial") {
    LaurentPolynomial f(2, {{{0, 0}, 1}, {{1, 0}, 2}, {{0, 1}, -3}, {{1, 1}, 5}});
    VPolytope sq({RationalVector({0, 0}), RationalVector({1, 0}), RationalVector({0, 1}), RationalVector({1, 1})});
    CHECK(newton_polytope(f) == sq);

    LaurentPolynomial g(1, {{{-2}, 1}, {{0}, 7}, {{3}, 1}});
    CHECK(newton_polytope(g) == VPolytope({RationalVector({-2}), RationalVector({3})}));

    LaurentPolynomial h(2, {{{0, 0}, 1}, {{1, 1}, 0}, {{2, 0}, 1}});
    CHECK(h.support() == std::vector<Exponent>{{0, 0}, {2, 0}});
}

TEST_CASE("Laurent polynomial errors") {
    CHECK_THROWS_AS(LaurentPolynomial(1, {{{0}, 0}}), Error);
    CHECK_THROWS_AS(LaurentPolynomial(2, {{{0}, 1}}), Error);
    CHECK_THROWS_AS(SupportSystem(2, {{{0, 0}, {1, 0}}}), Error);
    CHECK_THROWS_AS(SupportSystem(2, {{{0, 0}}, {}}), Error);
    CHECK_THROWS_AS(SupportSystem(2, {{{0, 0}, {1}}, {{0, 0}}}), Error);
}

TEST_CASE("BKK numbers of standard systems") {
    CHECK(bkk_number(SupportSystem(1, {{{0}, {1}}})) == 1);
    CHECK(bkk_number(SupportSystem(2, {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}})) == 2);
    for (int d1 = 1; d1 <= 4; ++d1)
        for (int d2 = 1; d2 <= 4; ++d2)
            CHECK(bkk_number(SupportSystem(2, {dense_support(d1), dense_support(d2)})) == d1 * d2);
    // A support with no room for a root in the torus.
    CHECK(bkk_number(SupportSystem(1, {{{4}}})) == 0);
    CHECK(bkk_number(SupportSystem(2, {{{0, 0}, {1, 0}}, {{0, 0}, {2, 0}}})) == 0);
}

TEST_CASE("BKK number from polynomials uses their supports") {
    LaurentPolynomial f(2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}});
    LaurentPolynomial g(2, {{{0, 0}, 2}, {{2, 0}, -1}, {{0, 2}, 1}});
    CHECK(bkk_number(SupportSystem::from_polynomials({f, g})) == 2);
    CHECK_THROWS_AS(SupportSystem::from_polynomials({f}), Error);
}

TEST_CASE("Bezout numbers for dense three-variable systems") {
    auto dense3 = [](int d) {
        std::vector<Exponent> s;
        for (int i = 0; i <= d; ++i)
            for (int j = 0; i + j <= d; ++j)
                for (int k = 0; i + j + k <= d; ++k) s.push_back({i, j, k});
        return s;
    };
    CHECK(bkk_number(SupportSystem(3, {dense3(1), dense3(2), dense3(2)})) == 4);
    CHECK(bkk_number(SupportSystem(3, {dense3(2), dense3(2), dense3(3)})) == 12);
}

TEST_CASE("univariate oracle") {
    CHECK(oracle_roots_univariate(std::vector<std::int64_t>{0, 1, 3}) == 3);
    CHECK(oracle_roots_univariate(std::vector<std::int64_t>{-1, 0, 1}) == 2);
    CHECK(oracle_roots_univariate(std::vector<std::int64_t>{5}) == 0);
    CHECK(oracle_roots_univariate(std::vector<std::int64_t>{-3, 4}) == 7);
    CHECK_THROWS_AS(oracle_roots_univariate(std::vector<std::int64_t>{}), Error);
}

TEST_CASE("bivariate oracle") {
    CHECK(oracle_roots_bivariate({{0, 0}, {1, 0}, {0, 1}}, {{0, 0}, {1, 0}, {0, 1}}) == 1);
    std::vector<Exponent> sq{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    CHECK(oracle_roots_bivariate(sq, sq) == 2);
    CHECK(oracle_roots_bivariate(dense_support(1), dense_support(2)) == 2);
    CHECK(oracle_roots_bivariate(dense_support(2), dense_support(2)) == 4);
    // Symmetric under (x, y) -> (-x, -y): needs the automorphism retry to separate roots.
    CHECK(oracle_roots_bivariate({{0, 0}, {2, 0}, {0, 2}}, {{0, 0}, {1, 1}, {2, 0}}) ==
          bkk_number(SupportSystem(2, {{{0, 0}, {2, 0}, {0, 2}}, {{0, 0}, {1, 1}, {2, 0}}})));
}

TEST_CASE("bivariate oracle on supports spanning a proper sublattice") {
    CHECK(oracle_roots_bivariate({{0, 0}, {2, 0}}, {{0, 0}, {0, 2}}) == 4);
    CHECK(oracle_roots_bivariate({{0, 0}, {2, 0}, {0, 2}}, {{0, 0}, {2, 2}, {4, 0}}) ==
          bkk_number(SupportSystem(2, {{{0, 0}, {2, 0}, {0, 2}}, {{0, 0}, {2, 2}, {4, 0}}})));
    CHECK(oracle_roots_bivariate({{1, 1}, {3, 1}, {1, 4}}, {{0, 0}, {2, 3}}) ==
          bkk_number(SupportSystem(2, {{{1, 1}, {3, 1}, {1, 4}}, {{0, 0}, {2, 3}}})));
    // Both supports on one line: no isolated solutions.
    CHECK(oracle_roots_bivariate({{0, 0}, {1, 1}}, {{0, 0}, {2, 2}}) == 0);
}

TEST_CASE("bivariate oracle gives up after its redraw budget") {
    OracleOptions opt;
    opt.retries = 1;
    try {
        oracle_roots_bivariate({{0, 0}, {1, 0}}, {{0, 0}, {0, 1}, {0, 2}}, opt);
        FAIL("expected RetriesExhausted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RetriesExhausted);
    }
    opt.retries = 2;
    CHECK(oracle_roots_bivariate({{0, 0}, {1, 0}}, {{0, 0}, {0, 1}, {0, 2}}, opt) == 2);
    opt.retries = 0;
    CHECK_THROWS_AS(oracle_roots_bivariate({{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}, opt), Error);
}

TEST_CASE("oracle is deterministic in the seed") {
    OracleOptions opt;
    opt.seed = 7;
    auto s = dense_support(2);
    CHECK(oracle_roots_bivariate(s, s, opt) == oracle_roots_bivariate(s, s, opt));
}

TEST_CASE("Sylvester resultant") {
    // f = y - x, g = y - 1: resultant (in y) vanishes at x = 1.
    std::vector<UPoly> f{UPoly({0, -1}), UPoly({1})};
    std::vector<UPoly> g{UPoly({-1}), UPoly({1})};
    UPoly r = sylvester_resultant(f, g);
    CHECK(r.degree() == 1);
    CHECK(r(Rational(1)) == 0);
    // f = y^2 - x, g = y - 1: x - 1 up to sign.
    std::vector<UPoly> f2{UPoly({0, -1}), UPoly({0}), UPoly({1})};
    UPoly r2 = sylvester_resultant(f2, g);
    CHECK(r2.degree() == 1);
    CHECK(r2(Rational(1)) == 0);
    CHECK(r2(Rational(0)) != 0);
}

TEST_CASE("BKK agrees with the univariate and planar oracles") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        auto s = random_support(rng, 1, 1 + trial % 5, -3, 3);
        std::vector<std::int64_t> flat;
        std::int64_t lo = s[0][0], hi = s[0][0];
        for (const auto& e : s) {
            flat.push_back(e[0]);
            lo = std::min(lo, e[0]);
            hi = std::max(hi, e[0]);
        }
        const Integer expected = hi - lo;
        CHECK(bkk_number(SupportSystem(1, {s})) == expected);
        CHECK(oracle_roots_univariate(flat) == expected);
    }
    for (int trial = 0; trial < 12; ++trial) {
        auto a = random_support(rng, 2, 2 + trial % 4, -2, 2);
        auto b = random_support(rng, 2, 2 + (trial / 4) % 4, -2, 2);
        const Integer v = bkk_number(SupportSystem(2, {a, b}));
        CHECK(Rational(v) == 2 * planar_mv(a, b));
        CHECK(oracle_roots_bivariate(a, b) == v);
    }
}

TEST_CASE("BKK invariance and monotonicity") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 15; ++trial) {
        auto a = random_support(rng, 2, 3, -2, 2);
        auto b = random_support(rng, 2, 3, -2, 2);
        const Integer v = bkk_number(SupportSystem(2, {a, b}));

        auto ta = a;
        for (auto& e : ta) {
            e[0] += 3;
            e[1] -= 1;
        }
        CHECK(bkk_number(SupportSystem(2, {ta, b})) == v);

        auto shear = [](std::vector<Exponent> s) {
            for (auto& e : s) e = {e[0] + 2 * e[1], e[1]};
            return s;
        };
        CHECK(bkk_number(SupportSystem(2, {shear(a), shear(b)})) == v);

        auto bigger = a;
        bigger.push_back(random_support(rng, 2, 1, -2, 2)[0]);
        CHECK(bkk_number(SupportSystem(2, {bigger, b})) >= v);
    }
}
