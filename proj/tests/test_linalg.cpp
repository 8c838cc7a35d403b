#include "rci/error.hpp"
#include "rci/linalg.hpp"
#include "rci/upoly.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace rci;

TEST_CASE("rationals parse and print in lowest terms") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-2/4")) == "-1/2");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK(to_string(parse_rational("+7")) == "7");
}

TEST_CASE("malformed rationals are rejected") {
    for (const char* bad : {"", "1/0", "a", "1.5", "1/", "/2", "3/-4", " 1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_rational(bad), Error);
    }
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 4) == 0);
}

namespace {

Rational cofactor_det(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Rational total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        Matrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t k = 0, kk = 0; k < n; ++k)
                if (k != c) minor(r - 1, kk++) = m(r, k);
        Rational term = m(0, c) * cofactor_det(minor);
        total += c % 2 ? Rational(-term) : term;
    }
    return total;
}

}  // namespace

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 5;
        Matrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(d(rng), 1 + (r + c) % 3);
        CHECK(determinant(m) == cofactor_det(m));
    }
    CHECK(determinant(Matrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(Matrix{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("rank, nullspace and canonical spans") {
    Matrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(rank(m) == 2);
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    for (std::size_t r = 0; r < m.rows(); ++r) CHECK(dot(m.row(r), ns[0]) == 0);

    auto a = canonical_span({{1, 1, 0}, {0, 1, 1}}, 3);
    auto b = canonical_span({{1, 2, 1}, {1, 0, -1}}, 3);
    CHECK(a == b);
    CHECK_FALSE(a == canonical_span({{1, 0, 0}, {0, 1, 0}}, 3));

    CHECK(independent_rows(Matrix{{1, 0}, {2, 0}, {0, 1}, {1, 1}}) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("row combinations solve or report inconsistency") {
    Matrix basis{{1, 0, 1}, {0, 1, 1}};
    Vector x;
    REQUIRE(solve_row_combination(basis, {2, 3, 5}, x));
    CHECK(x == Vector{2, 3});
    CHECK_FALSE(solve_row_combination(basis, {1, 1, 0}, x));
}

TEST_CASE("univariate polynomial arithmetic") {
    UPoly f({-1, 0, 1});  // x^2 - 1
    UPoly g({1, 1});      // x + 1
    CHECK(div_exact(f, g) == UPoly({-1, 1}));
    CHECK(gcd(f, g) == UPoly({1, 1}));
    CHECK(derivative(f) == UPoly({0, 2}));
    CHECK(distinct_root_count(f * g) == 2);
    CHECK(distinct_root_count(UPoly({0, 0, 3})) == 1);
    CHECK(strip_x_powers(UPoly({0, 0, 3, 1})) == UPoly({3, 1}));
    CHECK(f(Rational(3)) == 8);
    CHECK_THROWS_AS(div_exact(f, UPoly({2, 1})), Error);
}
