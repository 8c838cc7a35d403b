#include "oracles.hpp"

#include "rci/algebra.hpp"
#include "rci/error.hpp"
#include "rci/forms.hpp"

#include <doctest.h>

#include <random>

using namespace rci;

namespace {

RationalVector pt(std::initializer_list<Rational> c) { return RationalVector(c); }

VPolytope triangle() { return VPolytope({pt({0, 0}), pt({1, 0}), pt({0, 1})}); }
VPolytope seg_x() { return VPolytope({pt({0, 0}), pt({1, 0})}); }
VPolytope seg_y() { return VPolytope({pt({0, 0}), pt({0, 1})}); }

HomogeneousForm half_x_squared() { return HomogeneousForm(1, 2, {{{2}, Rational(1, 2)}}); }
HomogeneousForm xy() { return HomogeneousForm(2, 2, {{{1, 1}, 1}}); }

// Minkowski combination sum x_i K_i for nonnegative integers x_i.
VPolytope combination(const std::vector<VPolytope>& ks, const std::vector<int>& x) {
    VPolytope acc = scale(ks[0], x[0]);
    for (std::size_t i = 1; i < ks.size(); ++i) acc = minkowski_sum(acc, scale(ks[i], x[i]));
    return acc;
}

struct Family {
    std::vector<VPolytope> generators;
    std::size_t n;
};

// Random lattice polytopes; the first is full-dimensional so the tensor cannot vanish.
Family random_family(std::mt19937_64& rng, std::size_t s, std::size_t n) {
    Family f{{}, n};
    f.generators.push_back(oracle::random_full_polytope(rng, n, n + 2, 0, 2));
    for (std::size_t i = 1; i < s; ++i) f.generators.emplace_back(oracle::random_points(rng, n, 1 + (i + n) % 4, 0, 2));
    return f;
}

}  // namespace

TEST_CASE("monomial enumeration") {
    CHECK(monomials(2, 2) == std::vector<Monomial>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(monomials(3, 0) == std::vector<Monomial>{{0, 0, 0}});
    CHECK(monomials(3, 3).size() == 10);
    CHECK(multinomial({2, 1}) == 3);
    CHECK(monomial_factorial({2, 3}) == 12);
}

TEST_CASE("intersection tensor examples") {
    SymmetricForm t = mixed_volume_tensor({triangle()});
    CHECK(t.degree() == 2);
    CHECK(t.value({2}) == 1);

    SymmetricForm s = mixed_volume_tensor({seg_x(), seg_y()});
    CHECK(s.value({2, 0}) == 0);
    CHECK(s.value({1, 1}) == 1);
    CHECK(s.value({0, 2}) == 0);

    SymmetricForm cube = mixed_volume_tensor({VPolytope({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})})});
    CHECK(cube.value({2}) == 2);

    CHECK_THROWS_AS(mixed_volume_tensor({seg_x()}), Error);
    try {
        mixed_volume_tensor({seg_x(), scale(seg_x(), 2)});
        FAIL("expected ZeroForm");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroForm);
    }
}

TEST_CASE("volume polynomial examples") {
    CHECK(volume_polynomial(mixed_volume_tensor({triangle()})) == half_x_squared());
    HomogeneousForm p = volume_polynomial(mixed_volume_tensor({seg_x(), seg_y()}));
    CHECK(p == xy());
    CHECK(p(Vector{2, 3}) == 6);
    CHECK(volume(combination({seg_x(), seg_y()}, {2, 3})) == 6);
}

TEST_CASE("form errors") {
    CHECK_THROWS_AS(SymmetricForm(2, 2, {{{1, 1}, 0}}), Error);
    CHECK_THROWS_AS(SymmetricForm(2, 2, {{{1, 0}, 1}}), Error);
    CHECK_THROWS_AS(HomogeneousForm(2, 2, {{{3, 0}, 1}}), Error);
}

TEST_CASE("constant-coefficient operators") {
    HomogeneousForm p(2, 3, {{{3, 0}, 1}, {{1, 2}, 2}});
    CHECK(apply_operator({{1, 0}}, p) == HomogeneousForm(2, 2, {{{2, 0}, 3}, {{0, 2}, 2}}));
    CHECK(apply_operator({{0, 2}}, p) == HomogeneousForm(2, 1, {{{1, 0}, 4}}));
    CHECK(apply_operator({{1, 2}}, p) == HomogeneousForm(2, 0, {{{0, 0}, 4}}));
    CHECK(apply_operator({{0, 3}}, p).is_zero());
    CHECK(apply_operator({{2, 2}}, p).is_zero());
    CHECK(apply_operator({{0, 0}}, p) == p);
}

TEST_CASE("annihilator algebra of x^2/2") {
    GradedPDAlgebra a = build_algebra_from_polynomial(half_x_squared());
    CHECK(a.hilbert() == std::vector<std::size_t>{1, 1, 1});
    CHECK(verify_poincare_duality(a).ok());
    CHECK(self_intersection(a, a.linear_class({1})) == 1);
    CHECK(self_intersection(a, a.linear_class({3})) == 9);
}

TEST_CASE("annihilator algebra of xy") {
    GradedPDAlgebra a = build_algebra_from_polynomial(xy());
    CHECK(a.hilbert() == std::vector<std::size_t>{1, 2, 1});
    DualityReport r = verify_poincare_duality(a);
    CHECK(r.unit_degree_zero);
    CHECK(r.unit_top_degree);
    CHECK(r.palindromic);
    CHECK(r.pairings_invertible);
    CHECK(r.generated_in_degree_one);
    CHECK(self_intersection(a, a.linear_class({1, 0})) == 0);
    CHECK(self_intersection(a, a.linear_class({1, 1})) == 2);

    auto x1 = a.class_of({1, 0});
    auto x2 = a.class_of({0, 1});
    CHECK(a.top_form(a.multiply(x1, x2)) == 1);
    CHECK(a.multiply(x1, x1) == a.zero(2));
    CHECK(a.multiply(a.one(), x2) == x2);
    CHECK(a.multiply(a.multiply(x1, x2), x1).degree == 3);
    CHECK(a.top_form(a.class_of({1, 1})) == 1);
}

TEST_CASE("x^2 in two variables kills the second derivative direction") {
    GradedPDAlgebra a = build_algebra_from_polynomial(HomogeneousForm(2, 2, {{{2, 0}, 1}}));
    CHECK(a.hilbert() == std::vector<std::size_t>{1, 1, 1});
    // Degree-1 ideal is spanned by d_y.
    const Matrix& i1 = a.ideal_slice(1);
    REQUIRE(i1.rows() == 1);
    CHECK(i1.row(0) == Vector{0, 1});
    CHECK(a.class_of({0, 1}) == a.zero(1));
    CHECK(verify_poincare_duality(a).ok());
}

TEST_CASE("zero polynomial is rejected") {
    try {
        build_algebra_from_polynomial(HomogeneousForm(2, 2, {}));
        FAIL("expected ZeroForm");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroForm);
    }
}

TEST_CASE("equivalence of the two constructions") {
    SymmetricForm f = mixed_volume_tensor({seg_x(), seg_y()});
    GradedPDAlgebra from_form = build_algebra_from_form(f);
    CHECK(check_equivalence(build_algebra_from_polynomial(xy()), from_form));

    SymmetricForm g = mixed_volume_tensor({triangle(), triangle()});
    CHECK_FALSE(check_equivalence(build_algebra_from_polynomial(xy()), build_algebra_from_form(g)));

    try {
        check_equivalence(build_algebra_from_polynomial(half_x_squared()), from_form);
        FAIL("expected ShapeMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ShapeMismatch);
    }
}

TEST_CASE("random families: normalization, equivalence and self-intersection") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> coef(0, 3);
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t s = 1; s <= 3; ++s) {
            CAPTURE(n);
            CAPTURE(s);
            Family fam = random_family(rng, s, n);
            SymmetricForm f = mixed_volume_tensor(fam.generators);
            HomogeneousForm p = volume_polynomial(f);

            for (const auto& alpha : monomials(s, static_cast<unsigned>(n))) {
                HomogeneousForm d = apply_operator({alpha}, p);
                CHECK(d.coeff(Monomial(s, 0)) == f.value(alpha));
            }

            GradedPDAlgebra ap = build_algebra_from_polynomial(p);
            GradedPDAlgebra af = build_algebra_from_form(f);
            CHECK(check_equivalence(ap, af));
            CHECK(ap.hilbert() == af.hilbert());
            CHECK(verify_poincare_duality(ap).ok());

            const Rational nfact(factorial(static_cast<unsigned>(n)));
            for (int trial = 0; trial < 3; ++trial) {
                std::vector<int> x(s);
                Vector xv(s);
                for (std::size_t i = 0; i < s; ++i) xv[i] = x[i] = coef(rng);
                const Rational vol = volume(combination(fam.generators, x));
                CHECK(p(xv) == vol);
                CHECK(f.diagonal(xv) == nfact * vol);
                CHECK(self_intersection(ap, ap.linear_class(xv)) == nfact * vol);
                CHECK(self_intersection(af, af.linear_class(xv)) == nfact * vol);
            }
        }
}
