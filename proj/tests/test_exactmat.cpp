#include "locaut/mat.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace locaut;
using testutil::cofactor_det;

namespace {
const Poly X2 = Poly::monomial(1, 2);
const Poly X2_MINUS_1({-1, 0, 1});
} // namespace

TEST_CASE("rational parsing and serialization") {
    CHECK(to_string(parse_rational("3/6")) == "1/2");
    CHECK(to_string(parse_rational("-4/2")) == "-2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("determinant") {
    CHECK(det(Mat::identity(3)) == 1);
    CHECK(det(Mat{{0, 1}, {1, 0}}) == -1);
    // T_1 at n=3, alpha=2, determinant by cofactors.
    Mat t1{{1, 0, 1}, {1, 2, 0}, {0, 1, 0}};
    CHECK(det(t1) == 1);
    CHECK(cofactor_det(t1) == 1);
    CHECK_THROWS_AS(det(Mat(2, 3)), DimensionError);
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 2 + trial % 3;
        Mat m = testutil::random_matrix(rng, n, n);
        CHECK(det(m) == cofactor_det(m));
    }
}

TEST_CASE("rank") {
    CHECK(rank(Mat(3, 3)) == 0);
    Mat single = Mat::unit(3, 2, 0) + Mat::unit(3, 2, 1) * Rational(2);
    CHECK(rank(single) == 1);
    // E_{n,n-1} + alpha E_{1n} at n=3, alpha=1 has rank 2.
    CHECK(rank(Mat::unit(3, 2, 1) + Mat::unit(3, 0, 2)) == 2);
}

TEST_CASE("inverse") {
    Mat rot{{0, 1}, {-1, 0}};
    CHECK(inverse(rot) == Mat{{0, -1}, {1, 0}});
    Mat t2{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
    CHECK(inverse(t2) == t2);
    CHECK_THROWS_AS(inverse(Mat{{1, 1}, {1, 1}}), SingularMatrixError);
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(Mat::identity(4)).empty());
    CHECK(kernel_basis(Mat(4, 4)).size() == 4);

    // Sylvester operator T -> eT - Te on 2x2 matrices has kernel span{I, e}.
    Mat e{{0, 1}, {0, 0}};
    Mat op(4, 4);
    for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q) {
            Mat unit = Mat::unit(2, p, q);
            Mat image = e * unit - unit * e;
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    op.at(i * 2 + j, p * 2 + q) = image.at(i, j);
        }
    auto kernel = kernel_basis(op);
    REQUIRE(kernel.size() == 2);
    for (const auto& v : kernel) {
        Mat t{{v[0], v[1]}, {v[2], v[3]}};
        CHECK(e * t == t * e);
    }
}

TEST_CASE("linear solve") {
    Mat m{{1, 2}, {3, 4}};
    std::vector<Rational> x;
    REQUIRE(solve(m, {Rational(5), Rational(11)}, x));
    CHECK(x == std::vector<Rational>{1, 2});
    CHECK_FALSE(solve(Mat{{1, 1}, {1, 1}}, {Rational(0), Rational(1)}, x));
}

TEST_CASE("characteristic polynomial") {
    CHECK(charpoly(Mat{{1, 1}, {0, -1}}) == X2_MINUS_1); // e + h
    CHECK(charpoly(Mat{{0, 1}, {1, 0}}) == X2_MINUS_1);  // e + f
    CHECK(charpoly(Mat(2, 2)) == X2);
    CHECK(charpoly(Mat{{1, 1}, {0, -1}}).str() == "x^2 - 1");
}

TEST_CASE("invariant factors") {
    CHECK(invariant_factors(Mat(2, 2)) == std::vector<Poly>{Poly::monomial(1, 1),
                                                            Poly::monomial(1, 1)});
    Mat h{{1, 0}, {0, -1}};
    CHECK(invariant_factors(h) == std::vector<Poly>{X2_MINUS_1});
    Mat e{{0, 1}, {0, 0}};
    CHECK(invariant_factors(e) == std::vector<Poly>{X2});
}

TEST_CASE("invariant factors multiply to the characteristic polynomial") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + trial % 3;
        Mat m = testutil::random_matrix(rng, n, n);
        Poly product = Poly::constant(1);
        Poly previous;
        for (const auto& f : invariant_factors(m)) {
            product = product * f;
            if (!previous.is_zero())
                CHECK(f.divisible_by(previous));
            previous = f;
        }
        CHECK(product == charpoly(m));
    }
}

TEST_CASE("similarity invariants are conjugation-invariant") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t n = 2 + trial % 3;
        Mat m = testutil::random_matrix(rng, n, n);
        Mat p = testutil::random_invertible(rng, n);
        Mat conj = inverse(p) * m * p;
        CHECK(charpoly(conj) == charpoly(m));
        CHECK(invariant_factors(conj) == invariant_factors(m));
    }
}

TEST_CASE("inverse determinant and rank-nullity") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t n = 2 + trial % 3;
        Mat p = testutil::random_invertible(rng, n);
        CHECK(det(p) * det(inverse(p)) == 1);
        Mat m = testutil::random_matrix(rng, n, n + trial % 2);
        CHECK(rank(m) + kernel_basis(m).size() == m.cols());
    }
}

TEST_CASE("polynomial division and gcd") {
    Poly a({-1, 0, 0, 0, 1}); // x^4 - 1
    Poly b({-1, 0, 1});       // x^2 - 1
    auto [q, r] = a.divmod(b);
    CHECK(r.is_zero());
    CHECK(q == Poly({1, 0, 1}));
    CHECK(poly_gcd(a, b) == b);
    CHECK(poly_gcd(Poly(), Poly()) == Poly());
}
