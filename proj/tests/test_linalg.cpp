#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "matcat/linalg.hpp"

#include <random>

using namespace matcat;

namespace {

Matrix rows(const Field& F, std::vector<std::vector<long>> r)
{
    std::vector<std::vector<Scalar>> s;
    for (auto& row : r) {
        s.emplace_back();
        for (auto v : row)
            s.back().push_back(F.norm(Scalar(v)));
    }
    return Matrix::from_rows(F, s, r.empty() ? 0 : r[0].size());
}

Matrix random_matrix(const Field& F, std::mt19937& rng, std::size_t r, std::size_t c)
{
    std::uniform_int_distribution<int> d(-3, 3);
    Matrix M(F, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            M(i, j) = F.norm(Scalar(d(rng) * (d(rng) > 0)));
    return M;
}

}  // namespace

TEST_CASE("solve identity")
{
    Field Q;
    auto x = solve_linear(Matrix::identity(Q, 2), rows(Q, {{3}, {4}}));
    REQUIRE(x);
    CHECK(*x == rows(Q, {{3}, {4}}));
}

TEST_CASE("solve inconsistent")
{
    Field Q;
    CHECK_FALSE(solve_linear(rows(Q, {{1, 1}, {0, 0}}), rows(Q, {{1}, {1}})));
}

TEST_CASE("solve diagonal")
{
    Field Q;
    auto x = solve_linear(rows(Q, {{2, 0}, {0, 3}}), rows(Q, {{1}, {1}}));
    REQUIRE(x);
    CHECK((*x)(0, 0) == Scalar(1, 2));
    CHECK((*x)(1, 0) == Scalar(1, 3));
}

TEST_CASE("dimension mismatch throws")
{
    Field Q;
    CHECK_THROWS_AS(solve_linear(Matrix::identity(Q, 2), Matrix(Q, 3, 1)), DimensionError);
}

TEST_CASE("kernel image cokernel trivial cases")
{
    Field Q;
    auto z = kernel_image_cokernel(Matrix(Q, 2, 2));
    CHECK(z.kernel.cols() == 2);
    CHECK(z.image.cols() == 0);
    CHECK(z.cokernel.is_identity());
    auto id = kernel_image_cokernel(Matrix::identity(Q, 2));
    CHECK(id.kernel.cols() == 0);
    CHECK(id.cokernel.rows() == 0);
}

TEST_CASE("kernel over F2 agrees with enumeration")
{
    Field F2 = Field::prime(2);
    Matrix A = rows(F2, {{1, 1}});
    auto k = kernel_image_cokernel(A);
    // oracle: enumerate F2^2
    std::vector<std::pair<int, int>> ker;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            if ((a + b) % 2 == 0 && (a || b))
                ker.push_back({a, b});
    REQUIRE(ker.size() == 1);
    REQUIRE(k.kernel.cols() == 1);
    CHECK(k.kernel(0, 0) == ker[0].first);
    CHECK(k.kernel(1, 0) == ker[0].second);
    CHECK(k.image.cols() == 1);
}

TEST_CASE("prime field arithmetic")
{
    Field F5 = Field::prime(5);
    CHECK(F5.inv(Scalar(2)) == 3);
    CHECK(F5.parse("7") == 2);
    CHECK(F5.parse("1/2") == 3);
    CHECK_THROWS_AS(Field::prime(6), InputError);
}

TEST_CASE("pushout examples")
{
    Field Q;
    auto p = pushout(rows(Q, {{1}}), rows(Q, {{0}}));
    CHECK(p.dim == 1);
    CHECK(p.f_prime * rows(Q, {{0}}) == p.g_prime * rows(Q, {{1}}));
    auto id = pushout(Matrix::identity(Q, 2), Matrix::identity(Q, 2));
    CHECK(id.dim == 2);
    auto z = pushout(Matrix(Q, 2, 0), Matrix(Q, 3, 0));
    CHECK(z.dim == 5);
}

TEST_CASE("random properties")
{
    std::mt19937 rng(7);
    for (Field F : {Field::rationals(), Field::prime(3)}) {
        for (int t = 0; t < 40; ++t) {
            std::size_t r = rng() % 8 + 1, c = rng() % 8 + 1;
            Matrix A = random_matrix(F, rng, r, c);
            auto k = kernel_image_cokernel(A);
            CHECK(k.kernel.cols() + k.image.cols() == c);
            CHECK(rank(A) + k.kernel.cols() == c);
            if (k.kernel.cols())
                CHECK((A * k.kernel).is_zero());
            if (k.cokernel.rows()) {
                CHECK((k.cokernel * A).is_zero());
                CHECK(rank(k.cokernel) == k.cokernel.rows());
            }
            Matrix x0 = random_matrix(F, rng, c, 1);
            Matrix b = A * x0;
            auto x = solve_linear(A, b);
            REQUIRE(x);
            CHECK(A * *x == b);
            CHECK(*solve_linear(A, b) == *x);
        }
    }
}

TEST_CASE("pushout universal property against random cocones")
{
    std::mt19937 rng(11);
    Field Q;
    for (int t = 0; t < 20; ++t) {
        std::size_t v = rng() % 4 + 1, w1 = rng() % 4 + 1, w2 = rng() % 4 + 1, z = rng() % 4 + 1;
        Matrix f = random_matrix(Q, rng, w1, v), g = random_matrix(Q, rng, w2, v);
        auto P = pushout(f, g);
        CHECK(P.f_prime * g == P.g_prime * f);
        // cocone: a: W1 -> Z, b: W2 -> Z with a f = b g, built from a random map out of the pushout
        Matrix u0 = random_matrix(Q, rng, z, P.dim);
        Matrix a = u0 * P.g_prime, b = u0 * P.f_prime;
        Matrix both = Matrix::hstack(Q, P.dim, {P.g_prime, P.f_prime});
        Matrix rhs = Matrix::hstack(Q, z, {a, b});
        auto u = solve_linear(both.transpose(), rhs.transpose());
        REQUIRE(u);
        CHECK(u->transpose() == u0);
        CHECK(rank(both) == P.dim);
    }
}
