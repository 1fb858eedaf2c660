#include <random>

#include "doctest.h"

#include "corings/linalg.hpp"

using namespace corings;

namespace {

Matrix random_matrix(Field f, std::size_t r, std::size_t c, std::mt19937_64& rng, int range) {
    Matrix m(f, r, c);
    std::uniform_int_distribution<int> d(-range, range);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(d(rng));
    return m;
}

// Leibniz-free cofactor determinant, independent of the elimination code.
Scalar cofactor_det(const Matrix& a) {
    const std::size_t n = a.rows();
    if (n == 1) return a(0, 0);
    Scalar total = a.field().zero();
    for (std::size_t j = 0; j < n; ++j) {
        Matrix minor(a.field(), n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = a(r, c);
        Scalar term = a(0, j) * cofactor_det(minor);
        total = (j % 2) ? total - term : total + term;
    }
    return total;
}

}  // namespace

TEST_CASE("solve on small systems") {
    Field q = Field::rationals();
    auto x = solve_linear(Matrix(q, 2, 2, {1, 0, 0, 1}), Vector{Scalar(1), Scalar(0)});
    REQUIRE(x);
    CHECK(*x == Vector{Scalar(1), Scalar(0)});
    CHECK_FALSE(solve_linear(Matrix(q, 2, 2, {1, 1, 2, 2}), Vector{Scalar(1), Scalar(3)}));

    Field f3 = Field::prime(3);
    auto y = solve_linear(Matrix(f3, 2, 2, {1, 1, 0, 1}), Vector{f3.from_int(2), f3.from_int(1)});
    REQUIRE(y);
    CHECK(*y == Vector{f3.one(), f3.one()});
    CHECK_THROWS_AS(solve_linear(Matrix(q, 2, 2, {1, 0, 0, 1}), Vector{Scalar(1)}), DimensionError);
}

TEST_CASE("kernel of a 2x3 matrix") {
    Field q = Field::rationals();
    auto k = kernel_basis(Matrix(q, 2, 3, {1, 1, 0, 0, 0, 1}));
    REQUIRE(k.size() == 1);
    // Spans (1,-1,0): the only independent kernel vector up to scaling.
    CHECK(k[0][2] == Scalar(0));
    CHECK(k[0][0] == -k[0][1]);
    CHECK_FALSE(k[0][0].is_zero());
}

TEST_CASE("rank-nullity and kernel correctness on random matrices") {
    std::mt19937_64 rng(3);
    for (Field f : {Field::rationals(), Field::prime(5), Field::prime(2)}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
            Matrix a = random_matrix(f, r, c, rng, 3);
            auto k = kernel_basis(a);
            CHECK(rank(a) + k.size() == c);
            for (const auto& v : k) CHECK(is_zero(a * v));
            CHECK(independent_subset(f, k).size() == k.size());
            CHECK(rank(a) == rank(a.transpose()));
        }
    }
}

TEST_CASE("solve_linear returns genuine solutions") {
    std::mt19937_64 rng(11);
    Field q = Field::rationals();
    for (int trial = 0; trial < 50; ++trial) {
        Matrix a = random_matrix(q, 4, 3, rng, 4);
        Vector x0 = random_matrix(q, 3, 1, rng, 4).column(0);
        Vector b = a * x0;
        auto x = solve_linear(a, b);
        REQUIRE(x);
        CHECK(a * *x == b);
    }
}

TEST_CASE("determinant and inverse agree with a cofactor oracle") {
    std::mt19937_64 rng(5);
    for (Field f : {Field::rationals(), Field::prime(7)}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t n = 1 + rng() % 4;
            Matrix a = random_matrix(f, n, n, rng, 2);
            Scalar d = cofactor_det(a);
            CHECK(determinant(a) == d);
            auto inv = inverse(a);
            CHECK(inv.has_value() == !d.is_zero());
            CHECK(is_nonsingular(a) == !d.is_zero());
            if (inv) {
                CHECK((a * *inv).is_identity());
                CHECK((*inv * a).is_identity());
            }
        }
    }
}

TEST_CASE("kron follows its index convention") {
    Field q = Field::rationals();
    Matrix a(q, 2, 2, {1, 2, 3, 4}), b(q, 2, 2, {0, 1, 1, 0});
    Matrix k = kron(a, b);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c) CHECK(k(i * 2 + r, j * 2 + c) == a(i, j) * b(r, c));
}

TEST_CASE("reduce_by_rows detects row-space membership") {
    Field q = Field::rationals();
    Echelon e = echelon(Matrix(q, 2, 3, {1, 2, 0, 0, 1, 1}));
    Vector in{Scalar(1), Scalar(3), Scalar(1)};
    Vector out{Scalar(0), Scalar(0), Scalar(1)};
    CHECK(reduce_by_rows(e, in));
    CHECK_FALSE(reduce_by_rows(e, out));
}
