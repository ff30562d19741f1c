#include "doctest.h"

#include <random>

#include "litalg/exactlin.hpp"

using namespace litalg;

TEST_CASE("rank of small matrices") {
    Field f2(2);
    CHECK(rank(Matrix::identity(f2, 2)) == 2);
    CHECK(rank(Matrix::from_rows(f2, {{1, 1}})) == 1);
    CHECK(rank(Matrix(f2, 3, 3)) == 0);
}

TEST_CASE("kernel basis") {
    Field f2(2);
    auto k = kernel_basis(Matrix::from_rows(f2, {{1, 1}}));
    REQUIRE(k.cols() == 1);
    CHECK(k.col(0) == Vec{1, 1});
    CHECK(kernel_basis(Matrix::identity(f2, 3)).cols() == 0);
    auto z = kernel_basis(Matrix(f2, 2, 2));
    CHECK(z == Matrix::identity(f2, 2));
}

TEST_CASE("solve") {
    Field f2(2);
    auto b = Matrix::from_rows(f2, {{1, 0}, {1, 1}});
    auto x = solve(Matrix::identity(f2, 2), b);
    REQUIRE(x);
    CHECK(*x == b);
    CHECK_FALSE(solve(Matrix(f2, 2, 2), Matrix::from_rows(f2, {{1}, {0}})));
    auto y = solve(Matrix::from_rows(f2, {{1, 1}}), Matrix::from_rows(f2, {{0}}));
    REQUIRE(y);
    CHECK(y->col(0) == Vec{0, 0});
    CHECK_THROWS_AS(solve(Matrix::identity(f2, 2), Matrix(f2, 3, 1)), InvalidInput);
}

TEST_CASE("field validation") {
    CHECK_THROWS_AS(Field(4), InvalidInput);
    CHECK_THROWS_AS(Field(1), InvalidInput);
    Field f7(7);
    for (Scalar a = 1; a < 7; ++a)
        CHECK(f7.mul(a, f7.inv(a)) == 1);
}

TEST_CASE("random rank-nullity, transpose rank and solve consistency") {
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        Field f(p);
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t r = rng() % 7 + 1, c = rng() % 7 + 1;
            Matrix m(f, r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    m(i, j) = rng() % p;
            auto k = kernel_basis(m);
            CHECK(rank(m) == rank(m.transpose()));
            CHECK(k.cols() + rank(m) == c);
            CHECK((m * k).is_zero());
            Matrix b(f, r, 1);
            for (std::size_t i = 0; i < r; ++i)
                b(i, 0) = rng() % p;
            if (auto x = solve(m, b))
                CHECK(m * *x == b);
            Matrix im = image_basis(m);
            CHECK(im.cols() == rank(m));
            if (im.cols())
                CHECK(left_inverse(im) * im == Matrix::identity(f, im.cols()));
        }
    }
}

TEST_CASE("incremental basis") {
    Field f3(3);
    IncrementalBasis b(f3, 3);
    CHECK(b.add({1, 2, 0}));
    CHECK(b.add({0, 1, 1}));
    CHECK_FALSE(b.add({1, 0, 1}));
    CHECK(b.contains({2, 1, 0}));
    CHECK(b.size() == 2);
}
