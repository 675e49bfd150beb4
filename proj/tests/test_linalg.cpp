#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcsub/matrix.hpp"
#include "mcsub/rng.hpp"

using namespace mcsub;

namespace {

Matrix random_matrix(FieldPtr f, std::size_t rows, std::size_t cols, std::uint64_t seed) {
    Rng rng(seed);
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = FElem(rng.below(f->q()));
    return m;
}

}  // namespace

TEST_CASE("rref examples") {
    auto f2 = make_field(2, 1);
    Matrix m = Matrix::from_rows(f2, {{1, 1, 0}, {0, 1, 1}});
    auto r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.matrix == Matrix::from_rows(f2, {{1, 0, 1}, {0, 1, 1}}));

    Matrix id = Matrix::identity(f2, 4);
    CHECK(rref(id).matrix == id);

    auto f5 = make_field(5, 1);
    auto r5 = rref(Matrix::from_rows(f5, {{2, 4}, {1, 2}}));
    CHECK(r5.rank == 1);
    CHECK(r5.matrix == Matrix::from_rows(f5, {{1, 2}}));
}

TEST_CASE("rref is idempotent") {
    auto f = make_field(2, 2);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Matrix m = random_matrix(f, 5, 8, seed);
        auto r = rref(m);
        CHECK(rref(r.matrix).matrix == r.matrix);
    }
}

TEST_CASE("kernel examples") {
    auto f2 = make_field(2, 1);
    Matrix m = Matrix::from_rows(f2, {{1, 1, 1}});
    Matrix k = kernel(m);
    CHECK(k.rows() == 2);
    CHECK(k == rref(Matrix::from_rows(f2, {{1, 1, 0}, {1, 0, 1}})).matrix);

    CHECK(kernel(Matrix::identity(f2, 3)).rows() == 0);

    auto f5 = make_field(5, 1);
    Matrix m5 = Matrix::from_rows(f5, {{1, 2, 3}});
    Matrix k5 = kernel(m5);
    CHECK(k5.rows() == 2);
    for (std::size_t r = 0; r < k5.rows(); ++r) {
        auto y = m5.mul_vec(k5.row(r));
        CHECK(hamming_weight(y) == 0);
    }
}

TEST_CASE("rank-nullity and double annihilator on random matrices") {
    for (auto [p, m] : {std::pair<unsigned, unsigned>{2, 1}, {5, 1}, {2, 2}, {7, 1}}) {
        auto f = make_field(p, m);
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            Matrix mat = random_matrix(f, 4 + seed % 3, 7, seed * 31 + p);
            auto r = rref(mat);
            Matrix ker = kernel(mat);
            CHECK(r.rank + ker.rows() == mat.cols());
            // kernel rows really annihilate
            for (std::size_t i = 0; i < ker.rows(); ++i) CHECK(hamming_weight(mat.mul_vec(ker.row(i))) == 0);
            // kernel(kernel(M)) spans the row space of M
            CHECK(rref(kernel(ker)).matrix == r.matrix);
        }
    }
}

TEST_CASE("solve") {
    auto f2 = make_field(2, 1);
    SUBCASE("identity") {
        Matrix id = Matrix::identity(f2, 3);
        Vec y{1, 0, 1};
        auto x = solve(id, y);
        REQUIRE(x.has_value());
        CHECK(*x == y);
    }
    SUBCASE("free variables set to zero") {
        Matrix m = Matrix::from_rows(f2, {{1, 1}});
        auto x = solve(m, Vec{1});
        REQUIRE(x.has_value());
        CHECK(*x == Vec{1, 0});
    }
    SUBCASE("inconsistent") {
        Matrix m = Matrix::from_rows(f2, {{1}, {1}});
        CHECK_FALSE(solve(m, Vec{0, 1}).has_value());
    }
    SUBCASE("random consistent systems") {
        auto f = make_field(7, 1);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            Matrix m = random_matrix(f, 6, 4, seed + 100);
            Vec x0(4);
            Rng rng(seed);
            for (auto& v : x0) v = FElem(rng.below(7));
            auto y = m.mul_vec(x0);
            auto x = solve(m, y);
            REQUIRE(x.has_value());
            CHECK(m.mul_vec(*x) == y);
        }
    }
}

TEST_CASE("matrix product against direct dot products") {
    auto f = make_field(2, 2);
    Matrix a = random_matrix(f, 3, 5, 1), b = random_matrix(f, 5, 4, 2);
    Matrix c = a.mul(b);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            FElem acc = 0;
            for (std::size_t k = 0; k < 5; ++k) acc = f->add(acc, f->mul(a.at(i, k), b.at(k, j)));
            CHECK(c.at(i, j) == acc);
        }
}

TEST_CASE("echelon basis incremental insert matches batch rref") {
    auto f = make_field(3, 2);
    Matrix m = random_matrix(f, 12, 9, 5);
    EchelonBasis basis(f, 9);
    for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row_vec(r));
    CHECK(basis.to_matrix() == rref(m).matrix);
    CHECK(basis.rank() == rref(m).rank);
    CHECK(basis.contains(m.row_vec(3)));
}
