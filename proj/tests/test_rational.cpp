#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "pav/linalg.hpp"
#include "pav/rational.hpp"
#include "support/oracle.hpp"

using pav::BigInt;
using pav::Rational;

TEST_CASE("binomial values and Pascal identity") {
    CHECK(pav::big_binomial(8, 2) == 28);
    CHECK(pav::big_binomial(7, 2) == 21);
    CHECK(pav::big_binomial(0, 0) == 1);
    CHECK(pav::big_binomial(5, 6) == 0);
    CHECK(pav::big_binomial(52, 26) == BigInt("495918532948104"));
    for (int n = 1; n <= 30; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(pav::big_binomial(n, k) == pav::big_binomial(n - 1, k - 1) + pav::big_binomial(n - 1, k));
}

TEST_CASE("rational formatting") {
    CHECK(pav::fraction_string(Rational(336, 39)) == "112/13");
    CHECK(pav::fraction_string(Rational(78, 13)) == "6");
    CHECK(pav::fraction_string(Rational(-3, 6)) == "-1/2");
    CHECK(pav::fraction_string(Rational(0)) == "0");
    CHECK(pav::decimal_string(Rational(112, 13)) == "8.61538");
    CHECK(pav::decimal_string(Rational(6)) == "6");
}

TEST_CASE("fraction-free rank on known matrices") {
    using pav::IntMatrix;
    CHECK(pav::bareiss_rank(IntMatrix{}) == 0);
    CHECK(pav::bareiss_rank({{0, 0}, {0, 0}}) == 0);
    CHECK(pav::bareiss_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(pav::bareiss_rank({{1, 2}, {3, 4}}) == 2);
    CHECK(pav::bareiss_rank({{2, 0, 1}, {0, 3, 1}, {2, 3, 2}}) == 2);  // row3 = row1 + row2
    // Vandermonde rows are independent
    IntMatrix vdm;
    for (int t = 1; t <= 5; ++t) vdm.push_back({1, t, t * t, t * t * t, t * t * t * t});
    CHECK(pav::bareiss_rank(vdm) == 5);
}

TEST_CASE("fraction-free rank agrees with rational elimination on random matrices") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
        for (auto& row : m)
            for (auto& x : row) {
                int num = static_cast<int>(rng() % 9) - 4;
                int den = 1 + static_cast<int>(rng() % 4);
                x = Rational(num, den);
            }
        CHECK(pav::rational_matrix_rank(m) == oracle::gauss_rank(m));
    }
}

TEST_CASE("fraction-free rank survives rank-deficient stacking") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        // build a matrix whose rows are random combinations of 2 generators
        std::vector<std::vector<Rational>> gen(2, std::vector<Rational>(5));
        for (auto& row : gen)
            for (auto& x : row) x = Rational(static_cast<int>(rng() % 11) - 5);
        std::vector<std::vector<Rational>> m;
        for (int i = 0; i < 5; ++i) {
            Rational a(static_cast<int>(rng() % 7) - 3), b(static_cast<int>(rng() % 7) - 3);
            std::vector<Rational> row(5);
            for (std::size_t j = 0; j < 5; ++j) row[j] = a * gen[0][j] + b * gen[1][j];
            m.push_back(std::move(row));
        }
        int r = pav::rational_matrix_rank(m);
        CHECK(r <= 2);
        CHECK(r == oracle::gauss_rank(m));
    }
}
