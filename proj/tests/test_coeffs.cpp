#include <doctest.h>

#include <random>

#include "polycoeff/coeffs.hpp"

using namespace polycoeff;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
    std::vector<BigInt> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

// Direct (l+1)-term summation of the overlying entries.
std::vector<BigInt> naive_row(std::uint64_t k, std::uint64_t l) {
    std::vector<BigInt> row{1};
    for (std::uint64_t r = 0; r < k; ++r) {
        std::vector<BigInt> next(row.size() + l);
        for (std::size_t n = 0; n < next.size(); ++n) {
            for (std::size_t i = 0; i <= l; ++i) {
                if (n >= i && n - i < row.size()) next[n] += row[n - i];
            }
        }
        row = std::move(next);
    }
    return row;
}

BigInt binomial_by_factorials(unsigned long k, unsigned long n) {
    BigInt kf, nf, rf;
    mpz_fac_ui(kf.get_mpz_t(), k);
    mpz_fac_ui(nf.get_mpz_t(), n);
    mpz_fac_ui(rf.get_mpz_t(), k - n);
    return kf / (nf * rf);
}

BigInt power(unsigned long base, unsigned long exp) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), base, exp);
    return p;
}

}  // namespace

TEST_CASE("triangle_row reproduces the published small triangles") {
    CHECK(triangle_row(3, 2).values == ints({1, 3, 6, 7, 6, 3, 1}));
    CHECK(triangle_row(3, 3).values == ints({1, 3, 6, 10, 12, 12, 10, 6, 3, 1}));
    CHECK(triangle_row(5, 0).values == ints({1}));
    CHECK(triangle_row(0, 7).values == ints({1}));
}

TEST_CASE("triangle_row(6,4)[12] matches the convolution-derived value") {
    // (1+x+x^2+x^3+x^4)^6 expanded by repeated convolution: 1751.
    const auto row = triangle_row(6, 4);
    REQUIRE(row.size() == 25);
    CHECK(row[12] == 1751);
}

TEST_CASE("coefficient") {
    CHECK(coefficient({2, 3, 3}) == 4);
    CHECK(coefficient({7, -1, 2}) == 0);
    CHECK(coefficient({7, 15, 2}) == 0);
    CHECK(coefficient({10, 20, 4}) == 856945);
    CHECK(coefficient({0, 0, 5}) == 1);
}

TEST_CASE("central_coefficient uses floor(ml/2)") {
    CHECK(central_coefficient(4, 1) == 6);
    CHECK(central_coefficient(3, 2) == 7);
    CHECK(central_coefficient(3, 3) == 12);
}

TEST_CASE("multinomial oracle") {
    CHECK(coefficient_multinomial_oracle({3, 3, 2}) == 7);
    CHECK(coefficient_multinomial_oracle({0, 0, 5}) == 1);
    CHECK(coefficient_multinomial_oracle({4, 6, 3}) == 44);
    CHECK(coefficient_multinomial_oracle({4, 6, 3}) == triangle_row(4, 3)[6]);
    CHECK(coefficient_multinomial_oracle({4, -2, 3}) == 0);

    Limits tight;
    tight.max_oracle_work = 10;
    CHECK_THROWS_AS(coefficient_multinomial_oracle({12, 24, 4}, tight), ResourceError);
}

TEST_CASE("poly_power_oracle") {
    CHECK(poly_power_oracle(2, 3).values == ints({1, 2, 3, 4, 3, 2, 1}));
    CHECK(poly_power_oracle(1, 6).values == ints({1, 1, 1, 1, 1, 1, 1}));
    CHECK(poly_power_oracle(5, 2).values == ints({1, 5, 15, 30, 45, 51, 45, 30, 15, 5, 1}));
    CHECK(poly_power_oracle(5, 2).values == triangle_row(5, 2).values);
    CHECK(poly_power_oracle(0, 3).values == ints({1}));
}

TEST_CASE("row budget is a resource error") {
    Limits limits;
    limits.max_row_entries = 100;
    CHECK_NOTHROW(triangle_row(33, 3, limits));
    CHECK_THROWS_AS(triangle_row(34, 3, limits), ResourceError);
    CHECK_THROWS_AS(coefficient({34, 0, 3}, limits), ResourceError);
    CHECK_THROWS_AS(triangle_row(std::uint64_t(1) << 40, std::uint64_t(1) << 40), ResourceError);
    CHECK_THROWS_AS(poly_power_oracle(1000, 1000, limits), ResourceError);
}

TEST_CASE("rows are symmetric, sum to (l+1)^k and are unimodal") {
    for (std::uint64_t l = 0; l <= 8; ++l) {
        for (std::uint64_t k = 0; k <= 50; ++k) {
            const auto row = triangle_row(k, l);
            REQUIRE(row.size() == k * l + 1);
            BigInt sum = 0;
            for (std::size_t n = 0; n < row.size(); ++n) {
                sum += row[n];
                REQUIRE(row[n] == row[row.size() - 1 - n]);
            }
            REQUIRE(sum == power(l + 1, k));
            CHECK(row[0] == 1);
            for (std::size_t n = 1; n <= (row.size() - 1) / 2; ++n) REQUIRE(row[n - 1] <= row[n]);
        }
    }
}

TEST_CASE("l = 1 gives binomial coefficients") {
    for (unsigned long k = 0; k <= 60; ++k) {
        const auto row = triangle_row(k, 1);
        for (unsigned long n = 0; n <= k; ++n) REQUIRE(row[n] == binomial_by_factorials(k, n));
    }
}

TEST_CASE("DP agrees with naive summation and the recurrence on sampled rows") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint64_t k = rng() % 25;
        const std::uint64_t l = rng() % 9;
        const auto row = triangle_row(k, l);
        CHECK(row.values == naive_row(k, l));
        if (k == 0) continue;
        const auto prev = triangle_row(k - 1, l);
        for (std::int64_t n = 0; n < static_cast<std::int64_t>(row.size()); ++n) {
            BigInt sum = 0;
            for (std::int64_t i = 0; i <= static_cast<std::int64_t>(l); ++i) sum += prev.at_or_zero(n - i);
            REQUIRE(row[static_cast<std::size_t>(n)] == sum);
        }
    }
}

TEST_CASE("three routes agree for k <= 8, l <= 4") {
    for (std::uint64_t k = 0; k <= 8; ++k) {
        for (std::uint64_t l = 0; l <= 4; ++l) {
            const auto dp = triangle_row(k, l);
            const auto conv = poly_power_oracle(k, l);
            REQUIRE(dp.values == conv.values);
            for (std::int64_t n = 0; n <= static_cast<std::int64_t>(k * l); ++n) {
                REQUIRE(coefficient({k, n, l}) == coefficient_multinomial_oracle({k, n, l}));
                REQUIRE(coefficient({k, n, l}) == dp[static_cast<std::size_t>(n)]);
            }
        }
    }
}

TEST_CASE("large rows hold values beyond 64 bits") {
    // 5^30 > 2^64; the row must still sum exactly.
    const auto row = triangle_row(30, 4);
    BigInt sum = 0;
    for (const auto& v : row.values) sum += v;
    CHECK(sum == power(5, 30));
    CHECK(mpz_sizeinbase(row[60].get_mpz_t(), 2) > 64);
}
