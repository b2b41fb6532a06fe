#include <doctest.h>

#include <algorithm>

#include "polycoeff/compositions.hpp"

using namespace polycoeff;

namespace {

// Odometer over {a..b}^k, keeping tuples that sum to n. Lexicographic by
// construction.
std::vector<Composition> brute_force(const CompositionQuery& q) {
    std::vector<Composition> out;
    Composition parts(q.k, q.a);
    for (;;) {
        std::uint64_t sum = 0;
        for (auto p : parts) sum += p;
        if (sum == q.n) out.push_back(parts);
        std::size_t i = parts.size();
        while (i > 0 && parts[i - 1] == q.b) parts[--i] = q.a;
        if (i == 0) break;
        ++parts[i - 1];
    }
    return out;
}

}  // namespace

TEST_CASE("count_compositions examples") {
    CHECK(count_compositions({5, 3, 1, 3}) == 6);
    CHECK(count_compositions({0, 0, 0, 5}) == 1);
    CHECK(count_compositions({7, 2, 0, 3}) == 0);
    CHECK(count_compositions({2, 3, 1, 3}) == 0);
    CHECK(count_compositions({3, 0, 0, 5}) == 0);
    CHECK_THROWS_AS(count_compositions({3, 2, 4, 1}), DomainError);
}

TEST_CASE("enumerate_compositions examples") {
    CHECK(enumerate_compositions({2, 2, 0, 2}) ==
          std::vector<Composition>{{0, 2}, {1, 1}, {2, 0}});
    CHECK(enumerate_compositions({3, 1, 0, 2}).empty());
    CHECK(enumerate_compositions({6, 3, 1, 3}).size() == 7);
    CHECK(enumerate_compositions({0, 0, 0, 0}) == std::vector<Composition>{{}});
    CHECK_THROWS_AS(enumerate_compositions({1, 1, 2, 1}), DomainError);
}

TEST_CASE("enumeration bound") {
    Limits limits;
    limits.max_compositions = 9;
    // coefficient(3, 4, l=4) = 15 results
    CHECK_THROWS_AS(enumerate_compositions({4, 3, 0, 4}, limits), ResourceError);
    limits.max_compositions = 15;
    CHECK(enumerate_compositions({4, 3, 0, 4}, limits).size() == 15);
}

TEST_CASE("enumeration matches brute force and its count") {
    for (std::uint64_t k = 0; k <= 5; ++k) {
        for (std::uint64_t a = 0; a <= 3; ++a) {
            for (std::uint64_t b = a; b <= 4; ++b) {
                for (std::uint64_t n = 0; n <= 16; ++n) {
                    const CompositionQuery q{n, k, a, b};
                    const auto listed = enumerate_compositions(q);
                    REQUIRE(listed == brute_force(q));
                    REQUIRE(std::is_sorted(listed.begin(), listed.end()));
                    REQUIRE(count_compositions(q) == listed.size());
                }
            }
        }
    }
}

TEST_CASE("shift invariance and the coefficient interpretation") {
    for (std::uint64_t k = 0; k <= 6; ++k) {
        for (std::uint64_t l = 0; l <= 5; ++l) {
            for (std::uint64_t n = 0; n <= k * l + 2; ++n) {
                const BigInt base = count_compositions({n, k, 0, l});
                REQUIRE(base == coefficient({k, static_cast<std::int64_t>(n), l}));
                for (std::uint64_t c = 1; c <= 3; ++c) {
                    REQUIRE(count_compositions({n + k * c, k, c, l + c}) == base);
                }
            }
        }
    }
}
