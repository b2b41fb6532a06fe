#ifndef POLYCOEFF_COEFFS_HPP
#define POLYCOEFF_COEFFS_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "polycoeff/errors.hpp"

namespace polycoeff {

using BigInt = mpz_class;

/// Addresses one polynomial coefficient: the coefficient of x^n in
/// (1 + x + ... + x^l)^k. Any n is accepted; outside [0, kl] the value is 0.
struct CoeffQuery {
    std::uint64_t k = 0;
    std::int64_t n = 0;
    std::uint64_t l = 0;
};

/// Row k of the (l+1)-nomial triangle, kl + 1 entries.
struct TriangleRow {
    std::uint64_t k = 0;
    std::uint64_t l = 0;
    std::vector<BigInt> values;

    std::size_t size() const { return values.size(); }
    const BigInt& operator[](std::size_t n) const { return values[n]; }

    /// Entry n with the out-of-range-is-zero convention.
    BigInt at_or_zero(std::int64_t n) const;
};

/// Number of entries in row k (kl + 1). Throws ResourceError if the row does
/// not fit the budget, including when kl overflows.
std::size_t row_length(std::uint64_t k, std::uint64_t l, const Limits& limits = {});

/// Row-by-row DP. Each entry is the sum of the l+1 overlying entries,
/// maintained as a sliding window so a row costs O(kl) additions.
TriangleRow triangle_row(std::uint64_t k, std::uint64_t l, const Limits& limits = {});

BigInt coefficient(const CoeffQuery& q, const Limits& limits = {});

/// Coefficient at floor(ml/2).
BigInt central_coefficient(std::uint64_t m, std::uint64_t l, const Limits& limits = {});

/// Sum of multinomial coefficients k!/(k_0!...k_l!) over all (k_0..k_l) with
/// sum k_i = k and sum i*k_i = n. Exponential in l; bounded by
/// Limits::max_oracle_work visited nodes.
BigInt coefficient_multinomial_oracle(const CoeffQuery& q, const Limits& limits = {});

/// (1+x+...+x^l)^k by naive repeated convolution with the all-ones vector.
TriangleRow poly_power_oracle(std::uint64_t k, std::uint64_t l, const Limits& limits = {});

}  // namespace polycoeff

#endif  // POLYCOEFF_COEFFS_HPP
