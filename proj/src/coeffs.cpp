#include "polycoeff/coeffs.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace polycoeff {

BigInt TriangleRow::at_or_zero(std::int64_t n) const {
    if (n < 0 || static_cast<std::uint64_t>(n) >= values.size()) return 0;
    return values[static_cast<std::size_t>(n)];
}

std::size_t row_length(std::uint64_t k, std::uint64_t l, const Limits& limits) {
    if (l != 0 && k > (std::numeric_limits<std::uint64_t>::max() - 1) / l) {
        throw ResourceError("row " + std::to_string(k) + " of the " + std::to_string(l) +
                            "-step triangle overflows the index range");
    }
    const std::uint64_t len = k * l + 1;
    if (len > limits.max_row_entries) {
        throw ResourceError("row length " + std::to_string(len) + " exceeds budget of " +
                            std::to_string(limits.max_row_entries) + " entries");
    }
    return static_cast<std::size_t>(len);
}

TriangleRow triangle_row(std::uint64_t k, std::uint64_t l, const Limits& limits) {
    const std::size_t final_len = row_length(k, l, limits);

    TriangleRow row{k, l, {}};
    row.values.reserve(final_len);
    row.values.emplace_back(1);

    std::vector<BigInt> next;
    next.reserve(final_len);
    const std::size_t width = static_cast<std::size_t>(l) + 1;

    BigInt window;
    for (std::uint64_t r = 1; r <= k; ++r) {
        const std::size_t prev_len = row.values.size();
        const std::size_t len = prev_len + static_cast<std::size_t>(l);
        next.resize(len);
        window = 0;
        for (std::size_t n = 0; n < len; ++n) {
            // window = prev[n-l] + ... + prev[n]
            if (n < prev_len) window += row.values[n];
            if (n >= width) window -= row.values[n - width];
            next[n] = window;
        }
        row.values.swap(next);
    }
    return row;
}

BigInt coefficient(const CoeffQuery& q, const Limits& limits) {
    const std::size_t len = row_length(q.k, q.l, limits);
    if (q.n < 0 || static_cast<std::uint64_t>(q.n) >= len) return 0;
    return triangle_row(q.k, q.l, limits)[static_cast<std::size_t>(q.n)];
}

BigInt central_coefficient(std::uint64_t m, std::uint64_t l, const Limits& limits) {
    const std::size_t len = row_length(m, l, limits);
    return triangle_row(m, l, limits)[(len - 1) / 2];
}

namespace {

struct MultinomialWalk {
    std::uint64_t k;
    std::uint64_t l;
    std::vector<BigInt> factorial;
    std::size_t work = 0;
    std::size_t max_work;
    BigInt total = 0;

    // Assign count to part value `part`, descending from l to 0. `left` parts
    // remain, they must carry `weight` in total.
    void descend(std::uint64_t part, std::uint64_t left, std::uint64_t weight,
                 const BigInt& denom) {
        if (++work > max_work) {
            throw ResourceError("multinomial oracle exceeded work bound of " +
                                std::to_string(max_work) + " nodes");
        }
        if (part == 0) {
            if (weight == 0) total += factorial[k] / (denom * factorial[left]);
            return;
        }
        // Each of the remaining parts contributes at most `part`.
        if (weight > part * left) return;
        const std::uint64_t hi = std::min(left, weight / part);
        for (std::uint64_t c = 0; c <= hi; ++c) {
            descend(part - 1, left - c, weight - c * part, denom * factorial[c]);
        }
    }
};

}  // namespace

BigInt coefficient_multinomial_oracle(const CoeffQuery& q, const Limits& limits) {
    const std::size_t len = row_length(q.k, q.l, limits);
    if (q.n < 0 || static_cast<std::uint64_t>(q.n) >= len) return 0;

    MultinomialWalk walk{q.k, q.l, {}, 0, limits.max_oracle_work};
    walk.factorial.resize(static_cast<std::size_t>(q.k) + 1);
    walk.factorial[0] = 1;
    for (std::size_t i = 1; i < walk.factorial.size(); ++i) {
        walk.factorial[i] = walk.factorial[i - 1] * static_cast<unsigned long>(i);
    }
    walk.descend(q.l, q.k, static_cast<std::uint64_t>(q.n), BigInt(1));
    return walk.total;
}

TriangleRow poly_power_oracle(std::uint64_t k, std::uint64_t l, const Limits& limits) {
    row_length(k, l, limits);
    TriangleRow row{k, l, {BigInt(1)}};
    if (k == 0) return row;

    const std::size_t width = static_cast<std::size_t>(l) + 1;
    row.values.assign(width, BigInt(1));
    for (std::uint64_t r = 1; r < k; ++r) {
        std::vector<BigInt> out(row.values.size() + width - 1);
        for (std::size_t i = 0; i < row.values.size(); ++i) {
            for (std::size_t j = 0; j < width; ++j) out[i + j] += row.values[i];
        }
        row.values = std::move(out);
    }
    return row;
}

}  // namespace polycoeff
