#ifndef POLYCOEFF_DIST_HPP
#define POLYCOEFF_DIST_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "polycoeff/coeffs.hpp"

namespace polycoeff {

using Rational = mpq_class;

/// Mean and variance of S = sum of m i.i.d. uniform draws on {0..l}.
struct Moments {
    std::uint64_t m = 0;
    std::uint64_t l = 0;
    Rational mean;      // ml/2
    Rational variance;  // m((l+1)^2 - 1)/12
};

Moments moments(std::uint64_t m, std::uint64_t l);

/// P[S = n] = row[n] / (l+1)^m, kept as integer numerators over one common
/// denominator so sums and moments stay exact.
class ExactPmf {
public:
    ExactPmf(std::uint64_t m, std::uint64_t l, TriangleRow row);

    std::uint64_t m() const { return m_; }
    std::uint64_t l() const { return l_; }
    std::size_t size() const { return numerators_.size(); }

    const std::vector<BigInt>& numerators() const { return numerators_; }
    const BigInt& denominator() const { return denominator_; }

    /// Reduced rational P[S = n]; zero outside [0, ml].
    Rational prob(std::int64_t n) const;
    std::vector<Rational> probs() const;

private:
    std::uint64_t m_;
    std::uint64_t l_;
    std::vector<BigInt> numerators_;
    BigInt denominator_;
};

ExactPmf exact_pmf(std::uint64_t m, std::uint64_t l, const Limits& limits = {});

struct SamplerConfig {
    std::uint64_t m = 1;
    std::uint64_t l = 0;
    std::uint64_t sample_count = 1;
    std::uint64_t seed = 0;
    /// 0 picks std::thread::hardware_concurrency(). Never affects the result.
    unsigned workers = 0;
};

/// Monte Carlo frequency table over {0..ml}. Samples are generated in fixed
/// blocks, each seeded from (seed, block index), so the table depends only on
/// (m, l, sample_count, seed).
std::vector<std::uint64_t> sample_sums(const SamplerConfig& cfg, const Limits& limits = {});

/// Uniform integer on {0..bound-1} from a 64-bit generator by threshold
/// rejection (no modulo bias). bound must be >= 1.
template <class Engine>
std::uint64_t uniform_below(Engine& engine, std::uint64_t bound) {
    // 2^64 mod bound; draws at or above 2^64 - rem are rejected.
    const std::uint64_t rem = (std::uint64_t(-1) % bound + 1) % bound;
    const std::uint64_t last = std::uint64_t(-1) - rem;
    for (;;) {
        const std::uint64_t u = engine();
        if (u <= last) return u % bound;
    }
}

}  // namespace polycoeff

#endif  // POLYCOEFF_DIST_HPP
