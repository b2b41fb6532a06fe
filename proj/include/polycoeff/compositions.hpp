#ifndef POLYCOEFF_COMPOSITIONS_HPP
#define POLYCOEFF_COMPOSITIONS_HPP

#include <cstdint>
#include <vector>

#include "polycoeff/coeffs.hpp"

namespace polycoeff {

/// Compositions of n into exactly k parts, each part in {a, a+1, ..., b}.
struct CompositionQuery {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
};

using Composition = std::vector<std::uint64_t>;

/// Shifting every part down by a turns this into the coefficient of
/// x^(n - ka) in (1 + ... + x^(b-a))^k.
BigInt count_compositions(const CompositionQuery& q, const Limits& limits = {});

/// All compositions in lexicographic order. Throws ResourceError once more
/// than Limits::max_compositions would be produced.
std::vector<Composition> enumerate_compositions(const CompositionQuery& q,
                                                const Limits& limits = {});

}  // namespace polycoeff

#endif  // POLYCOEFF_COMPOSITIONS_HPP
