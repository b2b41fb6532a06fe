#include "polycoeff/compositions.hpp"

#include <string>

namespace polycoeff {

namespace {

void validate(const CompositionQuery& q) {
    if (q.a > q.b) {
        throw DomainError("compositions: part bounds must satisfy a <= b (got a=" +
                          std::to_string(q.a) + ", b=" + std::to_string(q.b) + ")");
    }
}

}  // namespace

BigInt count_compositions(const CompositionQuery& q, const Limits& limits) {
    validate(q);
    const unsigned __int128 floor_sum = static_cast<unsigned __int128>(q.k) * q.a;
    const unsigned __int128 ceil_sum = static_cast<unsigned __int128>(q.k) * q.b;
    if (q.n < floor_sum || q.n > ceil_sum) return 0;
    const auto shifted = static_cast<std::int64_t>(q.n - static_cast<std::uint64_t>(floor_sum));
    return coefficient({q.k, shifted, q.b - q.a}, limits);
}

std::vector<Composition> enumerate_compositions(const CompositionQuery& q,
                                                const Limits& limits) {
    validate(q);
    std::vector<Composition> out;
    Composition parts(static_cast<std::size_t>(q.k));

    // Place part i given `left` still to distribute over parts i..k-1.
    auto place = [&](auto&& self, std::size_t i, std::uint64_t left) -> void {
        const std::uint64_t slots = q.k - i;
        if (slots == 0) {
            if (left != 0) return;
            if (out.size() >= limits.max_compositions) {
                throw ResourceError("enumerate_compositions: more than " +
                                    std::to_string(limits.max_compositions) + " results");
            }
            out.push_back(parts);
            return;
        }
        const unsigned __int128 rest = slots - 1;
        for (std::uint64_t p = q.a; p <= q.b && p <= left; ++p) {
            const std::uint64_t after = left - p;
            if (after < rest * q.a) break;
            if (after > rest * q.b) continue;
            parts[i] = p;
            self(self, i + 1, after);
        }
    };
    place(place, 0, q.n);
    return out;
}

}  // namespace polycoeff
