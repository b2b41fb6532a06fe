#include "polycoeff/dist.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <string>
#include <thread>

namespace polycoeff {

Moments moments(std::uint64_t m, std::uint64_t l) {
    if (m == 0) throw DomainError("moments: m must be >= 1");
    const BigInt mm(std::to_string(m));
    const BigInt ll(std::to_string(l));
    Rational mean(mm * ll, 2);
    Rational variance(mm * ((ll + 1) * (ll + 1) - 1), 12);
    mean.canonicalize();
    variance.canonicalize();
    return {m, l, mean, variance};
}

ExactPmf::ExactPmf(std::uint64_t m, std::uint64_t l, TriangleRow row)
    : m_(m), l_(l), numerators_(std::move(row.values)) {
    mpz_ui_pow_ui(denominator_.get_mpz_t(), static_cast<unsigned long>(l + 1),
                  static_cast<unsigned long>(m));
}

Rational ExactPmf::prob(std::int64_t n) const {
    if (n < 0 || static_cast<std::uint64_t>(n) >= numerators_.size()) return 0;
    Rational p(numerators_[static_cast<std::size_t>(n)], denominator_);
    p.canonicalize();
    return p;
}

std::vector<Rational> ExactPmf::probs() const {
    std::vector<Rational> out;
    out.reserve(numerators_.size());
    for (std::size_t n = 0; n < numerators_.size(); ++n) {
        out.push_back(prob(static_cast<std::int64_t>(n)));
    }
    return out;
}

ExactPmf exact_pmf(std::uint64_t m, std::uint64_t l, const Limits& limits) {
    if (m == 0) throw DomainError("exact_pmf: m must be >= 1");
    return ExactPmf(m, l, triangle_row(m, l, limits));
}

namespace {

constexpr std::uint64_t kBlockSize = 1 << 16;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void sample_block(const SamplerConfig& cfg, std::uint64_t block, std::uint64_t count,
                  std::vector<std::uint64_t>& hist) {
    const std::uint64_t a = splitmix64(cfg.seed);
    const std::uint64_t b = splitmix64(a ^ splitmix64(block + 1));
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    std::mt19937_64 engine(seq);
    const std::uint64_t bound = cfg.l + 1;
    for (std::uint64_t s = 0; s < count; ++s) {
        std::uint64_t sum = 0;
        for (std::uint64_t j = 0; j < cfg.m; ++j) sum += uniform_below(engine, bound);
        ++hist[sum];
    }
}

}  // namespace

std::vector<std::uint64_t> sample_sums(const SamplerConfig& cfg, const Limits& limits) {
    if (cfg.m == 0) throw DomainError("sample_sums: m must be >= 1");
    if (cfg.sample_count == 0) throw DomainError("sample_sums: sample_count must be >= 1");
    if (cfg.l == std::uint64_t(-1)) throw ResourceError("sample_sums: l too large");
    const std::size_t len = row_length(cfg.m, cfg.l, limits);

    const std::uint64_t blocks = (cfg.sample_count + kBlockSize - 1) / kBlockSize;
    unsigned workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));

    auto run = [&](unsigned w) {
        std::vector<std::uint64_t> hist(len, 0);
        for (std::uint64_t b = w; b < blocks; b += workers) {
            const std::uint64_t count = std::min(kBlockSize, cfg.sample_count - b * kBlockSize);
            sample_block(cfg, b, count, hist);
        }
        return hist;
    };

    std::vector<std::future<std::vector<std::uint64_t>>> jobs;
    for (unsigned w = 1; w < workers; ++w) jobs.push_back(std::async(std::launch::async, run, w));
    std::vector<std::uint64_t> total = run(0);
    for (auto& job : jobs) {
        const auto part = job.get();
        for (std::size_t n = 0; n < len; ++n) total[n] += part[n];
    }
    return total;
}

}  // namespace polycoeff
