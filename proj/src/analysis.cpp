#include "polycoeff/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <future>
#include <numbers>
#include <ostream>
#include <thread>

namespace polycoeff {

double log_of_big_integer(const BigInt& x) {
    if (sgn(x) <= 0) throw DomainError("log_of_big_integer: x must be >= 1");
    const std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
    if (bits <= 64) {
        return std::log(static_cast<double>(mpz_get_ui(x.get_mpz_t())));
    }
    const std::size_t shift = bits - 64;
    BigInt top;
    mpz_tdiv_q_2exp(top.get_mpz_t(), x.get_mpz_t(), shift);
    // Leading 64 bits as a value in [2^63, 2^64); dropped bits are < 1 ulp of it.
    const double lead = static_cast<double>(mpz_get_ui(top.get_mpz_t()));
    return std::log(lead) + static_cast<double>(shift) * std::numbers::ln2;
}

ErrorRecord make_error_record(std::uint64_t m, std::uint64_t l, std::uint64_t n,
                              double exact_log, double approx_log) {
    return {m, l, n, exact_log, approx_log, std::abs(std::expm1(approx_log - exact_log))};
}

std::vector<ErrorRecord> error_sweep(std::uint64_t m, std::uint64_t l, const Limits& limits) {
    if (m == 0) throw DomainError("error_sweep: m must be >= 1");
    if (l == 0) throw DomainError("error_sweep: l must be >= 1");
    const TriangleRow row = triangle_row(m, l, limits);
    std::vector<ErrorRecord> out;
    out.reserve(row.size());
    for (std::uint64_t n = 0; n < row.size(); ++n) {
        const double exact = log_of_big_integer(row[n]);
        const double approx = pointwise_approx(m, static_cast<std::int64_t>(n), l).log_value;
        out.push_back(make_error_record(m, l, n, exact, approx));
    }
    return out;
}

std::vector<ErrorRecord> central_error_curve(std::uint64_t l,
                                             std::span<const std::uint64_t> m_values,
                                             const Limits& limits) {
    if (l == 0) throw DomainError("central_error_curve: l must be >= 1");
    for (std::uint64_t m : m_values) {
        if (m == 0) throw DomainError("central_error_curve: every m must be >= 1");
        row_length(m, l, limits);
    }
    std::vector<ErrorRecord> out(m_values.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < m_values.size(); i = next++) {
            const std::uint64_t m = m_values[i];
            const double exact = log_of_big_integer(central_coefficient(m, l, limits));
            out[i] = make_error_record(m, l, m * l / 2, exact, central_approx(m, l).log_value);
        }
    };
    const std::size_t workers =
        std::min<std::size_t>(m_values.size(), std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 1; w < workers; ++w) jobs.push_back(std::async(std::launch::async, work));
    work();
    for (auto& job : jobs) job.get();
    return out;
}

std::vector<DensityPoint> pmf_vs_normal(std::uint64_t m, std::uint64_t l, const Limits& limits) {
    if (l == 0) throw DomainError("pmf_vs_normal: l must be >= 1");
    const ExactPmf pmf = exact_pmf(m, l, limits);
    const Moments mo = moments(m, l);
    const double mean = mo.mean.get_d();
    const double sigma = std::sqrt(mo.variance.get_d());
    std::vector<DensityPoint> out;
    out.reserve(pmf.size());
    for (std::uint64_t n = 0; n < pmf.size(); ++n) {
        const double z = (static_cast<double>(n) - mean) / sigma;
        out.push_back({m, l, n, pmf.prob(static_cast<std::int64_t>(n)).get_d(),
                       std_normal_pdf(z) / sigma});
    }
    return out;
}

std::string format_real(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void write_error_csv(std::ostream& out, std::span<const ErrorRecord> records) {
    out << "m,l,n,exact_log,approx_log,rel_error\n";
    for (const auto& r : records) {
        out << r.m << ',' << r.l << ',' << r.n << ',' << format_real(r.exact_log) << ','
            << format_real(r.approx_log) << ',' << format_real(r.rel_error) << '\n';
    }
}

void write_density_csv(std::ostream& out, std::span<const DensityPoint> points) {
    out << "m,l,n,exact_pmf,normal_density\n";
    for (const auto& p : points) {
        out << p.m << ',' << p.l << ',' << p.n << ',' << format_real(p.exact_pmf) << ','
            << format_real(p.normal_density) << '\n';
    }
}

}  // namespace polycoeff
