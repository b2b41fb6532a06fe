#ifndef POLYCOEFF_ANALYSIS_HPP
#define POLYCOEFF_ANALYSIS_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "polycoeff/approx.hpp"

namespace polycoeff {

/// One exact-vs-approximate comparison, both sides as natural logs.
struct ErrorRecord {
    std::uint64_t m = 0;
    std::uint64_t l = 0;
    std::uint64_t n = 0;
    double exact_log = 0.0;
    double approx_log = 0.0;
    double rel_error = 0.0;  // |exp(approx_log - exact_log) - 1|
};

/// ln(x) from the bit length and the leading 64 bits of x. x must be >= 1.
double log_of_big_integer(const BigInt& x);

ErrorRecord make_error_record(std::uint64_t m, std::uint64_t l, std::uint64_t n,
                              double exact_log, double approx_log);

/// Pointwise normal approximation against the exact coefficient for every
/// n in [0, ml].
std::vector<ErrorRecord> error_sweep(std::uint64_t m, std::uint64_t l,
                                     const Limits& limits = {});

/// Central approximation against the exact coefficient at floor(ml/2), one
/// record per m in input order.
std::vector<ErrorRecord> central_error_curve(std::uint64_t l,
                                             std::span<const std::uint64_t> m_values,
                                             const Limits& limits = {});

/// Exact PMF next to the matching normal density, for plotting the PMF
/// against its normal approximation.
struct DensityPoint {
    std::uint64_t m = 0;
    std::uint64_t l = 0;
    std::uint64_t n = 0;
    double exact_pmf = 0.0;
    double normal_density = 0.0;
};

std::vector<DensityPoint> pmf_vs_normal(std::uint64_t m, std::uint64_t l,
                                        const Limits& limits = {});

/// Shortest decimal that parses back to the same double.
std::string format_real(double x);

/// CSV with header `m,l,n,exact_log,approx_log,rel_error`.
void write_error_csv(std::ostream& out, std::span<const ErrorRecord> records);

/// CSV with header `m,l,n,exact_pmf,normal_density`.
void write_density_csv(std::ostream& out, std::span<const DensityPoint> points);

}  // namespace polycoeff

#endif  // POLYCOEFF_ANALYSIS_HPP
