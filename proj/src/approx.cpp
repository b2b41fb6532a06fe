#include "polycoeff/approx.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace polycoeff {

namespace {

const double kLogMaxDouble = std::log(std::numeric_limits<double>::max());

struct Normal {
    double mean;
    double variance;
};

Normal normal_for(const char* op, std::uint64_t m, std::uint64_t l) {
    if (m == 0) throw DomainError(std::string(op) + ": m must be >= 1");
    if (l == 0) throw DomainError(std::string(op) + ": l must be >= 1 (sigma = 0 when l = 0)");
    const Moments mo = moments(m, l);
    return {mo.mean.get_d(), mo.variance.get_d()};
}

void check_index(const char* op, std::uint64_t m, std::int64_t n, std::uint64_t l) {
    if (n < 0 || static_cast<long double>(n) > static_cast<long double>(m) * l) {
        throw DomainError(std::string(op) + ": n must satisfy 0 <= n <= ml");
    }
}

double log_scale(std::uint64_t m, std::uint64_t l, double variance) {
    return static_cast<double>(m) * std::log(static_cast<double>(l) + 1.0) -
           0.5 * std::log(2.0 * std::numbers::pi * variance);
}

}  // namespace

LogApprox LogApprox::from_log(double log_value) {
    LogApprox out{log_value, std::nullopt};
    if (log_value < kLogMaxDouble) out.value = std::exp(log_value);
    return out;
}

double std_normal_pdf(double z) {
    return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

double std_normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double std_normal_sf(double z) {
    return 0.5 * std::erfc(z / std::numbers::sqrt2);
}

double std_normal_interval(double lo, double hi) {
    if (lo >= 0.0) return std_normal_sf(lo) - std_normal_sf(hi);
    if (hi <= 0.0) return std_normal_cdf(hi) - std_normal_cdf(lo);
    return 1.0 - std_normal_cdf(lo) - std_normal_sf(hi);
}

Rational clt_limit_variance(std::uint64_t l) {
    const BigInt w = BigInt(std::to_string(l)) + 1;
    Rational v(w * w - 1, 12);
    v.canonicalize();
    return v;
}

LogApprox central_approx(std::uint64_t m, std::uint64_t l) {
    const Normal nd = normal_for("central_approx", m, l);
    return LogApprox::from_log(log_scale(m, l, nd.variance));
}

LogApprox pointwise_approx(std::uint64_t m, std::int64_t n, std::uint64_t l) {
    const Normal nd = normal_for("pointwise_approx", m, l);
    check_index("pointwise_approx", m, n, l);
    // (n - mu) = (2n - ml)/2, formed exactly so n and ml - n give identical logs.
    const double twice_offset = 2.0 * static_cast<double>(n) - static_cast<double>(m) * static_cast<double>(l);
    const double exponent = twice_offset * twice_offset / (8.0 * nd.variance);
    return LogApprox::from_log(log_scale(m, l, nd.variance) - exponent);
}

double cc_phi_approx(std::uint64_t m, std::int64_t n, std::uint64_t l) {
    const Normal nd = normal_for("cc_phi_approx", m, l);
    check_index("cc_phi_approx", m, n, l);
    const double sigma = std::sqrt(nd.variance);
    const double offset = static_cast<double>(n) - nd.mean;
    return std_normal_interval((offset - 0.5) / sigma, (offset + 0.5) / sigma);
}

}  // namespace polycoeff
