#ifndef POLYCOEFF_APPROX_HPP
#define POLYCOEFF_APPROX_HPP

#include <cstdint>
#include <optional>

#include "polycoeff/dist.hpp"

namespace polycoeff {

/// A positive quantity carried as its natural log. `value` is filled in only
/// when exp(log_value) is a finite double.
struct LogApprox {
    double log_value = 0.0;
    std::optional<double> value;

    static LogApprox from_log(double log_value);
};

double std_normal_pdf(double z);

/// Phi(z). Absolute error below 1e-9 on [-8, 8] (in practice a few ulp).
double std_normal_cdf(double z);

/// Upper tail 1 - Phi(z) without cancellation for large z.
double std_normal_sf(double z);

/// ((l+1)^2 - 1) / 12, the variance of one uniform draw on {0..l}.
Rational clt_limit_variance(std::uint64_t l);

/// (l+1)^m / sqrt(2 pi sigma^2): the central coefficient estimate obtained by
/// replacing the continuity-corrected normal mass at the mean with a rectangle
/// of width 1/sigma and height phi(0).
LogApprox central_approx(std::uint64_t m, std::uint64_t l);

/// (l+1)^m * f(n), with f the N(mu, sigma^2) density. mu stays the exact
/// half-integer ml/2 even when ml is odd.
LogApprox pointwise_approx(std::uint64_t m, std::int64_t n, std::uint64_t l);

/// Continuity-corrected normal estimate of P[S = n]:
/// Phi((n + 1/2 - mu)/sigma) - Phi((n - 1/2 - mu)/sigma).
double cc_phi_approx(std::uint64_t m, std::int64_t n, std::uint64_t l);

/// Mass of the standard normal on [lo, hi], evaluated on whichever tail keeps
/// the subtraction well conditioned.
double std_normal_interval(double lo, double hi);

}  // namespace polycoeff

#endif  // POLYCOEFF_APPROX_HPP
