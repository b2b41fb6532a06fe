"""Exact polynomial coefficients, sums of discrete uniforms, and their normal approximations."""

from ._core import (
    DomainError,
    LogApprox,
    ResourceError,
    cc_phi_approx,
    central_approx,
    central_coefficient,
    central_error_curve,
    clt_limit_variance,
    coefficient,
    coefficient_multinomial_oracle,
    count_compositions,
    enumerate_compositions,
    error_sweep,
    exact_pmf,
    log_of_big_integer,
    moments,
    pointwise_approx,
    poly_power_oracle,
    run_cli,
    sample_sums,
    std_normal_cdf,
    std_normal_pdf,
    triangle_row,
)

__all__ = [name for name in dir() if not name.startswith("_")]
