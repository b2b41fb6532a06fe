#ifndef POLYCOEFF_ERRORS_HPP
#define POLYCOEFF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polycoeff {

/// A precondition on the mathematical inputs was violated (m = 0, l = 0 where
/// sigma is needed, a > b, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The request is well-defined but too large for the configured budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Budgets shared by every operation that materializes rows or enumerates.
struct Limits {
    std::size_t max_row_entries = 10'000'000;
    std::size_t max_oracle_work = 50'000'000;
    std::size_t max_compositions = 1'000'000;
};

}  // namespace polycoeff

#endif  // POLYCOEFF_ERRORS_HPP
