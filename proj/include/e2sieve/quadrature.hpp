#pragma once

#include <cstddef>
#include <functional>

namespace e2sieve {

struct QuadratureResult {
    long double value = 0.0L;
    long double error_estimate = 0.0L;
    std::size_t intervals = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// Bisects the interval with the largest error estimate until the summed
/// estimate is <= tol. Throws ConvergenceError when `max_intervals` is hit.
QuadratureResult integrate_adaptive(const std::function<long double(long double)>& f, long double a,
                                    long double b, long double tol, std::size_t max_intervals = 20000);

}  // namespace e2sieve
