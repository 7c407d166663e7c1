#pragma once

// Shared grid builders and independent oracles for the test suite. Oracles
// deliberately avoid the library's own code paths: the two-parameter series
// uses long double and libm's tgammal directly, finite differences drive the
// derivative identity, and forward Laplace integrals use tanh-sinh panels.

#include <algorithm>
#include <cmath>
#include <vector>

namespace testsupport {

inline std::vector<double> log_grid(double lo, double hi, int n)
{
    std::vector<double> xs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double f = static_cast<double>(i) / (n - 1);
        xs[i] = (i == 0) ? lo
              : (i == n - 1) ? hi
                             : std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo)));
    }
    return xs;
}

inline std::vector<double> linear_grid(double lo, double hi, int n)
{
    std::vector<double> xs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        xs[i] = lo + (hi - lo) * i / (n - 1);
    return xs;
}

// Classical two-parameter Mittag-Leffler series sum_k z^k / Gamma(a k + b),
// summed independently of the library (long double, libm tgammal).
// max_abs_term reports the size of the largest term, which sets the
// round-off floor any double-precision route can reach.
struct ml2_result {
    double value;
    double max_abs_term;
};

inline ml2_result ml2_reference(double a, double b, double z)
{
    long double sum = 0.0L;
    long double zp = 1.0L;
    long double max_term = 0.0L;
    for (int k = 0; k < 1000; ++k) {
        const long double term = zp / tgammal(static_cast<long double>(a) * k
                                              + static_cast<long double>(b));
        sum += term;
        max_term = std::max(max_term, fabsl(term));
        zp *= z;
        if (k > 8 && fabsl(term) < 1e-24L * fabsl(sum))
            break;
    }
    return {static_cast<double>(sum), static_cast<double>(max_term)};
}

// Central finite-difference stencils of orders 1..3 (second-order accurate).
template <class F>
double central_diff(F&& f, double t, int k, double h)
{
    switch (k) {
    case 1: return (f(t + h) - f(t - h)) / (2.0 * h);
    case 2: return (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h);
    case 3:
        return (f(t + 2 * h) - 2.0 * f(t + h) + 2.0 * f(t - h) - f(t - 2 * h))
               / (2.0 * h * h * h);
    default: return 0.0;
    }
}

} // namespace testsupport
