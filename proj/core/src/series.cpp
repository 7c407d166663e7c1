#include "prabhakar/series.hpp"
#include "prabhakar/gamma.hpp"

#include <cfloat>
#include <cmath>
#include <string>

namespace prabhakar {

namespace {

#if defined(__SIZEOF_FLOAT128__)
using wide = __float128;
#else
using wide = long double;
#endif

inline wide wabs(wide x) { return x < 0 ? -x : x; }

// Smallest k such that alpha*k + beta reaches the safely positive range.
int first_regular_index(double alpha, double beta)
{
    if (beta >= 0.5)
        return 0;
    return static_cast<int>(std::ceil((0.5 - beta) / alpha));
}

} // namespace

eval_result ml3_series(const parameter_triple& p, double z, int max_terms)
{
    if (max_terms < 1)
        throw domain_error("ml3_series: max_terms must be positive");

    const double alpha = p.alpha, beta = p.beta, g = p.gamma;

    if (z == 0.0)
        return {rgamma(beta), method::series, 0.0};

    // Integers alpha admit an exact rational recurrence for the
    // Gamma(alpha k + beta) denominators: Gamma(x + m) = x (x+1) ... (x+m-1) Gamma(x).
    // Carrying that recurrence in binary128 keeps per-term errors correlated
    // (one common scale factor from the seed), which is what makes heavily
    // cancelling sums like E^1_{1,1}(-30) come out to full double accuracy.
    const long alpha_int = std::lround(alpha);
    const bool integral_alpha =
        alpha_int >= 1 && std::fabs(alpha - static_cast<double>(alpha_int)) < 1e-15;

    const int k_seed = integral_alpha ? first_regular_index(alpha, beta) : -1;

    wide coeff = 1.0;    // (gamma)_k z^k / k!
    wide sum = 0.0;
    wide invg = 0.0;     // 1/Gamma(alpha k + beta), maintained exactly for integral alpha
    double max_abs_term = 0.0;
    int consecutive_small = 0;
    int k = 0;

    auto term_at = [&](int kk, wide c) -> wide {
        if (integral_alpha && kk >= k_seed && invg != 0.0)
            return c * invg;
        return c * static_cast<wide>(rgamma(alpha * kk + beta));
    };

    for (; k <= max_terms; ++k) {
        if (integral_alpha && k == k_seed)
            invg = static_cast<wide>(rgamma(alpha * k + beta));

        const wide term = term_at(k, coeff);
        if (!std::isfinite(static_cast<double>(term)))
            throw non_convergence_error("ml3_series: term overflow at k = " + std::to_string(k)
                                        + "; switch method");
        sum += term;

        const double abs_term = static_cast<double>(wabs(term));
        if (abs_term > max_abs_term)
            max_abs_term = abs_term;

        // A zero partial sum must not count leading Gamma-pole zeros as
        // convergence; nonzero terms may still follow.
        if (sum != 0.0 && wabs(term) <= static_cast<wide>(DBL_EPSILON) * wabs(sum))
            ++consecutive_small;
        else
            consecutive_small = 0;

        // Advance the recurrences to k+1.
        coeff *= static_cast<wide>(z) * (static_cast<wide>(g) + k) / (k + 1.0);
        if (integral_alpha && k >= k_seed) {
            wide x = static_cast<wide>(alpha) * k + static_cast<wide>(beta);
            for (long j = 0; j < alpha_int; ++j)
                invg /= x + static_cast<wide>(static_cast<double>(j));
        }

        if (consecutive_small >= 2) {
            ++k;
            break;
        }
    }

    if (consecutive_small < 2)
        throw non_convergence_error(
            "ml3_series: no convergence within " + std::to_string(max_terms)
            + " terms (z = " + std::to_string(z) + "); switch method");

    const double value = static_cast<double>(sum);
    const double omitted = static_cast<double>(wabs(term_at(k, coeff)));

    // Round-off floor: the integral-alpha path is exact up to one common
    // scale, the generic path pays ~eps per term through rgamma.
    const double roundoff = integral_alpha
        ? DBL_EPSILON * std::fabs(value)
        : 4.0 * DBL_EPSILON * max_abs_term;

    return {value, method::series, omitted + roundoff};
}

} // namespace prabhakar
