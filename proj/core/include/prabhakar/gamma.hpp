#pragma once

namespace prabhakar {

// sin(pi*x) and cos(pi*x) with exact argument reduction on x, so values at
// (half-)integer x do not suffer from the rounding of pi*x.
double sin_pi(double x);
double cos_pi(double x);

// Gamma function for real arguments. Lanczos approximation (g = 7, n = 9)
// with reflection below 0.5. Throws pole_error at non-positive integers and
// overflow_error once Gamma(x) leaves the double range (x > ~171.62).
double gamma(double x);

// Reciprocal Gamma, 1/Gamma(x). Total on the reals: returns exactly 0 at the
// poles of Gamma, never throws.
double rgamma(double x);

// Rising factorial (g)_k = g (g+1) ... (g+k-1), g > 0, by direct recurrence.
double pochhammer(double g, int k);

// Binomial coefficient C(-g, k) for g > 0, via the recurrence
// c_0 = 1, c_{k+1} = c_k (-g - k)/(k + 1). Signs alternate as (-1)^k.
double binom_neg_gamma(double g, int k);

} // namespace prabhakar
