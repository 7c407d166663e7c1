#pragma once

#include "prabhakar/params.hpp"

namespace prabhakar {

// Prabhakar series  E^gamma_{alpha,beta}(z) = sum_k (gamma)_k z^k / (k! Gamma(alpha k + beta)).
//
// Terms are produced by the ratio recurrence and accumulated in binary128 so
// that alternating sums with large intermediate terms keep their absolute
// accuracy near the double rounding level. Summation stops once two
// consecutive terms fall below eps_mach * |partial sum|; err_estimate is the
// magnitude of the first omitted term plus a round-off component.
//
// Throws non_convergence_error when max_terms is reached without meeting the
// stop rule or when terms leave the finite range: the caller should switch
// to the contour-inversion backend.
eval_result ml3_series(const parameter_triple& p, double z, int max_terms = 5000);

} // namespace prabhakar
