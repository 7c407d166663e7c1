#pragma once

#include "prabhakar/params.hpp"

#include <vector>

namespace prabhakar {

enum class asymptotic_regime {
    general,    // alpha*gamma != beta
    degenerate, // alpha*gamma == beta (within 1e-14)
};

struct asymptotic_term {
    double power;
    double coeff;
};

// Large-t expansion of e^gamma_{alpha,beta}(t), obtained by term-by-term
// inversion of the transform expanded about s = 0:
//   general:    term k >= 0:  C(-gamma,k) / Gamma(beta - alpha gamma - alpha k)
//               at power beta - alpha gamma - alpha k - 1;
//   degenerate: the k = 0 constant inverts to a delta impulse and is
//               dropped; term k >= 1: C(-gamma,k) / Gamma(-alpha k) at
//               power -alpha k - 1.
// Terms whose Gamma factor sits on a pole are kept with coefficient exactly
// 0 so indexing stays aligned with the defining series.
struct asymptotic_expansion {
    parameter_triple triple;
    std::vector<asymptotic_term> terms; // powers strictly decreasing
    asymptotic_regime regime;
};

asymptotic_expansion build_expansion(const parameter_triple& p, int n_terms);

// Partial sum  sum_k coeff_k t^{power_k}. Meaningful for large t only.
double eval_expansion(const asymptotic_expansion& e, double t);

// Dominant behavior as t -> infinity:
//   t^{beta - alpha gamma - 1} / Gamma(beta - alpha gamma)  if alpha gamma < beta,
//   -gamma t^{-alpha - 1} / Gamma(-alpha)                   if alpha gamma == beta.
// Throws domain_error when alpha gamma > beta (no closed leading form; the
// full expansion is still available through build_expansion).
double leading_term(const parameter_triple& p, double t);

} // namespace prabhakar
