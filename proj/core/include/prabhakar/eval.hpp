#pragma once

#include "prabhakar/params.hpp"

#include <complex>

namespace prabhakar {

// Response function e^gamma_{alpha,beta}(t) = t^{beta-1} E^gamma_{alpha,beta}(-t^alpha)
// for t > 0, by the requested backend. method::auto_select uses the series
// for t <= opt.t_switch, falling back to the contour inversion when the
// series signals non-convergence, and the contour inversion otherwise.
eval_result eval_e(const parameter_triple& p, double t, method m = method::auto_select,
                   const eval_options& opt = {});

// Limit of e(t) as t -> 0+: 0 for beta > 1, 1 for beta = 1, +infinity for
// 0 < beta < 1 (a locally integrable singularity). For beta <= 0 the sign
// of the first non-vanishing series coefficient decides.
double eval_e_at_zero(const parameter_triple& p);

// k-th derivative of e(t), via the shift identity
// d^k/dt^k e^gamma_{alpha,beta} = e^gamma_{alpha,beta-k}.
eval_result derivative(const parameter_triple& p, double t, int k,
                       method m = method::auto_select, const eval_options& opt = {});

// Closed-form transform E(s) = s^(alpha gamma - beta) / (s^alpha + 1)^gamma,
// principal branches, for Re(s) > 0.
std::complex<double> laplace_transform(const parameter_triple& p, std::complex<double> s);

} // namespace prabhakar
