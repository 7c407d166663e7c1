#pragma once

#include "prabhakar/params.hpp"

#include <complex>

namespace prabhakar {

// The non-Debye dielectric relaxation family built on the response function
// e^gamma_{alpha,beta}(t) with beta = alpha*gamma:
//   cole_cole         0 < alpha < 1, gamma = 1
//   davidson_cole     alpha = 1,     0 < gamma < 1
//   havriliak_negami  0 < alpha < 1, 0 < gamma < 1
//   extended_hn       0 < alpha < 1, 1 <= gamma < 1/alpha
// The extended range keeps the induced triple LICM, so the response stays
// completely monotone even for gamma above 1.
enum class relaxation_kind {
    cole_cole,
    davidson_cole,
    havriliak_negami,
    extended_hn,
};

struct relaxation_model {
    relaxation_kind kind;
    double alpha;
    double gamma;
    double tau; // relaxation time, > 0
};

// Validating constructor; throws invalid_model_error outside the declared
// parameter range of the kind.
relaxation_model make_model(relaxation_kind kind, double alpha, double gamma, double tau);

const char* relaxation_kind_name(relaxation_kind k);

// Induced order parameters {alpha, alpha*gamma, gamma}. LICM for every
// valid model (beta = alpha*gamma meets the admissibility bound with
// equality).
parameter_triple to_triple(const relaxation_model& m);

// Time-domain response (1/tau) e(t/tau); the 1/tau scale keeps the integral
// over t independent of tau.
double response_function(const relaxation_model& m, double t,
                         method backend = method::auto_select, const eval_options& opt = {});

// Complex susceptibility chi(omega) = 1/(1 + (-i omega tau)^alpha)^gamma,
// principal branch (the transform at s = -i omega; beta = alpha*gamma makes
// the power prefactor 1). Exactly 1 at omega = 0. Under this sign
// convention Im(chi) >= 0 for omega > 0.
std::complex<double> susceptibility(const relaxation_model& m, double omega);

} // namespace prabhakar
