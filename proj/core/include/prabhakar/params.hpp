#pragma once

#include "prabhakar/errors.hpp"

namespace prabhakar {

// The three order parameters {alpha, beta, gamma} of the Prabhakar function
// E^gamma_{alpha,beta}. alpha > 0 and gamma > 0 are required everywhere;
// beta may be any real (the derivative relation shifts it below zero).
struct parameter_triple {
    double alpha;
    double beta;
    double gamma;

    parameter_triple(double a, double b, double g)
        : alpha(a), beta(b), gamma(g)
    {
        if (!(alpha > 0.0))
            throw domain_error("parameter_triple: requires alpha > 0");
        if (!(gamma > 0.0))
            throw domain_error("parameter_triple: requires gamma > 0");
    }

    // Condition for e^gamma_{alpha,beta}(t) to be locally integrable and
    // completely monotone: 0 < alpha <= 1 and 0 < alpha*gamma <= beta <= 1.
    bool is_licm() const
    {
        return alpha <= 1.0 && alpha * gamma <= beta && beta <= 1.0;
    }
};

// Which backend produced a value.
enum class method {
    auto_select,
    series,
    spectral_quadrature,
    contour_ilt,
    asymptotic,
};

// A computed function value together with the backend tag and an internal
// a-posteriori error estimate (not a guaranteed bound; >= 0 and finite
// whenever the value is finite).
struct eval_result {
    double value;
    method used;
    double err_estimate;
};

// Knobs of the evaluation front door.
struct eval_options {
    double tol = 1e-12;   // target accuracy for quadrature-based backends
    double t_switch = 1.0; // auto dispatch: series for t <= t_switch
    int max_terms = 5000; // series term cap
    int asymptotic_terms = 3; // terms kept when method::asymptotic is forced
};

const char* method_name(method m);

} // namespace prabhakar
