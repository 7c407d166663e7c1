#pragma once

#include "prabhakar/params.hpp"

#include <string>
#include <vector>

namespace prabhakar {

// Phase theta_alpha(r): the angle of r^alpha e^{i alpha pi} + 1, realized
// with the two-argument arctangent so the value lands in [0, pi] without
// case analysis. Non-decreasing in r with theta(alpha, 0) = 0 and limit
// alpha*pi as r -> infinity. Requires 0 < alpha <= 1 and r >= 0.
double theta(double alpha, double r);

struct spectral_point {
    double r;
    double k_value;
    double theta;
};

// Spectral density
//   K(r) = r^(alpha gamma - beta)/pi * sin[gamma theta_alpha(r) + (beta - alpha gamma) pi]
//          / (r^(2 alpha) + 2 r^alpha cos(alpha pi) + 1)^(gamma/2).
// Requires 0 < alpha < 1 (the branch-cut construction degenerates at
// alpha = 1), beta > 0 and r > 0. Non-negative for all r exactly when the
// triple is LICM.
spectral_point spectral_density(const parameter_triple& p, double r);

// LICM test with a diagnostic naming the first violated inequality of
// 0 < alpha <= 1, alpha gamma <= beta, beta <= 1 ("" when the test passes).
struct licm_report {
    bool ok;
    std::string violated;
};
licm_report check_licm(const parameter_triple& p);

struct spectral_curve {
    parameter_triple triple;
    std::vector<spectral_point> points; // strictly increasing in r
    double min_value;
};

// Density sampled on a strictly increasing r grid, with the minimum value
// tracked for sign diagnostics.
spectral_curve sample_spectral_curve(const parameter_triple& p, const std::vector<double>& r_grid);

struct spectral_quad_options {
    int max_depth = 40;
    long max_panels = 20000;
};

// e(t) = integral_0^inf exp(-r t) K(r) dr. The integral is split at r = 1;
// on (0,1] the substitution r = u^(1/sigma), sigma = 1 + alpha gamma - beta,
// cancels the r^(alpha gamma - beta) endpoint factor exactly, so the
// transformed integrand is bounded for any singularity strength < 1. The
// upper range is truncated at R with a certified tail bound below tol/10
// and integrated adaptively. Throws quadrature_failure when the requested
// tolerance cannot be certified within the panel budget.
// Requires 0 < alpha < 1, beta > 0 and beta - alpha gamma < 1.
eval_result eval_e_spectral(const parameter_triple& p, double t, double tol = 1e-10,
                            const spectral_quad_options& opt = {});

// integral_0^inf K dr for beta = 1 LICM triples; equals 1 by continuity of
// e(t) at t = 0. The tail is mapped to (0,1] via v = r^(-alpha), under
// which the integrand stays bounded.
double spectral_normalization(const parameter_triple& p, double tol = 1e-10,
                              const spectral_quad_options& opt = {});

} // namespace prabhakar
