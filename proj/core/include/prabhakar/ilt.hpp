#pragma once

#include "prabhakar/params.hpp"

#include <complex>

namespace prabhakar {

// Geometry of the parabolic inversion contour s(u) = mu (1 + i u)^2 for
// |u| <= h * n_nodes. The vertex sits at s = mu > 0 and the parabola opens
// into the left half plane, wrapping the branch cut of the transform on the
// negative real axis without touching it.
struct contour_params {
    double mu;       // parabola scale, units 1/time
    double h;        // node spacing in u
    int n_nodes;     // one-sided node count N
    double t_target; // inversion time the contour was balanced for
};

// Error-balanced contour for a single inversion time. With N = n_nodes the
// standard balancing of truncation against discretization gives h = 3/N and
// mu = pi N / (12 t); all three error exponents then meet at exp(-2 pi N/3)
// (Weideman & Trefethen, Math. Comp. 76 (2007)). N is chosen so the
// predicted error is below tol; tol must lie in [1e-15, 1e-2].
contour_params select_contour(double t, double tol);

// e^gamma_{alpha,beta}(t) by trapezoidal quadrature of the Bromwich
// integral along the parabolic contour. beta is unrestricted (this backend
// serves the derivative relation, where beta - k <= 0 occurs); conjugate
// symmetry folds the sum onto u >= 0 so only N+1 transform evaluations are
// needed and the result is assembled as a real number.
eval_result eval_e_ilt(const parameter_triple& p, double t, double tol = 1e-13);

// Same quadrature on an explicitly chosen contour (node-count studies).
eval_result eval_e_ilt(const parameter_triple& p, double t, const contour_params& cp);

namespace detail {

// E(s) = s^(alpha gamma - beta) / (s^alpha + 1)^gamma with principal-branch
// powers. No half-plane restriction here; the public laplace_transform
// front door enforces Re(s) > 0. Throws domain_error if s lands on the
// branch cut or on a zero of s^alpha + 1.
std::complex<double> lt_kernel(const parameter_triple& p, std::complex<double> s);

} // namespace detail

} // namespace prabhakar
