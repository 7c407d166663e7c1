#include "prabhakar/ilt.hpp"

#include <cfloat>
#include <cmath>

namespace prabhakar {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

namespace detail {

std::complex<double> lt_kernel(const parameter_triple& p, std::complex<double> s)
{
    if (s.imag() == 0.0 && s.real() <= 0.0)
        throw domain_error("lt_kernel: s on the branch cut (negative real axis)");
    const std::complex<double> sa = std::pow(s, p.alpha);
    const std::complex<double> base = sa + 1.0;
    if (base == std::complex<double>(0.0, 0.0))
        throw domain_error("lt_kernel: s^alpha = -1");
    return std::pow(s, p.alpha * p.gamma - p.beta) / std::pow(base, p.gamma);
}

} // namespace detail

contour_params select_contour(double t, double tol)
{
    if (!(t > 0.0))
        throw domain_error("select_contour: requires t > 0");
    if (!(tol >= 1e-15 && tol <= 1e-2))
        throw domain_error("select_contour: tol outside [1e-15, 1e-2]");

    // exp(-2 pi N / 3) <= tol, plus a small safety margin.
    const int n = static_cast<int>(std::ceil(3.0 / (2.0 * kPi) * std::log(1.0 / tol))) + 2;
    return {kPi * n / (12.0 * t), 3.0 / n, n, t};
}

eval_result eval_e_ilt(const parameter_triple& p, double t, double tol)
{
    if (!(t > 0.0))
        throw domain_error("eval_e_ilt: requires t > 0");
    return eval_e_ilt(p, t, select_contour(t, tol));
}

eval_result eval_e_ilt(const parameter_triple& p, double t, const contour_params& cp)
{
    if (!(t > 0.0))
        throw domain_error("eval_e_ilt: requires t > 0");

    // f(t) = (mu h / pi) * [G(0) + 2 sum_{k>=1} Re G(k h)],
    // G(u) = exp(s(u) t) E(s(u)) (1 + i u). Fixed summation order.
    double acc = 0.0;
    for (int k = 0; k <= cp.n_nodes; ++k) {
        const double u = k * cp.h;
        const std::complex<double> iu1(1.0, u);
        const std::complex<double> s = cp.mu * iu1 * iu1;
        const std::complex<double> g = std::exp(s * t) * detail::lt_kernel(p, s) * iu1;
        acc += (k == 0) ? g.real() : 2.0 * g.real();
    }
    const double value = cp.mu * cp.h / kPi * acc;

    // Predicted accuracy: balanced exponent, floored by round-off amplified
    // through exp(mu t) = exp(pi N / 12) at the contour vertex.
    const double err = std::max(std::exp(-2.0 * kPi * cp.n_nodes / 3.0),
                                DBL_EPSILON * std::exp(cp.mu * t));
    return {value, method::contour_ilt, err};
}

} // namespace prabhakar
