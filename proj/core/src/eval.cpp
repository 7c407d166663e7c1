#include "prabhakar/eval.hpp"
#include "prabhakar/asymptotics.hpp"
#include "prabhakar/gamma.hpp"
#include "prabhakar/ilt.hpp"
#include "prabhakar/series.hpp"
#include "prabhakar/spectral.hpp"

#include <cmath>
#include <limits>

namespace prabhakar {

namespace {

eval_result eval_by_series(const parameter_triple& p, double t, const eval_options& opt)
{
    const eval_result r = ml3_series(p, -std::pow(t, p.alpha), opt.max_terms);
    const double pref = std::pow(t, p.beta - 1.0);
    return {pref * r.value, method::series, std::fabs(pref) * r.err_estimate};
}

eval_result eval_by_expansion(const parameter_triple& p, double t, const eval_options& opt)
{
    // Build one spare term so the first omitted one prices the estimate.
    const asymptotic_expansion full = build_expansion(p, opt.asymptotic_terms + 1);
    asymptotic_expansion kept = full;
    kept.terms.pop_back();
    const double omitted = std::fabs(full.terms.back().coeff)
                           * std::pow(t, full.terms.back().power);
    return {eval_expansion(kept, t), method::asymptotic, omitted};
}

} // namespace

eval_result eval_e(const parameter_triple& p, double t, method m, const eval_options& opt)
{
    if (!(t > 0.0))
        throw domain_error("eval_e: requires t > 0 (use eval_e_at_zero for the t = 0 limit)");

    switch (m) {
    case method::series:
        return eval_by_series(p, t, opt);
    case method::contour_ilt:
        return eval_e_ilt(p, t, opt.tol);
    case method::spectral_quadrature:
        return eval_e_spectral(p, t, opt.tol);
    case method::asymptotic:
        return eval_by_expansion(p, t, opt);
    case method::auto_select:
        break;
    }

    if (t <= opt.t_switch) {
        try {
            return eval_by_series(p, t, opt);
        } catch (const non_convergence_error&) {
            // Series unreliable here; the contour backend takes over.
        }
    }
    return eval_e_ilt(p, t, opt.tol);
}

double eval_e_at_zero(const parameter_triple& p)
{
    // e(t) = sum_j (gamma)_j (-1)^j / j! * rgamma(alpha j + beta) * t^{beta-1+alpha j};
    // the first index with a non-vanishing Gamma factor decides the limit.
    for (int j = 0;; ++j) {
        const double rg = rgamma(p.alpha * j + p.beta);
        if (rg == 0.0)
            continue;
        const double power = p.beta - 1.0 + p.alpha * j;
        if (power > 0.0)
            return 0.0;
        const double sign_coeff = (j % 2 == 0 ? 1.0 : -1.0) * rg;
        if (power == 0.0)
            return sign_coeff * pochhammer(p.gamma, j) / std::tgamma(j + 1.0);
        return std::copysign(std::numeric_limits<double>::infinity(), sign_coeff);
    }
}

eval_result derivative(const parameter_triple& p, double t, int k, method m,
                       const eval_options& opt)
{
    if (k < 0)
        throw domain_error("derivative: requires k >= 0");
    return eval_e(parameter_triple(p.alpha, p.beta - k, p.gamma), t, m, opt);
}

std::complex<double> laplace_transform(const parameter_triple& p, std::complex<double> s)
{
    if (!(s.real() > 0.0))
        throw domain_error("laplace_transform: requires Re(s) > 0");
    return detail::lt_kernel(p, s);
}

const char* method_name(method m)
{
    switch (m) {
    case method::auto_select: return "auto";
    case method::series: return "series";
    case method::spectral_quadrature: return "spectral";
    case method::contour_ilt: return "ilt";
    case method::asymptotic: return "asymptotic";
    }
    return "unknown";
}

} // namespace prabhakar
