#include "prabhakar/spectral.hpp"
#include "prabhakar/gamma.hpp"
#include "prabhakar/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace prabhakar {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void require_density_domain(const parameter_triple& p)
{
    if (!(p.alpha > 0.0 && p.alpha < 1.0))
        throw domain_error("spectral: requires 0 < alpha < 1 "
                           "(alpha = 1 collapses the branch cut; use the contour backend)");
    if (!(p.beta > 0.0))
        throw domain_error("spectral: requires beta > 0");
}

} // namespace

double theta(double alpha, double r)
{
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw domain_error("theta: requires 0 < alpha <= 1");
    if (!(r >= 0.0))
        throw domain_error("theta: requires r >= 0");
    const double s = sin_pi(alpha);
    const double c = cos_pi(alpha);
    const double ra = std::pow(r, alpha);
    if (std::isinf(ra))
        return std::atan2(s, c); // = alpha*pi, the r -> infinity limit
    // Imaginary part r^alpha sin(alpha pi) >= 0, so atan2 lands in [0, pi].
    return std::atan2(ra * s, ra * c + 1.0);
}

spectral_point spectral_density(const parameter_triple& p, double r)
{
    require_density_domain(p);
    if (!(r > 0.0))
        throw domain_error("spectral_density: requires r > 0");

    const double th = theta(p.alpha, r);
    const double ra = std::pow(r, p.alpha);
    const double xi = ra * ra + 2.0 * ra * cos_pi(p.alpha) + 1.0; // >= (ra-1)^2
    const double k = std::pow(r, p.alpha * p.gamma - p.beta) / kPi
                     * std::sin(p.gamma * th + (p.beta - p.alpha * p.gamma) * kPi)
                     / std::pow(xi, 0.5 * p.gamma);
    return {r, k, th};
}

licm_report check_licm(const parameter_triple& p)
{
    if (p.alpha > 1.0)
        return {false, "alpha > 1"};
    if (p.beta < p.alpha * p.gamma)
        return {false, "beta < alpha*gamma"};
    if (p.beta > 1.0)
        return {false, "beta > 1"};
    return {true, ""};
}

spectral_curve sample_spectral_curve(const parameter_triple& p, const std::vector<double>& r_grid)
{
    if (r_grid.empty())
        throw domain_error("sample_spectral_curve: empty grid");
    spectral_curve curve{p, {}, 0.0};
    curve.points.reserve(r_grid.size());
    double prev = -1.0;
    double min_value = std::numeric_limits<double>::infinity();
    for (double r : r_grid) {
        if (!(r > prev))
            throw domain_error("sample_spectral_curve: r grid must be strictly increasing");
        prev = r;
        curve.points.push_back(spectral_density(p, r));
        min_value = std::min(min_value, curve.points.back().k_value);
    }
    curve.min_value = min_value;
    return curve;
}

eval_result eval_e_spectral(const parameter_triple& p, double t, double tol,
                            const spectral_quad_options& opt)
{
    require_density_domain(p);
    if (!(t > 0.0))
        throw domain_error("eval_e_spectral: requires t > 0");
    if (!(p.beta - p.alpha * p.gamma < 1.0))
        throw domain_error("eval_e_spectral: requires beta - alpha*gamma < 1 "
                           "(integrable endpoint)");
    if (!(tol > 0.0))
        throw domain_error("eval_e_spectral: requires tol > 0");

    const double alpha = p.alpha, beta = p.beta, g = p.gamma;
    const double s = sin_pi(alpha);
    const double c = cos_pi(alpha);
    const double shift = (beta - alpha * g) * kPi;

    // Head (0, 1]: r = u^{1/sigma} turns r^{alpha gamma - beta} dr into
    // du/sigma exactly, leaving a bounded integrand.
    const double sigma = 1.0 + alpha * g - beta;
    auto head = [&](double u) {
        const double r = std::pow(u, 1.0 / sigma);
        const double ra = std::pow(r, alpha);
        const double th = std::atan2(ra * s, ra * c + 1.0);
        const double xi = ra * ra + 2.0 * ra * c + 1.0;
        return std::exp(-r * t) * std::sin(g * th + shift)
               / (std::pow(xi, 0.5 * g) * sigma * kPi);
    };

    detail::quad_options qo;
    qo.abs_tol = 0.25 * tol;
    qo.max_depth = opt.max_depth;
    qo.max_panels = opt.max_panels;
    const auto head_out = detail::integrate_adaptive(head, 0.0, 1.0, qo);

    // Tail [1, R]: |K| <= 2^gamma/pi * r^{-beta} for r^alpha >= 2, so a
    // truncation radius with a certified remainder below tol/10 is cheap.
    double r_cut = std::max(1.0, std::pow(2.0, 1.0 / alpha));
    auto tail_bound = [&](double r) {
        return std::pow(2.0, g) / kPi * std::pow(r, -beta) * std::exp(-r * t) / t;
    };
    while (tail_bound(r_cut) > 0.1 * tol && r_cut < 1e9)
        r_cut *= 1.5;

    auto tail = [&](double r) {
        const double ra = std::pow(r, alpha);
        const double th = std::atan2(ra * s, ra * c + 1.0);
        const double xi = ra * ra + 2.0 * ra * c + 1.0;
        return std::exp(-r * t) * std::pow(r, alpha * g - beta) * std::sin(g * th + shift)
               / (std::pow(xi, 0.5 * g) * kPi);
    };
    const auto tail_out = detail::integrate_adaptive(tail, 1.0, r_cut, qo);

    const double truncation = tail_bound(r_cut);
    const double err = head_out.err_estimate + tail_out.err_estimate + truncation;
    if (!head_out.converged || !tail_out.converged || err > tol)
        throw quadrature_failure("eval_e_spectral: could not certify tol = " + std::to_string(tol)
                                 + " (estimate " + std::to_string(err) + ")");

    return {head_out.value + tail_out.value, method::spectral_quadrature, err};
}

double spectral_normalization(const parameter_triple& p, double tol,
                              const spectral_quad_options& opt)
{
    if (std::fabs(p.beta - 1.0) > 1e-12)
        throw domain_error("spectral_normalization: requires beta = 1");
    if (!check_licm(p).ok)
        throw domain_error("spectral_normalization: requires a LICM triple");
    require_density_domain(p);

    const double alpha = p.alpha, g = p.gamma;
    const double s = sin_pi(alpha);
    const double c = cos_pi(alpha);
    const double sigma = alpha * g; // = 1 + alpha*gamma - beta at beta = 1

    auto head = [&](double u) {
        const double r = std::pow(u, 1.0 / sigma);
        const double ra = std::pow(r, alpha);
        const double th = std::atan2(ra * s, ra * c + 1.0);
        const double xi = ra * ra + 2.0 * ra * c + 1.0;
        return std::sin(g * th + (1.0 - sigma) * kPi) / (std::pow(xi, 0.5 * g) * sigma * kPi);
    };

    // Tail via v = r^{-alpha}. With beta = 1 the sine argument is
    // pi - gamma*delta(v), delta(v) = atan2(v sin(alpha pi), 1 + v cos(alpha pi)),
    // so sin(gamma delta)/v stays bounded (-> gamma sin(alpha pi) at v = 0).
    auto tail = [&](double v) {
        const double q = 1.0 + 2.0 * v * c + v * v;
        const double delta = std::atan2(v * s, 1.0 + v * c);
        return std::sin(g * delta) / v / (std::pow(q, 0.5 * g) * alpha * kPi);
    };

    detail::quad_options qo;
    qo.abs_tol = 0.5 * tol;
    qo.max_depth = opt.max_depth;
    qo.max_panels = opt.max_panels;
    const auto head_out = detail::integrate_adaptive(head, 0.0, 1.0, qo);
    const auto tail_out = detail::integrate_adaptive(tail, 0.0, 1.0, qo);

    const double err = head_out.err_estimate + tail_out.err_estimate;
    if (!head_out.converged || !tail_out.converged || err > tol)
        throw quadrature_failure("spectral_normalization: could not certify tol = "
                                 + std::to_string(tol));
    return head_out.value + tail_out.value;
}

} // namespace prabhakar
