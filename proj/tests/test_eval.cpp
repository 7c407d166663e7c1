#include "prabhakar/eval.hpp"
#include "prabhakar/asymptotics.hpp"
#include "prabhakar/gamma.hpp"
#include "prabhakar/series.hpp"
#include "prabhakar/spectral.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <future>
#include <vector>

using namespace prabhakar;

TEST_CASE("eval_e exponential case and domain checks")
{
    const parameter_triple p(1.0, 1.0, 1.0);
    CHECK(std::fabs(eval_e(p, 1.0, method::series).value - 0.36787944117144233) <= 1e-15);
    CHECK_THROWS_AS(eval_e(p, 0.0), domain_error);
    CHECK_THROWS_AS(eval_e(p, -2.0), domain_error);
}

TEST_CASE("auto dispatch agrees with the spectral route away from the origin")
{
    const parameter_triple p(0.7, 0.9, 1.1);
    const double auto_value = eval_e(p, 5.0).value;
    const double spectral_value = eval_e_spectral(p, 5.0, 1e-11).value;
    CHECK(std::fabs(auto_value - spectral_value) <= 1e-10);
}

TEST_CASE("auto dispatch tracks the large-t expansion")
{
    // Where the third-order tail correction is negligible the agreement is
    // sharp; where it is not, the residual is the known t^{-3 alpha} scale.
    const parameter_triple strong(0.9, 0.97, 0.3);
    const double v1 = eval_e(strong, 100.0).value;
    const double a1 = eval_expansion(build_expansion(strong, 3), 100.0);
    CHECK(std::fabs(a1 - v1) <= 1e-6 * std::fabs(v1));

    const parameter_triple slow(0.5, 0.9, 1.6);
    const double v2 = eval_e(slow, 100.0).value;
    const double a2 = eval_expansion(build_expansion(slow, 3), 100.0);
    // Fourth term ~ 0.94 t^{-2.6}: relative gap ~ 6e-3 at t = 100.
    CHECK(std::fabs(a2 - v2) <= 1e-2 * std::fabs(v2));
    CHECK(std::fabs(a2 - v2) >= 1e-4 * std::fabs(v2));
}

TEST_CASE("value at t = 0 follows the beta cases")
{
    CHECK(eval_e_at_zero(parameter_triple(0.5, 1.0, 1.0)) == 1.0);
    CHECK(eval_e_at_zero(parameter_triple(0.5, 1.0, 2.0)) == 1.0);
    CHECK(eval_e_at_zero(parameter_triple(0.5, 2.0, 1.0)) == 0.0);
    const double v = eval_e_at_zero(parameter_triple(0.7, 0.91, 1.3));
    CHECK(std::isinf(v));
    CHECK(v > 0.0);
    // beta <= 0: the first surviving series coefficient carries the sign.
    const double w = eval_e_at_zero(parameter_triple(0.5, 0.0, 1.0));
    CHECK(std::isinf(w));
    CHECK(w < 0.0);
}

TEST_CASE("derivative shift identity against the exponential")
{
    const parameter_triple p(1.0, 1.0, 1.0);
    CHECK(std::fabs(derivative(p, 1.0, 1).value + 0.36787944117144233) <= 1e-13);
    CHECK(std::fabs(derivative(p, 0.5, 4).value - std::exp(-0.5)) <= 1e-13);
    CHECK_THROWS_AS(derivative(p, 1.0, -1), domain_error);
}

TEST_CASE("derivative of order zero is eval_e itself")
{
    const parameter_triple p(0.7, 0.91, 1.3);
    for (double t : {0.3, 1.0, 7.0})
        CHECK(derivative(p, t, 0).value == eval_e(p, t).value);
}

TEST_CASE("derivative agrees with central finite differences")
{
    const parameter_triple p(0.7, 0.91, 1.3);
    const eval_options tight{.tol = 1e-15};
    auto f = [&](double t) { return eval_e(p, t, method::contour_ilt, tight).value; };

    // Step sizes sit at the round-off/truncation balance of each stencil.
    for (double t : testsupport::linear_grid(0.5, 5.0, 10)) {
        const double d1 = derivative(p, t, 1).value;
        CHECK(std::fabs(testsupport::central_diff(f, t, 1, 1e-4) - d1)
              <= 1e-5 * std::fabs(d1));
        const double d2 = derivative(p, t, 2).value;
        CHECK(std::fabs(testsupport::central_diff(f, t, 2, 1e-3) - d2)
              <= 1e-5 * std::fabs(d2));
    }
    const double d3 = derivative(p, 2.0, 3).value;
    CHECK(std::fabs(testsupport::central_diff(f, 2.0, 3, 2e-3) - d3)
          <= 1e-5 * std::fabs(d3));
}

TEST_CASE("alternating derivative signs under the LICM condition")
{
    const parameter_triple p(0.7, 0.91, 1.3);
    REQUIRE(p.is_licm());
    for (int k = 0; k <= 5; ++k)
        for (double t : testsupport::log_grid(1e-2, 1e3, 30)) {
            const double v = (k % 2 == 0 ? 1.0 : -1.0) * derivative(p, t, k).value;
            CHECK(v >= -1e-12);
        }
}

TEST_CASE("series and contour back ends agree near the origin")
{
    for (const parameter_triple p : {parameter_triple(0.5, 0.9, 1.6),
                                     parameter_triple(0.7, 0.9, 1.1)})
        for (double t : testsupport::linear_grid(0.08, 2.0, 25)) {
            const double s = eval_e(p, t, method::series).value;
            const double c = eval_e(p, t, method::contour_ilt, {.tol = 1e-13}).value;
            CHECK(std::fabs(s - c) <= 1e-11);
        }
}

TEST_CASE("laplace_transform closed points and domain")
{
    CHECK(std::fabs(laplace_transform(parameter_triple(1, 1, 1), {1.0, 0.0}).real() - 0.5)
          <= 1e-15);
    const std::complex<double> v = laplace_transform(parameter_triple(0.5, 0.5, 1.0), {4.0, 0.0});
    CHECK(std::fabs(v.real() - 1.0 / 3.0) <= 1e-15);
    CHECK(std::fabs(v.imag()) <= 1e-16);
    CHECK_THROWS_AS(laplace_transform(parameter_triple(1, 1, 1), {-1.0, 2.0}), domain_error);
    CHECK_THROWS_AS(laplace_transform(parameter_triple(1, 1, 1), {0.0, 1.0}), domain_error);
}

TEST_CASE("transform is the forward integral of the response function")
{
    // Composite quadrature oracle: singularity-absorbing substitution
    // t = u^{1/beta} on the first panel, then plain adaptive panels out to
    // the exponential cutoff. Checked at a real transform point.
    const parameter_triple p(0.7, 0.9, 1.1);
    const double s = 2.0;

    auto integrand = [&](double t) { return std::exp(-s * t) * eval_e(p, t).value; };
    // Head int_0^1 e^{-st} t^{b-1} E(-t^a) dt with t = u^{1/b}.
    auto head = [&](double u) {
        const double t = std::pow(u, 1.0 / p.beta);
        return std::exp(-s * t) * ml3_series(p, -std::pow(t, p.alpha)).value / p.beta;
    };
    double total = 0.0;
    const int n_head = 4000;
    for (int i = 0; i < n_head; ++i) {
        const double a = static_cast<double>(i) / n_head;
        const double b = static_cast<double>(i + 1) / n_head;
        const double m = 0.5 * (a + b);
        total += (head(a) + 4.0 * head(m) + head(b)) * (b - a) / 6.0;
    }
    const double t_max = 24.0;
    const int n_tail = 6000;
    for (int i = 0; i < n_tail; ++i) {
        const double a = 1.0 + (t_max - 1.0) * i / n_tail;
        const double b = 1.0 + (t_max - 1.0) * (i + 1) / n_tail;
        const double m = 0.5 * (a + b);
        total += (integrand(a) + 4.0 * integrand(m) + integrand(b)) * (b - a) / 6.0;
    }
    const double closed = laplace_transform(p, {s, 0.0}).real();
    CHECK(std::fabs(total - closed) <= 1e-8);
}

TEST_CASE("grid evaluation is thread-safe and deterministic")
{
    const parameter_triple p(0.7, 0.9, 1.1);
    const std::vector<double> ts = testsupport::log_grid(0.1, 50.0, 32);
    std::vector<double> serial;
    serial.reserve(ts.size());
    for (double t : ts)
        serial.push_back(eval_e(p, t).value);

    std::vector<std::future<double>> jobs;
    jobs.reserve(ts.size());
    for (double t : ts)
        jobs.push_back(std::async(std::launch::async, [&p, t] { return eval_e(p, t).value; }));
    for (size_t i = 0; i < ts.size(); ++i)
        CHECK(jobs[i].get() == serial[i]);
}
