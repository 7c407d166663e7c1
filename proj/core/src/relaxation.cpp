#include "prabhakar/relaxation.hpp"
#include "prabhakar/eval.hpp"

#include <cmath>
#include <string>

namespace prabhakar {

relaxation_model make_model(relaxation_kind kind, double alpha, double gamma, double tau)
{
    if (!(tau > 0.0))
        throw invalid_model_error("relaxation model: requires tau > 0");

    const auto fail = [&](const char* range) {
        throw invalid_model_error(std::string(relaxation_kind_name(kind)) + ": requires " + range);
    };

    switch (kind) {
    case relaxation_kind::cole_cole:
        if (!(alpha > 0.0 && alpha < 1.0) || gamma != 1.0)
            fail("0 < alpha < 1 and gamma = 1");
        break;
    case relaxation_kind::davidson_cole:
        if (alpha != 1.0 || !(gamma > 0.0 && gamma < 1.0))
            fail("alpha = 1 and 0 < gamma < 1");
        break;
    case relaxation_kind::havriliak_negami:
        if (!(alpha > 0.0 && alpha < 1.0) || !(gamma > 0.0 && gamma < 1.0))
            fail("0 < alpha < 1 and 0 < gamma < 1");
        break;
    case relaxation_kind::extended_hn:
        if (!(alpha > 0.0 && alpha < 1.0) || !(gamma >= 1.0 && gamma < 1.0 / alpha))
            fail("0 < alpha < 1 and 1 <= gamma < 1/alpha");
        break;
    }
    return {kind, alpha, gamma, tau};
}

const char* relaxation_kind_name(relaxation_kind k)
{
    switch (k) {
    case relaxation_kind::cole_cole: return "cole-cole";
    case relaxation_kind::davidson_cole: return "davidson-cole";
    case relaxation_kind::havriliak_negami: return "havriliak-negami";
    case relaxation_kind::extended_hn: return "extended-hn";
    }
    return "unknown";
}

parameter_triple to_triple(const relaxation_model& m)
{
    // Re-validate so triples derived from hand-built structs stay honest.
    make_model(m.kind, m.alpha, m.gamma, m.tau);
    return {m.alpha, m.alpha * m.gamma, m.gamma};
}

double response_function(const relaxation_model& m, double t, method backend,
                         const eval_options& opt)
{
    if (!(t > 0.0))
        throw domain_error("response_function: requires t > 0");
    return eval_e(to_triple(m), t / m.tau, backend, opt).value / m.tau;
}

std::complex<double> susceptibility(const relaxation_model& m, double omega)
{
    if (!(omega >= 0.0))
        throw domain_error("susceptibility: requires omega >= 0");
    make_model(m.kind, m.alpha, m.gamma, m.tau);
    if (omega == 0.0)
        return {1.0, 0.0}; // static limit, sidestepping the 0^alpha branch point
    const std::complex<double> minus_i_wt(0.0, -omega * m.tau);
    return std::pow(1.0 + std::pow(minus_i_wt, m.alpha), -m.gamma);
}

} // namespace prabhakar
