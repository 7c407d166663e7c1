#include "prabhakar/asymptotics.hpp"
#include "prabhakar/gamma.hpp"

#include <cmath>

namespace prabhakar {

namespace {
// Degenerate-regime detection tolerates decimal parsing noise.
constexpr double kDegenerateTol = 1e-14;
}

asymptotic_expansion build_expansion(const parameter_triple& p, int n_terms)
{
    if (n_terms < 1)
        throw domain_error("build_expansion: requires n_terms >= 1");

    const double d = p.beta - p.alpha * p.gamma;
    const bool degenerate = std::fabs(d) < kDegenerateTol;

    asymptotic_expansion e{p, {}, degenerate ? asymptotic_regime::degenerate
                                             : asymptotic_regime::general};
    e.terms.reserve(static_cast<size_t>(n_terms));
    for (int i = 0; i < n_terms; ++i) {
        const int k = degenerate ? i + 1 : i;
        const double power = degenerate ? -p.alpha * k - 1.0 : d - p.alpha * k - 1.0;
        const double garg = degenerate ? -p.alpha * k : d - p.alpha * k;
        e.terms.push_back({power, binom_neg_gamma(p.gamma, k) * rgamma(garg)});
    }
    return e;
}

double eval_expansion(const asymptotic_expansion& e, double t)
{
    if (!(t > 0.0))
        throw domain_error("eval_expansion: requires t > 0");
    double sum = 0.0;
    for (const auto& term : e.terms)
        sum += term.coeff * std::pow(t, term.power);
    return sum;
}

double leading_term(const parameter_triple& p, double t)
{
    if (!(t > 0.0))
        throw domain_error("leading_term: requires t > 0");
    const double d = p.beta - p.alpha * p.gamma;
    if (std::fabs(d) < kDegenerateTol)
        return -p.gamma * rgamma(-p.alpha) * std::pow(t, -p.alpha - 1.0);
    if (d < 0.0)
        throw domain_error("leading_term: undefined for alpha*gamma > beta");
    return rgamma(d) * std::pow(t, d - 1.0);
}

} // namespace prabhakar
