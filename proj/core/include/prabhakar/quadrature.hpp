#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <utility>
#include <vector>

namespace prabhakar::detail {

struct quad_options {
    double abs_tol = 1e-12;
    int max_depth = 40;      // halvings of the original interval
    long max_panels = 20000; // total panel budget
};

struct quad_outcome {
    double value = 0.0;
    double err_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

// One 15-point Gauss--Kronrod panel on [a, b]. Nodes and weights are the
// QUADPACK dqk15 constants; the error estimate uses the QUADPACK rescaling
// of |K15 - G7| against the deviation integral resasc.
template <class F>
void gk15_panel(F&& f, double a, double b, double& value, double& err)
{
    static constexpr double xgk[8] = {
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144838258730,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
        0.0,
    };
    static constexpr double wgk[8] = {
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714,
    };
    static constexpr double wg[4] = {
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
        0.417959183673469387755102040816327,
    };

    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    const double fc = f(c);
    double resg = wg[3] * fc;
    double resk = wgk[7] * fc;
    double resabs = std::fabs(resk);
    double fv1[7], fv2[7];

    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        fv1[j] = f(c - dx);
        fv2[j] = f(c + dx);
        const double fsum = fv1[j] + fv2[j];
        if (j % 2 == 1)
            resg += wg[j / 2] * fsum;
        resk += wgk[j] * fsum;
        resabs += wgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
    }

    const double reskh = 0.5 * resk;
    double resasc = wgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += wgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));

    value = resk * h;
    resasc *= std::fabs(h);
    resabs *= std::fabs(h);

    err = std::fabs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double uflow = 1e-290;
    const double round = 50.0 * 2.220446049250313e-16 * resabs;
    if (round > uflow)
        err = std::max(err, round);
}

// Globally adaptive bisection: repeatedly split the panel with the largest
// error estimate until the summed estimate meets abs_tol or the budget runs
// out. Deterministic for a given integrand and options.
template <class F>
quad_outcome integrate_adaptive(F&& f, double a, double b, const quad_options& opt = {})
{
    struct segment {
        double a, b, value, err;
        int depth;
        bool operator<(const segment& o) const { return err < o.err; }
    };

    quad_outcome out;
    if (a == b) {
        out.converged = true;
        return out;
    }

    std::priority_queue<segment> queue;
    double v0, e0;
    gk15_panel(f, a, b, v0, e0);
    out.evaluations = 15;
    queue.push({a, b, v0, e0, 0});
    double total_value = v0;
    double total_err = e0;
    long panels = 1;

    while (total_err > opt.abs_tol && panels < opt.max_panels && !queue.empty()) {
        segment s = queue.top();
        queue.pop();
        if (s.depth >= opt.max_depth)
            continue; // cannot refine further; its estimate stays in the total

        const double m = 0.5 * (s.a + s.b);
        double vl, el, vr, er;
        gk15_panel(f, s.a, m, vl, el);
        gk15_panel(f, m, s.b, vr, er);
        out.evaluations += 30;
        ++panels;

        total_value += vl + vr - s.value;
        total_err += el + er - s.err;
        queue.push({s.a, m, vl, el, s.depth + 1});
        queue.push({m, s.b, vr, er, s.depth + 1});
    }

    out.value = total_value;
    out.err_estimate = total_err;
    out.converged = total_err <= opt.abs_tol;
    return out;
}

} // namespace prabhakar::detail
