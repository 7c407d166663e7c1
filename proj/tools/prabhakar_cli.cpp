// Command-line front end: evaluates the Prabhakar response function by any
// backend, tabulates spectral distributions and susceptibilities, checks the
// complete-monotonicity condition and emits machine-readable CSV.

#include "prabhakar/prabhakar.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

namespace {

using namespace prabhakar;

// Post-parse usage problems (grid strings, flag combinations): exit 2.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct grid_spec {
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;
    bool log_spacing = false;
};

grid_spec parse_grid(const std::string& text)
{
    grid_spec g;
    std::string spacing;
    size_t pos = 0;
    std::vector<std::string> parts;
    while (pos <= text.size()) {
        const size_t next = text.find(':', pos);
        if (next == std::string::npos) {
            parts.push_back(text.substr(pos));
            break;
        }
        parts.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    if (parts.size() != 4)
        throw usage_error("grid must be min:max:count:spacing, got '" + text + "'");
    try {
        g.lo = std::stod(parts[0]);
        g.hi = std::stod(parts[1]);
        g.count = std::stoi(parts[2]);
    } catch (const std::exception&) {
        throw usage_error("grid must be min:max:count:spacing, got '" + text + "'");
    }
    spacing = parts[3];
    if (spacing == "log")
        g.log_spacing = true;
    else if (spacing != "linear")
        throw usage_error("grid spacing must be 'linear' or 'log', got '" + spacing + "'");
    if (g.count < 2)
        throw usage_error("grid count must be >= 2");
    if (!(g.lo < g.hi))
        throw usage_error("grid requires min < max");
    if (g.log_spacing && !(g.lo > 0.0))
        throw usage_error("log grid requires min > 0");
    return g;
}

std::vector<double> materialize(const grid_spec& g)
{
    std::vector<double> xs(static_cast<size_t>(g.count));
    for (int i = 0; i < g.count; ++i) {
        const double f = static_cast<double>(i) / (g.count - 1);
        if (i == 0)
            xs[i] = g.lo;
        else if (i == g.count - 1)
            xs[i] = g.hi;
        else if (g.log_spacing)
            xs[i] = std::exp(std::log(g.lo) + f * (std::log(g.hi) - std::log(g.lo)));
        else
            xs[i] = g.lo + f * (g.hi - g.lo);
    }
    return xs;
}

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// CSV sink: stdout or --out path, '\n' line endings, 17 significant digits.
class sink {
public:
    explicit sink(const std::string& path)
    {
        if (!path.empty()) {
            file_ = std::fopen(path.c_str(), "wb");
            if (!file_)
                throw usage_error("cannot open output file '" + path + "'");
            owned_ = true;
        } else {
            file_ = stdout;
        }
    }
    ~sink()
    {
        if (owned_)
            std::fclose(file_);
    }
    sink(const sink&) = delete;
    sink& operator=(const sink&) = delete;

    void line(const std::string& s) { std::fprintf(file_, "%s\n", s.c_str()); }

private:
    FILE* file_ = nullptr;
    bool owned_ = false;
};

method parse_method(const std::string& name)
{
    if (name == "auto") return method::auto_select;
    if (name == "series") return method::series;
    if (name == "spectral") return method::spectral_quadrature;
    if (name == "ilt") return method::contour_ilt;
    if (name == "asymptotic") return method::asymptotic;
    throw usage_error("unknown method '" + name + "'");
}

int series_cap_from_env()
{
    const char* v = std::getenv("PRABHAKAR_MAX_TERMS");
    if (!v)
        return 5000;
    char* end = nullptr;
    const long cap = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || cap < 1)
        throw usage_error("PRABHAKAR_MAX_TERMS must be a positive integer, got '"
                          + std::string(v) + "'");
    return static_cast<int>(cap);
}

// Shared flag bundle for subcommands that take a triple.
struct triple_flags {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 1.0;
    bool beta_from_scheme = false;

    void attach(CLI::App* cmd, bool beta_required)
    {
        cmd->add_option("--alpha,-a", alpha, "order parameter alpha > 0")->required();
        auto* beta_opt = cmd->add_option("--beta,-b", beta, "order parameter beta");
        auto* scheme = cmd->add_flag("--beta-from-scheme", beta_from_scheme,
                                     "set beta = alpha*gamma (the relaxation-scheme constraint)");
        beta_opt->excludes(scheme);
        if (beta_required) {
            // one of the two must fix beta; checked post-parse
        }
        cmd->add_option("--gamma,-g", gamma, "order parameter gamma > 0");
    }

    parameter_triple resolve() const
    {
        if (beta_from_scheme)
            return {alpha, alpha * gamma, gamma};
        return {alpha, beta, gamma};
    }

    bool beta_given(const CLI::App* cmd) const
    {
        return beta_from_scheme || cmd->count("--beta") > 0;
    }
};

double checked_tol(double tol)
{
    if (!(tol >= 1e-15 && tol <= 1e-2))
        throw usage_error("tolerance must lie in [1e-15, 1e-2]");
    return tol;
}

int dispatch(int argc, char** argv)
{
    CLI::App app{"Prabhakar function toolkit: three-parameter Mittag-Leffler evaluation, "
                 "spectral distributions, complete-monotonicity checks and non-Debye "
                 "relaxation models"};
    app.require_subcommand(1);

    // ---- eval ----
    auto* eval_cmd = app.add_subcommand("eval", "evaluate e(t) at a single point");
    triple_flags eval_tr;
    eval_tr.attach(eval_cmd, true);
    double eval_t = 0.0, eval_tol = 1e-12;
    std::string eval_method = "auto", eval_out;
    int eval_deriv = 0;
    eval_cmd->add_option("--t,-t", eval_t, "evaluation time t > 0")->required();
    eval_cmd->add_option("--method,-m", eval_method, "auto|series|spectral|ilt|asymptotic");
    eval_cmd->add_option("--tol", eval_tol, "target tolerance");
    eval_cmd->add_option("--derivative,-k", eval_deriv, "derivative order k >= 0");
    eval_cmd->add_option("--out,-o", eval_out, "output path (default stdout)");

    // ---- table ----
    auto* table_cmd = app.add_subcommand("table", "tabulate e(t) on a t grid");
    triple_flags table_tr;
    table_tr.attach(table_cmd, true);
    std::string table_grid, table_method = "auto", table_out;
    double table_tol = 1e-12;
    int table_deriv = 0;
    table_cmd->add_option("--t,-t", table_grid, "t grid min:max:count:spacing")->required();
    table_cmd->add_option("--method,-m", table_method, "auto|series|spectral|ilt|asymptotic");
    table_cmd->add_option("--tol", table_tol, "target tolerance");
    table_cmd->add_option("--derivative,-k", table_deriv, "derivative order k >= 0");
    table_cmd->add_option("--out,-o", table_out, "output path (default stdout)");

    // ---- spectral ----
    auto* spec_cmd = app.add_subcommand("spectral", "tabulate the spectral density K(r)");
    triple_flags spec_tr;
    spec_tr.attach(spec_cmd, true);
    std::string spec_grid, spec_out;
    double spec_tol = 1e-10;
    bool spec_norm = false;
    spec_cmd->add_option("--r,-r", spec_grid, "r grid min:max:count:spacing");
    spec_cmd->add_flag("--normalization", spec_norm,
                       "print integral_0^inf K dr instead of a curve (beta = 1)");
    spec_cmd->add_option("--tol", spec_tol, "tolerance for --normalization");
    spec_cmd->add_option("--out,-o", spec_out, "output path (default stdout)");

    // ---- cm-check ----
    auto* cm_cmd = app.add_subcommand("cm-check",
                                      "test the complete-monotonicity (LICM) condition");
    triple_flags cm_tr;
    cm_tr.attach(cm_cmd, true);
    bool cm_scan = false;
    std::string cm_grid = "1e-3:1e3:2000:log";
    cm_cmd->add_flag("--scan", cm_scan, "also scan the spectral density sign");
    cm_cmd->add_option("--r,-r", cm_grid, "scan grid (default 1e-3:1e3:2000:log)");

    // ---- compare ----
    auto* comp_cmd = app.add_subcommand("compare",
                                        "cross-method comparison (series, spectral, ilt)");
    triple_flags comp_tr;
    comp_tr.attach(comp_cmd, true);
    std::string comp_grid, comp_out;
    double comp_tol = 1e-11;
    comp_cmd->add_option("--t,-t", comp_grid, "t grid min:max:count:spacing")->required();
    comp_cmd->add_option("--tol", comp_tol, "target tolerance");
    comp_cmd->add_option("--out,-o", comp_out, "output path (default stdout)");

    // ---- asymptote ----
    auto* asy_cmd = app.add_subcommand("asymptote",
                                       "large-t expansion against the contour inversion");
    triple_flags asy_tr;
    asy_tr.attach(asy_cmd, true);
    std::string asy_grid, asy_out;
    int asy_terms = 3;
    double asy_tol = 1e-13;
    bool asy_leading = false;
    asy_cmd->add_option("--t,-t", asy_grid, "t grid min:max:count:spacing")->required();
    asy_cmd->add_option("--terms", asy_terms, "expansion terms kept (default 3)");
    asy_cmd->add_flag("--with-leading", asy_leading, "append the dominant-term column");
    asy_cmd->add_option("--tol", asy_tol, "contour tolerance");
    asy_cmd->add_option("--out,-o", asy_out, "output path (default stdout)");

    // ---- model ----
    auto* model_cmd = app.add_subcommand("model",
                                         "relaxation models: response function / susceptibility");
    std::string model_kind, model_tgrid, model_wgrid, model_out, model_method = "auto";
    double model_alpha = 0.0, model_gamma = 1.0, model_tau = 1.0, model_tol = 1e-12;
    model_cmd->add_option("--kind", model_kind,
                          "cole-cole|davidson-cole|havriliak-negami|extended-hn")->required();
    model_cmd->add_option("--alpha,-a", model_alpha, "model alpha")->required();
    model_cmd->add_option("--gamma,-g", model_gamma, "model gamma");
    model_cmd->add_option("--tau", model_tau, "relaxation time tau > 0");
    model_cmd->add_option("--t,-t", model_tgrid, "t grid: emit the response function");
    model_cmd->add_option("--omega,-w", model_wgrid, "omega grid: emit the susceptibility");
    model_cmd->add_option("--method,-m", model_method, "backend for the response function");
    model_cmd->add_option("--tol", model_tol, "target tolerance");
    model_cmd->add_option("--out,-o", model_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    eval_options opt;
    opt.max_terms = series_cap_from_env();

    if (eval_cmd->parsed()) {
        if (!eval_tr.beta_given(eval_cmd))
            throw usage_error("eval: provide --beta or --beta-from-scheme");
        opt.tol = checked_tol(eval_tol);
        const parameter_triple p = eval_tr.resolve();
        sink out(eval_out);
        const eval_result r = derivative(p, eval_t, eval_deriv, parse_method(eval_method), opt);
        out.line("t,value,method,err_estimate");
        out.line(fmt(eval_t) + "," + fmt(r.value) + "," + method_name(r.used) + ","
                 + fmt(r.err_estimate));
        return 0;
    }

    if (table_cmd->parsed()) {
        if (!table_tr.beta_given(table_cmd))
            throw usage_error("table: provide --beta or --beta-from-scheme");
        opt.tol = checked_tol(table_tol);
        const parameter_triple p = table_tr.resolve();
        const method m = parse_method(table_method);
        sink out(table_out);
        out.line("t,value,method,err_estimate");
        for (double t : materialize(parse_grid(table_grid))) {
            const eval_result r = derivative(p, t, table_deriv, m, opt);
            out.line(fmt(t) + "," + fmt(r.value) + "," + method_name(r.used) + ","
                     + fmt(r.err_estimate));
        }
        return 0;
    }

    if (spec_cmd->parsed()) {
        if (!spec_tr.beta_given(spec_cmd))
            throw usage_error("spectral: provide --beta or --beta-from-scheme");
        const parameter_triple p = spec_tr.resolve();
        sink out(spec_out);
        if (spec_norm) {
            out.line("integral");
            out.line(fmt(spectral_normalization(p, checked_tol(spec_tol))));
            return 0;
        }
        if (spec_grid.empty())
            throw usage_error("spectral: provide --r grid or --normalization");
        out.line("r,k_value,theta");
        for (double r : materialize(parse_grid(spec_grid))) {
            const spectral_point pt = spectral_density(p, r);
            out.line(fmt(pt.r) + "," + fmt(pt.k_value) + "," + fmt(pt.theta));
        }
        return 0;
    }

    if (cm_cmd->parsed()) {
        if (!cm_tr.beta_given(cm_cmd))
            throw usage_error("cm-check: provide --beta or --beta-from-scheme");
        const parameter_triple p = cm_tr.resolve();
        const licm_report rep = check_licm(p);
        if (rep.ok) {
            std::printf("LICM\n");
        } else if (rep.violated == "beta < alpha*gamma") {
            std::printf("NOT LICM: beta < alpha*gamma (%g < %.4f)\n", p.beta,
                        p.alpha * p.gamma);
        } else if (rep.violated == "alpha > 1") {
            std::printf("NOT LICM: alpha > 1 (%g > 1)\n", p.alpha);
        } else {
            std::printf("NOT LICM: beta > 1 (%g > 1)\n", p.beta);
        }
        if (cm_scan) {
            if (!(p.alpha > 0.0 && p.alpha < 1.0))
                throw usage_error("cm-check --scan requires 0 < alpha < 1");
            const spectral_curve curve = sample_spectral_curve(p, materialize(parse_grid(cm_grid)));
            double at_r = 0.0;
            for (const auto& pt : curve.points)
                if (pt.k_value == curve.min_value)
                    at_r = pt.r;
            std::printf("density min %s at r=%s\n", fmt(curve.min_value).c_str(),
                        fmt(at_r).c_str());
        }
        return rep.ok ? 0 : 1;
    }

    if (comp_cmd->parsed()) {
        if (!comp_tr.beta_given(comp_cmd))
            throw usage_error("compare: provide --beta or --beta-from-scheme");
        opt.tol = checked_tol(comp_tol);
        const parameter_triple p = comp_tr.resolve();
        sink out(comp_out);
        out.line("t,series,spectral,ilt,abs_diff_series_ilt,abs_diff_spectral_ilt");
        const double nan = std::numeric_limits<double>::quiet_NaN();
        for (double t : materialize(parse_grid(comp_grid))) {
            const double ilt = eval_e_ilt(p, t, opt.tol).value;
            double ser = nan, spe = nan;
            try {
                ser = eval_e(p, t, method::series, opt).value;
            } catch (const non_convergence_error&) {
            }
            try {
                spe = eval_e_spectral(p, t, opt.tol).value;
            } catch (const quadrature_failure&) {
            } catch (const domain_error&) {
            }
            out.line(fmt(t) + "," + fmt(ser) + "," + fmt(spe) + "," + fmt(ilt) + ","
                     + fmt(std::fabs(ser - ilt)) + "," + fmt(std::fabs(spe - ilt)));
        }
        return 0;
    }

    if (asy_cmd->parsed()) {
        if (!asy_tr.beta_given(asy_cmd))
            throw usage_error("asymptote: provide --beta or --beta-from-scheme");
        const parameter_triple p = asy_tr.resolve();
        if (asy_terms < 1)
            throw usage_error("asymptote: --terms must be >= 1");
        if (asy_leading && p.beta - p.alpha * p.gamma < -1e-14)
            throw usage_error("asymptote: --with-leading needs alpha*gamma <= beta");
        const double tol = checked_tol(asy_tol);
        const asymptotic_expansion ex = build_expansion(p, asy_terms);
        sink out(asy_out);
        out.line(asy_leading ? "t,asymptotic,ilt,abs_diff,leading" : "t,asymptotic,ilt,abs_diff");
        for (double t : materialize(parse_grid(asy_grid))) {
            const double a = eval_expansion(ex, t);
            const double i = eval_e_ilt(p, t, tol).value;
            std::string row = fmt(t) + "," + fmt(a) + "," + fmt(i) + "," + fmt(std::fabs(a - i));
            if (asy_leading)
                row += "," + fmt(leading_term(p, t));
            out.line(row);
        }
        return 0;
    }

    if (model_cmd->parsed()) {
        relaxation_kind kind;
        if (model_kind == "cole-cole")
            kind = relaxation_kind::cole_cole;
        else if (model_kind == "davidson-cole")
            kind = relaxation_kind::davidson_cole;
        else if (model_kind == "havriliak-negami")
            kind = relaxation_kind::havriliak_negami;
        else if (model_kind == "extended-hn")
            kind = relaxation_kind::extended_hn;
        else
            throw usage_error("unknown model kind '" + model_kind + "'");
        if (model_kind == "cole-cole" && model_cmd->count("--gamma") == 0)
            model_gamma = 1.0;
        const relaxation_model m = make_model(kind, model_alpha, model_gamma, model_tau);
        if (model_tgrid.empty() == model_wgrid.empty())
            throw usage_error("model: provide exactly one of --t or --omega");
        opt.tol = checked_tol(model_tol);
        sink out(model_out);
        if (!model_tgrid.empty()) {
            const method mm = parse_method(model_method);
            out.line("t,response");
            for (double t : materialize(parse_grid(model_tgrid)))
                out.line(fmt(t) + "," + fmt(response_function(m, t, mm, opt)));
        } else {
            // Sign convention: chi(omega) is the transform at s = -i*omega*tau,
            // principal branch, so Im(chi) >= 0 on omega > 0.
            out.line("# susceptibility chi(omega) = (1 + (-i omega tau)^alpha)^(-gamma); "
                     "s = -i omega convention, Im(chi) >= 0 for omega > 0");
            out.line("omega,chi_real,chi_imag");
            for (double w : materialize(parse_grid(model_wgrid))) {
                const std::complex<double> chi = susceptibility(m, w);
                out.line(fmt(w) + "," + fmt(chi.real()) + "," + fmt(chi.imag()));
            }
        }
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return dispatch(argc, argv);
    } catch (const usage_error& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const pole_error& e) {
        std::fprintf(stderr, "PoleError: %s\n", e.what());
        return 1;
    } catch (const prabhakar::overflow_error& e) {
        std::fprintf(stderr, "OverflowError: %s\n", e.what());
        return 1;
    } catch (const non_convergence_error& e) {
        std::fprintf(stderr, "NonConvergenceError: %s\n", e.what());
        return 1;
    } catch (const quadrature_failure& e) {
        std::fprintf(stderr, "QuadratureFailure: %s\n", e.what());
        return 1;
    } catch (const invalid_model_error& e) {
        std::fprintf(stderr, "InvalidModelError: %s\n", e.what());
        return 1;
    } catch (const prabhakar::domain_error& e) {
        std::fprintf(stderr, "DomainError: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
