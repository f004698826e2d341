// pairprod — command-line surface: single-point rate evaluation, coupling
// sweeps, weak-value inspection and the runtime verification suite.
//
// Exit codes: 0 success, 1 usage error, 2 quadrature failure or degenerate
// selection, 3 verification failures. Diagnostics go to stderr only.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pairprod/pairprod.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitVerifyFailed = 3;

// Default tolerance, overridable through PAIRPROD_TOL.
double default_tolerance() {
    const char* env = std::getenv("PAIRPROD_TOL");
    if (env == nullptr || *env == '\0') return 1e-8;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
        throw CLI::ValidationError("PAIRPROD_TOL", "PAIRPROD_TOL must be a positive real");
    return v;
}

struct RateOptions {
    int dim = 0;
    std::optional<double> a;
    std::optional<double> sqrt_a;
    std::optional<double> mass, charge, field;
    double tol = 1e-8;
    std::string format = "csv";
};

struct SweepOptions {
    std::string dim = "all";
    double sqrt_a_min = 0.0;
    double sqrt_a_max = 0.0;
    int points = 0;
    std::string spacing = "log";
    double tol = 1e-8;
    std::string out;
    std::string format = "csv";
};

struct WeakValueOptions {
    int dim = 0;
    double px = 0.0;
    std::optional<double> py, pz;
    double a = 0.0;
    std::vector<double> spin;  // a_re a_im b_re b_im
};

void emit_rows(const std::vector<pairprod::SweepRow>& rows, double tol, const std::string& format,
               std::ostream& os) {
    if (format == "json")
        os << pairprod::to_json(rows, tol).dump(2) << "\n";
    else
        os << pairprod::to_csv(rows, tol);
}

int run_rate(const RateOptions& opt) {
    const bool has_si = opt.mass && opt.charge && opt.field;
    const bool partial_si = (opt.mass || opt.charge || opt.field) && !has_si;
    const int sources = (opt.a ? 1 : 0) + (opt.sqrt_a ? 1 : 0) + (has_si ? 1 : 0);
    if (sources != 1 || partial_si) {
        std::cerr << "rate: give exactly one of --A, --sqrtA, or the full --mass/--charge/--field triple\n";
        return kExitUsage;
    }

    double a = 0.0;
    if (opt.a) {
        a = *opt.a;
    } else if (opt.sqrt_a) {
        if (!(*opt.sqrt_a >= 0.0)) {
            std::cerr << "rate: --sqrtA must be >= 0\n";
            return kExitUsage;
        }
        a = *opt.sqrt_a * *opt.sqrt_a;
    } else {
        a = pairprod::to_A({*opt.mass, *opt.charge, *opt.field});
    }
    if (!(a >= 0.0) || !std::isfinite(a)) {
        std::cerr << "rate: coupling A must be finite and >= 0\n";
        return kExitUsage;
    }

    const pairprod::SweepRow row = pairprod::evaluate_point(opt.dim, std::sqrt(a), opt.tol);
    emit_rows({row}, opt.tol, opt.format, std::cout);
    if (row.validity_flag == "quadrature_failed") {
        std::cerr << "rate: quadrature did not reach the requested tolerance (achieved "
                  << pairprod::format_g12(row.quad_error) << ")\n";
        return kExitNumerical;
    }
    return kExitOk;
}

int run_sweep(const SweepOptions& opt) {
    if (!(opt.sqrt_a_min > 0.0) || !(opt.sqrt_a_min < opt.sqrt_a_max)) {
        std::cerr << "sweep: requires 0 < --sqrtA-min < --sqrtA-max\n";
        return kExitUsage;
    }
    if (opt.points < 2) {
        std::cerr << "sweep: requires --points >= 2\n";
        return kExitUsage;
    }

    pairprod::SweepSpec spec;
    if (opt.dim == "all")
        spec.dims = {1, 2, 3};
    else
        spec.dims = {std::stoi(opt.dim)};
    spec.sqrtA_min = opt.sqrt_a_min;
    spec.sqrtA_max = opt.sqrt_a_max;
    spec.points = opt.points;
    spec.log_spacing = opt.spacing == "log";
    spec.tol = opt.tol;

    const std::vector<pairprod::SweepRow> rows = pairprod::run_sweep(spec);

    if (opt.out.empty()) {
        emit_rows(rows, opt.tol, opt.format, std::cout);
    } else {
        std::ofstream file(opt.out, std::ios::binary);
        if (!file) {
            std::cerr << "sweep: cannot open '" << opt.out << "' for writing\n";
            return kExitUsage;
        }
        emit_rows(rows, opt.tol, opt.format, file);
        if (!file.good()) {
            std::cerr << "sweep: write to '" << opt.out << "' failed\n";
            return kExitUsage;
        }
    }

    for (const pairprod::SweepRow& r : rows)
        if (r.validity_flag == "quadrature_failed") {
            std::cerr << "sweep: one or more rows are flagged quadrature_failed\n";
            return kExitNumerical;
        }
    return kExitOk;
}

int run_weakvalue(const WeakValueOptions& opt) {
    if (!(opt.px > 0.0)) {
        std::cerr << "weakvalue: requires --px > 0\n";
        return kExitUsage;
    }
    if ((opt.py && opt.dim < 2) || (opt.pz && opt.dim < 3)) {
        std::cerr << "weakvalue: transverse components beyond the dimension\n";
        return kExitUsage;
    }
    if (!opt.spin.empty() && (opt.dim != 3 || opt.spin.size() != 4)) {
        std::cerr << "weakvalue: --spin takes 4 reals (a_re a_im b_re b_im) and needs --dim 3\n";
        return kExitUsage;
    }
    if (!(opt.a >= 0.0) || !std::isfinite(opt.a)) {
        std::cerr << "weakvalue: --A must be finite and >= 0\n";
        return kExitUsage;
    }

    using namespace pairprod;
    const ScaledMomentum p = opt.dim == 1   ? ScaledMomentum::along_x(opt.px)
                             : opt.dim == 2 ? ScaledMomentum::planar(opt.px, opt.py.value_or(0.0))
                                            : ScaledMomentum::spatial(opt.px, opt.py.value_or(0.0),
                                                                      opt.pz.value_or(0.0));
    std::optional<SpinCoeffs> spin;
    if (!opt.spin.empty())
        spin = SpinCoeffs{{opt.spin[0], opt.spin[1]}, {opt.spin[2], opt.spin[3]}};

    const double sqrt_a = std::sqrt(opt.a);
    const TransitionStates t = transition_states(opt.dim, p, sqrt_a, spin);
    const WeakValueResult wv = weak_value(velocity_operator(opt.dim), t.pre, t.post);
    if (wv.degenerate) {
        std::cerr << "weakvalue: degenerate selection, |<post|pre>| = "
                  << format_g12(std::abs(wv.overlap)) << " below the overlap floor\n";
        return kExitNumerical;
    }
    const TransitionKinematics k = kinematics(p, FieldParam{opt.a, opt.dim});

    std::cout << "dim = " << opt.dim << "\n";
    std::cout << "p = (" << format_g12(p.px);
    if (opt.dim >= 2) std::cout << ", " << format_g12(p.py);
    if (opt.dim >= 3) std::cout << ", " << format_g12(p.pz);
    std::cout << ")\n";
    std::cout << "A = " << format_g12(opt.a) << "\n";
    std::cout << "energy = " << format_g12(k.energy) << "\n";
    std::cout << "weak_velocity = " << format_g12(wv.value.real()) << "\n";
    std::cout << "transition_probability = " << format_g12(transition_probability(opt.dim, p)) << "\n";
    std::cout << "transition_time = " << format_g12(k.transition_time) << "\n";
    std::cout << "uncertainty_window = " << format_g12(k.uncertainty_window) << "\n";
    std::cout << "admitted = " << (k.admitted ? "yes" : "no") << "\n";
    std::cout << "selection_residual = " << format_g12(selection_residual(opt.dim, p, sqrt_a, spin))
              << "\n";
    return kExitOk;
}

int run_verify(bool full) {
    const std::vector<pairprod::VerifyCheck> checks = pairprod::run_verification(full);
    int failed = 0;
    for (const pairprod::VerifyCheck& c : checks) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " — " << c.detail << "\n";
        if (!c.passed) ++failed;
    }
    std::cout << "verify: " << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
    if (failed > 0) {
        std::cerr << "verify: " << failed << " check(s) failed\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weak-value pair-production rate model"};
    app.require_subcommand(1);

    RateOptions rate_opt;
    SweepOptions sweep_opt;
    WeakValueOptions wv_opt;
    bool verify_quick = false, verify_full = false;

    try {
        rate_opt.tol = sweep_opt.tol = default_tolerance();
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    CLI::App* rate = app.add_subcommand("rate", "evaluate one coupling point");
    rate->add_option("--dim", rate_opt.dim, "spatial dimension")->required()->check(CLI::Range(1, 3));
    rate->add_option("--A", rate_opt.a, "dimensionless coupling A");
    rate->add_option("--sqrtA", rate_opt.sqrt_a, "sqrt of the coupling");
    rate->add_option("--mass", rate_opt.mass, "particle mass [kg]");
    rate->add_option("--charge", rate_opt.charge, "particle charge [C]");
    rate->add_option("--field", rate_opt.field, "electric field [V/m]");
    rate->add_option("--tol", rate_opt.tol, "absolute quadrature tolerance");
    rate->add_option("--format", rate_opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* sweep = app.add_subcommand("sweep", "sweep the coupling and emit rows per dimension");
    sweep->add_option("--dim", sweep_opt.dim, "dimension or 'all'")
        ->check(CLI::IsMember({"1", "2", "3", "all"}));
    sweep->add_option("--sqrtA-min", sweep_opt.sqrt_a_min, "lower sweep bound")->required();
    sweep->add_option("--sqrtA-max", sweep_opt.sqrt_a_max, "upper sweep bound")->required();
    sweep->add_option("--points", sweep_opt.points, "points per dimension")->required();
    sweep->add_option("--spacing", sweep_opt.spacing, "grid spacing")
        ->check(CLI::IsMember({"log", "linear"}));
    sweep->add_option("--tol", sweep_opt.tol, "absolute quadrature tolerance");
    sweep->add_option("--out", sweep_opt.out, "output path (stdout when omitted)");
    sweep->add_option("--format", sweep_opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* weakvalue = app.add_subcommand("weakvalue", "inspect the transition at one momentum");
    weakvalue->add_option("--dim", wv_opt.dim, "spatial dimension")->required()->check(CLI::Range(1, 3));
    weakvalue->add_option("--px", wv_opt.px, "momentum along the field")->required();
    weakvalue->add_option("--py", wv_opt.py, "transverse momentum");
    weakvalue->add_option("--pz", wv_opt.pz, "second transverse momentum");
    weakvalue->add_option("--A", wv_opt.a, "dimensionless coupling A")->required();
    weakvalue->add_option("--spin", wv_opt.spin, "3+1 spin coefficients: a_re a_im b_re b_im")
        ->expected(4);

    CLI::App* verify = app.add_subcommand("verify", "run the invariant verification suite");
    verify->add_flag("--quick", verify_quick, "reduced sample counts (default)");
    verify->add_flag("--full", verify_full, "acceptance-scale suites and region-oracle comparisons");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (rate->parsed()) return run_rate(rate_opt);
        if (sweep->parsed()) return run_sweep(sweep_opt);
        if (weakvalue->parsed()) return run_weakvalue(wv_opt);
        if (verify->parsed()) {
            if (verify_quick && verify_full) {
                std::cerr << "verify: --quick and --full are mutually exclusive\n";
                return kExitUsage;
            }
            return run_verify(verify_full);
        }
    } catch (const pairprod::QuadratureFailure& e) {
        std::cerr << e.what() << "\n";
        return kExitNumerical;
    } catch (const pairprod::DegenerateSelection& e) {
        std::cerr << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
