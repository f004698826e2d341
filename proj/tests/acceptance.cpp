// Acceptance suite: runs every release criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fails.
//
// Usage: acceptance <path-to-cli> <path-to-golden-json> [--update-golden]
//
// --update-golden rewrites the golden small-coupling coefficient file from the
// current build (maintainer affordance; review the diff before committing).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pairprod/pairprod.hpp"

using namespace pairprod;
using nlohmann::json;

namespace {

int failures = 0;

void report(int criterion, bool passed, const std::string& what, const std::string& detail) {
    std::printf("%s criterion %2d: %s (%s)\n", passed ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.c_str());
    if (!passed) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

// ---- criterion 1: 2+1 massless coefficient ---------------------------------
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    const RateResult r = rate_coefficient_2p1(0.0, 1e-8);
    const double elapsed = seconds_since(t0);
    const double expected = 0.25 * beta(0.5, 0.75);
    const double err = std::fabs(r.coefficient - expected);
    report(1, err < 1e-7 && elapsed < 1.0, "2+1 massless coefficient = B(1/2,3/4)/4 within 1e-7",
           "C2(0) = " + fmt(r.coefficient) + ", |err| = " + fmt(err) + ", " + fmt(elapsed) + " s");
}

// ---- criterion 2: 3+1 massless coefficient ---------------------------------
void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    const RateResult r = rate_coefficient_3p1(0.0, 1e-8);
    const double elapsed = seconds_since(t0);
    const double err = std::fabs(r.coefficient - pi / 8.0);
    report(2, err < 1e-7 && elapsed < 1.0, "3+1 massless coefficient = pi/8 within 1e-7",
           "C3(0) = " + fmt(r.coefficient) + ", |err| = " + fmt(err) + ", " + fmt(elapsed) + " s");
}

// ---- criterion 3: 1+1 averaged massless coefficient -------------------------
void criterion_3() {
    const double closed = avg_rate_coefficient_1p1_massless();
    const double target = 2.0 * std::log(2.0);
    const QuadratureResult q = integrate([](double p) { return 2.0 / (1.0 + p); }, 0.0, 1.0, 1e-12);
    const double err_closed = std::fabs(closed - target);
    const double err_quad = std::fabs(q.value - target);
    report(3, err_closed < 1e-10 && err_quad < 1e-10 && q.converged,
           "1+1 averaged massless coefficient = 2 ln 2 within 1e-10, closed form and quadrature",
           "closed err " + fmt(err_closed) + ", quadrature err " + fmt(err_quad));
}

// ---- criterion 4: 1+1 closed-form decrease at A = 3/8 -----------------------
void criterion_4() {
    const double delta = decrease_rate(1, 0.375).delta_model;
    const double err = std::fabs(delta - 0.125);
    report(4, err < 1e-12, "1+1 decrease at A = 3/8 equals 1/8 within 1e-12",
           "delta_model = " + fmt(delta) + ", |err| = " + fmt(err));
}

// ---- criterion 5: Fig-2 proportionality + regression-locked coefficients ----
void criterion_5(const std::string& golden_path, bool update_golden) {
    const auto t0 = std::chrono::steady_clock::now();
    json measured;
    bool slopes_ok = true;
    std::string detail;
    for (int dim = 1; dim <= 3; ++dim) {
        std::vector<double> xs(15), ys(15);
        for (int i = 0; i < 15; ++i) {
            xs[i] = 1e-3 * std::pow(10.0, i / 14.0);  // sqrt(A) in [1e-3, 1e-2]
            ys[i] = decrease_rate(dim, xs[i] * xs[i], 1e-12).delta_model;
        }
        const SlopeFit fit = fit_loglog(xs, ys);
        const double coeff = std::exp(fit.intercept);  // delta ~ coeff * (sqrtA)^slope
        measured[std::to_string(dim)] = {{"slope", fit.slope}, {"coefficient", coeff}};
        slopes_ok = slopes_ok && std::fabs(fit.slope - 2.0) <= 0.05;
        detail += (dim > 1 ? "; " : "") + std::to_string(dim) + "d slope " + fmt(fit.slope) +
                  ", coeff " + fmt(coeff);
    }
    const double elapsed = seconds_since(t0);

    if (update_golden) {
        std::ofstream out(golden_path);
        out << measured.dump(2) << "\n";
        std::printf("     criterion  5: wrote golden coefficients to %s\n", golden_path.c_str());
    }

    bool regression_ok = true;
    std::ifstream golden_file(golden_path);
    if (!golden_file.good()) {
        regression_ok = false;
        detail += "; golden file missing";
    } else {
        json golden;
        golden_file >> golden;
        for (int dim = 1; dim <= 3; ++dim) {
            const json& g = golden.at(std::to_string(dim));
            const json& m = measured.at(std::to_string(dim));
            const double slope_drift =
                std::fabs(m["slope"].get<double>() - g["slope"].get<double>());
            const double coeff_drift =
                std::fabs(m["coefficient"].get<double>() / g["coefficient"].get<double>() - 1.0);
            if (slope_drift > 1e-6 || coeff_drift > 1e-6) {
                regression_ok = false;
                detail += "; dim " + std::to_string(dim) + " drifted from golden";
            }
        }
    }
    report(5, slopes_ok && regression_ok && elapsed < 60.0,
           "log-log slope of delta_model vs sqrtA equals 2.00 +- 0.05 per dim, coefficients locked",
           detail + "; " + fmt(elapsed) + " s");
}

// ---- criterion 6: oracle equivalence ----------------------------------------
void criterion_6() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int dim : {2, 3})
        for (double a : {0.0, 0.01, 0.1, 1.0}) {
            const double oracle = rate_region_oracle(dim, a, 4'000'000);
            const double reduced = dim == 2 ? rate_coefficient_2p1(a, 1e-10).coefficient
                                            : rate_coefficient_3p1(a, 1e-10).coefficient;
            worst = std::max(worst, std::fabs(oracle - reduced));
        }
    const double elapsed = seconds_since(t0);
    report(6, worst < 1e-3 && elapsed < 300.0,
           "region oracle matches reduced coefficients within 1e-3 for dims {2,3}, A in {0,0.01,0.1,1}",
           "worst |diff| = " + fmt(worst) + ", " + fmt(elapsed) + " s");
}

// ---- criteria 7 and 8: random admitted-momentum suites ----------------------
void criteria_7_8() {
    std::mt19937_64 rng(0xacce97);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst_residual = 0.0;
    double worst_velocity = 0.0;
    for (int dim = 1; dim <= 3; ++dim) {
        for (int batch = 0; batch < 100; ++batch) {
            // 100 momenta per batch; in 3+1 each batch draws 100 fresh spin pairs
            for (int i = 0; i < 100; ++i) {
                const double a = unit(rng);
                const ScaledMomentum p = sample_admitted_bulk(rng, dim, a);
                std::optional<SpinCoeffs> spin;
                if (dim == 3) spin = sample_spin(rng);
                worst_residual =
                    std::max(worst_residual, selection_residual(dim, p, std::sqrt(a), spin));
                const TransitionStates t = transition_states(dim, p, std::sqrt(a), spin);
                const WeakValueResult wv = weak_value(velocity_operator(dim), t.pre, t.post);
                if (wv.degenerate) {
                    worst_velocity = 1.0;
                    continue;
                }
                worst_velocity =
                    std::max(worst_velocity, std::abs(wv.value - scaled_energy(p, a) / p.px));
            }
        }
    }
    report(7, worst_residual < 1e-12,
           "selection residual < 1e-12 over 10^4 admitted momenta per dim with random 3+1 spins",
           "worst residual = " + fmt(worst_residual));
    report(8, worst_velocity < 1e-12, "weak velocity equals E/px within 1e-12 on the same suite",
           "worst |wv - E/px| = " + fmt(worst_velocity));
}

// ---- criterion 9: monotonicity over 100 sorted couplings --------------------
void criterion_9() {
    bool ok = true;
    std::string detail = "all dims monotone";
    for (int dim = 1; dim <= 3 && ok; ++dim) {
        double prev_coeff = std::numeric_limits<double>::infinity();
        double prev_delta = -1.0;
        for (int i = 0; i < 100 && ok; ++i) {
            const double a = 1e-4 * std::pow(4.0 / 1e-4, i / 99.0);
            const double coeff = dim == 1   ? rate_coefficient_1p1(a).coefficient
                                 : dim == 2 ? rate_coefficient_2p1(a, 1e-10).coefficient
                                            : rate_coefficient_3p1(a, 1e-10).coefficient;
            const double delta = decrease_rate(dim, a, 1e-10).delta_model;
            if (!(coeff < prev_coeff) || !(delta > prev_delta) || delta < 0.0 || delta > 1.0) {
                ok = false;
                detail = "violated at dim " + std::to_string(dim) + ", A = " + fmt(a);
            }
            prev_coeff = coeff;
            prev_delta = delta;
        }
    }
    report(9, ok, "C_l strictly decreasing and delta_model strictly increasing over 100 sorted A",
           detail);
}

// ---- criterion 10: byte determinism of the sweep command --------------------
std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_10(const std::string& cli) {
    const std::string out1 = "/tmp/pairprod_sweep_run1.csv";
    const std::string out2 = "/tmp/pairprod_sweep_run2.csv";
    const std::string flags = " sweep --dim all --sqrtA-min 0.001 --sqrtA-max 1 --points 31 --out ";
    const int rc1 = std::system((cli + flags + out1 + " 2>/dev/null").c_str());
    const int rc2 = std::system((cli + flags + out2 + " 2>/dev/null").c_str());
    const std::string bytes1 = slurp(out1);
    const std::string bytes2 = slurp(out2);

    int data_rows = 0;
    std::istringstream lines(bytes1);
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty() && line[0] != '#' && line.compare(0, 4, "dim,") != 0) ++data_rows;

    const bool ok = rc1 == 0 && rc2 == 0 && !bytes1.empty() && bytes1 == bytes2 && data_rows == 93;
    report(10, ok, "two identical sweep invocations produce identical bytes (93 data rows)",
           "fnv1a " + std::to_string(fnv1a(bytes1)) + " vs " + std::to_string(fnv1a(bytes2)) +
               ", rows " + std::to_string(data_rows));
    std::remove(out1.c_str());
    std::remove(out2.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: acceptance <cli-path> <golden-json> [--update-golden]\n");
        return 2;
    }
    const std::string cli = argv[1];
    const std::string golden = argv[2];
    const bool update_golden = argc > 3 && std::string(argv[3]) == "--update-golden";

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5(golden, update_golden);
    criterion_6();
    criteria_7_8();
    criterion_9();
    criterion_10(cli);

    if (failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
