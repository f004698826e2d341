// Runtime verification suite behind the `verify` CLI command: every module's
// invariants as named pass/fail checks. The quick tier runs reduced sample
// counts; the full tier runs the acceptance-scale random suites and the
// region-oracle comparisons.
#pragma once

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "quadrature.hpp"
#include "rates.hpp"
#include "region_oracle.hpp"
#include "special_functions.hpp"
#include "spinor.hpp"
#include "transition.hpp"

namespace pairprod {

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;  // in log space
};

// Least-squares line through (log x_i, log y_i).
inline SlopeFit fit_loglog(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(xs[i]);
        const double ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    SlopeFit f;
    f.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    f.intercept = (sy - f.slope * sx) / n;
    return f;
}

// Uniform sample from the bulk of the admission region: px in [u/4, u/2],
// transverse spread across the full admitted extent at that px. Near px -> 0
// the weak values themselves diverge like 1/px^2 and absolute double-precision
// bounds lose meaning; that edge is covered by relative-residual unit tests.
inline ScaledMomentum sample_admitted_bulk(std::mt19937_64& rng, int dim, double a) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double u = upper_bound_u(a);
    const double px = (0.25 + 0.25 * unit(rng)) * u;
    const double cap = 1.0 / (16.0 * px * px) - px * px - a;
    const double extent = cap > 0.0 ? std::sqrt(cap) : 0.0;
    if (dim == 1) return ScaledMomentum::along_x(px);
    if (dim == 2) {
        const double py = (2.0 * unit(rng) - 1.0) * extent;
        return ScaledMomentum::planar(px, py);
    }
    const double r = extent * std::sqrt(unit(rng));
    const double phi = 2.0 * pi * unit(rng);
    return ScaledMomentum::spatial(px, r * std::cos(phi), r * std::sin(phi));
}

inline SpinCoeffs sample_spin(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    SpinCoeffs sc;
    sc.a = {gauss(rng), gauss(rng)};
    sc.b = {gauss(rng), gauss(rng)};
    const double n = std::sqrt(std::norm(sc.a) + std::norm(sc.b));
    sc.a /= n;
    sc.b /= n;
    return sc;
}

namespace verify_detail {

inline std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

inline VerifyCheck check_special_functions() {
    double worst = std::fabs(beta(1.0, 1.0) - 1.0);
    worst = std::max(worst, std::fabs(beta(0.5, 0.5) - pi) / pi);
    for (double x : {0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.7, 10.0, 25.0, 50.0}) {
        const double ref = std::lgamma(x);
        const double got = ln_gamma(x);
        worst = std::max(worst, std::fabs(got - ref) / std::max(1.0, std::fabs(ref)));
    }
    return {"special-functions-reference", worst < 1e-12, "worst rel error " + fmt(worst)};
}

inline VerifyCheck check_quadrature() {
    double worst = 0.0;
    worst = std::max(worst, std::fabs(integrate([](double) { return 1.0; }, 0.0, 1.0, 1e-12).value - 1.0));
    worst = std::max(worst, std::fabs(integrate([](double s) { return s > 0 ? -4.0 * s * std::log(s) : 0.0; },
                                                0.0, 1.0, 1e-12).value - 1.0));
    worst = std::max(worst, std::fabs(integrate([](double p) { return 2.0 / (1.0 + p); }, 0.0, 1.0, 1e-12).value -
                                      avg_rate_coefficient_1p1_massless()));
    worst = std::max(worst, std::fabs(integrate_with_endpoint_powers(
                                          [](double s) { return 1.0 / std::sqrt(s); }, 0.0, 1.0, -0.5, 0.0,
                                          1e-12).value - 2.0));
    return {"quadrature-known-integrals", worst < 1e-10, "worst abs error " + fmt(worst)};
}

inline VerifyCheck check_u_quartic() {
    double worst = 0.0;
    for (double a : {0.0, 1e-8, 1e-3, 0.1, 0.375, 1.0, 10.0, 100.0, 1e6}) {
        const double u = upper_bound_u(a);
        const double u2 = u * u;
        worst = std::max(worst, std::fabs(u2 * u2 + 4.0 * a * u2 - 1.0));
    }
    return {"u-quartic-identity", worst < 1e-14, "worst residual " + fmt(worst)};
}

inline VerifyCheck check_endpoint_identities() {
    double worst = 0.0;
    double worst_arctan = 0.0;  // the sqrt halves the attainable endpoint precision
    for (double a : {0.0, 0.1, 1.0}) {
        const double u = upper_bound_u(a);
        const double u2 = u * u;
        // arctan argument numerator and (log argument - 1) at s = u
        worst = std::max(worst, std::fabs(1.0 - 4.0 * a * u2 - u2 * u2));
        worst = std::max(worst, std::fabs((1.0 - 4.0 * a * u2) / (u2 * u2) - 1.0));
        worst = std::max(worst, std::fabs(rate_detail::log_integrand_3p1(u, a)));
        worst_arctan = std::max(worst_arctan, std::fabs(rate_detail::arctan_integrand_2p1(u, a)));
    }
    return {"endpoint-identities", worst < 1e-12 && worst_arctan < 1e-7,
            "worst residual " + fmt(worst) + ", arctan endpoint " + fmt(worst_arctan)};
}

inline VerifyCheck check_eigenstates(int samples) {
    std::mt19937_64 rng(0x5eed0001);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const int dim = 1 + static_cast<int>(i % 3);
        const double a = 2.0 * unit(rng);
        ScaledMomentum p = dim == 1   ? ScaledMomentum::along_x(3.0 * unit(rng))
                           : dim == 2 ? ScaledMomentum::planar(3.0 * (unit(rng) - 0.3), 3.0 * (unit(rng) - 0.5))
                                      : ScaledMomentum::spatial(3.0 * (unit(rng) - 0.3),
                                                                3.0 * (unit(rng) - 0.5),
                                                                3.0 * (unit(rng) - 0.5));
        if (p.squared() + a == 0.0) continue;
        const EnergySign sign = (i % 2 == 0) ? EnergySign::positive : EnergySign::negative;
        std::optional<SpinCoeffs> spin;
        if (dim == 3) spin = sample_spin(rng);
        const Chirality chi = build_chirality(dim, sign, p, std::sqrt(a), spin);

        const SpinorMatrix h = hamiltonian_matrix(dim, p, std::sqrt(a));
        const auto hchi = spinor_detail::apply(h, chi.components);
        const double lambda = sign_value(sign) * scaled_energy(p, a);
        double residual2 = 0.0, norm2 = 0.0;
        for (int c = 0; c < chi.ncomp; ++c) {
            residual2 += std::norm(hchi[c] - lambda * chi.components[c]);
            norm2 += std::norm(chi.components[c]);
        }
        worst = std::max(worst, std::sqrt(residual2));
        worst = std::max(worst, std::fabs(std::sqrt(norm2) - 1.0));
    }
    return {"chirality-eigenstate", worst < 1e-12, "worst residual " + fmt(worst)};
}

inline VerifyCheck check_weak_velocity(int samples) {
    std::mt19937_64 rng(0x5eed0002);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const int dim = 1 + static_cast<int>(i % 3);
        const double a = unit(rng);
        const ScaledMomentum p = sample_admitted_bulk(rng, dim, a);
        std::optional<SpinCoeffs> spin;
        if (dim == 3) spin = sample_spin(rng);
        const TransitionStates t = transition_states(dim, p, std::sqrt(a), spin);
        const WeakValueResult wv = weak_value(velocity_operator(dim), t.pre, t.post);
        if (wv.degenerate) return {"weak-velocity-law", false, "unexpected degenerate selection"};
        const double expected = scaled_energy(p, a) / p.px;
        worst = std::max(worst, std::abs(wv.value - expected));
    }
    return {"weak-velocity-law", worst < 1e-12, "worst |wv - E/px| " + fmt(worst)};
}

inline VerifyCheck check_selection_rule(int samples, int spin_pairs) {
    std::mt19937_64 rng(0x5eed0003);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double a = unit(rng);
        worst = std::max(worst, selection_residual(1, sample_admitted_bulk(rng, 1, a), std::sqrt(a)));
        worst = std::max(worst, selection_residual(2, sample_admitted_bulk(rng, 2, a), std::sqrt(a)));
        worst = std::max(worst,
                         selection_residual(3, sample_admitted_bulk(rng, 3, a), std::sqrt(a), sample_spin(rng)));
    }
    // spin-coefficient invariance on one fixed momentum per batch
    for (int i = 0; i < spin_pairs; ++i) {
        const double a = 0.2;
        const ScaledMomentum p = ScaledMomentum::spatial(1.0, 0.5, 0.5);
        worst = std::max(worst, selection_residual(3, p, std::sqrt(a), sample_spin(rng)));
    }
    return {"selection-rule", worst < 1e-12, "worst residual " + fmt(worst)};
}

inline VerifyCheck check_velocity_consistency(int samples) {
    std::mt19937_64 rng(0x5eed0004);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const int dim = 1 + static_cast<int>(i % 3);
        const double a = unit(rng);
        const ScaledMomentum p = sample_admitted_bulk(rng, dim, a);
        worst = std::max(worst, velocity_consistency_residual(dim, p, FieldParam{a, dim}));
    }
    return {"velocity-consistency", worst < 1e-12, "worst residual " + fmt(worst)};
}

inline VerifyCheck check_region_boundary() {
    bool ok = true;
    std::string detail = "ok";

    // Exact boundary points of the admission inequality (boundary included).
    ok = ok && kinematics(ScaledMomentum::planar(0.5, 0.0), FieldParam{0.0, 2}).admitted;
    ok = ok && !kinematics(ScaledMomentum::planar(0.6, 0.0), FieldParam{0.0, 2}).admitted;
    const double px_boundary = 0.5 * upper_bound_u(0.375);
    ok = ok && kinematics(ScaledMomentum::along_x(px_boundary), FieldParam{0.375, 1}).admitted;
    ok = ok && !kinematics(ScaledMomentum::along_x(px_boundary * 1.0001), FieldParam{0.375, 1}).admitted;
    if (!ok) detail = "boundary membership wrong";

    // admitted <=> 4 px E <= 1 (algebraic identity with the quartic form)
    std::mt19937_64 rng(0x5eed0005);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 1000 && ok; ++i) {
        const double a = 2.0 * unit(rng);
        const ScaledMomentum p = ScaledMomentum::planar(0.7 * unit(rng) + 1e-3, 2.0 * (unit(rng) - 0.5));
        const TransitionKinematics k = kinematics(p, FieldParam{a, 2});
        const bool via_times = k.transition_time <= k.uncertainty_window;
        const bool via_product = 4.0 * p.px * k.energy <= 1.0;
        if (k.admitted != via_times || k.admitted != via_product) {
            ok = false;
            detail = "admission predicate disagrees with dt <= uncertainty window";
        }
    }
    return {"region-boundary", ok, detail};
}

inline VerifyCheck check_transition_probability() {
    double worst = std::fabs(transition_probability(2, ScaledMomentum::planar(1.0, 1.0)) - 0.5);
    worst = std::max(worst,
                     std::fabs(transition_probability(3, ScaledMomentum::spatial(1.0, 1.0, 1.0)) - 1.0 / 3.0));
    worst = std::max(worst, std::fabs(transition_probability(2, ScaledMomentum::planar(1.0, 0.0)) - 1.0));
    worst = std::max(worst, std::fabs(transition_probability(1, ScaledMomentum::along_x(0.3)) - 1.0));
    // invariance under transverse rotation in 3+1
    std::mt19937_64 rng(0x5eed0006);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double px = 0.1 + unit(rng), r = unit(rng), phi0 = 2.0 * pi * unit(rng), phi1 = 2.0 * pi * unit(rng);
        const double t0 = transition_probability(
            3, ScaledMomentum::spatial(px, r * std::cos(phi0), r * std::sin(phi0)));
        const double t1 = transition_probability(
            3, ScaledMomentum::spatial(px, r * std::cos(phi1), r * std::sin(phi1)));
        worst = std::max(worst, std::fabs(t0 - t1));
    }
    return {"transition-probability", worst < 1e-14, "worst deviation " + fmt(worst)};
}

inline VerifyCheck check_closed_forms_1p1() {
    double worst =
        std::fabs(integrate([](double p) { return 2.0 / (1.0 + p); }, 0.0, 1.0, 1e-12).value -
                  avg_rate_coefficient_1p1_massless());
    worst = std::max(worst, std::fabs(decrease_rate(1, 0.375).delta_model - 0.125));
    worst = std::max(worst, std::fabs(avg_transition_time_1p1(0.0) - 0.5));
    worst = std::max(worst, std::fabs(rate_difference_1p1(0.375) - 0.25 * std::log(2.0)));
    return {"closed-forms-1p1", worst < 1e-10, "worst abs error " + fmt(worst)};
}

inline VerifyCheck check_massless_coefficients() {
    const double c2 = rate_coefficient_2p1(0.0, 1e-8).coefficient;
    const double c3 = rate_coefficient_3p1(0.0, 1e-8).coefficient;
    const double e2 = std::fabs(c2 - 0.25 * beta(0.5, 0.75));
    const double e3 = std::fabs(c3 - pi / 8.0);
    const double worst = std::max(e2, e3);
    return {"massless-coefficients", worst < 1e-7, "worst abs error " + fmt(worst)};
}

inline VerifyCheck check_monotonicity(int n_points) {
    bool ok = true;
    std::string detail = "ok";
    for (int dim = 1; dim <= 3 && ok; ++dim) {
        double prev_c = std::numeric_limits<double>::infinity();
        double prev_d = -1.0;
        for (int i = 0; i < n_points && ok; ++i) {
            const double a = 1e-4 * std::pow(4.0 / 1e-4, static_cast<double>(i) / (n_points - 1));
            const DecreaseResult d = decrease_rate(dim, a, 1e-10);
            const double c = dim == 1   ? rate_coefficient_1p1(a).coefficient
                             : dim == 2 ? rate_coefficient_2p1(a, 1e-10).coefficient
                                        : rate_coefficient_3p1(a, 1e-10).coefficient;
            if (!(c < prev_c)) { ok = false; detail = "coefficient not strictly decreasing"; }
            if (!(d.delta_model > prev_d)) { ok = false; detail = "delta_model not strictly increasing"; }
            if (!(d.delta_model >= 0.0 && d.delta_model <= 1.0)) { ok = false; detail = "delta_model outside [0,1]"; }
            prev_c = c;
            prev_d = d.delta_model;
        }
    }
    return {"decrease-monotonicity", ok, detail};
}

inline VerifyCheck check_schwinger_exact() {
    double worst = std::fabs(schwinger_exact_coefficient(1, 0.0) - 1.0);
    worst = std::max(worst, std::fabs(schwinger_exact_coefficient(2, std::log(2.0) / pi) - 0.5));
    worst = std::max(worst, std::fabs(schwinger_exact_coefficient(3, 1.0) - std::exp(-pi)));
    return {"schwinger-exact", worst < 1e-14, "worst abs error " + fmt(worst)};
}

inline VerifyCheck check_oracle(int dim, long n_cells) {
    double worst = 0.0;
    double worst_refinement = 0.0;
    for (double a : {0.0, 0.01, 0.1, 1.0}) {
        const RegionOracleResult o = rate_region_oracle_detailed(dim, a, n_cells);
        const double reduced = dim == 2 ? rate_coefficient_2p1(a, 1e-10).coefficient
                                        : rate_coefficient_3p1(a, 1e-10).coefficient;
        worst = std::max(worst, std::fabs(o.value - reduced));
        worst_refinement = std::max(worst_refinement, o.refinement_delta);
    }
    const bool ok = worst < 1e-3 && worst_refinement < 1e-2;
    const std::string name = dim == 2 ? "oracle-equivalence-2p1" : "oracle-equivalence-3p1";
    return {name, ok, "worst |oracle - reduced| " + fmt(worst) + ", refinement delta " + fmt(worst_refinement)};
}

inline VerifyCheck check_small_a_slope() {
    bool ok = true;
    std::string detail;
    for (int dim = 1; dim <= 3; ++dim) {
        std::vector<double> sqrt_as(15), deltas(15);
        for (int i = 0; i < 15; ++i) {
            sqrt_as[i] = 1e-3 * std::pow(10.0, static_cast<double>(i) / 14.0);
            deltas[i] = decrease_rate(dim, sqrt_as[i] * sqrt_as[i], 1e-12).delta_model;
        }
        const SlopeFit f = fit_loglog(sqrt_as, deltas);
        ok = ok && std::fabs(f.slope - 2.0) <= 0.05;
        detail += (dim > 1 ? ", " : "") + std::to_string(dim) + "d slope " + fmt(f.slope);
    }
    return {"small-a-proportionality", ok, detail};
}

}  // namespace verify_detail

inline std::vector<VerifyCheck> run_verification(bool full) {
    using namespace verify_detail;
    std::vector<VerifyCheck> checks;
    checks.push_back(check_special_functions());
    checks.push_back(check_quadrature());
    checks.push_back(check_u_quartic());
    checks.push_back(check_endpoint_identities());
    checks.push_back(check_eigenstates(full ? 10'000 : 600));
    checks.push_back(check_weak_velocity(full ? 30'000 : 600));
    checks.push_back(check_selection_rule(full ? 10'000 : 200, full ? 10'000 : 100));
    checks.push_back(check_velocity_consistency(full ? 10'000 : 300));
    checks.push_back(check_region_boundary());
    checks.push_back(check_transition_probability());
    checks.push_back(check_closed_forms_1p1());
    checks.push_back(check_massless_coefficients());
    checks.push_back(check_monotonicity(full ? 100 : 20));
    checks.push_back(check_schwinger_exact());
    if (full) {
        checks.push_back(check_oracle(2, 1'000'000));
        checks.push_back(check_oracle(3, 1'000'000));
        checks.push_back(check_small_a_slope());
    }
    return checks;
}

}  // namespace pairprod
