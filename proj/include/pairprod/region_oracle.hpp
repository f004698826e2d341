// Independent verification route for the reduced rate integrals: direct
// midpoint-cell quadrature of px/|p|^2 over the admission region, using only
// the region predicate (bisected column extents) and elementary variable
// stretches. No reduced integrands or closed-form antiderivatives appear here.
#pragma once

#include "rates.hpp"
#include "transition.hpp"
#include "types.hpp"

namespace pairprod {

struct RegionOracleResult {
    double value = 0.0;           // finest evaluation
    double coarse_value = 0.0;    // half the cells per axis
    double refinement_delta = 0.0;
    long cells_per_axis = 0;
};

namespace oracle_detail {

inline bool admitted_transverse(double a, double px, double transverse) {
    // The predicate only sees px and the transverse magnitude.
    return admitted(ScaledMomentum::planar(px, transverse), a);
}

// Largest admitted transverse extent of the px column, by bisection on the
// predicate (monotone in the transverse magnitude). Negative for empty columns.
inline double transverse_extent(double a, double px) {
    if (!admitted_transverse(a, px, 0.0)) return -1.0;
    double hi = 1.0;
    while (admitted_transverse(a, px, hi)) hi *= 2.0;
    double lo = 0.0;
    for (int i = 0; i < 200 && (hi - lo) > 1e-16 * (1.0 + hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        (admitted_transverse(a, px, mid) ? lo : hi) = mid;
    }
    return lo;
}

// Largest px with a nonempty column, by bisection on column emptiness.
inline double px_extent(double a) {
    double lo = 0.0, hi = 0.6;  // px <= 1/2 for every A >= 0
    for (int i = 0; i < 200 && (hi - lo) > 1e-16; ++i) {
        const double mid = 0.5 * (lo + hi);
        (admitted_transverse(a, mid, 0.0) ? lo : hi) = mid;
    }
    return lo;
}

// One midpoint pass with n cells per axis. Columns are stretched through
// y = px sinh(tau) (transverse radius rho = px sinh(tau) in 3+1) so the
// Lorentzian weight px/(px^2 + y^2) becomes sech(tau) (resp. 2 pi px tanh(tau))
// and midpoint cells resolve it uniformly.
inline double midpoint_pass(int dim, double a, long n) {
    const double px_max = px_extent(a);
    const double hx = px_max / static_cast<double>(n);
    double sum = 0.0;
    for (long i = 0; i < n; ++i) {
        const double px = (static_cast<double>(i) + 0.5) * hx;
        const double extent = transverse_extent(a, px);
        if (extent <= 0.0) continue;
        const double tau_max = std::asinh(extent / px);
        double column = 0.0;
        if (dim == 2) {
            const double ht = 2.0 * tau_max / static_cast<double>(n);
            for (long j = 0; j < n; ++j) {
                const double tau = -tau_max + (static_cast<double>(j) + 0.5) * ht;
                column += 1.0 / std::cosh(tau);
            }
            column *= ht;
        } else {
            const double ht = tau_max / static_cast<double>(n);
            for (long j = 0; j < n; ++j) {
                const double tau = (static_cast<double>(j) + 0.5) * ht;
                column += std::tanh(tau);
            }
            column *= 2.0 * pi * px * ht;
        }
        sum += column;
    }
    // C_l equals half the raw region integral in both dimensions.
    return 0.5 * sum * hx;
}

}  // namespace oracle_detail

// Direct region quadrature of the production integrand, scaled to match the
// reduced coefficient C_l(A). n_cells is the total midpoint cell budget,
// split sqrt(n_cells) per axis; the 3+1 transverse plane is integrated in
// polar form. Returns the fine and half-resolution values so callers can flag
// insufficient resolution.
inline RegionOracleResult rate_region_oracle_detailed(int dim, double a, long n_cells) {
    if (dim != 2 && dim != 3)
        throw std::invalid_argument("rate_region_oracle: dimension must be 2 or 3");
    rate_detail::require_coupling(a);
    if (n_cells < 10'000) throw std::invalid_argument("rate_region_oracle: needs n_cells >= 10^4");

    RegionOracleResult r;
    r.cells_per_axis = static_cast<long>(std::floor(std::sqrt(static_cast<double>(n_cells))));
    r.value = oracle_detail::midpoint_pass(dim, a, r.cells_per_axis);
    r.coarse_value = oracle_detail::midpoint_pass(dim, a, r.cells_per_axis / 2);
    r.refinement_delta = std::fabs(r.value - r.coarse_value);
    return r;
}

inline double rate_region_oracle(int dim, double a, long n_cells) {
    return rate_region_oracle_detailed(dim, a, n_cells).value;
}

}  // namespace pairprod
