// Dimensionless production-rate coefficients per dimension, the mass-induced
// decrease ratios, and the exact exponential reference coefficients.
//
// Coefficients are relative to the unit prefactors
//   1+1:  q*eps / (2 pi hbar)
//   2+1:  (q*eps)^{3/2} / (4 pi^2 hbar^{3/2} c^{1/2})
//   3+1:  (q*eps)^2 / (4 pi^3 hbar^2 c)        (spin factor folded in)
// captured in PrefactorDescriptor. The reduced integrals run up to
// u(A) = sqrt(-2A + sqrt(4A^2 + 1)), the positive root of u^4 + 4Au^2 = 1:
//   C2(A) = 1/2 * Int_0^u arctan( sqrt(1/s^4 - 4A/s^2 - 1) ) ds
//   C3(A) = pi/8 * Int_0^u s * ln( 1/s^4 - 4A/s^2 ) ds
// In 1+1 the rate itself diverges; only the convergent massless/massive
// difference -1/2 ln u(A) and the averaged massless coefficient 2 ln 2 are
// exposed.
#pragma once

#include "quadrature.hpp"
#include "types.hpp"

namespace pairprod {

inline constexpr double pi = 3.14159265358979323846;

// Unit prefactor (q*eps)^qe_power * hbar^hbar_power * c^c_power * constant.
struct PrefactorDescriptor {
    int dim = 1;
    double qe_power = 1.0;
    double hbar_power = -1.0;
    double c_power = 0.0;
    double constant = 1.0;
};

inline PrefactorDescriptor prefactor_descriptor(int dim) {
    require_dim(dim);
    switch (dim) {
        case 1: return {1, 1.0, -1.0, 0.0, 1.0 / (2.0 * pi)};
        case 2: return {2, 1.5, -1.5, -0.5, 1.0 / (4.0 * pi * pi)};
        default: return {3, 2.0, -2.0, -1.0, 1.0 / (4.0 * pi * pi * pi)};
    }
}

struct RateResult {
    double coefficient = 0.0;
    double abs_error_estimate = 0.0;
    PrefactorDescriptor prefactor{};
};

struct DecreaseResult {
    double delta_model = 0.0;
    double delta_exact = 0.0;
};

class QuadratureFailure : public std::runtime_error {
public:
    QuadratureFailure(const std::string& what, double achieved_error, double best_value)
        : std::runtime_error(what + " (achieved error " + std::to_string(achieved_error) + ")"),
          achieved_error_(achieved_error),
          best_value_(best_value) {}

    double achieved_error() const { return achieved_error_; }
    double best_value() const { return best_value_; }

private:
    double achieved_error_;
    double best_value_;
};

namespace rate_detail {

inline void require_coupling(double a) {
    if (!(a >= 0.0) || !std::isfinite(a))
        throw std::invalid_argument("coupling A must be finite and >= 0");
}

// arctan( sqrt( (1 - 4A s^2 - s^4) / s^4 ) ); the numerator form avoids the
// cancellation of 1/s^4 - 4A/s^2 - 1 near s = u(A). Clamped to 0 past u.
inline double arctan_integrand_2p1(double s, double a) {
    const double s2 = s * s;
    const double num = 1.0 - 4.0 * a * s2 - s2 * s2;
    if (num <= 0.0) return 0.0;
    return std::atan(std::sqrt(num) / s2);  // s2 == 0 -> atan(inf) = pi/2
}

// s * ln( (1 - 4A s^2) / s^4 ); the argument stays >= 1 on (0, u] and equals 1
// at s = u(A).
inline double log_integrand_3p1(double s, double a) {
    if (!(s > 0.0)) return 0.0;  // s ln s -> 0
    const double num = 1.0 - 4.0 * a * s * s;
    if (num <= 0.0) return 0.0;
    return s * (std::log(num) - 4.0 * std::log(s));
}

}  // namespace rate_detail

// u(A) = sqrt(-2A + sqrt(4A^2 + 1)), evaluated in the rationalized form
// 1/sqrt(2A + sqrt(4A^2 + 1)) which does not cancel for large A.
inline double upper_bound_u(double a) {
    rate_detail::require_coupling(a);
    return 1.0 / std::sqrt(2.0 * a + std::sqrt(4.0 * a * a + 1.0));
}

// C2(A): endpoint substitutions s = t^2 at both ends (the integrand approaches
// pi/2 at s -> 0 and falls off like sqrt(u - s) at s -> u).
inline RateResult rate_coefficient_2p1(double a, double tol = 1e-8) {
    rate_detail::require_coupling(a);
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");
    const double u = upper_bound_u(a);
    const QuadratureResult q = integrate_transformed(
        [a](double s) { return rate_detail::arctan_integrand_2p1(s, a); }, 0.0, u, 2, 2, 2.0 * tol);
    RateResult r{0.5 * q.value, 0.5 * q.abs_error_estimate, prefactor_descriptor(2)};
    if (!q.converged)
        throw QuadratureFailure("2+1 rate quadrature did not converge", r.abs_error_estimate,
                                r.coefficient);
    return r;
}

// C3(A): s = t^2 at the left end softens the s ln s derivative; the right
// endpoint is regular (the log argument reaches exactly 1 at u).
inline RateResult rate_coefficient_3p1(double a, double tol = 1e-8) {
    rate_detail::require_coupling(a);
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");
    const double u = upper_bound_u(a);
    const double scale = pi / 8.0;
    const QuadratureResult q = integrate_transformed(
        [a](double s) { return rate_detail::log_integrand_3p1(s, a); }, 0.0, u, 2, 1, tol / scale);
    RateResult r{scale * q.value, scale * q.abs_error_estimate, prefactor_descriptor(3)};
    if (!q.converged)
        throw QuadratureFailure("3+1 rate quadrature did not converge", r.abs_error_estimate,
                                r.coefficient);
    return r;
}

// The convergent 1+1 difference (massless rate minus massive rate), closed
// form -1/2 ln u(A) >= 0; the individual rates diverge and are never evaluated.
inline double rate_difference_1p1(double a) {
    return -0.5 * std::log(upper_bound_u(a));
}

// Averaged massless 1+1 coefficient: Int_0^1 dp / dt_avg(p) with
// dt_avg(p) = (1 + p)/2, closed form 2 ln 2.
inline double avg_rate_coefficient_1p1_massless() {
    return 2.0 * std::log(2.0);
}

// Average transition time at scaled momentum px, in scaled time units.
inline double avg_transition_time_1p1(double px) {
    if (!(px >= 0.0) || !std::isfinite(px))
        throw std::invalid_argument("avg_transition_time_1p1: requires px >= 0");
    return 0.5 * (1.0 + px);
}

// Model coefficient of the massive 1+1 rate relative to q*eps/(2 pi hbar):
// the averaged massless value minus the mass-induced decrease.
inline RateResult rate_coefficient_1p1(double a) {
    rate_detail::require_coupling(a);
    return {avg_rate_coefficient_1p1_massless() - rate_difference_1p1(a), 0.0,
            prefactor_descriptor(1)};
}

// Exact exponential coefficient exp(-pi A), relative to the same prefactors.
inline double schwinger_exact_coefficient(int dim, double a) {
    require_dim(dim);
    rate_detail::require_coupling(a);
    return std::exp(-pi * a);
}

// The model is a first-order-in-A description; beyond A = 1 the mass energy is
// no longer small against the field scale.
inline bool beyond_model_validity(double a) {
    return a > 1.0;
}

// delta_model = 1 - C(A)/C(0) in 2+1 and 3+1, and the difference normalized by
// the averaged massless rate in 1+1; delta_exact = 1 - exp(-pi A).
inline DecreaseResult decrease_rate(int dim, double a, double tol = 1e-8) {
    require_dim(dim);
    rate_detail::require_coupling(a);

    DecreaseResult d;
    d.delta_exact = -std::expm1(-pi * a);
    if (dim == 1) {
        d.delta_model = rate_difference_1p1(a) / avg_rate_coefficient_1p1_massless();
    } else {
        const RateResult massless =
            dim == 2 ? rate_coefficient_2p1(0.0, tol) : rate_coefficient_3p1(0.0, tol);
        const RateResult massive =
            dim == 2 ? rate_coefficient_2p1(a, tol) : rate_coefficient_3p1(a, tol);
        d.delta_model = 1.0 - massive.coefficient / massless.coefficient;
    }
    return d;
}

}  // namespace pairprod
