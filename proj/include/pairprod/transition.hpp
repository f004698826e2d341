// Transition kinematics of the pair-production model: scaled energies and
// times, the uncertainty-window admission predicate, the transition
// probability T(p), and the phase-velocity consistency check.
#pragma once

#include "spinor.hpp"
#include "types.hpp"

namespace pairprod {

struct TransitionKinematics {
    double energy = 0.0;              // E = sqrt(p^2 + A)
    double energy_change = 0.0;       // dE = 2E
    double transition_time = 0.0;     // dt = 2 px     (impulse q*eps*dt = dpx)
    double uncertainty_window = 0.0;  // 1/(2E)        (energy-time uncertainty)
    bool admitted = false;            // dt <= uncertainty window
};

// Admission region: px^2 * (p^2 + A) <= 1/16, the scaled form of dt <= dt_unc.
// The boundary is included.
inline bool admitted(const ScaledMomentum& p, double a) {
    return p.px * p.px * (p.squared() + a) <= 0.0625;
}

inline TransitionKinematics kinematics(const ScaledMomentum& p, const FieldParam& field) {
    validate(field);
    if (p.dim != field.dim) throw std::invalid_argument("kinematics: dimension tags disagree");
    if (!p.finite()) throw std::invalid_argument("kinematics: momentum must be finite");
    if (!(p.px > 0.0)) throw std::invalid_argument("kinematics: requires px > 0");

    TransitionKinematics k;
    k.energy = scaled_energy(p, field.a);
    k.energy_change = 2.0 * k.energy;
    k.transition_time = 2.0 * p.px;
    k.uncertainty_window = 0.5 / k.energy;
    k.admitted = admitted(p, field.a);
    return k;
}

// T(p) = px^2 / |p|^2, mass independent; identically 1 in 1+1.
inline double transition_probability(int dim, const ScaledMomentum& p) {
    require_dim(dim);
    if (p.dim != dim) throw std::invalid_argument("transition_probability: dimension mismatch");
    if (!(p.px > 0.0)) throw std::invalid_argument("transition_probability: requires px > 0");
    if (dim == 1) return 1.0;
    return p.px * p.px / p.squared();
}

// | T(p) * <velocity>_w  -  average phase velocity |, zero by construction:
// the phase velocity is (E/p)(px/p) in 2+1 and 3+1, and E/px in 1+1. The weak
// value is evaluated numerically through the spinors, not from a closed form.
inline double velocity_consistency_residual(int dim, const ScaledMomentum& p,
                                            const FieldParam& field) {
    validate(field);
    if (p.dim != dim || field.dim != dim)
        throw std::invalid_argument("velocity_consistency_residual: dimension mismatch");
    if (!(p.px > 0.0))
        throw std::invalid_argument("velocity_consistency_residual: requires px > 0");

    const double sqrt_a = std::sqrt(field.a);
    const TransitionStates t = transition_states(dim, p, sqrt_a);
    const WeakValueResult wv = weak_value(velocity_operator(dim), t.pre, t.post);
    if (wv.degenerate) throw DegenerateSelection(std::abs(wv.overlap));

    const double big_t = transition_probability(dim, p);
    const double energy = scaled_energy(p, field.a);
    const double phase_velocity =
        dim == 1 ? energy / p.px : (energy / p.magnitude()) * (p.px / p.magnitude());
    return std::abs(big_t * wv.value - phase_velocity);
}

}  // namespace pairprod
