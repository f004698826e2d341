// Free-Dirac chirality eigenstates in 1+1, 2+1 and 3+1 dimensions, the Pauli /
// Dirac operator matrices acting on them, and weak values between pre- and
// post-selected states.
//
// In scaled units the free Hamiltonians are
//   1+1:  sx*px + sqrtA*sz
//   2+1:  sx*px + sy*py + sqrtA*sz
//   3+1:  ax*px + ay*py + az*pz + sqrtA*beta
// with eigenvalues +-E, E = sqrt(p^2 + A). Chiralities are built in forms whose
// normalization denominator is E*(E + sqrtA), which never cancels, so zero
// momentum at finite mass stays well conditioned.
#pragma once

#include <optional>
#include <string>

#include "types.hpp"

namespace pairprod {

// Selections closer than this in overlap magnitude are reported as degenerate
// instead of amplifying round-off into a huge weak value.
inline constexpr double overlap_floor = 1e-10;

class DegenerateSelection : public std::runtime_error {
public:
    explicit DegenerateSelection(double overlap_magnitude)
        : std::runtime_error("pre/post selection is (numerically) orthogonal: |<post|pre>| = " +
                             std::to_string(overlap_magnitude)),
          overlap_magnitude_(overlap_magnitude) {}

    double overlap_magnitude() const { return overlap_magnitude_; }

private:
    double overlap_magnitude_;
};

// Dense n x n complex matrix, n in {2, 4}; stride fixed at 4.
struct SpinorMatrix {
    int n = 2;
    std::array<complexd, 16> a{};

    complexd& at(int i, int j) { return a[i * 4 + j]; }
    const complexd& at(int i, int j) const { return a[i * 4 + j]; }
};

enum class OperatorLabel { sigma_x, sigma_y, sigma_z, alpha_x, alpha_y, alpha_z, beta, identity };

struct PauliLikeOperator {
    OperatorLabel label;
    SpinorMatrix matrix;
};

namespace spinor_detail {

inline SpinorMatrix pauli(int which) {
    SpinorMatrix m;
    m.n = 2;
    const complexd i{0.0, 1.0};
    switch (which) {
        case 0:  // sigma_x
            m.at(0, 1) = 1.0;
            m.at(1, 0) = 1.0;
            break;
        case 1:  // sigma_y
            m.at(0, 1) = -i;
            m.at(1, 0) = i;
            break;
        default:  // sigma_z
            m.at(0, 0) = 1.0;
            m.at(1, 1) = -1.0;
            break;
    }
    return m;
}

// alpha_k = [[0, sigma_k], [sigma_k, 0]]
inline SpinorMatrix alpha(int which) {
    SpinorMatrix s = pauli(which);
    SpinorMatrix m;
    m.n = 4;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            m.at(i, j + 2) = s.at(i, j);
            m.at(i + 2, j) = s.at(i, j);
        }
    return m;
}

inline SpinorMatrix dirac_beta() {
    SpinorMatrix m;
    m.n = 4;
    m.at(0, 0) = 1.0;
    m.at(1, 1) = 1.0;
    m.at(2, 2) = -1.0;
    m.at(3, 3) = -1.0;
    return m;
}

inline SpinorMatrix identity(int n) {
    SpinorMatrix m;
    m.n = n;
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

}  // namespace spinor_detail

// Builds the labeled operator. The identity needs an explicit component count;
// sigma operators are 2x2, alpha/beta 4x4.
inline PauliLikeOperator make_operator(OperatorLabel label, int ncomp = 0) {
    using namespace spinor_detail;
    switch (label) {
        case OperatorLabel::sigma_x: return {label, pauli(0)};
        case OperatorLabel::sigma_y: return {label, pauli(1)};
        case OperatorLabel::sigma_z: return {label, pauli(2)};
        case OperatorLabel::alpha_x: return {label, alpha(0)};
        case OperatorLabel::alpha_y: return {label, alpha(1)};
        case OperatorLabel::alpha_z: return {label, alpha(2)};
        case OperatorLabel::beta: return {label, dirac_beta()};
        case OperatorLabel::identity:
            if (ncomp != 2 && ncomp != 4)
                throw std::invalid_argument("identity operator needs component count 2 or 4");
            return {label, identity(ncomp)};
    }
    throw std::invalid_argument("unknown operator label");
}

// The x-velocity operator of the dimension: sigma_x below 3+1, alpha_x in 3+1.
inline PauliLikeOperator velocity_operator(int dim) {
    require_dim(dim);
    return make_operator(dim == 3 ? OperatorLabel::alpha_x : OperatorLabel::sigma_x);
}

struct Chirality {
    int ncomp = 2;
    std::array<complexd, 4> components{};
    EnergySign energy_sign = EnergySign::positive;
    ScaledMomentum momentum{};
    double mass_param = 0.0;  // sqrt(A)
    std::optional<SpinCoeffs> spin_coeffs;
};

namespace spinor_detail {

inline complexd inner(const std::array<complexd, 4>& x, const std::array<complexd, 4>& y, int n) {
    complexd s{0.0, 0.0};
    for (int i = 0; i < n; ++i) s += std::conj(x[i]) * y[i];
    return s;
}

inline std::array<complexd, 4> apply(const SpinorMatrix& m, const std::array<complexd, 4>& v) {
    std::array<complexd, 4> out{};
    for (int i = 0; i < m.n; ++i) {
        complexd s{0.0, 0.0};
        for (int j = 0; j < m.n; ++j) s += m.at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

inline double norm(const std::array<complexd, 4>& v, int n) {
    return std::sqrt(inner(v, v, n).real());
}

// Global phase convention: first component above noise made real and positive.
inline void canonicalize_phase(std::array<complexd, 4>& v, int n) {
    for (int i = 0; i < n; ++i) {
        const double mag = std::abs(v[i]);
        if (mag > 1e-14) {
            const complexd phase = std::conj(v[i]) / mag;
            for (int j = 0; j < n; ++j) v[j] *= phase;
            return;
        }
    }
}

inline void normalize(std::array<complexd, 4>& v, int n) {
    const double m = norm(v, n);
    for (int i = 0; i < n; ++i) v[i] /= m;
}

}  // namespace spinor_detail

// Scaled free Hamiltonian matrix of the dimension.
inline SpinorMatrix hamiltonian_matrix(int dim, const ScaledMomentum& p, double sqrt_a) {
    require_dim(dim);
    if (p.dim != dim) throw std::invalid_argument("momentum dimension mismatch");
    using namespace spinor_detail;
    SpinorMatrix h;
    if (dim == 3) {
        h.n = 4;
        const SpinorMatrix ax = alpha(0), ay = alpha(1), az = alpha(2), b = dirac_beta();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                h.at(i, j) = p.px * ax.at(i, j) + p.py * ay.at(i, j) + p.pz * az.at(i, j) +
                             sqrt_a * b.at(i, j);
    } else {
        h.n = 2;
        const SpinorMatrix sx = pauli(0), sy = pauli(1), sz = pauli(2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                h.at(i, j) = p.px * sx.at(i, j) + (dim == 2 ? p.py : 0.0) * sy.at(i, j) +
                             sqrt_a * sz.at(i, j);
    }
    return h;
}

// Unit-norm eigenvector of the scaled free Hamiltonian with eigenvalue
// sign * E, E = sqrt(p^2 + A). Throws for the undefined massless zero-momentum
// state. spin picks the 3+1 spin combination (default (1, 0)) and is rejected
// below 3+1.
inline Chirality build_chirality(int dim, EnergySign sign, const ScaledMomentum& p, double sqrt_a,
                                 std::optional<SpinCoeffs> spin = std::nullopt) {
    require_dim(dim);
    if (p.dim != dim) throw std::invalid_argument("momentum dimension mismatch");
    if (!p.finite()) throw std::invalid_argument("momentum components must be finite");
    if (!(sqrt_a >= 0.0) || !std::isfinite(sqrt_a))
        throw std::invalid_argument("mass parameter sqrt(A) must be finite and >= 0");
    if (spin && dim != 3)
        throw std::invalid_argument("spin coefficients apply to the 3+1 four-spinors only");

    const double energy = scaled_energy(p, sqrt_a * sqrt_a);
    if (!(energy > 0.0)) throw std::domain_error("massless zero-momentum state undefined");

    Chirality chi;
    chi.energy_sign = sign;
    chi.momentum = p;
    chi.mass_param = sqrt_a;

    const double d = energy + sqrt_a;  // never cancels
    const complexd k_plus{p.px, p.py};
    const complexd k_minus{p.px, -p.py};

    if (dim == 1) {
        chi.ncomp = 2;
        if (sign == EnergySign::positive) {
            chi.components[0] = d;
            chi.components[1] = p.px;
        } else {
            chi.components[0] = p.px;
            chi.components[1] = -d;
        }
    } else if (dim == 2) {
        chi.ncomp = 2;
        if (sign == EnergySign::positive) {
            chi.components[0] = d;
            chi.components[1] = k_plus;
        } else {
            chi.components[0] = k_minus;
            chi.components[1] = -d;
        }
    } else {
        chi.ncomp = 4;
        SpinCoeffs sc = spin.value_or(SpinCoeffs{});
        const double sc_norm = std::sqrt(std::norm(sc.a) + std::norm(sc.b));
        if (!(sc_norm > 0.0) || !std::isfinite(sc_norm))
            throw std::invalid_argument("spin coefficients must have nonzero finite norm");
        sc.a /= sc_norm;
        sc.b /= sc_norm;
        chi.spin_coeffs = sc;

        if (sign == EnergySign::positive) {
            // a*(1, 0, pz/d, k+/d) + b*(0, 1, k-/d, -pz/d)
            chi.components[0] = sc.a;
            chi.components[1] = sc.b;
            chi.components[2] = (sc.a * p.pz + sc.b * k_minus) / d;
            chi.components[3] = (sc.a * k_plus - sc.b * p.pz) / d;
        } else {
            // a*(-pz/d, -k+/d, 1, 0) + b*(-k-/d, pz/d, 0, 1)
            chi.components[0] = (-sc.a * p.pz - sc.b * k_minus) / d;
            chi.components[1] = (-sc.a * k_plus + sc.b * p.pz) / d;
            chi.components[2] = sc.a;
            chi.components[3] = sc.b;
        }
    }

    spinor_detail::normalize(chi.components, chi.ncomp);
    spinor_detail::canonicalize_phase(chi.components, chi.ncomp);
    return chi;
}

struct WeakValueResult {
    complexd value{0.0, 0.0};   // meaningful only when !degenerate
    complexd overlap{0.0, 0.0};  // <post|pre>
    bool degenerate = false;
};

// <post|op|pre> / <post|pre>, with the overlap reported alongside. Selections
// with |overlap| below overlap_floor come back flagged degenerate.
inline WeakValueResult weak_value(const PauliLikeOperator& op, const Chirality& pre,
                                  const Chirality& post) {
    if (pre.ncomp != post.ncomp)
        throw std::invalid_argument("weak_value: pre and post component counts differ");
    if (op.matrix.n != pre.ncomp)
        throw std::invalid_argument("weak_value: operator size does not match the spinors");

    WeakValueResult r;
    r.overlap = spinor_detail::inner(post.components, pre.components, pre.ncomp);
    if (std::abs(r.overlap) < overlap_floor) {
        r.degenerate = true;
        return r;
    }
    const auto op_pre = spinor_detail::apply(op.matrix, pre.components);
    r.value = spinor_detail::inner(post.components, op_pre, pre.ncomp) / r.overlap;
    return r;
}

struct TransitionStates {
    Chirality pre;
    Chirality post;
};

// The pair-production transition (-E, -px, p_perp) -> (+E, +px, p_perp) for
// px > 0. In 3+1 one SpinCoeffs pair (a, b) parameterizes both selections: the
// preselected spinor uses (a, b) and the postselected one the conjugate-swapped
// pair (conj b, conj a), the combination actually connected by the transition
// (its overlap spin factor is |a|^2 + |b|^2 = 1 for every unit pair).
inline TransitionStates transition_states(int dim, const ScaledMomentum& p, double sqrt_a,
                                          std::optional<SpinCoeffs> spin = std::nullopt) {
    if (!(p.px > 0.0)) throw std::invalid_argument("transition requires px > 0");
    std::optional<SpinCoeffs> pre_spin, post_spin;
    if (dim == 3) {
        const SpinCoeffs sc = spin.value_or(SpinCoeffs{});
        pre_spin = sc;
        post_spin = SpinCoeffs{std::conj(sc.b), std::conj(sc.a)};
    } else if (spin) {
        throw std::invalid_argument("spin coefficients apply to the 3+1 four-spinors only");
    }
    TransitionStates t;
    t.pre = build_chirality(dim, EnergySign::negative, reversed_x(p), sqrt_a, pre_spin);
    t.post = build_chirality(dim, EnergySign::positive, p, sqrt_a, post_spin);
    return t;
}

// Residual of the shift-only selection condition on the transition above:
//   1+1:  |sqrtA * <sz>_w|
//   2+1:  |<sy>_w * py + sqrtA * <sz>_w|
//   3+1:  |<ay>_w * py + <az>_w * pz + sqrtA * <beta>_w|
// Exact selection gives 0 for every admitted momentum and spin choice.
inline double selection_residual(int dim, const ScaledMomentum& p, double sqrt_a,
                                 std::optional<SpinCoeffs> spin = std::nullopt) {
    const TransitionStates t = transition_states(dim, p, sqrt_a, spin);

    auto wv = [&t](OperatorLabel label) {
        const WeakValueResult r = weak_value(make_operator(label), t.pre, t.post);
        if (r.degenerate) throw DegenerateSelection(std::abs(r.overlap));
        return r.value;
    };

    if (dim == 1) return std::abs(sqrt_a * wv(OperatorLabel::sigma_z));
    if (dim == 2)
        return std::abs(wv(OperatorLabel::sigma_y) * p.py + sqrt_a * wv(OperatorLabel::sigma_z));
    return std::abs(wv(OperatorLabel::alpha_y) * p.py + wv(OperatorLabel::alpha_z) * p.pz +
                    sqrt_a * wv(OperatorLabel::beta));
}

}  // namespace pairprod
