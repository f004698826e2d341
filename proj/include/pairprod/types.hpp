// Shared domain types: dimensionless momenta, the field coupling A, and
// energy-sign / spin tags used across the spinor and rate machinery.
//
// Unit system: momenta are in units of sqrt(q*eps*hbar/c), energies in
// sqrt(q*eps*hbar*c), times in sqrt(hbar/(q*eps*c)). In these units every
// physical input collapses into the single coupling A = m^2 c^3/(q eps hbar),
// and the particle mass appears as sqrt(A).
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace pairprod {

using complexd = std::complex<double>;

enum class EnergySign { positive, negative };

inline int sign_value(EnergySign s) {
    return s == EnergySign::positive ? +1 : -1;
}

inline void require_dim(int dim) {
    if (dim < 1 || dim > 3) throw std::invalid_argument("dimension must be 1, 2 or 3");
}

// Spatial momentum in scaled units; components beyond `dim` stay zero.
struct ScaledMomentum {
    int dim = 1;
    double px = 0.0;
    double py = 0.0;
    double pz = 0.0;

    static ScaledMomentum along_x(double px) { return {1, px, 0.0, 0.0}; }
    static ScaledMomentum planar(double px, double py) { return {2, px, py, 0.0}; }
    static ScaledMomentum spatial(double px, double py, double pz) { return {3, px, py, pz}; }

    double squared() const { return px * px + py * py + pz * pz; }
    double magnitude() const { return std::sqrt(squared()); }
    double transverse_squared() const { return py * py + pz * pz; }

    bool finite() const {
        return std::isfinite(px) && std::isfinite(py) && std::isfinite(pz);
    }
};

inline ScaledMomentum reversed_x(const ScaledMomentum& p) {
    ScaledMomentum q = p;
    q.px = -q.px;
    return q;
}

// The single dimensionless coupling A = m^2 c^3/(q eps hbar) plus its dimension tag.
struct FieldParam {
    double a = 0.0;
    int dim = 1;
};

inline void validate(const FieldParam& f) {
    require_dim(f.dim);
    if (!(f.a >= 0.0) || !std::isfinite(f.a))
        throw std::invalid_argument("field coupling A must be finite and >= 0");
}

// Spin combination for the 3+1 four-spinors; normalized to |a|^2 + |b|^2 = 1 on use.
struct SpinCoeffs {
    complexd a{1.0, 0.0};
    complexd b{0.0, 0.0};
};

// E~ = sqrt(p~^2 + A): scaled relativistic energy of a free state.
inline double scaled_energy(const ScaledMomentum& p, double a) {
    return std::sqrt(p.squared() + a);
}

}  // namespace pairprod
