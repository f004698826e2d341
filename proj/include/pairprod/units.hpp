// SI bridge: convert physical inputs (mass, charge, field strength) to the
// dimensionless coupling A and attach dimensional prefactors to rate outputs.
// Rates are densities: pairs per unit l-volume per unit time.
#pragma once

#include <string>

#include "rates.hpp"

namespace pairprod {
namespace constants {

// Frozen CODATA-2018 values; recorded in the metadata block of every output.
inline constexpr double hbar_J_s = 1.054571817e-34;
inline constexpr double c_m_per_s = 2.99792458e8;

}  // namespace constants

struct PhysicalInput {
    double mass_kg = 0.0;
    double charge_C = 0.0;
    double field_V_per_m = 0.0;
};

inline void validate(const PhysicalInput& in) {
    if (!(in.mass_kg >= 0.0) || !std::isfinite(in.mass_kg))
        throw std::invalid_argument("mass must be finite and >= 0");
    if (!(in.charge_C > 0.0) || !std::isfinite(in.charge_C))
        throw std::invalid_argument("charge must be finite and > 0");
    if (!(in.field_V_per_m > 0.0) || !std::isfinite(in.field_V_per_m))
        throw std::invalid_argument("field must be finite and > 0");
}

// A = m^2 c^3 / (q eps hbar).
inline double to_A(const PhysicalInput& in) {
    validate(in);
    const double c = constants::c_m_per_s;
    const double numerator = in.mass_kg * in.mass_kg * c * c * c;
    const double a = numerator / (in.charge_C * in.field_V_per_m * constants::hbar_J_s);
    if (!std::isfinite(a)) throw std::range_error("to_A: coupling overflowed");
    if (in.mass_kg > 0.0 && a == 0.0) throw std::range_error("to_A: coupling underflowed");
    return a;
}

struct DimensionalRate {
    double value = 0.0;                      // pairs per unit l-volume per second
    std::string unit;                        // e.g. "s^-1 m^-2"
    double dimensionless_coefficient = 0.0;
};

// Numeric value of the prefactor constant * (q eps)^a hbar^b c^p.
inline double prefactor_value(const PrefactorDescriptor& d, double charge_C, double field_V_per_m) {
    const double qe = charge_C * field_V_per_m;
    return d.constant * std::pow(qe, d.qe_power) * std::pow(constants::hbar_J_s, d.hbar_power) *
           std::pow(constants::c_m_per_s, d.c_power);
}

namespace units_detail {

inline std::string unit_string(int dim) {
    switch (dim) {
        case 1: return "s^-1 m^-1";
        case 2: return "s^-1 m^-2";
        default: return "s^-1 m^-3";
    }
}

// Descriptor must be the canonical one for its dimension tag.
inline void require_canonical(const PrefactorDescriptor& d) {
    require_dim(d.dim);
    const PrefactorDescriptor ref = prefactor_descriptor(d.dim);
    if (d.qe_power != ref.qe_power || d.hbar_power != ref.hbar_power ||
        d.c_power != ref.c_power || d.constant != ref.constant)
        throw std::invalid_argument("attach_units: prefactor descriptor does not match its dimension");
}

}  // namespace units_detail

inline DimensionalRate attach_units(const RateResult& coeff, const PhysicalInput& in) {
    validate(in);
    units_detail::require_canonical(coeff.prefactor);
    DimensionalRate out;
    out.dimensionless_coefficient = coeff.coefficient;
    out.value = coeff.coefficient * prefactor_value(coeff.prefactor, in.charge_C, in.field_V_per_m);
    out.unit = units_detail::unit_string(coeff.prefactor.dim);
    return out;
}

}  // namespace pairprod
