// ln-gamma (Lanczos rational approximation, positive reals only) and the
// complete beta function built on it.
#pragma once

#include <cmath>
#include <stdexcept>

namespace pairprod {

// ln Gamma(x) for x > 0. Lanczos approximation with g = 7, nine coefficients;
// arguments below 1/2 are lifted through ln Gamma(x) = ln Gamma(x+1) - ln x
// instead of using the reflection formula.
inline double ln_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("ln_gamma: requires finite x > 0");

    static constexpr double coeff[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    static constexpr double half_log_two_pi = 0.91893853320467274178;

    double shift = 0.0;
    double z = x;
    while (z < 0.5) {
        shift -= std::log(z);
        z += 1.0;
    }

    z -= 1.0;
    double series = coeff[0];
    for (int i = 1; i < 9; ++i) series += coeff[i] / (z + i);
    const double t = z + 7.5;
    return half_log_two_pi + (z + 0.5) * std::log(t) - t + std::log(series) + shift;
}

// B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b), a, b > 0.
inline double beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("beta: requires a > 0 and b > 0");
    return std::exp(ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b));
}

}  // namespace pairprod
