// Adaptive one-dimensional quadrature on a Gauss7/Kronrod15 embedded pair,
// with largest-error-first subdivision and optional power-law endpoint
// substitutions for integrands with fractional-power endpoint behavior.
//
// Abscissae never touch the interval endpoints, so integrands only need to be
// finite on the open interval (a, b).
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace pairprod {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::int64_t evaluations = 0;
    bool converged = false;
};

namespace quad_detail {

// 15-point Kronrod abscissae on [0,1); odd indices are the embedded 7-point
// Gauss abscissae, the implicit 8th node is the interval center.
inline constexpr double kNodes[7] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,  // center
};

inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,  // center
};

struct Panel {
    double value = 0.0;
    double error = 0.0;
    double resabs = 0.0;
};

template <class F>
Panel gk15(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(mid);
    double gauss = kGaussWeights[3] * fc;
    double kron = kKronrodWeights[7] * fc;
    double resabs = kKronrodWeights[7] * std::fabs(fc);

    double f_lo[7], f_hi[7];
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kNodes[i];
        const double f1 = f(mid - dx);
        const double f2 = f(mid + dx);
        f_lo[i] = f1;
        f_hi[i] = f2;
        kron += kKronrodWeights[i] * (f1 + f2);
        resabs += kKronrodWeights[i] * (std::fabs(f1) + std::fabs(f2));
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (f1 + f2);
    }

    // resasc: Kronrod integral of |f - mean|, used to scale the raw difference
    // estimate the way QUADPACK does.
    const double mean = kron * 0.5;
    double resasc = kKronrodWeights[7] * std::fabs(fc - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kKronrodWeights[i] * (std::fabs(f_lo[i] - mean) + std::fabs(f_hi[i] - mean));

    Panel p;
    p.value = kron * half;
    p.resabs = resabs * std::fabs(half);
    resasc *= std::fabs(half);

    double err = std::fabs((kron - gauss) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    if (p.resabs > uflow / (50.0 * eps)) err = std::max(err, 50.0 * eps * p.resabs);
    p.error = err;
    return p;
}

struct Segment {
    double a, b;
    double value;
    double error;
    bool splittable;
};

struct SegmentOrder {
    bool operator()(const Segment& x, const Segment& y) const { return x.error < y.error; }
};

inline double integer_power(double t, int m) {
    double r = 1.0;
    for (int i = 0; i < m; ++i) r *= t;
    return r;
}

}  // namespace quad_detail

template <class F>
QuadratureResult integrate(F&& f, double a, double b, double tol = 1e-8,
                           std::int64_t max_evaluations = 1'000'000) {
    if (!std::isfinite(a) || !std::isfinite(b)) throw std::invalid_argument("integrate: bounds must be finite");
    if (a > b) throw std::invalid_argument("integrate: requires a <= b");
    if (!(tol > 0.0)) throw std::invalid_argument("integrate: tolerance must be > 0");

    QuadratureResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }

    using quad_detail::Panel;
    using quad_detail::Segment;
    using quad_detail::SegmentOrder;

    std::vector<Segment> segs;
    Panel first = quad_detail::gk15(f, a, b);
    out.evaluations = 15;
    segs.push_back({a, b, first.value, first.error, true});
    double total_error = first.error;

    const double eps = std::numeric_limits<double>::epsilon();
    while (total_error > tol && out.evaluations + 30 <= max_evaluations) {
        std::pop_heap(segs.begin(), segs.end(), SegmentOrder{});
        Segment worst = segs.back();
        segs.pop_back();

        const double mid = 0.5 * (worst.a + worst.b);
        if (!worst.splittable || !(mid > worst.a) || !(mid < worst.b) ||
            (worst.b - worst.a) < 100.0 * eps * std::max({std::fabs(worst.a), std::fabs(worst.b), 1.0})) {
            // The dominant segment cannot be refined further; no progress possible.
            worst.splittable = false;
            segs.push_back(worst);
            std::push_heap(segs.begin(), segs.end(), SegmentOrder{});
            break;
        }

        Panel left = quad_detail::gk15(f, worst.a, mid);
        Panel right = quad_detail::gk15(f, mid, worst.b);
        out.evaluations += 30;
        total_error += left.error + right.error - worst.error;

        segs.push_back({worst.a, mid, left.value, left.error, true});
        std::push_heap(segs.begin(), segs.end(), SegmentOrder{});
        segs.push_back({mid, worst.b, right.value, right.error, true});
        std::push_heap(segs.begin(), segs.end(), SegmentOrder{});
    }

    // Compensated resummation over all segments; also refreshes the error sum
    // accumulated incrementally above.
    double sum = 0.0, comp = 0.0, err = 0.0;
    for (const Segment& s : segs) {
        const double y = s.value - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        err += s.error;
    }
    out.value = sum;
    out.abs_error_estimate = err;
    out.converged = err <= tol;
    return out;
}

// Maps a known endpoint power-law exponent alpha (integrand ~ (x-a)^alpha, alpha > -1)
// to the smallest substitution power m such that x = a + t^m removes the
// fractional behavior. Regular endpoints (alpha a non-negative integer) map to 1.
inline int substitution_power(double alpha) {
    if (!(alpha > -1.0)) throw std::domain_error("substitution_power: exponent must be > -1");
    if (alpha >= 0.0 && alpha == std::floor(alpha)) return 1;
    for (int m = 2; m <= 16; ++m) {
        const double k = m * (alpha + 1.0);
        if (k >= 1.0 - 1e-12 && std::fabs(k - std::round(k)) < 1e-9) return m;
    }
    return 4;
}

// Integrate with explicit endpoint substitutions x = a + t^m_left near a and
// x = b - t^m_right near b (power 1 = no substitution). The interval is split
// at its midpoint so each substitution only acts on its own half.
template <class F>
QuadratureResult integrate_transformed(F&& f, double a, double b, int power_left, int power_right,
                                       double tol = 1e-8, std::int64_t max_evaluations = 1'000'000) {
    if (power_left < 1 || power_right < 1)
        throw std::invalid_argument("integrate_transformed: substitution powers must be >= 1");
    if (power_left == 1 && power_right == 1) return integrate(f, a, b, tol, max_evaluations);
    if (!std::isfinite(a) || !std::isfinite(b) || a > b)
        throw std::invalid_argument("integrate_transformed: requires finite a <= b");
    if (a == b) return {0.0, 0.0, 0, true};

    const double mid = 0.5 * (a + b);
    QuadratureResult out;
    out.converged = true;

    auto accumulate = [&out](const QuadratureResult& r) {
        out.value += r.value;
        out.abs_error_estimate += r.abs_error_estimate;
        out.evaluations += r.evaluations;
        out.converged = out.converged && r.converged;
    };

    if (power_left == 1) {
        accumulate(integrate(f, a, mid, 0.5 * tol, max_evaluations / 2));
    } else {
        const int m = power_left;
        const double t_max = std::pow(mid - a, 1.0 / m);
        auto g = [&f, a, m](double t) {
            return f(a + quad_detail::integer_power(t, m)) * m * quad_detail::integer_power(t, m - 1);
        };
        accumulate(integrate(g, 0.0, t_max, 0.5 * tol, max_evaluations / 2));
    }

    if (power_right == 1) {
        accumulate(integrate(f, mid, b, 0.5 * tol, max_evaluations / 2));
    } else {
        const int m = power_right;
        const double t_max = std::pow(b - mid, 1.0 / m);
        auto g = [&f, b, m](double t) {
            return f(b - quad_detail::integer_power(t, m)) * m * quad_detail::integer_power(t, m - 1);
        };
        accumulate(integrate(g, 0.0, t_max, 0.5 * tol, max_evaluations / 2));
    }
    return out;
}

// Endpoint-hint flavor: the caller states the power-law exponents of the
// integrand at each endpoint and the substitutions are derived from them.
template <class F>
QuadratureResult integrate_with_endpoint_powers(F&& f, double a, double b, double alpha_left,
                                                double alpha_right, double tol = 1e-8,
                                                std::int64_t max_evaluations = 1'000'000) {
    return integrate_transformed(f, a, b, substitution_power(alpha_left),
                                 substitution_power(alpha_right), tol, max_evaluations);
}

}  // namespace pairprod
