#include <cmath>
#include <random>

#include <doctest.h>

#include "pairprod/quadrature.hpp"
#include "pairprod/special_functions.hpp"

using namespace pairprod;

TEST_CASE("integrate: plain known values") {
    auto one = integrate([](double) { return 1.0; }, 0.0, 1.0, 1e-10);
    CHECK(one.converged);
    CHECK(one.value == doctest::Approx(1.0).epsilon(1e-14));

    // antiderivative of -4 s ln s is s^2 (1 - 2 ln s) / ... evaluates to 1 on [0,1]
    auto slog = integrate([](double s) { return s > 0.0 ? -4.0 * s * std::log(s) : 0.0; }, 0.0, 1.0, 1e-10);
    CHECK(slog.converged);
    CHECK(slog.value == doctest::Approx(1.0).epsilon(1e-11));

    // arctan kernel of the 2+1 massless rate: integral equals B(1/2, 3/4)/2
    auto kern = integrate([](double s) {
        const double s2 = s * s;
        const double num = 1.0 - s2 * s2;
        return num <= 0.0 ? 0.0 : std::atan(std::sqrt(num) / s2);
    }, 0.0, 1.0, 1e-10);
    CHECK(kern.converged);
    CHECK(kern.value == doctest::Approx(0.5 * beta(0.5, 0.75)).epsilon(1e-10));
}

TEST_CASE("integrate: converged implies estimate within tolerance") {
    auto r = integrate([](double x) { return std::exp(-x * x); }, 0.0, 2.0, 1e-10);
    CHECK(r.converged);
    CHECK(r.abs_error_estimate <= 1e-10);
    CHECK(r.evaluations >= 15);
}

TEST_CASE("integrate: error estimates are honest on known integrals") {
    struct Known {
        double (*f)(double);
        double a, b;
        double exact;
        double alpha_left, alpha_right;
    };
    const double e2 = std::exp(2.0);
    static const Known suite[] = {
        {[](double) { return 1.0; }, 0.0, 1.0, 1.0, 0.0, 0.0},
        {[](double s) { return s; }, 0.0, 1.0, 0.5, 0.0, 0.0},
        {[](double s) { return s * s; }, 0.0, 1.0, 1.0 / 3.0, 0.0, 0.0},
        {[](double s) { return s * s * s * s * s; }, 0.0, 1.0, 1.0 / 6.0, 0.0, 0.0},
        {[](double s) { return 3.0 * s * s - 2.0 * s + 1.0; }, 0.0, 1.0, 1.0, 0.0, 0.0},
        {[](double s) { return std::exp(s); }, 0.0, 2.0, e2 - 1.0, 0.0, 0.0},
        {[](double s) { return std::sin(s); }, 0.0, 3.14159265358979323846, 2.0, 0.0, 0.0},
        {[](double s) { return std::cos(3.0 * s); }, 0.0, 1.0, std::sin(3.0) / 3.0, 0.0, 0.0},
        {[](double s) { return 1.0 / (1.0 + s * s); }, 0.0, 1.0, 0.78539816339744830962, 0.0, 0.0},
        {[](double s) { return 1.0 / (1.0 + 25.0 * s * s); }, -1.0, 1.0, 0.4 * std::atan(5.0), 0.0, 0.0},
        {[](double s) { return std::atan(s); }, 0.0, 1.0,
         0.78539816339744830962 - 0.5 * std::log(2.0), 0.0, 0.0},
        {[](double s) { return s > 0.0 ? std::log(s) : 0.0; }, 0.0, 1.0, -1.0, 0.0, 0.0},
        {[](double s) { return s > 0.0 ? s * std::log(s) : 0.0; }, 0.0, 1.0, -0.25, 0.0, 0.0},
        {[](double s) { return 1.0 / std::sqrt(s); }, 0.0, 1.0, 2.0, -0.5, 0.0},
        {[](double s) { return std::sqrt(s); }, 0.0, 1.0, 2.0 / 3.0, 0.5, 0.0},
        {[](double s) { return std::sqrt(1.0 - s); }, 0.0, 1.0, 2.0 / 3.0, 0.0, 0.5},
        {[](double s) { return std::pow(s, -0.25); }, 0.0, 1.0, 4.0 / 3.0, -0.25, 0.0},
        {[](double s) { return std::exp(-s * s); }, 0.0, 2.0,
         0.88622692545275801365 * std::erf(2.0), 0.0, 0.0},
        {[](double s) { return 1.0 / std::sqrt(1.0 - s * s); }, 0.0, 1.0,
         1.57079632679489661923, 0.0, -0.5},
        {[](double s) { return 1.0 / (1.0 + s); }, 0.0, 10.0, std::log(11.0), 0.0, 0.0},
    };

    int idx = 0;
    for (const Known& k : suite) {
        CAPTURE(idx);
        const QuadratureResult r =
            integrate_with_endpoint_powers(k.f, k.a, k.b, k.alpha_left, k.alpha_right, 1e-9);
        CHECK(r.converged);
        const double true_error = std::fabs(r.value - k.exact);
        CHECK(true_error <= 10.0 * std::max(r.abs_error_estimate, 1e-15));
        ++idx;
    }
}

TEST_CASE("integrate: linearity on random polynomial pairs") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    for (int trial = 0; trial < 25; ++trial) {
        double cf[7], cg[7];
        for (double& c : cf) c = coeff(rng);
        for (double& c : cg) c = coeff(rng);
        const double alpha = coeff(rng), beta_w = coeff(rng);

        auto poly = [](const double (&c)[7], double x) {
            double v = 0.0;
            for (int i = 6; i >= 0; --i) v = v * x + c[i];
            return v;
        };
        auto f = [&](double x) { return poly(cf, x); };
        auto g = [&](double x) { return poly(cg, x); };
        auto h = [&](double x) { return alpha * f(x) + beta_w * g(x); };

        const auto rf = integrate(f, -1.0, 2.0, 1e-10);
        const auto rg = integrate(g, -1.0, 2.0, 1e-10);
        const auto rh = integrate(h, -1.0, 2.0, 1e-10);
        const double budget = std::fabs(alpha) * rf.abs_error_estimate +
                              std::fabs(beta_w) * rg.abs_error_estimate + rh.abs_error_estimate +
                              1e-12;
        CHECK(std::fabs(rh.value - (alpha * rf.value + beta_w * rg.value)) <= budget);
    }
}

TEST_CASE("integrate: interval additivity") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> split(0.1, 0.9);
    auto f = [](double x) { return std::exp(-x) * std::cos(4.0 * x); };
    for (int trial = 0; trial < 10; ++trial) {
        const double b = split(rng) * 3.0;
        const auto whole = integrate(f, 0.0, 3.0, 1e-11);
        const auto left = integrate(f, 0.0, b, 1e-11);
        const auto right = integrate(f, b, 3.0, 1e-11);
        const double budget = whole.abs_error_estimate + left.abs_error_estimate +
                              right.abs_error_estimate + 1e-13;
        CHECK(std::fabs(whole.value - (left.value + right.value)) <= budget);
    }
}

TEST_CASE("integrate: non-convergence reports best estimate") {
    // tolerance below the floating-point floor of the estimates
    const auto r = integrate([](double x) { return 1.0 / (1.0 + x); }, 0.0, 1.0, 1e-18, 20'000);
    CHECK(!r.converged);
    CHECK(r.abs_error_estimate > 1e-18);
    CHECK(r.value == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("integrate: argument validation") {
    auto f = [](double x) { return x; };
    CHECK_THROWS_AS(integrate(f, 1.0, 0.0, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(integrate(f, 0.0, 1.0, 0.0), std::invalid_argument);
    const auto degenerate = integrate(f, 0.5, 0.5, 1e-8);
    CHECK(degenerate.converged);
    CHECK(degenerate.value == 0.0);
}

TEST_CASE("substitution_power: exponent mapping") {
    CHECK(substitution_power(0.0) == 1);
    CHECK(substitution_power(2.0) == 1);
    CHECK(substitution_power(-0.5) == 2);
    CHECK(substitution_power(0.5) == 2);
    CHECK(substitution_power(-0.25) == 4);
    CHECK(substitution_power(-0.75) == 4);
    CHECK_THROWS_AS(substitution_power(-1.0), std::domain_error);
}
