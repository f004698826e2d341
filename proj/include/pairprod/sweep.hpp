// Sweep rows over the coupling and their CSV / JSON emission. Output is byte
// deterministic for fixed inputs and version: numbers are printed with 12
// significant digits, '.' decimal separator and '\n' line endings, and the
// column order is fixed.
#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "rates.hpp"
#include "units.hpp"
#include "version.hpp"

namespace pairprod {

inline constexpr const char* sweep_csv_header =
    "dim,sqrtA,A,coeff_model,coeff_exact,delta_model,delta_exact,quad_error,validity_flag";

struct SweepRow {
    int dim = 1;
    double sqrtA = 0.0;
    double A = 0.0;
    double coeff_model = 0.0;
    double coeff_exact = 0.0;
    double delta_model = 0.0;
    double delta_exact = 0.0;
    double quad_error = 0.0;
    std::string validity_flag = "ok";
};

inline std::string format_g12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// Evaluate one sweep point. Quadrature failures do not throw: the row comes
// back flagged "quadrature_failed" carrying the best value and achieved error.
inline SweepRow evaluate_point(int dim, double sqrtA, double tol = 1e-8) {
    require_dim(dim);
    if (!(sqrtA >= 0.0) || !std::isfinite(sqrtA))
        throw std::invalid_argument("sqrtA must be finite and >= 0");

    SweepRow row;
    row.dim = dim;
    row.sqrtA = sqrtA;
    row.A = sqrtA * sqrtA;
    row.coeff_exact = schwinger_exact_coefficient(dim, row.A);
    row.delta_exact = -std::expm1(-pi * row.A);
    row.validity_flag = beyond_model_validity(row.A) ? "beyond_model_validity" : "ok";

    try {
        if (dim == 1) {
            row.coeff_model = rate_coefficient_1p1(row.A).coefficient;
            row.quad_error = 0.0;
            row.delta_model = rate_difference_1p1(row.A) / avg_rate_coefficient_1p1_massless();
        } else {
            const RateResult massless =
                dim == 2 ? rate_coefficient_2p1(0.0, tol) : rate_coefficient_3p1(0.0, tol);
            const RateResult massive =
                dim == 2 ? rate_coefficient_2p1(row.A, tol) : rate_coefficient_3p1(row.A, tol);
            row.coeff_model = massive.coefficient;
            row.quad_error = massive.abs_error_estimate;
            row.delta_model = 1.0 - massive.coefficient / massless.coefficient;
        }
    } catch (const QuadratureFailure& e) {
        row.coeff_model = e.best_value();
        row.quad_error = e.achieved_error();
        row.delta_model = 0.0;
        row.validity_flag = "quadrature_failed";
    }
    return row;
}

struct SweepSpec {
    std::vector<int> dims;  // ascending
    double sqrtA_min = 1e-3;
    double sqrtA_max = 1.0;
    int points = 31;
    bool log_spacing = true;
    double tol = 1e-8;
};

inline std::vector<double> sweep_grid(const SweepSpec& spec) {
    if (!(spec.sqrtA_min > 0.0) || !(spec.sqrtA_min < spec.sqrtA_max))
        throw std::invalid_argument("sweep grid requires 0 < sqrtA_min < sqrtA_max");
    if (spec.points < 2) throw std::invalid_argument("sweep grid requires points >= 2");

    std::vector<double> grid(spec.points);
    for (int i = 0; i < spec.points; ++i) {
        const double f = static_cast<double>(i) / (spec.points - 1);
        grid[i] = spec.log_spacing
                      ? spec.sqrtA_min * std::pow(spec.sqrtA_max / spec.sqrtA_min, f)
                      : spec.sqrtA_min + f * (spec.sqrtA_max - spec.sqrtA_min);
    }
    grid.front() = spec.sqrtA_min;
    grid.back() = spec.sqrtA_max;
    return grid;
}

// Rows ordered by (dim, sqrtA), independent of evaluation order.
inline std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    for (int d : spec.dims) require_dim(d);
    const std::vector<double> grid = sweep_grid(spec);
    std::vector<SweepRow> rows;
    rows.reserve(spec.dims.size() * grid.size());
    for (int dim : spec.dims)
        for (double s : grid) rows.push_back(evaluate_point(dim, s, spec.tol));
    return rows;
}

inline std::string metadata_comment_block(double tol) {
    std::string out;
    out += "# pairprod ";
    out += version;
    out += "\n# tol = " + format_g12(tol);
    out += "\n# hbar_J_s = " + format_g12(constants::hbar_J_s);
    out += "\n# c_m_per_s = " + format_g12(constants::c_m_per_s);
    out += "\n";
    return out;
}

inline std::string to_csv(const std::vector<SweepRow>& rows, double tol) {
    std::string out = metadata_comment_block(tol);
    out += sweep_csv_header;
    out += "\n";
    for (const SweepRow& r : rows) {
        out += std::to_string(r.dim);
        out += ',' + format_g12(r.sqrtA);
        out += ',' + format_g12(r.A);
        out += ',' + format_g12(r.coeff_model);
        out += ',' + format_g12(r.coeff_exact);
        out += ',' + format_g12(r.delta_model);
        out += ',' + format_g12(r.delta_exact);
        out += ',' + format_g12(r.quad_error);
        out += ',' + r.validity_flag;
        out += '\n';
    }
    return out;
}

inline nlohmann::json to_json(const std::vector<SweepRow>& rows, double tol) {
    nlohmann::json j;
    j["metadata"] = {
        {"version", version},
        {"tolerance", tol},
        {"constants",
         {{"hbar_J_s", constants::hbar_J_s}, {"c_m_per_s", constants::c_m_per_s}}},
    };
    nlohmann::json arr = nlohmann::json::array();
    for (const SweepRow& r : rows) {
        arr.push_back({
            {"dim", r.dim},
            {"sqrtA", r.sqrtA},
            {"A", r.A},
            {"coeff_model", r.coeff_model},
            {"coeff_exact", r.coeff_exact},
            {"delta_model", r.delta_model},
            {"delta_exact", r.delta_exact},
            {"quad_error", r.quad_error},
            {"validity_flag", r.validity_flag},
        });
    }
    j["rows"] = std::move(arr);
    return j;
}

}  // namespace pairprod
