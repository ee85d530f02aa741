#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ddelab/nevanlinna/function_model.hpp"

namespace ddelab {

/// Counting data for one radius. The pole side describes f; the target side
/// describes 1/(f - a) for the table's target value a.
struct NevRow {
    double r = 0.0;
    /// Radius actually used; differs from r by at most 1e-6 r when a
    /// singularity lies close to the circle.
    double r_used = 0.0;
    long n = 0, n_bar = 0;
    double N = 0.0, N_bar = 0.0, m = 0.0, T = 0.0;
    long n_a = 0, n_bar_a = 0;
    double N_a = 0.0, N_bar_a = 0.0, m_a = 0.0, T_a = 0.0;
    bool jittered = false;
};

struct QuadratureOptions {
    /// Arcs the circle is cut into before adaptive refinement (minimum).
    int initial_arcs = 64;
    /// Absolute tolerance in units of (1 + coarse value of the integral).
    double abs_tol = 1e-11;
    /// Per-arc tolerance relative to the arc's own contribution.
    double rel_tol = 1e-12;
    int max_depth = 40;
};

struct NevTable {
    std::string model;
    nlohmann::json model_params;
    cplx target = 0.0;
    std::vector<NevRow> rows;

    /// Columns r, n, n_bar, N, N_bar, m, T for the poles of f.
    std::string to_csv() const;
    nlohmann::json to_json() const;
};

/// Builds the table from exact inventories; m and m_a come from adaptive
/// quadrature of log+ on |z| = r. Throws DomainError on a non-increasing or
/// non-positive grid, and on quadrature non-convergence (naming r).
NevTable characteristic_table(const FunctionModel& f, const std::vector<double>& radii, cplx target = 0.0,
                              const QuadratureOptions& quad = {});

/// Proximity function (1/2pi) * integral of log+ |f| over |z| = r, for a
/// callable returning log|f|.
template <class LogAbs>
double proximity(LogAbs&& log_abs, double r, const QuadratureOptions& quad, bool* converged = nullptr);

/// N(r) = n(0) log r + sum over 0 < |p| <= r of mult * log(r/|p|).
double integrated_counting(const std::vector<PointMult>& points, double r, bool distinct);

struct SlopeFit {
    double value = 0.0;
    /// Two standard errors of the least-squares slope.
    double width = 0.0;
    int rows = 0;
};

struct GrowthEstimate {
    SlopeFit rho;     // log T against log r
    SlopeFit rho2;    // log log T against log r
    SlopeFit lambda2; // log log n against log r
    bool low_confidence = false;
    std::vector<std::string> notes;

    nlohmann::json to_json() const;
};

/// Least-squares slope of y against x.
SlopeFit fit_slope(const std::vector<double>& x, const std::vector<double>& y);

GrowthEstimate growth_estimates(const NevTable& table);

struct RatioRow {
    double r = 0.0;
    double T = 0.0;
    double N_bar_zeros = 0.0;
    /// N_bar(r, 1/f) / T(r, f).
    double zero_ratio = 0.0;
    /// (deg_w R - 3) T(r, f) and N_bar(r, 1/f), when a degree is supplied.
    std::optional<double> degree_lhs, degree_rhs;
    /// T(r, R(f)) / T(r, f), when a composed model is supplied.
    std::optional<double> composed_ratio;
};

struct RatioReport {
    std::vector<RatioRow> rows;
    std::vector<std::string> notes;
    std::optional<int> deg_r;
    std::optional<int> composed_degree;

    /// Range of a column over the upper half of the rows.
    std::pair<double, double> top_half_zero_ratio() const;
    std::optional<std::pair<double, double>> top_half_composed_ratio() const;
    nlohmann::json to_json() const;
};

/// Ratio checks for f over `radii`. `deg_r` is deg_w R of a log-derivative
/// equation f is meant to solve; `composed` is a model of R(f) with R of
/// degree `composed_degree`. Rows with T below 1e-8 are skipped and noted.
RatioReport ratio_checks(const FunctionModel& f, const std::vector<double>& radii, std::optional<int> deg_r = {},
                         const FunctionModel* composed = nullptr, int composed_degree = 0);
/// Same, from precomputed tables (zero target for `base`, same radii for both).
RatioReport ratio_checks(const NevTable& base, std::optional<int> deg_r = {}, const NevTable* composed = nullptr,
                         int composed_degree = 0);

} // namespace ddelab

#include "ddelab/nevanlinna/proximity_impl.hpp"
