#pragma once

#include <Eigen/Core>

#include <string>
#include <utility>
#include <vector>

#include "tslab/series.hpp"

namespace tslab {

/// Simple OLS fit of one series on another over a training window.
struct LinearModelSummary {
    double intercept = 0.0;
    double slope = 0.0;
    double rse = 0.0;  // sqrt(RSS / (n - 2))
    int df = 0;        // n - 2
    double r_squared = 0.0;
    double adj_r_squared = 0.0;
    Eigen::Index n = 0;
    MonthWindow train{};
    std::string dependent_label;
    std::string independent_label;
    UnitHint dependent_unit = UnitHint::raw;

    /// Coefficient at the precision a model summary prints (4 significant
    /// digits); forecast tables compose their contribution column from this.
    double display_slope() const;
    /// Intercept at printed precision (2 decimals).
    double display_intercept() const;
};

/// One month of a forecast-evaluation table:
/// actual A, predictor B, contribution C = B*slope, intercept term D,
/// forecast E = C + D, percent error |E - A|/A * 100.
struct ForecastRow {
    MonthStamp month;
    double actual = 0.0;
    double predictor = 0.0;
    double contribution = 0.0;
    double intercept_term = 0.0;
    double forecast = 0.0;
    double percent_error = 0.0;
};

struct ForecastTable {
    LinearModelSummary model;
    std::vector<ForecastRow> rows;
    double mean_percent_error = 0.0;
};

struct ForecastOptions {
    /// Keep the sign of (E - A)/A instead of reporting the magnitude.
    bool signed_errors = false;
    /// Round the forecast to an integer before the error is computed.
    bool round_forecast = false;
    /// Compose C and D from the full-precision fit instead of the
    /// display-precision coefficients the published tables use.
    bool full_precision = false;
};

/// OLS of `dependent` on `independent` over the aligned training window.
/// errors: constant predictor -> zero_variance; n < 3 -> insufficient_data.
LinearModelSummary fit_ols(const MonthlySeries& dependent, const MonthlySeries& independent,
                           const MonthWindow& train);

/// Full-precision predictions intercept + slope * x over the test window.
/// errors: a test month without a predictor value -> missing_predictor.
std::vector<std::pair<MonthStamp, double>> forecast(const LinearModelSummary& model,
                                                    const MonthlySeries& independent,
                                                    const MonthWindow& test);

/// Per-month A/B/C/D/E rows with percent errors over the test window.
/// errors: actual = 0 -> division_by_zero; missing data -> missing_predictor.
ForecastTable error_table(const LinearModelSummary& model, const MonthlySeries& dependent,
                          const MonthlySeries& independent, const MonthWindow& test,
                          const ForecastOptions& options = {});

/// slope(y~x) * slope(x~y); equals the shared R-squared of the pair.
/// errors: fits from different windows -> window_mismatch.
double reciprocal_fit_check(const LinearModelSummary& m_xy, const LinearModelSummary& m_yx);

/// Round to `digits` significant digits (display-precision coefficients).
double round_significant(double v, int digits);

}  // namespace tslab
