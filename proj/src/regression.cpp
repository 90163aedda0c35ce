#include "tslab/regression.hpp"

#include <cmath>

#include "tslab/error.hpp"

namespace tslab {

double round_significant(double v, int digits) {
    if (v == 0.0 || !std::isfinite(v)) return v;
    const double scale = std::pow(10.0, digits - 1 - std::floor(std::log10(std::abs(v))));
    return std::round(v * scale) / scale;
}

double LinearModelSummary::display_slope() const { return round_significant(slope, 4); }

double LinearModelSummary::display_intercept() const { return std::round(intercept * 100.0) / 100.0; }

LinearModelSummary fit_ols(const MonthlySeries& dependent, const MonthlySeries& independent,
                           const MonthWindow& train) {
    const AlignedPair pair = align(window(dependent, train), window(independent, train));
    const Eigen::Index n = pair.n();
    if (n < 3) throw Error(Errc::insufficient_data, "need at least 3 training months");

    const Eigen::ArrayXd dep = pair.x.array() - pair.x.mean();
    const Eigen::ArrayXd ind = pair.y.array() - pair.y.mean();
    const double sxx = ind.square().sum();
    if (sxx == 0.0) throw Error(Errc::zero_variance, "constant predictor");

    LinearModelSummary m;
    m.n = n;
    m.df = static_cast<int>(n) - 2;
    m.slope = (dep * ind).sum() / sxx;
    m.intercept = pair.x.mean() - m.slope * pair.y.mean();

    const Eigen::ArrayXd residuals =
        pair.x.array() - (m.intercept + m.slope * pair.y.array());
    const double rss = residuals.square().sum();
    const double tss = dep.square().sum();
    m.rse = std::sqrt(rss / m.df);
    m.r_squared = 1.0 - rss / tss;
    m.adj_r_squared = 1.0 - (1.0 - m.r_squared) * (static_cast<double>(n) - 1.0) / m.df;
    m.train = MonthWindow{pair.first, pair.month_at(n - 1)};
    m.dependent_label = dependent.label();
    m.independent_label = independent.label();
    m.dependent_unit = dependent.unit_hint();
    return m;
}

std::vector<std::pair<MonthStamp, double>> forecast(const LinearModelSummary& model,
                                                    const MonthlySeries& independent,
                                                    const MonthWindow& test) {
    if (test.from > test.to) throw Error(Errc::invalid_window, "test window is empty");
    std::vector<std::pair<MonthStamp, double>> out;
    out.reserve(static_cast<size_t>(test.length()));
    for (int i = 0; i < test.length(); ++i) {
        const MonthStamp month = test.from.plus(i);
        const auto x = independent.at(month);
        if (!x) throw Error(Errc::missing_predictor, "no predictor value for " + month.str());
        out.emplace_back(month, model.intercept + model.slope * *x);
    }
    return out;
}

ForecastTable error_table(const LinearModelSummary& model, const MonthlySeries& dependent,
                          const MonthlySeries& independent, const MonthWindow& test,
                          const ForecastOptions& options) {
    if (test.from > test.to) throw Error(Errc::invalid_window, "test window is empty");

    // The published tables compose C and D from the coefficients at the
    // precision the model summary prints; --raw restores the exact fit.
    const double slope = options.full_precision ? model.slope : model.display_slope();
    const double intercept = options.full_precision ? model.intercept : model.display_intercept();

    ForecastTable table;
    table.model = model;
    table.rows.reserve(static_cast<size_t>(test.length()));
    double error_sum = 0.0;
    for (int i = 0; i < test.length(); ++i) {
        const MonthStamp month = test.from.plus(i);
        const auto x = independent.at(month);
        if (!x) throw Error(Errc::missing_predictor, "no predictor value for " + month.str());
        const auto actual = dependent.at(month);
        if (!actual) throw Error(Errc::missing_predictor, "no actual value for " + month.str());
        if (*actual == 0.0)
            throw Error(Errc::division_by_zero, "actual value is zero in " + month.str());

        ForecastRow row;
        row.month = month;
        row.actual = *actual;
        row.predictor = *x;
        row.contribution = *x * slope;
        row.intercept_term = intercept;
        row.forecast = row.contribution + row.intercept_term;

        const double compared = options.round_forecast ? std::round(row.forecast) : row.forecast;
        row.percent_error = (compared - row.actual) / row.actual * 100.0;
        if (!options.signed_errors) row.percent_error = std::abs(row.percent_error);
        error_sum += row.percent_error;
        table.rows.push_back(row);
    }
    table.mean_percent_error = error_sum / static_cast<double>(table.rows.size());
    return table;
}

double reciprocal_fit_check(const LinearModelSummary& m_xy, const LinearModelSummary& m_yx) {
    if (m_xy.train.from != m_yx.train.from || m_xy.train.to != m_yx.train.to ||
        m_xy.n != m_yx.n)
        throw Error(Errc::window_mismatch, "fits use different training windows");
    return m_xy.slope * m_yx.slope;
}

}  // namespace tslab
