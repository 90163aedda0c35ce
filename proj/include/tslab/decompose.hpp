#pragma once

#include <Eigen/Core>

#include "tslab/series.hpp"

namespace tslab {

/// Fixed per-calendar-month offsets, identical every year, centered so the
/// twelve figures sum to zero.
struct SeasonalFigures {
    Eigen::Matrix<double, 12, 1> by_month;  // index 0 = January

    double at(int month) const { return by_month[month - 1]; }  // month 1..12

    /// The figures cycled over `length` months starting at `start`.
    Eigen::VectorXd cycle(MonthStamp start, Eigen::Index length) const;
};

/// Additive split of a monthly series: aggregate = trend + seasonal + random
/// wherever trend is observed. Trend and random are missing for exactly the
/// first six and last six months.
struct Decomposition {
    MonthlySeries aggregate;
    MonthlySeries trend;
    SeasonalFigures seasonal;
    MonthlySeries random;

    /// Seasonal figures cycled over the full aggregate span, as a series.
    MonthlySeries seasonal_series() const;
};

/// 2x12 centered moving average: T_t = (y[t-6]/2 + y[t-5] + ... + y[t+5] + y[t+6]/2)/12
/// where the 13-point window fits; six months missing at each end.
/// errors: length < 13 -> series_too_short; missing input -> unexpected_missing.
MonthlySeries centered_ma_trend(const MonthlySeries& s);

/// Mean of the detrended values per calendar month, centered to zero sum.
/// pre: trend was produced from s by centered_ma_trend.
/// errors: a calendar month with no detrended observation -> incomplete_cycle.
SeasonalFigures seasonal_figures(const MonthlySeries& s, const MonthlySeries& trend);

/// Full additive decomposition. pre: s fully observed, length >= 24.
Decomposition decompose(const MonthlySeries& s);

enum class Component { aggregate, trend, seasonal, random };

std::optional<Component> component_from_string(std::string_view name);
std::string_view to_string(Component c);

/// Selects one component of the decomposition of s as a series.
/// Component::aggregate returns s itself and has no length-24 precondition.
MonthlySeries component_series(const MonthlySeries& s, Component c);

}  // namespace tslab
