#include "tslab/decompose.hpp"

#include <array>

#include "tslab/error.hpp"

namespace tslab {

namespace {
constexpr Eigen::Index kHalfWindow = 6;  // 2x12 moving average trims 6 months per end
}

Eigen::VectorXd SeasonalFigures::cycle(MonthStamp start, Eigen::Index length) const {
    Eigen::VectorXd out(length);
    for (Eigen::Index i = 0; i < length; ++i) out[i] = by_month[(start.month - 1 + i) % 12];
    return out;
}

MonthlySeries Decomposition::seasonal_series() const {
    return MonthlySeries(aggregate.start(), seasonal.cycle(aggregate.start(), aggregate.length()),
                         aggregate.label() + " seasonal", aggregate.unit_hint());
}

MonthlySeries centered_ma_trend(const MonthlySeries& s) {
    if (!s.fully_observed())
        throw Error(Errc::unexpected_missing, "trend input must be fully observed");
    const Eigen::VectorXd& y = s.observed_values();
    const Eigen::Index n = y.size();
    if (n < 2 * kHalfWindow + 1)
        throw Error(Errc::series_too_short,
                    "need at least 13 months, got " + std::to_string(n));

    Eigen::VectorXd trend(n - 2 * kHalfWindow);
    for (Eigen::Index t = kHalfWindow; t < n - kHalfWindow; ++t) {
        double acc = 0.5 * (y[t - kHalfWindow] + y[t + kHalfWindow]);
        acc += y.segment(t - kHalfWindow + 1, 2 * kHalfWindow - 1).sum();
        trend[t - kHalfWindow] = acc / 12.0;
    }
    return MonthlySeries(s.start(), kHalfWindow, std::move(trend), kHalfWindow,
                         s.label() + " trend", s.unit_hint());
}

SeasonalFigures seasonal_figures(const MonthlySeries& s, const MonthlySeries& trend) {
    if (!s.fully_observed())
        throw Error(Errc::unexpected_missing, "seasonal input must be fully observed");
    if (trend.start() != s.start() || trend.length() != s.length())
        throw Error(Errc::window_mismatch, "trend does not cover the series span");

    std::array<double, 12> sum{};
    std::array<long, 12> count{};
    for (Eigen::Index i = 0; i < s.length(); ++i) {
        auto t = trend.value(i);
        if (!t) continue;
        int m = (s.start().month - 1 + static_cast<int>(i)) % 12;
        sum[m] += *s.value(i) - *t;
        ++count[m];
    }

    SeasonalFigures figures;
    for (int m = 0; m < 12; ++m) {
        if (count[m] == 0)
            throw Error(Errc::incomplete_cycle,
                        std::string("no detrended observation for ") + std::string(month_name(m + 1)));
        figures.by_month[m] = sum[m] / static_cast<double>(count[m]);
    }
    figures.by_month.array() -= figures.by_month.mean();  // center to zero sum
    return figures;
}

Decomposition decompose(const MonthlySeries& s) {
    if (!s.fully_observed())
        throw Error(Errc::unexpected_missing, "decomposition input must be fully observed");
    if (s.length() < 24)
        throw Error(Errc::series_too_short,
                    "need at least 24 months (two full cycles), got " + std::to_string(s.length()));

    MonthlySeries trend = centered_ma_trend(s);
    SeasonalFigures seasonal = seasonal_figures(s, trend);

    const Eigen::Index interior = trend.observed_values().size();
    Eigen::VectorXd random(interior);
    for (Eigen::Index i = 0; i < interior; ++i) {
        const Eigen::Index at = trend.lead_missing() + i;
        random[i] = *s.value(at) - trend.observed_values()[i] -
                    seasonal.by_month[(s.start().month - 1 + at) % 12];
    }
    MonthlySeries random_series(s.start(), trend.lead_missing(), std::move(random),
                                trend.trail_missing(), s.label() + " random", s.unit_hint());
    return Decomposition{s, std::move(trend), seasonal, std::move(random_series)};
}

std::optional<Component> component_from_string(std::string_view name) {
    if (name == "aggregate") return Component::aggregate;
    if (name == "trend") return Component::trend;
    if (name == "seasonal") return Component::seasonal;
    if (name == "random") return Component::random;
    return std::nullopt;
}

std::string_view to_string(Component c) {
    switch (c) {
        case Component::aggregate: return "aggregate";
        case Component::trend: return "trend";
        case Component::seasonal: return "seasonal";
        case Component::random: return "random";
    }
    return "component";
}

MonthlySeries component_series(const MonthlySeries& s, Component c) {
    if (c == Component::aggregate) return s;
    Decomposition d = decompose(s);
    switch (c) {
        case Component::trend: return d.trend;
        case Component::seasonal: return d.seasonal_series();
        case Component::random: return d.random;
        default: return s;
    }
}

}  // namespace tslab
