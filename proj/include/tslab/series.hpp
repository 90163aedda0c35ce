#pragma once

#include <Eigen/Core>

#include <chrono>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tslab/month.hpp"

namespace tslab {

/// Display rounding applied when a series is rendered in a report.
/// Values are always stored at full double precision.
enum class UnitHint {
    integer,      // index points
    one_decimal,  // exchange rate: aggregate as integer, components at one decimal
    raw,          // no rounding
};

/// Monthly-frequency sequence anchored at a start month. Missing values can
/// only form a prefix and/or suffix run (the trimmed ends a centered moving
/// average produces); the interior block is dense and fully observed.
class MonthlySeries {
  public:
    MonthlySeries(MonthStamp start, Eigen::VectorXd values, std::string label = {},
                  UnitHint unit = UnitHint::raw);

    /// Series with `lead` missing months before the observed block and
    /// `trail` missing months after it. `start` is the month of index 0,
    /// i.e. the first *missing* month when lead > 0.
    MonthlySeries(MonthStamp start, Eigen::Index lead, Eigen::VectorXd observed,
                  Eigen::Index trail, std::string label = {}, UnitHint unit = UnitHint::raw);

    Eigen::Index length() const noexcept { return lead_ + observed_.size() + trail_; }
    MonthStamp start() const noexcept { return start_; }
    MonthStamp end() const noexcept { return start_.plus(static_cast<int>(length()) - 1); }
    MonthStamp month_at(Eigen::Index i) const noexcept { return start_.plus(static_cast<int>(i)); }

    Eigen::Index lead_missing() const noexcept { return lead_; }
    Eigen::Index trail_missing() const noexcept { return trail_; }
    bool fully_observed() const noexcept { return lead_ == 0 && trail_ == 0; }

    bool observed(Eigen::Index i) const noexcept {
        return i >= lead_ && i < lead_ + observed_.size();
    }
    std::optional<double> value(Eigen::Index i) const {
        return observed(i) ? std::optional<double>(observed_[i - lead_]) : std::nullopt;
    }
    std::optional<double> at(MonthStamp m) const {
        Eigen::Index i = m.index() - start_.index();
        return (i >= 0 && i < length()) ? value(i) : std::nullopt;
    }

    /// Dense observed interior, oldest first.
    const Eigen::VectorXd& observed_values() const noexcept { return observed_; }
    MonthStamp first_observed() const noexcept { return start_.plus(static_cast<int>(lead_)); }
    MonthStamp last_observed() const noexcept {
        return start_.plus(static_cast<int>(lead_ + observed_.size()) - 1);
    }

    const std::string& label() const noexcept { return label_; }
    UnitHint unit_hint() const noexcept { return unit_; }

    MonthlySeries with_label(std::string label) const;
    MonthlySeries with_unit(UnitHint unit) const;

  private:
    MonthStamp start_;
    Eigen::Index lead_ = 0;
    Eigen::Index trail_ = 0;
    Eigen::VectorXd observed_;
    std::string label_;
    UnitHint unit_ = UnitHint::raw;
};

/// One daily observation prior to monthly aggregation.
struct DailyRecord {
    std::chrono::year_month_day date;
    double value = 0.0;
};

/// Paired observations over a common span of months; the input shape for
/// every correlation test and regression fit.
struct AlignedPair {
    Eigen::VectorXd x;
    Eigen::VectorXd y;
    MonthStamp first;  // month of index 0

    Eigen::Index n() const noexcept { return x.size(); }
    MonthStamp month_at(Eigen::Index i) const noexcept { return first.plus(static_cast<int>(i)); }
    std::vector<MonthStamp> months() const;
};

/// Mean of each calendar month's daily values, earliest month first.
/// errors: empty input -> empty_dataset; a month with no records between the
/// first and last record -> gap_month.
MonthlySeries aggregate_daily_to_monthly(std::span<const DailyRecord> records,
                                         std::string label = {}, UnitHint unit = UnitHint::raw);

/// Whitespace-separated decimal numbers, one value per token, anchored at
/// `start`. errors: non-numeric token -> parse_error; no tokens -> empty_dataset.
MonthlySeries parse_monthly_file(std::istream& in, MonthStamp start, std::string label = {},
                                 UnitHint unit = UnitHint::raw);
MonthlySeries parse_monthly_text(std::string_view text, MonthStamp start, std::string label = {},
                                 UnitHint unit = UnitHint::raw);

/// Rows of a "date,value" CSV with ISO-8601 dates.
/// errors: malformed row or invalid date -> parse_error; no rows -> empty_dataset.
std::vector<DailyRecord> parse_daily_csv(std::istream& in);

/// Sub-series restricted to [from, to]; months outside the span of s are
/// dropped, not padded. errors: from > to -> invalid_window; no overlap ->
/// empty_window.
MonthlySeries window(const MonthlySeries& s, MonthStamp from, MonthStamp to);
inline MonthlySeries window(const MonthlySeries& s, const MonthWindow& w) {
    return window(s, w.from, w.to);
}

/// Pairs a and b over the months where both are observed.
/// errors: fewer than 3 common observed months -> insufficient_overlap.
AlignedPair align(const MonthlySeries& a, const MonthlySeries& b);

}  // namespace tslab
