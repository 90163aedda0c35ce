#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace tslab {

/// A calendar month used as the time index of every monthly series.
/// Ordered by 12*year + month.
struct MonthStamp {
    int year = 0;
    int month = 1;  // 1..12

    constexpr int index() const noexcept { return year * 12 + (month - 1); }

    static constexpr MonthStamp from_index(int idx) noexcept {
        int y = idx / 12;
        int m = idx % 12;
        if (m < 0) {
            m += 12;
            --y;
        }
        return MonthStamp{y, m + 1};
    }

    constexpr MonthStamp plus(int months) const noexcept { return from_index(index() + months); }

    friend constexpr bool operator==(MonthStamp a, MonthStamp b) noexcept {
        return a.index() == b.index();
    }
    friend constexpr auto operator<=>(MonthStamp a, MonthStamp b) noexcept {
        return a.index() <=> b.index();
    }

    bool valid() const noexcept { return month >= 1 && month <= 12; }

    /// "2009-01"
    std::string str() const;
    /// "January"
    std::string_view name() const;

    /// Parses "YYYY-MM"; empty on malformed input.
    static std::optional<MonthStamp> try_parse(std::string_view text);
    /// Parses "YYYY-MM"; throws Error{bad_argument} on malformed input.
    static MonthStamp parse(std::string_view text);
};

/// Inclusive month range [from, to].
struct MonthWindow {
    MonthStamp from;
    MonthStamp to;

    int length() const noexcept { return to.index() - from.index() + 1; }
    bool contains(MonthStamp m) const noexcept { return from <= m && m <= to; }

    std::string str() const;  // "2009-01:2014-12"

    /// Parses "YYYY-MM:YYYY-MM"; throws Error{bad_argument} on malformed input.
    static MonthWindow parse(std::string_view text);
};

std::string_view month_name(int month);  // 1..12

}  // namespace tslab
