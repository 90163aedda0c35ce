#include "tslab/month.hpp"

#include <array>
#include <charconv>
#include <cstdio>

#include "tslab/error.hpp"

namespace tslab {

namespace {

constexpr std::array<std::string_view, 12> kMonthNames = {
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December"};

std::optional<int> parse_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

}  // namespace

std::string_view month_name(int month) { return kMonthNames.at(static_cast<size_t>(month - 1)); }

std::string MonthStamp::str() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d", year, month);
    return buf;
}

std::string_view MonthStamp::name() const { return month_name(month); }

std::optional<MonthStamp> MonthStamp::try_parse(std::string_view text) {
    auto dash = text.find('-');
    if (dash == std::string_view::npos) return std::nullopt;
    auto y = parse_int(text.substr(0, dash));
    auto m = parse_int(text.substr(dash + 1));
    if (!y || !m) return std::nullopt;
    MonthStamp stamp{*y, *m};
    if (!stamp.valid()) return std::nullopt;
    return stamp;
}

MonthStamp MonthStamp::parse(std::string_view text) {
    auto stamp = try_parse(text);
    if (!stamp) throw Error(Errc::bad_argument, "expected month as YYYY-MM, got '" + std::string(text) + "'");
    return *stamp;
}

std::string MonthWindow::str() const { return from.str() + ":" + to.str(); }

MonthWindow MonthWindow::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw Error(Errc::bad_argument,
                    "expected window as YYYY-MM:YYYY-MM, got '" + std::string(text) + "'");
    return MonthWindow{MonthStamp::parse(text.substr(0, colon)),
                       MonthStamp::parse(text.substr(colon + 1))};
}

}  // namespace tslab
