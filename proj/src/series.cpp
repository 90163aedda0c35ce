#include "tslab/series.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <sstream>

#include "tslab/error.hpp"

namespace tslab {

MonthlySeries::MonthlySeries(MonthStamp start, Eigen::VectorXd values, std::string label,
                             UnitHint unit)
    : MonthlySeries(start, 0, std::move(values), 0, std::move(label), unit) {}

MonthlySeries::MonthlySeries(MonthStamp start, Eigen::Index lead, Eigen::VectorXd observed,
                             Eigen::Index trail, std::string label, UnitHint unit)
    : start_(start),
      lead_(lead),
      trail_(trail),
      observed_(std::move(observed)),
      label_(std::move(label)),
      unit_(unit) {
    if (!start_.valid()) throw Error(Errc::bad_argument, "start month out of range");
    if (lead_ < 0 || trail_ < 0) throw Error(Errc::bad_argument, "negative missing-run length");
    if (length() < 1) throw Error(Errc::empty_dataset, "series must hold at least one month");
}

MonthlySeries MonthlySeries::with_label(std::string label) const {
    MonthlySeries s = *this;
    s.label_ = std::move(label);
    return s;
}

MonthlySeries MonthlySeries::with_unit(UnitHint unit) const {
    MonthlySeries s = *this;
    s.unit_ = unit;
    return s;
}

std::vector<MonthStamp> AlignedPair::months() const {
    std::vector<MonthStamp> out;
    out.reserve(static_cast<size_t>(n()));
    for (Eigen::Index i = 0; i < n(); ++i) out.push_back(month_at(i));
    return out;
}

MonthlySeries aggregate_daily_to_monthly(std::span<const DailyRecord> records, std::string label,
                                         UnitHint unit) {
    if (records.empty()) throw Error(Errc::empty_dataset, "no daily records");

    std::map<int, std::pair<double, long>> buckets;  // month index -> (sum, count)
    for (const DailyRecord& rec : records) {
        if (!rec.date.ok())
            throw Error(Errc::parse_error, "invalid calendar date in daily records");
        MonthStamp m{int(rec.date.year()), int(unsigned(rec.date.month()))};
        auto& [sum, count] = buckets[m.index()];
        sum += rec.value;
        ++count;
    }

    int first = buckets.begin()->first;
    int last = buckets.rbegin()->first;
    Eigen::VectorXd values(last - first + 1);
    for (int idx = first; idx <= last; ++idx) {
        auto it = buckets.find(idx);
        if (it == buckets.end())
            throw Error(Errc::gap_month, "no records in " + MonthStamp::from_index(idx).str());
        values[idx - first] = it->second.first / static_cast<double>(it->second.second);
    }
    return MonthlySeries(MonthStamp::from_index(first), std::move(values), std::move(label), unit);
}

MonthlySeries parse_monthly_file(std::istream& in, MonthStamp start, std::string label,
                                 UnitHint unit) {
    std::vector<double> values;
    std::string token;
    while (in >> token) {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw Error(Errc::parse_error,
                        "non-numeric token '" + token + "' at value " +
                            std::to_string(values.size() + 1));
        values.push_back(v);
    }
    if (values.empty()) throw Error(Errc::empty_dataset, "no values in monthly file");
    return MonthlySeries(start, Eigen::Map<Eigen::VectorXd>(values.data(), values.size()),
                         std::move(label), unit);
}

MonthlySeries parse_monthly_text(std::string_view text, MonthStamp start, std::string label,
                                 UnitHint unit) {
    std::istringstream in{std::string(text)};
    return parse_monthly_file(in, start, std::move(label), unit);
}

std::vector<DailyRecord> parse_daily_csv(std::istream& in) {
    std::vector<DailyRecord> records;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1 && line.starts_with("date")) continue;  // header

        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": expected date,value");
        std::string_view date_part{line.data(), comma};
        std::string_view value_part{line.data() + comma + 1, line.size() - comma - 1};

        int y = 0;
        unsigned m = 0, d = 0;
        if (std::sscanf(std::string(date_part).c_str(), "%d-%u-%u", &y, &m, &d) != 3)
            throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": bad date '" +
                                               std::string(date_part) + "'");
        std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m},
                                        std::chrono::day{d}};
        if (!ymd.ok())
            throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": invalid date '" +
                                               std::string(date_part) + "'");

        double v = 0.0;
        auto [ptr, ec] = std::from_chars(value_part.data(), value_part.data() + value_part.size(), v);
        if (ec != std::errc{} || ptr != value_part.data() + value_part.size())
            throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": bad value '" +
                                               std::string(value_part) + "'");
        records.push_back(DailyRecord{ymd, v});
    }
    if (records.empty()) throw Error(Errc::empty_dataset, "no rows in daily file");
    return records;
}

MonthlySeries window(const MonthlySeries& s, MonthStamp from, MonthStamp to) {
    if (from > to) throw Error(Errc::invalid_window, from.str() + " is after " + to.str());
    if (to < s.start() || from > s.end())
        throw Error(Errc::empty_window,
                    "window " + from.str() + ":" + to.str() + " does not overlap the series span");

    int lo = std::max(from.index(), s.start().index());
    int hi = std::min(to.index(), s.end().index());

    // clip the missing prefix/suffix runs and the observed block separately
    int first_obs = s.first_observed().index();
    int last_obs = s.last_observed().index();
    int obs_lo = std::max(lo, first_obs);
    int obs_hi = std::min(hi, last_obs);

    Eigen::Index lead = std::max(0, std::min(hi, first_obs - 1) - lo + 1);
    Eigen::Index trail = std::max(0, hi - std::max(lo, last_obs + 1) + 1);
    Eigen::VectorXd observed;
    if (obs_lo <= obs_hi)
        observed = s.observed_values().segment(obs_lo - first_obs, obs_hi - obs_lo + 1);
    return MonthlySeries(MonthStamp::from_index(lo), lead, std::move(observed), trail, s.label(),
                         s.unit_hint());
}

AlignedPair align(const MonthlySeries& a, const MonthlySeries& b) {
    int lo = std::max(a.first_observed().index(), b.first_observed().index());
    int hi = std::min(a.last_observed().index(), b.last_observed().index());
    if (a.observed_values().size() == 0 || b.observed_values().size() == 0 || hi - lo + 1 < 3)
        throw Error(Errc::insufficient_overlap,
                    "need at least 3 common observed months between '" + a.label() + "' and '" +
                        b.label() + "'");
    Eigen::Index n = hi - lo + 1;
    AlignedPair pair;
    pair.x = a.observed_values().segment(lo - a.first_observed().index(), n);
    pair.y = b.observed_values().segment(lo - b.first_observed().index(), n);
    pair.first = MonthStamp::from_index(lo);
    return pair;
}

}  // namespace tslab
