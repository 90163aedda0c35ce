#include "tslab/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "tslab/error.hpp"

namespace tslab {

namespace {

std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

UnitHint parse_unit(const std::string& value, long line_no) {
    if (value == "integer") return UnitHint::integer;
    if (value == "one-decimal") return UnitHint::one_decimal;
    if (value == "raw") return UnitHint::raw;
    throw Error(Errc::parse_error,
                "line " + std::to_string(line_no) + ": unknown unit '" + value + "'");
}

}  // namespace

const DatasetSpec& AnalysisConfig::dataset(const std::string& name) const {
    auto it = std::find_if(datasets.begin(), datasets.end(),
                           [&](const DatasetSpec& d) { return d.name == name; });
    if (it == datasets.end()) throw Error(Errc::unknown_dataset, "'" + name + "'");
    return *it;
}

AnalysisConfig load_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error(Errc::io_error, "cannot open config '" + file.string() + "'");

    AnalysisConfig config;
    config.base_dir = file.has_parent_path() ? file.parent_path() : std::filesystem::path(".");

    std::ptrdiff_t current = -1;  // index into config.datasets
    bool in_defaults = false;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string text = trim(line);
        if (text.empty() || text[0] == '#' || text[0] == ';') continue;

        if (text.front() == '[') {
            if (text.back() != ']')
                throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": unterminated section");
            std::string section = trim(text.substr(1, text.size() - 2));
            if (section == "defaults") {
                in_defaults = true;
                current = -1;
            } else if (section.starts_with("dataset ")) {
                in_defaults = false;
                DatasetSpec spec;
                spec.name = trim(section.substr(8));
                if (spec.name.empty())
                    throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": dataset needs a name");
                for (const DatasetSpec& existing : config.datasets)
                    if (existing.name == spec.name)
                        throw Error(Errc::parse_error, "line " + std::to_string(line_no) +
                                                           ": duplicate dataset '" + spec.name + "'");
                config.datasets.push_back(std::move(spec));
                current = static_cast<std::ptrdiff_t>(config.datasets.size()) - 1;
            } else {
                throw Error(Errc::parse_error,
                            "line " + std::to_string(line_no) + ": unknown section '" + section + "'");
            }
            continue;
        }

        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));

        if (in_defaults) {
            if (key == "train")
                config.default_train = MonthWindow::parse(value);
            else if (key == "test")
                config.default_test = MonthWindow::parse(value);
            else if (key == "max-lag") {
                int v = 0;
                auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
                if (ec != std::errc{} || p != value.data() + value.size() || v < 0)
                    throw Error(Errc::parse_error,
                                "line " + std::to_string(line_no) + ": bad max-lag '" + value + "'");
                config.max_lag = v;
            } else {
                throw Error(Errc::parse_error,
                            "line " + std::to_string(line_no) + ": unknown default '" + key + "'");
            }
            continue;
        }
        if (current < 0)
            throw Error(Errc::parse_error,
                        "line " + std::to_string(line_no) + ": key outside any section");
        DatasetSpec& spec = config.datasets[static_cast<size_t>(current)];

        if (key == "path")
            spec.path = value;
        else if (key == "label")
            spec.label = value;
        else if (key == "kind") {
            if (value == "monthly")
                spec.kind = DatasetSpec::Kind::monthly;
            else if (value == "daily")
                spec.kind = DatasetSpec::Kind::daily;
            else
                throw Error(Errc::parse_error,
                            "line " + std::to_string(line_no) + ": unknown kind '" + value + "'");
        } else if (key == "start")
            spec.start = MonthStamp::parse(value);
        else if (key == "unit")
            spec.unit = parse_unit(value, line_no);
        else if (key == "plot-scale") {
            double v = 0.0;
            auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
            if (ec != std::errc{} || p != value.data() + value.size() || !(v > 0.0))
                throw Error(Errc::parse_error,
                            "line " + std::to_string(line_no) + ": plot-scale must be positive");
            spec.plot_scale = v;
        } else {
            throw Error(Errc::parse_error,
                        "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }

    for (const DatasetSpec& spec : config.datasets) {
        if (spec.path.empty())
            throw Error(Errc::parse_error, "dataset '" + spec.name + "' has no path");
        if (spec.kind == DatasetSpec::Kind::monthly && !spec.start)
            throw Error(Errc::parse_error,
                        "monthly dataset '" + spec.name + "' needs a start month");
    }
    return config;
}

MonthlySeries load_dataset(const AnalysisConfig& config, const std::string& name) {
    const DatasetSpec& spec = config.dataset(name);
    std::filesystem::path path =
        spec.path.is_absolute() ? spec.path : config.base_dir / spec.path;
    std::ifstream in(path);
    if (!in) throw Error(Errc::io_error, "cannot open '" + path.string() + "'");

    const std::string label = spec.label.empty() ? spec.name : spec.label;
    if (spec.kind == DatasetSpec::Kind::monthly)
        return parse_monthly_file(in, *spec.start, label, spec.unit);
    const std::vector<DailyRecord> records = parse_daily_csv(in);
    return aggregate_daily_to_monthly(records, label, spec.unit);
}

}  // namespace tslab
