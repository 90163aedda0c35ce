#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tslab/series.hpp"

namespace tslab {

/// One entry of the dataset registry.
struct DatasetSpec {
    enum class Kind { monthly, daily };

    std::string name;
    std::filesystem::path path;  // relative paths resolve against the config file
    Kind kind = Kind::monthly;
    std::optional<MonthStamp> start;  // required for monthly files
    std::string label;
    UnitHint unit = UnitHint::raw;
    double plot_scale = 1.0;  // comparison-plot multiplier
};

struct AnalysisConfig {
    std::vector<DatasetSpec> datasets;
    MonthWindow default_train{};
    MonthWindow default_test{};
    int max_lag = 24;
    std::filesystem::path base_dir;

    const DatasetSpec& dataset(const std::string& name) const;  // unknown_dataset on miss
};

/// Reads the INI-style registry:
///
///   [dataset it]
///   label = Indian IT sector index
///   kind = monthly
///   path = it.txt
///   start = 2009-01
///   unit = integer
///
///   [defaults]
///   train = 2009-01:2014-12
///   test = 2015-01:2016-04
///   max-lag = 24
///
/// errors: unreadable file -> io_error; malformed content -> parse_error;
/// duplicate dataset names or missing required keys -> parse_error.
AnalysisConfig load_config(const std::filesystem::path& file);

/// Loads one dataset by name, aggregating daily files to monthly.
MonthlySeries load_dataset(const AnalysisConfig& config, const std::string& name);

}  // namespace tslab
