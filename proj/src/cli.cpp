#include "tslab/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tslab/association.hpp"
#include "tslab/dataset.hpp"
#include "tslab/decompose.hpp"
#include "tslab/error.hpp"
#include "tslab/regression.hpp"
#include "tslab/render.hpp"

namespace tslab::cli {

namespace {

struct CommonOpts {
    std::string config;
    std::string out_path;
    std::string format = "table";
    bool raw = false;

    TableFormat table_format() const {
        auto f = table_format_from_string(format);
        if (!f) throw Error(Errc::bad_argument, "unknown format '" + format + "'");
        return *f;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config, "dataset registry file")->required();
    cmd->add_option("--out", opts.out_path, "write output to a file instead of stdout");
    cmd->add_option("--format", opts.format, "table | tsv | csv")
        ->check(CLI::IsMember({"table", "tsv", "csv"}));
    cmd->add_flag("--raw", opts.raw, "full precision, no display rounding");
}

void deliver(const std::string& text, const CommonOpts& opts, std::ostream& out) {
    if (opts.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opts.out_path);
    if (!file) throw Error(Errc::io_error, "cannot write '" + opts.out_path + "'");
    file << text;
    if (!file) throw Error(Errc::io_error, "failed writing '" + opts.out_path + "'");
}

Component parse_component(const std::string& name) {
    auto c = component_from_string(name);
    if (!c) throw Error(Errc::bad_argument, "unknown component '" + name + "'");
    return *c;
}

MonthlySeries select(const AnalysisConfig& config, const std::string& name, Component component,
                     const std::optional<MonthWindow>& win) {
    MonthlySeries series = component_series(load_dataset(config, name), component);
    if (win) series = window(series, *win);
    return series;
}

std::string format_stat(double v, bool raw) { return raw ? format_full(v) : format_fixed(v, 4); }

// ---- decompose ----------------------------------------------------------

std::string run_decompose(const AnalysisConfig& config, const std::string& name,
                          const CommonOpts& opts) {
    const MonthlySeries series = load_dataset(config, name);
    const Decomposition dec = decompose(series);

    const UnitHint unit = opts.raw ? UnitHint::raw : series.unit_hint();
    // exchange-rate style: integer aggregates, one-decimal components
    const UnitHint agg_unit = unit == UnitHint::one_decimal ? UnitHint::integer : unit;

    Table table({"Year", "Month", "Aggregate", "Trend", "Seasonal", "Random"});
    for (Eigen::Index i = 0; i < series.length(); ++i) {
        const MonthStamp m = series.month_at(i);
        table.add_row({std::to_string(m.year), std::string(m.name()),
                       format_value(series.value(i), agg_unit),
                       format_value(dec.trend.value(i), unit),
                       format_value(dec.seasonal.at(m.month), unit),
                       format_value(dec.random.value(i), unit)});
    }

    std::ostringstream text;
    if (opts.table_format() == TableFormat::fixed)
        text << series.label() << ": additive decomposition (" << series.start().str() << " to "
             << series.end().str() << ")\n";
    table.write(text, opts.table_format());
    return text.str();
}

// ---- correlate -----------------------------------------------------------

std::string run_correlate(const AnalysisConfig& config, const std::string& x_name,
                          const std::string& y_name, Component component,
                          const std::optional<MonthWindow>& win, const CommonOpts& opts) {
    const MonthlySeries x = select(config, x_name, component, win);
    const MonthlySeries y = select(config, y_name, component, win);
    const CorrelationTest test = cor_test(align(x, y));

    char t_buf[32];
    std::snprintf(t_buf, sizeof t_buf, "%.5g", test.t);
    char r_buf[32];
    std::snprintf(r_buf, sizeof r_buf, "%.7g", test.r);

    Table table({"Parameter", "Value"});
    table.add_row({"t-statistic", opts.raw ? format_full(test.t) : t_buf});
    table.add_row({"Degrees of freedom (df)", std::to_string(test.df)});
    table.add_row({"Significance value (p-value)",
                   opts.raw ? format_full(test.p) : format_p_value(test.p)});
    table.add_row({"Correlation coefficient", opts.raw ? format_full(test.r) : r_buf});

    std::ostringstream text;
    if (opts.table_format() == TableFormat::fixed)
        text << "Correlation test (" << to_string(component) << "): " << x.label() << " vs "
             << y.label() << ", n = " << test.n << "\n";
    table.write(text, opts.table_format());
    return text.str();
}

// ---- ccf ----------------------------------------------------------------

std::string run_ccf(const AnalysisConfig& config, const std::string& x_name,
                    const std::string& y_name, Component component,
                    const std::optional<MonthWindow>& win, int max_lag, const CommonOpts& opts) {
    const MonthlySeries x = select(config, x_name, component, win);
    const MonthlySeries y = select(config, y_name, component, win);
    const CrossCorrelogram gram = ccf(align(x, y), max_lag);

    Table table({"Lag (months)", "Lag (years)", "Correlation"});
    for (int k = -gram.max_lag; k <= gram.max_lag; ++k)
        table.add_row({std::to_string(k), format_fixed(CrossCorrelogram::year_fraction(k), 4),
                       opts.raw ? format_full(gram.at(k)) : format_fixed(gram.at(k), 4)});

    std::ostringstream text;
    const auto peak = gram.peak();
    if (opts.table_format() == TableFormat::fixed) {
        text << "Cross-correlation (" << to_string(component) << "): " << x.label() << " vs "
             << y.label() << "\n";
        table.write(text, opts.table_format());
        text << "peak " << format_fixed(peak.value, 4) << " at lag " << peak.lag << " months ("
             << format_fixed(CrossCorrelogram::year_fraction(peak.lag), 4) << " years)\n";
    } else {
        table.write(text, opts.table_format());
    }
    return text.str();
}

// ---- fit ----------------------------------------------------------------

std::string run_fit(const AnalysisConfig& config, const std::string& dep_name,
                    const std::string& ind_name, const MonthWindow& train, const MonthWindow& test,
                    const ForecastOptions& fc_opts, const CommonOpts& opts) {
    const MonthlySeries dep = load_dataset(config, dep_name);
    const MonthlySeries ind = load_dataset(config, ind_name);
    const LinearModelSummary model = fit_ols(dep, ind, train);
    const ForecastTable fc = error_table(model, dep, ind, test, fc_opts);

    std::ostringstream text;
    const bool fixed = opts.table_format() == TableFormat::fixed;

    Table summary({"Parameter", "Value"});
    char rse_buf[96];
    std::snprintf(rse_buf, sizeof rse_buf, "%.4g on %d degrees of freedom", model.rse, model.df);
    summary.add_row({"Constant term (intercept)",
                     opts.raw ? format_full(model.intercept) : format_fixed(model.intercept, 2)});
    summary.add_row({"Coefficient of " + model.independent_label,
                     opts.raw ? format_full(model.slope) : format_coefficient(model.slope)});
    summary.add_row({"Residual standard error", opts.raw ? format_full(model.rse) : rse_buf});
    summary.add_row({"Multiple R-squared", format_stat(model.r_squared, opts.raw)});
    summary.add_row({"Adjusted R-squared", format_stat(model.adj_r_squared, opts.raw)});

    if (fixed) {
        text << "Linear model: " << model.dependent_label << " ~ " << model.independent_label
             << ", trained on " << model.train.str() << " (n = " << model.n << ")\n";
        summary.write(text, opts.table_format());
        text << "\nForecast for " << test.str() << "\n";
    } else {
        summary.write(text, opts.table_format());
        text << "\n";
    }

    const UnitHint forecast_unit = opts.raw ? UnitHint::raw : UnitHint::integer;
    Table rows({"Year", "Month", "Actual (A)", "Predictor (B)", "Contribution (C)",
                "Intercept (D)", "Forecast (E)", "Percent error"});
    for (const ForecastRow& row : fc.rows) {
        rows.add_row({std::to_string(row.month.year), std::string(row.month.name()),
                      format_value(row.actual, opts.raw ? UnitHint::raw : dep.unit_hint()),
                      format_value(row.predictor, opts.raw ? UnitHint::raw : ind.unit_hint()),
                      opts.raw ? format_full(row.contribution) : format_fixed(row.contribution, 2),
                      opts.raw ? format_full(row.intercept_term)
                               : format_fixed(row.intercept_term, 2),
                      format_value(row.forecast, forecast_unit),
                      opts.raw ? format_full(row.percent_error)
                               : format_fixed(row.percent_error, 2)});
    }
    rows.write(text, opts.table_format());
    if (fixed)
        text << "mean percent error: " << format_fixed(fc.mean_percent_error, 2) << "\n";
    return text.str();
}

// ---- export-plot-data ----------------------------------------------------

void run_export(const AnalysisConfig& config, const std::vector<std::string>& names,
                Component component, const std::filesystem::path& dest, std::ostream& out) {
    // render everything first so a bad dataset leaves no partial files
    std::vector<std::pair<std::filesystem::path, std::string>> files;
    for (const std::string& name : names) {
        const DatasetSpec& spec = config.dataset(name);
        const MonthlySeries series = component_series(load_dataset(config, name), component);
        std::ostringstream body;
        for (Eigen::Index i = 0; i < series.length(); ++i) {
            const auto v = series.value(i);
            if (!v) continue;  // trimmed ends are omitted, not padded
            body << series.month_at(i).str() << '\t' << format_full(*v * spec.plot_scale) << '\n';
        }
        files.emplace_back(dest / (name + "_" + std::string(to_string(component)) + ".tsv"),
                           body.str());
    }
    for (const auto& [path, body] : files) {
        std::ofstream file(path);
        if (!file) throw Error(Errc::io_error, "cannot write '" + path.string() + "'");
        file << body;
        if (!file) throw Error(Errc::io_error, "failed writing '" + path.string() + "'");
        out << "wrote " << path.string() << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"monthly time-series decomposition, association and forecasting toolkit",
                 "tslab"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string x_name, y_name, component_name = "aggregate", window_text;
    std::string train_text, test_text;
    int max_lag = -1;
    ForecastOptions fc_opts;
    std::vector<std::string> export_names;
    std::string dest = ".";

    CLI::App* cmd_decompose =
        app.add_subcommand("decompose", "split a series into trend, seasonal and random parts");
    cmd_decompose->add_option("dataset", x_name, "dataset name")->required();
    add_common(cmd_decompose, opts);

    CLI::App* cmd_correlate =
        app.add_subcommand("correlate", "Pearson correlation test between two series");
    cmd_correlate->add_option("x", x_name, "first dataset")->required();
    cmd_correlate->add_option("y", y_name, "second dataset")->required();
    cmd_correlate->add_option("--component", component_name,
                              "aggregate | trend | seasonal | random");
    cmd_correlate->add_option("--window", window_text, "restrict to YYYY-MM:YYYY-MM");
    add_common(cmd_correlate, opts);

    CLI::App* cmd_ccf = app.add_subcommand("ccf", "cross-correlation over month lags");
    cmd_ccf->add_option("x", x_name, "first dataset")->required();
    cmd_ccf->add_option("y", y_name, "second dataset")->required();
    cmd_ccf->add_option("--component", component_name, "aggregate | trend | seasonal | random");
    cmd_ccf->add_option("--window", window_text, "restrict to YYYY-MM:YYYY-MM");
    cmd_ccf->add_option("--max-lag", max_lag, "largest lag in months (default from config)");
    add_common(cmd_ccf, opts);

    CLI::App* cmd_fit =
        app.add_subcommand("fit", "ordinary least squares fit and out-of-sample forecast");
    cmd_fit->add_option("dependent", x_name, "series to forecast")->required();
    cmd_fit->add_option("--on", y_name, "predictor series")->required();
    cmd_fit->add_option("--train", train_text, "training window (default from config)");
    cmd_fit->add_option("--test", test_text, "test window (default from config)");
    cmd_fit->add_flag("--signed-errors", fc_opts.signed_errors,
                      "report signed percent errors instead of magnitudes");
    cmd_fit->add_flag("--round-forecast", fc_opts.round_forecast,
                      "round forecasts to integers before the error");
    add_common(cmd_fit, opts);

    CLI::App* cmd_export =
        app.add_subcommand("export-plot-data", "write year-month/value TSV files for plotting");
    cmd_export->add_option("datasets", export_names, "dataset names")->required();
    cmd_export->add_option("--dest", dest, "destination directory");
    cmd_export->add_option("--component", component_name,
                           "aggregate | trend | seasonal | random");
    add_common(cmd_export, opts);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        const AnalysisConfig config = load_config(opts.config);
        std::optional<MonthWindow> win;
        if (!window_text.empty()) win = MonthWindow::parse(window_text);

        if (cmd_decompose->parsed()) {
            deliver(run_decompose(config, x_name, opts), opts, out);
        } else if (cmd_correlate->parsed()) {
            deliver(run_correlate(config, x_name, y_name, parse_component(component_name), win,
                                  opts),
                    opts, out);
        } else if (cmd_ccf->parsed()) {
            const int lag = max_lag >= 0 ? max_lag : config.max_lag;
            deliver(run_ccf(config, x_name, y_name, parse_component(component_name), win, lag,
                            opts),
                    opts, out);
        } else if (cmd_fit->parsed()) {
            const MonthWindow train =
                train_text.empty() ? config.default_train : MonthWindow::parse(train_text);
            const MonthWindow test =
                test_text.empty() ? config.default_test : MonthWindow::parse(test_text);
            fc_opts.full_precision = opts.raw;
            deliver(run_fit(config, x_name, y_name, train, test, fc_opts, opts), opts, out);
        } else if (cmd_export->parsed()) {
            run_export(config, export_names, parse_component(component_name), dest, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace tslab::cli
