#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tslab/cli.hpp"
#include "tslab/series.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = tslab::cli::run(args, out, err);
    return Run{code, out.str(), err.str()};
}

const std::string kConfig = std::string(TSLAB_REPO_DIR) + "/data/tslab.conf";

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("decompose command renders the paper-style table") {
    const Run r = run_cli({"decompose", "it", "--config", kConfig});
    REQUIRE(r.code == 0);
    CHECK(r.err.empty());
    // caption + header + rule + 88 rows
    CHECK(count_lines(r.out) == 91);
    CHECK(r.out.find("Aggregate") != std::string::npos);
    // 2010 January row: 5197 / 4869 / 299 / 29
    CHECK(r.out.find("5197") != std::string::npos);
    CHECK(r.out.find("4869") != std::string::npos);
    // missing trend cells render empty: the first row carries no trend number
    const auto first_row = r.out.substr(r.out.find("\n2009") + 1);
    CHECK(first_row.substr(0, first_row.find('\n')).find("January") != std::string::npos);
}

TEST_CASE("decompose renders one-decimal components for the exchange rate") {
    const Run r = run_cli({"decompose", "usd_inr", "--config", kConfig, "--format", "tsv"});
    REQUIRE(r.code == 0);
    // Jul 2009 row: aggregate 48 (integer), trend 48.3, seasonal 0.2, random near -0.4
    CHECK(r.out.find("2009\tJuly\t48\t48.3\t0.2\t-0.") != std::string::npos);
    // Jan 2009 row has empty trend and random cells
    CHECK(r.out.find("2009\tJanuary\t49\t\t-0.2\t\n") != std::string::npos);
}

TEST_CASE("decompose of a short series fails without output") {
    const auto dir = fs::temp_directory_path() / "tslab_cli_short";
    fs::create_directories(dir);
    {
        std::ofstream data(dir / "short.txt");
        for (int i = 0; i < 23; ++i) data << 100 + i << "\n";
        std::ofstream conf(dir / "reg.conf");
        conf << "[dataset short]\npath = short.txt\nkind = monthly\nstart = 2009-01\n";
    }
    const Run r = run_cli({"decompose", "short", "--config", (dir / "reg.conf").string()});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("series too short") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("correlate reproduces the published aggregate test") {
    const Run r = run_cli({"correlate", "it", "djia", "--config", kConfig, "--format", "tsv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("t-statistic\t26.907") != std::string::npos);
    CHECK(r.out.find("Degrees of freedom (df)\t86") != std::string::npos);
    CHECK(r.out.find("Significance value (p-value)\t< 2.2e-16") != std::string::npos);
    CHECK(r.out.find("Correlation coefficient\t0.945425") != std::string::npos);
}

TEST_CASE("correlate with the windowed CG-DJIA reproduction") {
    const Run r = run_cli({"correlate", "cg", "djia", "--window", "2009-01:2014-12", "--config",
                           kConfig, "--format", "tsv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("Degrees of freedom (df)\t70") != std::string::npos);
    CHECK(r.out.find("0.0822467") != std::string::npos);
}

TEST_CASE("correlate of a dataset with itself clamps the p-value") {
    const Run r = run_cli({"correlate", "it", "it", "--config", kConfig, "--format", "tsv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("Correlation coefficient\t1") != std::string::npos);
    CHECK(r.out.find("< 2.2e-16") != std::string::npos);
}

TEST_CASE("ccf reports the zero-lag peak for the aggregate pair") {
    const Run r = run_cli({"ccf", "it", "djia", "--config", kConfig});
    REQUIRE(r.code == 0);
    // default max lag 24: 49 rows + caption + header + rule + peak line
    CHECK(count_lines(r.out) == 53);
    CHECK(r.out.find("peak 0.9454 at lag 0 months (0.0000 years)") != std::string::npos);
}

TEST_CASE("ccf of a dataset with itself peaks at one") {
    const Run r = run_cli({"ccf", "nifty", "nifty", "--max-lag", "6", "--config", kConfig});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("peak 1.0000 at lag 0 months") != std::string::npos);
}

TEST_CASE("ccf seasonal peak with year-fraction labels") {
    const Run r = run_cli({"ccf", "it", "djia", "--component", "seasonal", "--config", kConfig});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("at lag -3 months (-0.2500 years)") != std::string::npos);
}

TEST_CASE("fit prints the summary and forecast tables") {
    const Run r = run_cli({"fit", "it", "--on", "djia", "--config", kConfig});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("-2585.21") != std::string::npos);
    CHECK(r.out.find("0.6958") != std::string::npos);
    CHECK(r.out.find("752.4 on 70 degrees of freedom") != std::string::npos);
    CHECK(r.out.find("0.8686") != std::string::npos);
    CHECK(r.out.find("0.8667") != std::string::npos);
    // Jan 2015 forecast row: E = 9615, error 11.64
    CHECK(r.out.find("9615") != std::string::npos);
    CHECK(r.out.find("11.64") != std::string::npos);
    CHECK(count_lines(r.out) > 20);
}

TEST_CASE("fit honors the train window override") {
    const Run r = run_cli({"fit", "cg", "--on", "nifty", "--train", "2014-01:2014-12", "--config",
                           kConfig, "--format", "tsv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("0.8322") != std::string::npos);  // adjusted R^2
    CHECK(r.out.find("2.787") != std::string::npos);
    CHECK(r.out.find("2.33") != std::string::npos);    // Jan 2015 percent error
}

TEST_CASE("fit on an exact synthetic line") {
    const auto dir = fs::temp_directory_path() / "tslab_cli_line";
    fs::create_directories(dir);
    {
        std::ofstream x(dir / "x.txt"), y(dir / "y.txt");
        for (int i = 0; i < 30; ++i) {
            x << 10 + i << "\n";
            y << 2 * (10 + i) + 1 << "\n";
        }
        std::ofstream conf(dir / "reg.conf");
        conf << "[dataset x]\npath = x.txt\nkind = monthly\nstart = 2009-01\n"
             << "[dataset y]\npath = y.txt\nkind = monthly\nstart = 2009-01\n"
             << "[defaults]\ntrain = 2009-01:2010-12\ntest = 2011-01:2011-06\n";
    }
    const Run r = run_cli({"fit", "y", "--on", "x", "--config", (dir / "reg.conf").string(),
                           "--format", "tsv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("Multiple R-squared\t1.0000") != std::string::npos);
    CHECK(r.out.find("\t0.00\n") != std::string::npos);  // zero percent error
    fs::remove_all(dir);
}

TEST_CASE("export-plot-data writes scaled TSV files") {
    const auto dir = fs::temp_directory_path() / "tslab_cli_export";
    fs::create_directories(dir);
    const Run r = run_cli({"export-plot-data", "it", "usd_inr", "--dest", dir.string(),
                           "--config", kConfig});
    REQUIRE(r.code == 0);

    std::ifstream it_file(dir / "it_aggregate.tsv");
    REQUIRE(it_file.good());
    std::string first;
    std::getline(it_file, first);
    CHECK(first == "2009-01\t2189");

    std::ifstream fx_file(dir / "usd_inr_aggregate.tsv");
    REQUIRE(fx_file.good());
    std::getline(fx_file, first);
    CHECK(first == "2009-01\t4900");  //49 * plot-scale 100

    const Run t = run_cli({"export-plot-data", "it", "--component", "trend", "--dest",
                           dir.string(), "--config", kConfig});
    REQUIRE(t.code == 0);
    std::ifstream trend_file(dir / "it_trend.tsv");
    REQUIRE(trend_file.good());
    int rows = 0;
    for (std::string line; std::getline(trend_file, line);) ++rows;
    CHECK(rows == 76);  // trimmed ends omitted
    fs::remove_all(dir);
}

TEST_CASE("raw aggregate output round-trips through the monthly parser") {
    const Run r = run_cli({"decompose", "usd_inr", "--raw", "--format", "tsv", "--config", kConfig});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line, column;
    std::getline(lines, line);  // header
    while (std::getline(lines, line)) {
        std::istringstream cells(line);
        std::string year, month, aggregate;
        std::getline(cells, year, '\t');
        std::getline(cells, month, '\t');
        std::getline(cells, aggregate, '\t');
        column += aggregate + "\n";
    }
    const tslab::MonthlySeries parsed =
        tslab::parse_monthly_text(column, tslab::MonthStamp{2009, 1});
    std::ifstream original_file(std::string(TSLAB_REPO_DIR) + "/data/usd_inr.txt");
    const tslab::MonthlySeries original =
        tslab::parse_monthly_file(original_file, tslab::MonthStamp{2009, 1});
    REQUIRE(parsed.length() == original.length());
    for (Eigen::Index i = 0; i < parsed.length(); ++i)
        CHECK(*parsed.value(i) == *original.value(i));
}

TEST_CASE("identical invocations produce byte-identical output") {
    for (std::vector<std::string> args :
         {std::vector<std::string>{"decompose", "cg", "--config", kConfig},
          std::vector<std::string>{"ccf", "cg", "nifty", "--component", "seasonal", "--config",
                                   kConfig},
          std::vector<std::string>{"fit", "nifty", "--on", "cg", "--config", kConfig}}) {
        const Run a = run_cli(args);
        const Run b = run_cli(args);
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("--out writes the table to a file instead of stdout") {
    const auto dir = fs::temp_directory_path() / "tslab_cli_out";
    fs::create_directories(dir);
    const auto path = (dir / "table.tsv").string();
    const Run r = run_cli({"correlate", "it", "nifty", "--format", "tsv", "--out", path,
                           "--config", kConfig});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream file(path);
    std::string body((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    CHECK(body.find("0.9609465") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("errors exit nonzero with no partial table") {
    const Run unknown = run_cli({"decompose", "gold", "--config", kConfig});
    CHECK(unknown.code == 1);
    CHECK(unknown.out.empty());
    CHECK(unknown.err.find("unknown dataset") != std::string::npos);

    const Run bad_window =
        run_cli({"correlate", "it", "djia", "--window", "2014-01:2009-01", "--config", kConfig});
    CHECK(bad_window.code == 1);
    CHECK(bad_window.out.empty());

    const Run bad_component =
        run_cli({"ccf", "it", "djia", "--component", "tempo", "--config", kConfig});
    CHECK(bad_component.code == 1);

    const Run missing_config = run_cli({"decompose", "it", "--config", "/nonexistent.conf"});
    CHECK(missing_config.code == 1);

    const Run usage = run_cli({"decompose"});
    CHECK(usage.code != 0);
    const Run no_sub = run_cli({});
    CHECK(no_sub.code != 0);
}
