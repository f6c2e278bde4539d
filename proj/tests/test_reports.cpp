#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "optbench/report/reports.hpp"

using namespace optbench;

namespace {

store::RunRecord rec(const std::string& algo, int fid, int dim, int rep,
                     std::vector<TrajectoryEvent> events, std::int64_t budget) {
    store::RunRecord r;
    r.key = {algo, fid, dim, 0, rep};
    r.seed = 1;
    r.trajectory = Trajectory(std::move(events), budget);
    return r;
}

/// Three algorithms, two functions, two dimensions. gwo never enters the
/// standard precision window on f1 but is the strongest on f3, which
/// exercises the dominance, complementarity and wide-bounds paths.
std::vector<store::RunRecord> demo_store() {
    std::vector<store::RunRecord> out;
    for (int dim : {2, 5}) {
        const std::int64_t budget = 100 * dim;
        const std::int64_t mid = budget / 2;
        for (int rep : {0, 1}) {
            for (int fid : {1, 3}) {
                out.push_back(
                    rec("random-search", fid, dim, rep, {{1, 50.0}, {mid, 1e-1}}, budget));
                out.push_back(rec("de-a", fid, dim, rep, {{1, 10.0}, {mid, 1e-3}}, budget));
                if (fid == 1) {
                    out.push_back(rec("gwo", fid, dim, rep, {{1, 1e6}, {mid, 1e5}}, budget));
                } else {
                    out.push_back(rec("gwo", fid, dim, rep, {{1, 10.0}, {mid, 1e-5}}, budget));
                }
            }
        }
    }
    return out;
}

const std::vector<nlohmann::json>* find_row(const report::ReportTable& table,
                                            const std::string& algo, int fid, int dim) {
    for (const auto& row : table.rows) {
        if (row[0] == algo && row[1] == fid && row[2] == dim) return &row;
    }
    return nullptr;
}

report::ReportOptions at_dim(int d) {
    report::ReportOptions options;
    options.dimension = d;
    return options;
}

} // namespace

TEST(ReportNames, SevenReportsInMenu) {
    const auto& names = report::report_names();
    EXPECT_EQ(names.size(), 7u);
    for (const char* expected : {"aocc-table", "aocc-cdf", "rs-dominance",
                                 "top3-loss-contribution", "best-at-budget", "shapley",
                                 "complementarity"}) {
        EXPECT_NE(std::find(names.begin(), names.end(), expected), names.end()) << expected;
    }
}

TEST(BuildReport, UnknownNameAndEmptyStore) {
    const auto records = demo_store();
    try {
        report::build_report("bogus", records, {});
        FAIL() << "expected ConfigInvalid";
    } catch (const ConfigInvalid& ex) {
        // the error teaches the menu
        EXPECT_NE(std::string(ex.what()).find("aocc-table"), std::string::npos);
    }
    EXPECT_THROW(report::build_report("aocc-table", std::vector<store::RunRecord>{}, {}),
                 MissingData);
}

TEST(AoccTable, OneRowPerCellAndDimensionPinning) {
    const auto records = demo_store();
    const auto all = report::build_report("aocc-table", records, {});
    EXPECT_EQ(all.columns, (std::vector<std::string>{"algorithm", "function_id", "dimension",
                                                     "mean_aocc", "runs"}));
    EXPECT_EQ(all.rows.size(), 3u * 2u * 2u); // algorithms x functions x dimensions

    const auto pinned = report::build_report("aocc-table", records, at_dim(2));
    EXPECT_EQ(pinned.rows.size(), 3u * 2u);
    for (const auto& row : pinned.rows) EXPECT_EQ(row[2].get<int>(), 2);
    EXPECT_THROW(report::build_report("aocc-table", records, at_dim(7)), MissingData);

    const auto* row = find_row(pinned, "random-search", 1, 2);
    ASSERT_NE(row, nullptr);
    EXPECT_EQ((*row)[4].get<std::size_t>(), 2u); // two repetitions aggregated
    const double aocc = (*row)[3].get<double>();
    EXPECT_GT(aocc, 0.0);
    EXPECT_LT(aocc, 1.0);
}

TEST(AoccTable, WideBoundsRevealRunsAboveTheStandardWindow) {
    const auto records = demo_store();
    const auto standard = report::build_report("aocc-table", records, at_dim(2));
    report::ReportOptions wide = at_dim(2);
    wide.bounds = metrics::AoccBounds::large();
    const auto large = report::build_report("aocc-table", records, wide);

    // gwo on f1 never gets below 1e2: invisible in the standard window,
    // visible in the wide one
    EXPECT_EQ((*find_row(standard, "gwo", 1, 2))[3].get<double>(), 0.0);
    EXPECT_GT((*find_row(large, "gwo", 1, 2))[3].get<double>(), 0.0);
}

TEST(ResolveDimension, MultiDimensionStoreNeedsTheFlag) {
    const auto records = demo_store();
    try {
        report::build_report("aocc-cdf", records, {});
        FAIL() << "expected MissingData";
    } catch (const MissingData& ex) {
        EXPECT_NE(std::string(ex.what()).find("--dim"), std::string::npos);
    }
    EXPECT_NO_THROW(report::build_report("aocc-cdf", records, at_dim(5)));
}

TEST(AoccCdf, FullUnitGridAndMonotone) {
    const auto records = demo_store();
    const auto table = report::build_report("aocc-cdf", records, at_dim(2));
    EXPECT_EQ(table.columns, (std::vector<std::string>{"x", "fraction_below"}));
    ASSERT_EQ(table.rows.size(), 101u);
    EXPECT_DOUBLE_EQ(table.rows.front()[0].get<double>(), 0.0);
    EXPECT_DOUBLE_EQ(table.rows.front()[1].get<double>(), 0.0);
    EXPECT_DOUBLE_EQ(table.rows.back()[0].get<double>(), 1.0);
    double previous = 0.0;
    for (const auto& row : table.rows) {
        const double f = row[1].get<double>();
        EXPECT_GE(f, previous);
        EXPECT_LE(f, 1.0);
        previous = f;
    }
}

TEST(RsDominance, FlagsTheStuckAlgorithm) {
    const auto records = demo_store();
    const auto table = report::build_report("rs-dominance", records, at_dim(2));
    EXPECT_EQ(table.columns,
              (std::vector<std::string>{"algorithm", "worse_count", "function_ids"}));
    ASSERT_EQ(table.rows.size(), 2u); // everyone but the reference
    // rows are sorted by algorithm: de-a, gwo
    EXPECT_EQ(table.rows[0][0].get<std::string>(), "de-a");
    EXPECT_EQ(table.rows[0][1].get<std::size_t>(), 0u);
    EXPECT_EQ(table.rows[1][0].get<std::string>(), "gwo");
    EXPECT_EQ(table.rows[1][1].get<std::size_t>(), 1u);
    EXPECT_EQ(table.rows[1][2].get<std::string>(), "1");
}

TEST(Top3Loss, CountsAndNonNegativeLoss) {
    const auto records = demo_store();
    const auto table = report::build_report("top3-loss-contribution", records, at_dim(2));
    EXPECT_EQ(table.columns,
              (std::vector<std::string>{"algorithm", "top3_count", "mean_aocc_loss"}));
    ASSERT_EQ(table.rows.size(), 3u);
    for (const auto& row : table.rows) {
        // with three algorithms everyone lands in the top 3 of both functions
        EXPECT_EQ(row[1].get<int>(), 2);
        EXPECT_GE(row[2].get<double>(), 0.0);
    }
}

TEST(BestAtBudget, CheckpointGrid) {
    const auto records = demo_store();
    const auto table = report::build_report("best-at-budget", records, at_dim(2));
    EXPECT_EQ(table.columns, (std::vector<std::string>{"function_id", "budget_factor",
                                                       "evaluations", "algorithms",
                                                       "precision"}));
    // factors 10 and the full 100, two functions
    ASSERT_EQ(table.rows.size(), 4u);
    for (const auto& row : table.rows) {
        EXPECT_EQ(row[2].get<std::int64_t>(),
                  static_cast<std::int64_t>(row[1].get<double>()) * 2);
        EXPECT_FALSE(row[3].get<std::string>().empty());
        EXPECT_GT(row[4].get<double>(), 0.0);
    }
    // de-a owns f1 at the full budget; gwo owns f3
    EXPECT_EQ(table.rows[1][0].get<int>(), 1);
    EXPECT_EQ(table.rows[1][3].get<std::string>(), "de-a");
    EXPECT_EQ(table.rows[3][0].get<int>(), 3);
    EXPECT_EQ(table.rows[3][3].get<std::string>(), "gwo");
}

TEST(ShapleyReport, ColumnsPoolAndGuard) {
    const auto records = demo_store();
    report::ReportOptions options = at_dim(2);
    options.shapley_sets_per_size = 20;
    options.shapley_max_size = 3;
    const auto table = report::build_report("shapley", records, options);
    EXPECT_EQ(table.columns, (std::vector<std::string>{"algorithm", "dimension",
                                                       "budget_factor", "raw", "normalized",
                                                       "sample_count"}));
    ASSERT_EQ(table.rows.size(), 3u);
    EXPECT_TRUE(std::is_sorted(
        table.rows.begin(), table.rows.end(),
        [](const std::vector<nlohmann::json>& x, const std::vector<nlohmann::json>& y) {
            return x[0].get<std::string>() < y[0].get<std::string>();
        }));
    for (const auto& row : table.rows) {
        EXPECT_EQ(row[1].get<int>(), 2);
        EXPECT_DOUBLE_EQ(row[2].get<double>(), 100.0);
        EXPECT_EQ(row[5].get<std::size_t>(), 60u);
        EXPECT_GE(row[4].get<double>(), 0.0);
        EXPECT_LE(row[4].get<double>(), 1.0);
    }

    // the default coalition cap assumes a big pool; three algorithms
    // cannot satisfy it
    EXPECT_THROW(report::build_report("shapley", records, at_dim(2)), PoolTooSmall);
}

TEST(Complementarity, BaselinesContributeZero) {
    const auto records = demo_store();
    const auto table = report::build_report("complementarity", records, at_dim(2));
    EXPECT_EQ(table.columns,
              (std::vector<std::string>{"algorithm", "baseline_contribution",
                                        "nearest_baseline", "l1_distance"}));
    ASSERT_EQ(table.rows.size(), 3u);
    for (const auto& row : table.rows) {
        const auto algo = row[0].get<std::string>();
        if (algo == "random-search" || algo == "de-a") {
            EXPECT_EQ(row[1].get<double>(), 0.0) << algo;
            EXPECT_EQ(row[2].get<std::string>(), algo); // own profile at distance zero
            EXPECT_DOUBLE_EQ(row[3].get<double>(), 0.0);
        } else {
            EXPECT_GT(row[1].get<double>(), 0.0); // gwo lifts f3 over the baselines
        }
    }
}

TEST(Render, CsvEscapesAndJsonRoundTrips) {
    report::ReportTable table{.name = "demo",
                              .columns = {"name", "value"},
                              .rows = {{"plain", 1.5},
                                       {"with,comma", 2},
                                       {"say \"hi\"", 3}}};
    const auto csv = report::render_csv(table);
    EXPECT_EQ(csv, "name,value\n"
                   "plain,1.5\n"
                   "\"with,comma\",2\n"
                   "\"say \"\"hi\"\"\",3\n");

    const auto parsed = nlohmann::json::parse(report::render_json(table));
    EXPECT_EQ(parsed["name"], "demo");
    EXPECT_EQ(parsed["columns"].size(), 2u);
    EXPECT_EQ(parsed["rows"].size(), 3u);
    EXPECT_EQ(parsed["rows"][1][0], "with,comma");
}

TEST(Render, ReportsAreByteDeterministic) {
    const auto records = demo_store();
    report::ReportOptions options = at_dim(2);
    options.shapley_sets_per_size = 20;
    options.shapley_max_size = 3;
    for (const auto& name : report::report_names()) {
        const auto first = report::render_csv(report::build_report(name, records, options));
        const auto second = report::render_csv(report::build_report(name, records, options));
        EXPECT_EQ(first, second) << name;
    }
}

TEST(Render, SvgNeedsDimensionAndSupportsTwoReports) {
    const auto records = demo_store();
    EXPECT_THROW(report::render_svg("aocc-table", records, {}), ConfigInvalid);

    const auto heatmap = report::render_svg("aocc-table", records, at_dim(2));
    EXPECT_NE(heatmap.find("<svg"), std::string::npos);
    EXPECT_NE(heatmap.find("random-search"), std::string::npos);

    const auto grid = report::render_svg("best-at-budget", records, at_dim(2));
    EXPECT_NE(grid.find("<svg"), std::string::npos);

    EXPECT_THROW(report::render_svg("aocc-cdf", records, at_dim(2)), ConfigInvalid);
}
