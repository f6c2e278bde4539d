#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "optbench/report/reports.hpp"
#include "optbench/runner/runner.hpp"
#include "optbench/store/ioh_csv.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRunFailures = 2;
constexpr int kExitIo = 3;
constexpr int kExitMissingData = 4;

std::string resolve_store(const std::string& positional) {
    if (!positional.empty()) return positional;
    if (const char* env = std::getenv("OPTBENCH_STORE"); env && *env) return env;
    throw optbench::ConfigInvalid(
        "no store given: pass the store path or set OPTBENCH_STORE");
}

void write_output(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw optbench::IoFailure("cannot open '" + path + "' for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw optbench::IoFailure("write to '" + path + "' failed");
    }
}

int cmd_run(const std::string& config_path) {
    optbench::runner::ExperimentConfig config;
    try {
        config = optbench::runner::ExperimentConfig::from_file(config_path);
    } catch (const optbench::IoFailure& e) {
        // an unreadable config is a usage problem, not a storage failure
        throw optbench::ConfigInvalid(e.what());
    }
    const auto summary = optbench::runner::run_experiment(config);
    std::cout << summary.to_json().dump(2) << "\n";
    return summary.failed > 0 ? kExitRunFailures : kExitOk;
}

int cmd_report(const std::string& store_arg, const std::string& report_name,
               const std::string& bounds, std::optional<int> dim, const std::string& format,
               const std::string& out_path, std::uint64_t shapley_seed, int shapley_sets,
               int shapley_max_size) {
    const auto store_path = resolve_store(store_arg);
    const auto records = optbench::store::Store::load(store_path);
    optbench::report::ReportOptions options;
    options.bounds = bounds == "large" ? optbench::metrics::AoccBounds::large()
                                       : optbench::metrics::AoccBounds::standard();
    options.dimension = dim;
    options.shapley_seed = shapley_seed;
    options.shapley_sets_per_size = shapley_sets;
    options.shapley_max_size = shapley_max_size;

    std::string content;
    if (format == "svg") {
        content = optbench::report::render_svg(report_name, records, options);
    } else {
        const auto table = optbench::report::build_report(report_name, records, options);
        content = format == "json" ? optbench::report::render_json(table)
                                   : optbench::report::render_csv(table);
    }
    write_output(content, out_path);
    return kExitOk;
}

int cmd_export(const std::string& store_arg, const std::string& out_path, bool skip_corrupt) {
    const auto store_path = resolve_store(store_arg);
    std::vector<std::size_t> skipped;
    const auto records = optbench::store::Store::load(store_path, skip_corrupt, &skipped);
    for (std::size_t line : skipped) {
        std::cerr << "warning: skipping corrupt record at line " << line << "\n";
    }
    std::ofstream out(out_path);
    if (!out) {
        throw optbench::IoFailure("cannot open '" + out_path + "' for writing");
    }
    optbench::store::write_ioh_csv(records, out);
    out.flush();
    if (!out) {
        throw optbench::IoFailure("write to '" + out_path + "' failed");
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "optbench: benchmark continuous black-box optimizers on a seeded function suite,\n"
        "store every run, and analyze the results as an algorithm portfolio."};
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand(
        "run",
        "Execute an experiment described by a JSON config and append every run to a\n"
        "fresh store. Config keys: algorithms, function_ids, dimensions, instance_ids,\n"
        "repetitions, budget_multiplier, base_seed, parallelism, output, and algo\n"
        "(nested per-algorithm parameter overrides, e.g. algo.de-a.weight).\n"
        "Exits 2 when any individual run fails.");
    run->add_option("config", config_path, "path to the experiment JSON config")->required();

    std::string report_store;
    std::string report_name;
    std::string report_bounds = "default";
    std::string report_format = "csv";
    std::string report_out;
    std::optional<int> report_dim;
    std::uint64_t shapley_seed = 1;
    auto* report = app.add_subcommand(
        "report", "Aggregate a run store into one of the analysis tables.");
    report->add_option("store", report_store,
                       "run store (JSONL); defaults to $OPTBENCH_STORE");
    report
        ->add_option("--report", report_name,
                     "one of: aocc-table, aocc-cdf, rs-dominance, top3-loss-contribution, "
                     "best-at-budget, shapley, complementarity")
        ->required();
    report->add_option("--bounds", report_bounds,
                       "AOCC precision window: 'default' (1e-8..1e2) or 'large' (1e-8..1e8)")
        ->check(CLI::IsMember({"default", "large"}));
    report->add_option("--dim", report_dim,
                       "restrict to one dimension (required when the store has several, "
                       "and for svg output)");
    report->add_option("--format", report_format, "output format: csv, json or svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    report->add_option("-o,--output", report_out, "write here instead of stdout");
    report->add_option("--shapley-seed", shapley_seed,
                       "sampling seed for the shapley report (default 1)");
    int shapley_sets = 250;
    report->add_option("--shapley-sets", shapley_sets,
                       "coalitions sampled per size for the shapley report (default 250)");
    int shapley_max_size = 20;
    report->add_option(
        "--shapley-max-size", shapley_max_size,
        "largest coalition size sampled; must not exceed the number of algorithms "
        "in the store (default 20)");

    std::string export_store;
    std::string export_format = "ioh-csv";
    std::string export_out;
    bool skip_corrupt = false;
    auto* exp = app.add_subcommand(
        "export", "Convert a run store to a long-format CSV of improvement events.");
    exp->add_option("store", export_store,
                    "run store (JSONL); defaults to $OPTBENCH_STORE");
    exp->add_option("--format", export_format, "export format (only ioh-csv)")
        ->check(CLI::IsMember({"ioh-csv"}));
    exp->add_option("-o,--output", export_out, "destination CSV path")->required();
    exp->add_flag("--skip-corrupt", skip_corrupt,
                  "drop unparseable store lines instead of aborting");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run->parsed()) return cmd_run(config_path);
        if (report->parsed()) {
            return cmd_report(report_store, report_name, report_bounds, report_dim,
                              report_format, report_out, shapley_seed, shapley_sets,
                              shapley_max_size);
        }
        return cmd_export(export_store, export_out, skip_corrupt);
    } catch (const optbench::PoolTooSmall& e) {
        std::cerr << "error: " << e.what()
                  << "\nhint: lower --shapley-max-size to at most the number of algorithms "
                     "in the store, or re-run the experiment with a larger 'algorithms' "
                     "list\n";
        return kExitMissingData;
    } catch (const optbench::MissingBaseline& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMissingData;
    } catch (const optbench::MissingData& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMissingData;
    } catch (const optbench::EmptyInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMissingData;
    } catch (const optbench::EmptySet& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMissingData;
    } catch (const optbench::ConfigInvalid& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const optbench::UnknownAlgorithm& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const optbench::UnknownFunction& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const optbench::InvalidDimension& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const optbench::BudgetOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const optbench::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
