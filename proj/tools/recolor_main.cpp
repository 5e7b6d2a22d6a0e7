#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "recolor/bench.hpp"
#include "recolor/coloring.hpp"
#include "recolor/driver.hpp"
#include "recolor/graph.hpp"
#include "recolor/oracle.hpp"

namespace {

recolor::Graph load_instance(const std::string& path) {
    std::vector<std::string> warnings;
    recolor::Graph g = recolor::read_dimacs_file(path, &warnings);
    for (const auto& w : warnings) {
        std::cerr << "warning: " << path << ": " << w << '\n';
    }
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vertex coloring by iterated k-colorability tabu search"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "Run the iterative scheme on one instance");
    std::string solve_path;
    std::string alg = "tabucol";
    std::string tenure = "dyn";
    std::vector<std::string> init_args{"recycle-star"};
    std::string recolor_rule = "random";
    double time_limit = 600.0;
    std::optional<std::uint64_t> iter_cap;
    std::uint64_t seed = 1;
    std::string coloring_out;
    solve->add_option("instance", solve_path, "DIMACS .col file")->required()->check(CLI::ExistingFile);
    solve->add_option("--alg", alg, "tabucol|partialcol")
        ->check(CLI::IsMember({"tabucol", "partialcol"}));
    solve->add_option("--tenure", tenure, "dyn|foo")->check(CLI::IsMember({"dyn", "foo"}));
    solve->add_option("--init", init_args, "recycle-star | recycle-t <t> | greedy | random")
        ->expected(1, 2);
    solve->add_option("--recolor", recolor_rule, "random|least")
        ->check(CLI::IsMember({"random", "least"}));
    solve->add_option("--time-limit", time_limit, "Global time limit in seconds")
        ->check(CLI::PositiveNumber);
    solve->add_option("--iter-cap", iter_cap, "Total move budget");
    solve->add_option("--seed", seed, "Random seed");
    solve->add_option("--coloring-out", coloring_out, "Write the best coloring here");

    // bench
    auto* bench = app.add_subcommand("bench", "Run a multi-trial campaign from a JSON config");
    std::string bench_config;
    std::optional<int> bench_jobs;
    bench->add_option("config", bench_config, "Campaign JSON")->required()->check(CLI::ExistingFile);
    bench->add_option("--jobs", bench_jobs, "Concurrent trials (RECOLOR_JOBS overrides)")
        ->check(CLI::PositiveNumber);

    // convert-carter
    auto* carter = app.add_subcommand("convert-carter", "Convert a per-student timetabling file");
    std::string carter_in;
    std::string carter_out;
    carter->add_option("in", carter_in, "Student file")->required()->check(CLI::ExistingFile);
    carter->add_option("out", carter_out, "Output .col file")->required();

    // stats
    auto* stats = app.add_subcommand("stats", "Print size and degree statistics");
    std::string stats_path;
    stats->add_option("instance", stats_path)->required()->check(CLI::ExistingFile);

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Exact colorability for small graphs");
    std::string oracle_path;
    std::optional<int> oracle_k;
    oracle->add_option("instance", oracle_path)->required()->check(CLI::ExistingFile);
    oracle->add_option("--k", oracle_k, "Decide k-colorability instead of computing chi");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) {
            const recolor::Graph g = load_instance(solve_path);
            nlohmann::json j = {{"instances", {solve_path}},
                                {"algorithm", alg},
                                {"tenure", tenure},
                                {"init", init_args.front()},
                                {"recolor", recolor_rule},
                                {"time_limit", time_limit}};
            if (init_args.front() == "recycle-t") {
                if (init_args.size() != 2) {
                    throw std::invalid_argument("--init recycle-t needs a class count");
                }
                j["t"] = std::stoi(init_args[1]);
            } else if (init_args.size() != 1) {
                throw std::invalid_argument("unexpected argument after --init " + init_args.front());
            }
            if (iter_cap) {
                j["iter_cap"] = *iter_cap;
            }
            auto cfg = recolor::campaign_from_json(j);
            cfg.solve.instance_id = recolor::instance_name(solve_path);
            const auto record = recolor::solve_vcol(g, cfg.solve, seed);
            std::cout << recolor::to_json(record).dump(2) << '\n';
            if (!coloring_out.empty()) {
                std::ofstream out(coloring_out);
                recolor::write_coloring(out, record.best.assign());
            }
        } else if (*bench) {
            std::ifstream in(bench_config);
            auto cfg = recolor::campaign_from_json(nlohmann::json::parse(in));
            if (bench_jobs) {
                cfg.jobs = *bench_jobs;
            }
            const auto results = recolor::run_campaign(cfg);
            std::vector<recolor::SummaryRow> rows;
            for (const auto& r : results) {
                rows.push_back(r.summary);
            }
            recolor::write_summary_csv(std::cout, rows, cfg.solve.iteration_cap.has_value());
        } else if (*carter) {
            std::ifstream in(carter_in);
            const recolor::Graph g = recolor::convert_carter(in);
            std::ofstream out(carter_out);
            recolor::write_dimacs(out, g);
            std::cerr << "wrote " << g.n() << " exams, " << g.m() << " conflicts\n";
        } else if (*stats) {
            std::cout << recolor::format_stats(load_instance(stats_path));
        } else if (*oracle) {
            const recolor::Graph g = load_instance(oracle_path);
            if (oracle_k) {
                std::cout << (recolor::is_k_colorable(g, *oracle_k) ? "colorable" : "not colorable")
                          << '\n';
            } else {
                std::cout << "chromatic_number " << recolor::exact_chromatic_number(g) << '\n';
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
