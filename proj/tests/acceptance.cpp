// Acceptance suite. Each criterion prints one PASS/FAIL line; the exit code is
// nonzero when any selected criterion fails.
//
//   acceptance [--criterion N] [--instance-dir DIR]
//
// Benchmark instances are read as DIR/<name>.col. DIR defaults to
// $RECOLOR_INSTANCE_DIR, then to the instances/ folder of the source tree.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "recolor/bench.hpp"
#include "recolor/constructive.hpp"
#include "recolor/driver.hpp"
#include "recolor/oracle.hpp"
#include "recolor/recycle.hpp"
#include "recolor/tabu.hpp"

using namespace recolor;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool pass = false;
    std::string detail;
};

struct MissingInstance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

fs::path g_instance_dir;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Graph load(const std::string& name) {
    const fs::path p = g_instance_dir / (name + ".col");
    if (!fs::exists(p)) {
        throw MissingInstance("instance missing: " + p.string());
    }
    return read_dimacs_file(p.string());
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t n = xs.size();
    return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

CampaignConfig campaign(const std::string& instance, EngineKind engine, TenureScheme tenure,
                        InitKind init, int t, int trials, double seconds) {
    CampaignConfig cfg;
    cfg.instances = {instance};
    cfg.solve.engine = engine;
    cfg.solve.tenure = tenure;
    cfg.solve.init = init;
    cfg.solve.recycle_t = t;
    cfg.solve.time_limit_s = seconds;
    cfg.trials = trials;
    cfg.base_seed = 20240601;
    return cfg;
}

// ---------------------------------------------------------------------------

Verdict recycle_bounds() {
    const auto start = Clock::now();
    Rng rng(1001);
    const int n = 200;
    int violations = 0;
    for (int pair = 0; pair < 1000; ++pair) {
        const double p = pair % 2 == 0 ? 0.1 : 0.5;
        const Graph g = erdos_renyi(n, p, rng);
        const auto legal = dsatur(g, rng);
        const int k = legal.k() - 1;
        const double delta = g.max_degree();

        const auto r = recycle_complete(g, legal, RecycleConfig::star(RecolorRule::Random), rng);
        const auto l = recycle_complete(g, legal, RecycleConfig::star(RecolorRule::LeastSelection), rng);
        const auto q = recycle_partial(g, legal, RecycleConfig::star(), rng);
        const double rr = static_cast<double>(penalty_complete(g, r));
        const double ll = static_cast<double>(penalty_complete(g, l));
        const double qq = static_cast<double>(penalty_partial(q));
        violations += rr > n * delta / (k + 1) ? 1 : 0;
        violations += ll > n * delta / (k + 1) ? 1 : 0;
        violations += ll > n * delta / (static_cast<double>(k) * (k + 1)) ? 1 : 0;
        violations += qq > static_cast<double>(n) / (k + 1) ? 1 : 0;
    }
    const double elapsed = seconds_since(start);
    return {violations == 0 && elapsed < 60.0,
            fmt::format("1000 pairs, {} bound violations, {:.1f} s (limit 60 s)", violations, elapsed)};
}

Verdict oracle_equivalence() {
    const auto start = Clock::now();
    Rng rng(2002);
    const std::uint64_t cap = 100000;
    int solved = 0;
    int attempts = 0;
    int false_legal = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(7));
        const Graph g = erdos_renyi(n, rng.uniform_real(), rng);
        const int chi = exact_chromatic_number(g);

        attempts += 2;
        const auto a = tabucol_search(g, chi, random_k(g, chi, rng), DynTenure{},
                                      SearchBudget::iterations(cap), rng);
        const auto b = partialcol_search(g, chi, random_k_partial(g, chi, rng), DynTenure{},
                                         SearchBudget::iterations(cap), rng);
        solved += (a.status == SearchStatus::LegalFound && a.best_penalty == 0) ? 1 : 0;
        solved += (b.status == SearchStatus::LegalFound && b.best_penalty == 0) ? 1 : 0;

        if (chi >= 2) {
            const int k = chi - 1;
            const auto c = tabucol_search(g, k, random_k(g, k, rng), DynTenure{},
                                          SearchBudget::iterations(cap), rng);
            const auto d = partialcol_search(g, k, random_k_partial(g, k, rng), FooTenure{},
                                             SearchBudget::iterations(cap), rng);
            false_legal += c.status == SearchStatus::LegalFound ? 1 : 0;
            false_legal += d.status == SearchStatus::LegalFound ? 1 : 0;
        }
    }
    const double elapsed = seconds_since(start);
    return {solved == attempts && false_legal == 0 && elapsed < 120.0,
            fmt::format("k=chi solved {}/{}, LegalFound at chi-1: {}, {:.1f} s (limit 120 s)", solved,
                        attempts, false_legal, elapsed)};
}

Verdict dsatur_calibration() {
    const auto start = Clock::now();
    const std::map<std::string, double> targets = {{"DSJC500.1", 15.7}, {"le450_25c", 29.0}};
    bool pass = true;
    std::string detail;
    for (const auto& [name, target] : targets) {
        const Graph g = load(name);
        double sum = 0.0;
        for (int i = 0; i < 50; ++i) {
            Rng rng(trial_seed(20240601, i));
            sum += dsatur(g, rng).k();
        }
        const double mean = sum / 50.0;
        pass = pass && std::abs(mean - target) <= 0.5;
        detail += fmt::format("{} mean {:.2f} (target {:.1f}+-0.5); ", name, mean, target);
    }
    const double elapsed = seconds_since(start);
    pass = pass && elapsed < 60.0;
    return {pass, detail + fmt::format("{:.1f} s (limit 60 s)", elapsed)};
}

Verdict solver_calibration() {
    struct Target {
        std::string instance;
        EngineKind engine;
        TenureScheme tenure;
        int k;
    };
    const std::vector<Target> targets = {
        {"le450_15c", EngineKind::Tabucol, DynTenure{}, 16},
        {"le450_25c", EngineKind::Tabucol, DynTenure{}, 26},
        {"DSJC500.1", EngineKind::Partialcol, FooTenure{}, 12},
    };
    // Load everything up front so a missing file fails before hours of search.
    std::vector<Graph> graphs;
    for (const auto& t : targets) {
        graphs.push_back(load(t.instance));
    }
    bool pass = true;
    std::string detail;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const auto& t = targets[i];
        const auto cfg =
            campaign(t.instance, t.engine, t.tenure, InitKind::RecycleStar, 1, 10, 600.0);
        const auto result = run_trials(graphs[i], t.instance, cfg);
        int hits = 0;
        std::vector<int> ks;
        for (const auto& r : result.trials) {
            hits += r.best_k <= t.k ? 1 : 0;
            ks.push_back(r.best_k);
        }
        pass = pass && hits >= 9;
        detail += fmt::format("{} {}-{} k<={} in {}/10 (best ks {}); ", t.instance,
                              tenure_name(t.tenure), engine_name(t.engine), t.k, hits,
                              fmt::join(ks, " "));
    }
    return {pass, detail};
}

Verdict initial_penalty_shape() {
    const std::string name = "DSJC500.5";
    const Graph g = load(name);
    const double seconds = 20.0;
    struct Arm {
        std::string label;
        InitKind init;
        int t;
    };
    const std::vector<Arm> arms = {{"R*", InitKind::RecycleStar, 1},
                                   {"R1", InitKind::RecycleT, 1},
                                   {"R3", InitKind::RecycleT, 3},
                                   {"Gr", InitKind::Greedy, 1}};
    std::vector<std::map<int, double>> curves;
    double dsatur_mean = 0.0;
    for (const auto& arm : arms) {
        const auto cfg = campaign(name, EngineKind::Tabucol, DynTenure{}, arm.init, arm.t, 20, seconds);
        const auto result = run_trials(g, name, cfg);
        std::map<int, double> curve;
        for (const auto& p : mean_penalty_curve(result.trials)) {
            curve[p.k] = p.mean;
        }
        curves.push_back(std::move(curve));
        dsatur_mean = result.summary.mean_dsatur_k;
    }
    const int k_top = static_cast<int>(std::floor(dsatur_mean)) - 5;
    std::vector<int> common;
    for (const auto& [k, mean] : curves[0]) {
        const bool everywhere = std::all_of(curves.begin(), curves.end(),
                                            [k = k](const auto& c) { return c.contains(k); });
        if (k <= k_top && everywhere) {
            common.push_back(k);
        }
    }
    if (common.empty()) {
        return {false, fmt::format("no k <= {} reached by all four generators in {:.0f} s trials",
                                   k_top, seconds)};
    }
    int order_violations = 0;
    for (int k : common) {
        const double rs = curves[0].at(k);
        const double r1 = curves[1].at(k);
        const double r3 = curves[2].at(k);
        const double gr = curves[3].at(k);
        order_violations += (rs < r1 && r1 <= r3 && r3 < gr) ? 0 : 1;
    }
    const int k_min = *std::min_element(common.begin(), common.end());
    const double factor = curves[3].at(k_min) / std::max(curves[0].at(k_min), 1e-9);
    std::string table;
    for (int k : {k_top, k_min}) {
        if (curves[0].contains(k) && curves[3].contains(k) && curves[1].contains(k) &&
            curves[2].contains(k)) {
            table += fmt::format(" k={}: R* {:.1f} R1 {:.1f} R3 {:.1f} Gr {:.1f};", k,
                                 curves[0].at(k), curves[1].at(k), curves[2].at(k), curves[3].at(k));
        }
    }
    return {order_violations == 0 && factor >= 3.0,
            fmt::format("k in [{}, {}], ordering violations {}, Gr/R* at k={} is {:.2f} (need >= 3);{}",
                        k_min, k_top, order_violations, k_min, factor, table)};
}

Verdict acceleration() {
    const std::string name = "flat300_28_0";
    const Graph g = load(name);
    struct Arm {
        double median_k = 0.0;
        double median_time = 0.0;
    };
    auto measure = [&](InitKind init) {
        const auto cfg = campaign(name, EngineKind::Tabucol, DynTenure{}, init, 1, 10, 300.0);
        const auto result = run_trials(g, name, cfg);
        std::vector<double> ks;
        std::vector<double> times;
        for (const auto& r : result.trials) {
            ks.push_back(r.best_k);
            for (const auto& level : r.levels) {
                if (level.legal && level.k == r.best_k) {
                    times.push_back(level.elapsed_s);
                    break;
                }
            }
        }
        return Arm{median(ks), median(times)};
    };
    const Arm recycle = measure(InitKind::RecycleStar);
    const Arm greedy = measure(InitKind::Greedy);
    const bool pass = recycle.median_k < greedy.median_k ||
                      (recycle.median_k == greedy.median_k && recycle.median_time < greedy.median_time);
    return {pass, fmt::format("median k R* {:.1f} vs Gr {:.1f}; median time R* {:.1f} s vs Gr {:.1f} s",
                              recycle.median_k, greedy.median_k, recycle.median_time,
                              greedy.median_time)};
}

Verdict determinism() {
    const fs::path dir = fs::temp_directory_path() / "recolor_acceptance_determinism";
    fs::remove_all(dir);
    fs::create_directories(dir);
    Rng rng(7007);
    const fs::path inst = dir / "g150.col";
    {
        std::ofstream out(inst);
        write_dimacs(out, erdos_renyi(150, 0.5, rng));
    }
    auto run = [&](const std::string& sub) {
        nlohmann::json j = {{"instances", {inst.string()}},
                            {"algorithm", "partialcol"},
                            {"tenure", "foo"},
                            {"init", "recycle-star"},
                            {"trials", 6},
                            {"time_limit", 600.0},
                            {"iter_cap", 200000},
                            {"seed", 99},
                            {"output_dir", (dir / sub).string()}};
        run_campaign(campaign_from_json(j));
        std::ifstream in(dir / sub / "summary.csv");
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    };
    const std::string a = run("a");
    const std::string b = run("b");
    nlohmann::json j2 = {{"instances", {inst.string()}}, {"algorithm", "tabucol"},
                         {"trials", 6},                  {"iter_cap", 200000},
                         {"seed", 99},                   {"output_dir", (dir / "c").string()}};
    run_campaign(campaign_from_json(j2));
    j2["output_dir"] = (dir / "d").string();
    run_campaign(campaign_from_json(j2));
    std::ifstream c_in(dir / "c" / "summary.csv");
    std::ifstream d_in(dir / "d" / "summary.csv");
    std::ostringstream c;
    std::ostringstream d;
    c << c_in.rdbuf();
    d << d_in.rdbuf();
    const bool pass = !a.empty() && a == b && !c.str().empty() && c.str() == d.str();
    return {pass, fmt::format("partialcol summaries {}, tabucol summaries {}",
                              a == b ? "identical" : "differ", c.str() == d.str() ? "identical" : "differ")};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    std::optional<int> only;
    std::string instance_dir;
    app.add_option("--criterion", only, "Run a single criterion (1-7)")->check(CLI::Range(1, 7));
    app.add_option("--instance-dir", instance_dir, "Directory holding <name>.col benchmark files");
    CLI11_PARSE(app, argc, argv);

    if (instance_dir.empty()) {
        const char* env = std::getenv("RECOLOR_INSTANCE_DIR");
        instance_dir = env != nullptr ? env : RECOLOR_DEFAULT_INSTANCE_DIR;
    }
    g_instance_dir = instance_dir;

    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"recycle penalty bounds", recycle_bounds},
        {"oracle equivalence", oracle_equivalence},
        {"DSATUR calibration", dsatur_calibration},
        {"solver calibration", solver_calibration},
        {"recycle vs greedy initial penalty", initial_penalty_shape},
        {"recycle acceleration", acceleration},
        {"campaign determinism", determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (only && *only != id) {
            continue;
        }
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, e.what()};
        }
        failures += v.pass ? 0 : 1;
        std::cout << fmt::format("criterion {} ({}): {} - {}", id, criteria[i].first,
                                 v.pass ? "PASS" : "FAIL", v.detail)
                  << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
