#include "recolor/driver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "recolor/constructive.hpp"

namespace recolor {

namespace {

using Clock = std::chrono::steady_clock;

struct LevelResult {
    bool legal = false;
    std::size_t initial_penalty = 0;
    std::uint64_t iterations = 0;
    CompleteColoring coloring;
};

CompleteColoring complete_from_partial(const PartialColoring& p) {
    std::vector<Color> assign(p.assign().begin(), p.assign().end());
    return {p.k(), std::move(assign)};
}

LevelResult run_complete_level(const Graph& g, int k, const CompleteColoring& incumbent,
                               const SolveConfig& cfg, const SearchBudget& budget, Rng& rng) {
    CompleteColoring init;
    switch (cfg.init) {
        case InitKind::RecycleStar:
            init = recycle_complete(g, incumbent, RecycleConfig::star(cfg.recolor), rng);
            break;
        case InitKind::RecycleT:
            init = recycle_complete(g, incumbent,
                                    RecycleConfig::random_classes(cfg.recycle_t, cfg.recolor), rng);
            break;
        case InitKind::Greedy:
            init = greedy_k_complete(g, k, rng);
            break;
        case InitKind::Random:
            init = random_k(g, k, rng);
            break;
    }
    LevelResult result;
    result.initial_penalty = penalty_complete(g, init);
    auto outcome = tabucol_search(g, k, init, cfg.tenure, budget, rng);
    result.legal = outcome.status == SearchStatus::LegalFound;
    result.iterations = outcome.iterations;
    result.coloring = std::move(outcome.best);
    return result;
}

LevelResult run_partial_level(const Graph& g, int k, const CompleteColoring& incumbent,
                              const SolveConfig& cfg, const SearchBudget& budget, Rng& rng) {
    PartialColoring init;
    switch (cfg.init) {
        case InitKind::RecycleStar:
            init = recycle_partial(g, incumbent, RecycleConfig::star(), rng);
            break;
        case InitKind::RecycleT:
            init = recycle_partial(g, incumbent, RecycleConfig::random_classes(cfg.recycle_t), rng);
            break;
        case InitKind::Greedy:
            init = greedy_k_partial(g, k, rng);
            break;
        case InitKind::Random:
            init = random_k_partial(g, k, rng);
            break;
    }
    LevelResult result;
    result.initial_penalty = penalty_partial(init);
    auto outcome = partialcol_search(g, k, init, cfg.tenure, budget, rng);
    result.legal = outcome.status == SearchStatus::LegalFound;
    result.iterations = outcome.iterations;
    if (result.legal) {
        result.coloring = complete_from_partial(outcome.best);
    }
    return result;
}

}  // namespace

std::string engine_name(EngineKind e) {
    return e == EngineKind::Tabucol ? "tabucol" : "partialcol";
}

std::string init_name(InitKind init, int t) {
    switch (init) {
        case InitKind::RecycleStar:
            return "recycle-star";
        case InitKind::RecycleT:
            return "recycle-t" + std::to_string(t);
        case InitKind::Greedy:
            return "greedy";
        case InitKind::Random:
            return "random";
    }
    return "unknown";
}

std::string tenure_name(const TenureScheme& scheme) {
    return std::holds_alternative<DynTenure>(scheme) ? "dyn" : "foo";
}

RunRecord solve_vcol(const Graph& g, const SolveConfig& cfg, std::uint64_t seed) {
    if (!(cfg.time_limit_s > 0.0)) {
        throw ContractViolation("time limit must be positive");
    }
    const auto start = Clock::now();
    const auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };
    Rng rng(seed);

    RunRecord record;
    record.instance = cfg.instance_id;
    record.algorithm = engine_name(cfg.engine);
    record.tenure = tenure_name(cfg.tenure);
    record.init = init_name(cfg.init, cfg.recycle_t);
    record.seed = seed;

    CompleteColoring incumbent = dsatur(g, rng);
    if (!is_legal(g, incumbent)) {
        throw std::logic_error("DSATUR produced an illegal coloring");
    }
    record.dsatur_k = incumbent.k();
    record.best_k = incumbent.k();
    record.levels.push_back({incumbent.k(), 0, true, elapsed(), 0, 0, true});

    std::uint64_t used = 0;
    for (int k = incumbent.k() - 1; k >= 1; --k) {
        const double remaining_s = cfg.time_limit_s - elapsed();
        if (remaining_s <= 0.0) {
            break;
        }
        if (cfg.iteration_cap && used >= *cfg.iteration_cap) {
            break;
        }
        SearchBudget budget{remaining_s, std::nullopt};
        if (cfg.iteration_cap) {
            budget.iteration_cap = *cfg.iteration_cap - used;
        }
        LevelResult level = cfg.engine == EngineKind::Tabucol
                                ? run_complete_level(g, k, incumbent, cfg, budget, rng)
                                : run_partial_level(g, k, incumbent, cfg, budget, rng);
        used += level.iterations;
        record.levels.push_back(
            {k, level.initial_penalty, level.legal, elapsed(), used, level.iterations, false});
        if (!level.legal) {
            break;
        }
        if (!is_legal(g, level.coloring)) {
            throw std::logic_error("engine reported an illegal coloring as legal");
        }
        incumbent = std::move(level.coloring);
        record.best_k = k;
    }
    record.best = std::move(incumbent);
    record.total_iterations = used;
    record.total_elapsed_s = elapsed();
    return record;
}

std::vector<std::pair<int, std::size_t>> initial_penalty_curve(const RunRecord& record) {
    std::vector<std::pair<int, std::size_t>> curve;
    curve.reserve(record.levels.size());
    for (const auto& level : record.levels) {
        curve.emplace_back(level.k, level.constructive ? 0 : level.initial_penalty);
    }
    return curve;
}

nlohmann::json to_json(const RunRecord& record) {
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& l : record.levels) {
        levels.push_back({{"k", l.k},
                          {"initial_penalty", l.initial_penalty},
                          {"legal", l.legal},
                          {"elapsed_s", l.elapsed_s},
                          {"cumulative_iterations", l.cumulative_iterations},
                          {"iterations", l.iterations},
                          {"constructive", l.constructive}});
    }
    return {{"instance", record.instance},
            {"algorithm", record.algorithm},
            {"tenure", record.tenure},
            {"init", record.init},
            {"seed", record.seed},
            {"dsatur_k", record.dsatur_k},
            {"levels", std::move(levels)},
            {"best_k", record.best_k},
            {"best_coloring", std::vector<Color>(record.best.assign().begin(), record.best.assign().end())},
            {"total_elapsed_s", record.total_elapsed_s},
            {"total_iterations", record.total_iterations}};
}

RunRecord run_record_from_json(const nlohmann::json& j) {
    RunRecord r;
    j.at("instance").get_to(r.instance);
    j.at("algorithm").get_to(r.algorithm);
    j.at("tenure").get_to(r.tenure);
    j.at("init").get_to(r.init);
    j.at("seed").get_to(r.seed);
    j.at("dsatur_k").get_to(r.dsatur_k);
    for (const auto& l : j.at("levels")) {
        LevelRecord level;
        l.at("k").get_to(level.k);
        l.at("initial_penalty").get_to(level.initial_penalty);
        l.at("legal").get_to(level.legal);
        l.at("elapsed_s").get_to(level.elapsed_s);
        l.at("cumulative_iterations").get_to(level.cumulative_iterations);
        l.at("iterations").get_to(level.iterations);
        l.at("constructive").get_to(level.constructive);
        r.levels.push_back(level);
    }
    j.at("best_k").get_to(r.best_k);
    r.best = CompleteColoring(r.best_k, j.at("best_coloring").get<std::vector<Color>>());
    j.at("total_elapsed_s").get_to(r.total_elapsed_s);
    j.at("total_iterations").get_to(r.total_iterations);
    return r;
}

}  // namespace recolor
