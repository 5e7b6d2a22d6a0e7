#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"
#include "recolor/recycle.hpp"
#include "recolor/tabu.hpp"

namespace recolor {

enum class EngineKind { Tabucol, Partialcol };
enum class InitKind { RecycleStar, RecycleT, Greedy, Random };

struct SolveConfig {
    std::string instance_id;
    EngineKind engine = EngineKind::Tabucol;
    InitKind init = InitKind::RecycleStar;
    int recycle_t = 1;
    RecolorRule recolor = RecolorRule::Random;
    TenureScheme tenure = DynTenure{};
    double time_limit_s = 600.0;
    // Total move budget across every k level of the run.
    std::optional<std::uint64_t> iteration_cap;
};

std::string engine_name(EngineKind e);
std::string init_name(InitKind init, int t);
std::string tenure_name(const TenureScheme& scheme);

// One k level of the iterative scheme. The first level is the DSATUR
// solution itself: penalty 0, legal, no engine iterations.
struct LevelRecord {
    int k = 0;
    std::size_t initial_penalty = 0;
    bool legal = false;
    double elapsed_s = 0.0;  // since the start of the run
    std::uint64_t cumulative_iterations = 0;
    std::uint64_t iterations = 0;
    bool constructive = false;
};

struct RunRecord {
    std::string instance;
    std::string algorithm;
    std::string tenure;
    std::string init;
    std::uint64_t seed = 0;
    int dsatur_k = 0;
    std::vector<LevelRecord> levels;
    int best_k = 0;
    CompleteColoring best;
    double total_elapsed_s = 0.0;
    std::uint64_t total_iterations = 0;
};

// Constructs a DSATUR coloring, then repeatedly lowers k by one, seeds the
// engine with the configured generator and searches for a legal k-coloring
// until the global time or iteration budget runs out.
RunRecord solve_vcol(const Graph& g, const SolveConfig& cfg, std::uint64_t seed);

// (k, initial penalty) per level, DSATUR level first with penalty 0.
std::vector<std::pair<int, std::size_t>> initial_penalty_curve(const RunRecord& record);

nlohmann::json to_json(const RunRecord& record);
RunRecord run_record_from_json(const nlohmann::json& j);

}  // namespace recolor
