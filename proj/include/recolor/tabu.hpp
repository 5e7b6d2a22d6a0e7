#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"
#include "recolor/rng.hpp"

namespace recolor {

// Tenure = floor(alpha * critical) + gamma, gamma ~ U{0..gamma_max}.
// `critical` is the number of conflicting vertices (complete strategy) or
// uncolored vertices (partial strategy).
struct DynTenure {
    double alpha = 0.6;
    int gamma_max = 9;
};

// Reactive tenure driven by fluctuation of the objective: the dynamic tenure
// of `base` plus a bonus that grows while the search stagnates. A zero
// window or increment means "sample per run": window from
// [window_min, window_max], increment from [n/20, n/10].
struct FooTenure {
    int window = 0;
    int increment = 0;
    int decrement_period = 1;
    int amplitude = 2;
    DynTenure base{};
    int window_min = 500;
    int window_max = 1500;
};

using TenureScheme = std::variant<DynTenure, FooTenure>;

int dyn_tenure(const DynTenure& scheme, std::size_t critical, int gamma);

// Runtime state of the reactive bonus. Moves are grouped into blocks of
// `window` moves; a block whose penalty stays within a band of width
// `amplitude` raises the bonus by `increment`. Every `decrement_period`
// penalty-changing moves lower it by one, never below zero.
class FooState {
public:
    FooState(int window, int increment, int decrement_period, int amplitude,
             DynTenure base = {});
    static FooState sample(const FooTenure& scheme, int n, Rng& rng);

    void observe(std::size_t penalty_before, std::size_t penalty_after);
    int value() const { return tenure_; }

    int window() const { return window_; }
    int increment() const { return increment_; }
    const DynTenure& base() const { return base_; }

private:
    DynTenure base_;
    int window_;
    int increment_;
    int decrement_period_;
    int amplitude_;
    int tenure_ = 0;
    int block_moves_ = 0;
    std::size_t block_min_ = 0;
    std::size_t block_max_ = 0;
    int changing_moves_ = 0;
};

// Per-run tenure source for either scheme.
class TenurePolicy {
public:
    TenurePolicy(const TenureScheme& scheme, int n, Rng& rng);

    // Called once per move with the penalty before and after it.
    int next(std::size_t critical, std::size_t penalty_before, std::size_t penalty_after, Rng& rng);

private:
    std::variant<DynTenure, FooState> state_;
};

struct SearchBudget {
    std::optional<double> time_limit_s;
    std::optional<std::uint64_t> iteration_cap;

    static SearchBudget iterations(std::uint64_t cap) { return {std::nullopt, cap}; }
    static SearchBudget seconds(double s) { return {s, std::nullopt}; }
};

enum class SearchStatus { LegalFound, BudgetExhausted };

template <typename ColoringT>
struct SearchOutcome {
    SearchStatus status = SearchStatus::BudgetExhausted;
    ColoringT best;
    std::size_t best_penalty = 0;
    std::uint64_t iterations = 0;
    double elapsed_s = 0.0;
};

// Emitted after every move. `vertex`/`color` describe the move (color 1-based).
struct MoveEvent {
    std::uint64_t iteration;
    Vertex vertex;
    Color color;
    std::size_t penalty;
    std::size_t best_penalty;
};

using MoveObserver = std::function<void(const MoveEvent&)>;

// Complete-coloring tabu search minimizing the number of conflicting edges.
// Moves recolor a conflicting vertex; the abandoned (vertex, color) pair is
// tabu for the tenure, overridden when the move beats the best penalty seen.
class TabucolEngine {
public:
    TabucolEngine(const Graph& g, const CompleteColoring& init, const TenureScheme& scheme,
                  Rng& rng);

    // One best-improvement move. Returns false when no move exists.
    bool step();

    SearchOutcome<CompleteColoring> run(const SearchBudget& budget,
                                        const MoveObserver& observer = {});

    std::size_t penalty() const { return penalty_; }
    std::size_t best_penalty() const { return best_penalty_; }
    std::uint64_t iterations() const { return iteration_; }
    std::size_t conflicting_vertices() const { return conflicting_.size(); }
    CompleteColoring current() const;
    CompleteColoring best() const;

    // Neighbors of v holding color c (1-based), from the incremental table.
    int neighbor_color_count(Vertex v, Color c) const;

    // Recounts penalty, neighbor-color table and conflicting set from scratch;
    // true when they match the incrementally maintained state.
    bool verify() const;

    const MoveEvent& last_move() const { return last_move_; }

private:
    void apply(Vertex v, int color);
    void refresh_conflicting(Vertex v);

    const Graph& g_;
    int k_;
    Rng& rng_;
    TenurePolicy tenure_;
    std::vector<int> color_;  // 0-based
    std::vector<int> gamma_;  // n x k neighbor color counts
    std::vector<std::uint64_t> tabu_until_;
    std::vector<Vertex> conflicting_;
    std::vector<int> conflict_pos_;
    std::size_t penalty_ = 0;
    std::size_t best_penalty_ = 0;
    std::vector<int> best_color_;
    std::uint64_t iteration_ = 0;
    MoveEvent last_move_{};
};

// Partial-coloring tabu search minimizing the number of uncolored vertices.
// An i-swap colors an uncolored u with i and uncolors u's neighbors holding
// i; each displaced (neighbor, i) pair becomes tabu.
class PartialcolEngine {
public:
    PartialcolEngine(const Graph& g, const PartialColoring& init, const TenureScheme& scheme,
                     Rng& rng);

    bool step();

    SearchOutcome<PartialColoring> run(const SearchBudget& budget,
                                       const MoveObserver& observer = {});

    std::size_t penalty() const { return uncolored_.size(); }
    std::size_t best_penalty() const { return best_penalty_; }
    std::uint64_t iterations() const { return iteration_; }
    PartialColoring current() const;
    PartialColoring best() const;

    int neighbor_color_count(Vertex v, Color c) const;
    bool verify() const;

    const MoveEvent& last_move() const { return last_move_; }

private:
    void assign(Vertex v, int color);
    void unassign(Vertex v);

    const Graph& g_;
    int k_;
    Rng& rng_;
    TenurePolicy tenure_;
    std::vector<int> color_;  // 0-based, -1 uncolored
    std::vector<int> count_;  // n x k neighbor color counts
    std::vector<std::uint64_t> tabu_until_;
    std::vector<Vertex> uncolored_;
    std::vector<int> uncolored_pos_;
    std::vector<Vertex> displaced_;
    std::size_t best_penalty_ = 0;
    std::vector<int> best_color_;
    std::uint64_t iteration_ = 0;
    MoveEvent last_move_{};
};

SearchOutcome<CompleteColoring> tabucol_search(const Graph& g, int k, const CompleteColoring& init,
                                               const TenureScheme& scheme,
                                               const SearchBudget& budget, Rng& rng,
                                               const MoveObserver& observer = {});

SearchOutcome<PartialColoring> partialcol_search(const Graph& g, int k, const PartialColoring& init,
                                                 const TenureScheme& scheme,
                                                 const SearchBudget& budget, Rng& rng,
                                                 const MoveObserver& observer = {});

}  // namespace recolor
