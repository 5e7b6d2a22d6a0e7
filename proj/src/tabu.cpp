#include "recolor/tabu.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace recolor {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kClockCheckInterval = 256;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Shared driver loop for both engines.
template <typename Engine, typename ColoringT>
SearchOutcome<ColoringT> run_engine(Engine& engine, const SearchBudget& budget,
                                    const MoveObserver& observer) {
    const auto start = Clock::now();
    const std::uint64_t first = engine.iterations();
    SearchOutcome<ColoringT> out;
    while (engine.penalty() > 0) {
        const std::uint64_t done = engine.iterations() - first;
        if (budget.iteration_cap && done >= *budget.iteration_cap) {
            break;
        }
        if (budget.time_limit_s && done % kClockCheckInterval == 0 &&
            seconds_since(start) >= *budget.time_limit_s) {
            break;
        }
        if (!engine.step()) {
            break;
        }
        if (observer) {
            observer(engine.last_move());
        }
    }
    out.status = engine.best_penalty() == 0 ? SearchStatus::LegalFound : SearchStatus::BudgetExhausted;
    out.best = engine.best();
    out.best_penalty = engine.best_penalty();
    out.iterations = engine.iterations() - first;
    out.elapsed_s = seconds_since(start);
    return out;
}

// Reservoir choice among equally good moves.
struct MoveChoice {
    int delta = std::numeric_limits<int>::max();
    Vertex vertex = -1;
    int color = -1;
    std::uint64_t ties = 0;

    void offer(int d, Vertex v, int c, Rng& rng) {
        if (d < delta) {
            delta = d;
            vertex = v;
            color = c;
            ties = 1;
        } else if (d == delta && rng.below(++ties) == 0) {
            vertex = v;
            color = c;
        }
    }
    bool empty() const { return vertex < 0; }
};

}  // namespace

int dyn_tenure(const DynTenure& scheme, std::size_t critical, int gamma) {
    return static_cast<int>(std::floor(scheme.alpha * static_cast<double>(critical))) + gamma;
}

FooState::FooState(int window, int increment, int decrement_period, int amplitude, DynTenure base)
    : base_(base),
      window_(window),
      increment_(increment),
      decrement_period_(decrement_period),
      amplitude_(amplitude) {
    if (window_ < 1 || increment_ < 1 || decrement_period_ < 1 || amplitude_ < 0) {
        throw ContractViolation("reactive tenure parameters out of range");
    }
}

FooState FooState::sample(const FooTenure& scheme, int n, Rng& rng) {
    int window = scheme.window;
    if (window == 0) {
        window = rng.uniform_int(scheme.window_min, scheme.window_max);
    }
    int increment = scheme.increment;
    if (increment == 0) {
        const int lo = std::max(1, n / 20);
        const int hi = std::max(lo, n / 10);
        increment = rng.uniform_int(lo, hi);
    }
    return {window, increment, scheme.decrement_period, scheme.amplitude, scheme.base};
}

void FooState::observe(std::size_t penalty_before, std::size_t penalty_after) {
    if (block_moves_ == 0) {
        block_min_ = block_max_ = penalty_before;
    }
    block_min_ = std::min(block_min_, penalty_after);
    block_max_ = std::max(block_max_, penalty_after);
    if (++block_moves_ >= window_) {
        if (block_max_ - block_min_ <= static_cast<std::size_t>(amplitude_)) {
            tenure_ += increment_;
        }
        block_moves_ = 0;
    }
    if (penalty_before != penalty_after && ++changing_moves_ >= decrement_period_) {
        changing_moves_ = 0;
        tenure_ = std::max(0, tenure_ - 1);
    }
}

TenurePolicy::TenurePolicy(const TenureScheme& scheme, int n, Rng& rng)
    : state_(std::visit(
          [&](const auto& s) -> std::variant<DynTenure, FooState> {
              using S = std::decay_t<decltype(s)>;
              if constexpr (std::is_same_v<S, DynTenure>) {
                  if (!(s.alpha > 0.0) || s.gamma_max < 0) {
                      throw ContractViolation("dynamic tenure needs alpha > 0 and gamma_max >= 0");
                  }
                  return s;
              } else {
                  if (!(s.base.alpha > 0.0) || s.base.gamma_max < 0) {
                      throw ContractViolation("dynamic tenure needs alpha > 0 and gamma_max >= 0");
                  }
                  return FooState::sample(s, n, rng);
              }
          },
          scheme)) {}

int TenurePolicy::next(std::size_t critical, std::size_t penalty_before,
                       std::size_t penalty_after, Rng& rng) {
    if (auto* dyn = std::get_if<DynTenure>(&state_)) {
        return dyn_tenure(*dyn, critical, rng.uniform_int(0, dyn->gamma_max));
    }
    auto& foo = std::get<FooState>(state_);
    foo.observe(penalty_before, penalty_after);
    return dyn_tenure(foo.base(), critical, rng.uniform_int(0, foo.base().gamma_max)) + foo.value();
}

// ---------------------------------------------------------------- Tabucol

TabucolEngine::TabucolEngine(const Graph& g, const CompleteColoring& init,
                             const TenureScheme& scheme, Rng& rng)
    : g_(g), k_(init.k()), rng_(rng), tenure_(scheme, g.n(), rng) {
    if (init.n() != g.n()) {
        throw ContractViolation("initial coloring size does not match the graph");
    }
    const auto n = static_cast<std::size_t>(g.n());
    const auto k = static_cast<std::size_t>(k_);
    color_.resize(n);
    for (Vertex v = 0; v < g.n(); ++v) {
        color_[v] = init[v] - 1;
    }
    gamma_.assign(n * k, 0);
    tabu_until_.assign(n * k, 0);
    conflict_pos_.assign(n, -1);
    for (Vertex v = 0; v < g.n(); ++v) {
        for (Vertex u : g.neighbors(v)) {
            ++gamma_[v * k + color_[u]];
            if (v < u && color_[u] == color_[v]) {
                ++penalty_;
            }
        }
    }
    for (Vertex v = 0; v < g.n(); ++v) {
        refresh_conflicting(v);
    }
    best_penalty_ = penalty_;
    best_color_ = color_;
}

void TabucolEngine::refresh_conflicting(Vertex v) {
    const bool conflicting = gamma_[static_cast<std::size_t>(v) * k_ + color_[v]] > 0;
    const bool listed = conflict_pos_[v] >= 0;
    if (conflicting && !listed) {
        conflict_pos_[v] = static_cast<int>(conflicting_.size());
        conflicting_.push_back(v);
    } else if (!conflicting && listed) {
        const Vertex moved = conflicting_.back();
        conflicting_[conflict_pos_[v]] = moved;
        conflict_pos_[moved] = conflict_pos_[v];
        conflicting_.pop_back();
        conflict_pos_[v] = -1;
    }
}

bool TabucolEngine::step() {
    if (k_ < 2 || conflicting_.empty()) {
        return false;
    }
    MoveChoice admissible;
    MoveChoice fallback;
    const auto k = static_cast<std::size_t>(k_);
    for (Vertex v : conflicting_) {
        const std::size_t row = static_cast<std::size_t>(v) * k;
        const int own = gamma_[row + color_[v]];
        for (int c = 0; c < k_; ++c) {
            if (c == color_[v]) {
                continue;
            }
            const int delta = gamma_[row + c] - own;
            const bool tabu = tabu_until_[row + c] > iteration_;
            const bool aspirates =
                static_cast<long long>(penalty_) + delta < static_cast<long long>(best_penalty_);
            if (!tabu || aspirates) {
                admissible.offer(delta, v, c, rng_);
            } else {
                fallback.offer(delta, v, c, rng_);
            }
        }
    }
    const MoveChoice& chosen = admissible.empty() ? fallback : admissible;
    const std::size_t before = penalty_;
    const int old = color_[chosen.vertex];
    apply(chosen.vertex, chosen.color);
    ++iteration_;
    const int tenure = tenure_.next(conflicting_.size(), before, penalty_, rng_);
    tabu_until_[static_cast<std::size_t>(chosen.vertex) * k + old] = iteration_ + tenure;
    if (penalty_ < best_penalty_) {
        best_penalty_ = penalty_;
        best_color_ = color_;
    }
    last_move_ = {iteration_, chosen.vertex, chosen.color + 1, penalty_, best_penalty_};
    return true;
}

void TabucolEngine::apply(Vertex v, int color) {
    const auto k = static_cast<std::size_t>(k_);
    const int old = color_[v];
    const std::size_t row = static_cast<std::size_t>(v) * k;
    penalty_ = static_cast<std::size_t>(static_cast<long long>(penalty_) + gamma_[row + color] -
                                        gamma_[row + old]);
    color_[v] = color;
    for (Vertex u : g_.neighbors(v)) {
        const std::size_t urow = static_cast<std::size_t>(u) * k;
        --gamma_[urow + old];
        ++gamma_[urow + color];
        if (color_[u] == old || color_[u] == color) {
            refresh_conflicting(u);
        }
    }
    refresh_conflicting(v);
}

SearchOutcome<CompleteColoring> TabucolEngine::run(const SearchBudget& budget,
                                                   const MoveObserver& observer) {
    return run_engine<TabucolEngine, CompleteColoring>(*this, budget, observer);
}

CompleteColoring TabucolEngine::current() const {
    std::vector<Color> out(color_.size());
    std::transform(color_.begin(), color_.end(), out.begin(), [](int c) { return c + 1; });
    return {k_, std::move(out)};
}

CompleteColoring TabucolEngine::best() const {
    std::vector<Color> out(best_color_.size());
    std::transform(best_color_.begin(), best_color_.end(), out.begin(), [](int c) { return c + 1; });
    return {k_, std::move(out)};
}

int TabucolEngine::neighbor_color_count(Vertex v, Color c) const {
    return gamma_[static_cast<std::size_t>(v) * k_ + (c - 1)];
}

bool TabucolEngine::verify() const {
    const auto k = static_cast<std::size_t>(k_);
    std::vector<int> gamma(gamma_.size(), 0);
    std::size_t penalty = 0;
    std::size_t conflicting = 0;
    for (Vertex v = 0; v < g_.n(); ++v) {
        for (Vertex u : g_.neighbors(v)) {
            ++gamma[v * k + color_[u]];
            if (v < u && color_[u] == color_[v]) {
                ++penalty;
            }
        }
    }
    for (Vertex v = 0; v < g_.n(); ++v) {
        const bool is_conflicting = gamma[v * k + color_[v]] > 0;
        conflicting += is_conflicting ? 1 : 0;
        if (is_conflicting != (conflict_pos_[v] >= 0)) {
            return false;
        }
    }
    return gamma == gamma_ && penalty == penalty_ && conflicting == conflicting_.size();
}

// ------------------------------------------------------------- Partialcol

PartialcolEngine::PartialcolEngine(const Graph& g, const PartialColoring& init,
                                   const TenureScheme& scheme, Rng& rng)
    : g_(g), k_(init.k()), rng_(rng), tenure_(scheme, g.n(), rng) {
    if (init.n() != g.n()) {
        throw ContractViolation("initial coloring size does not match the graph");
    }
    if (!is_conflict_free(g, init.k(), init.assign())) {
        throw ContractViolation("initial partial coloring has a conflicting edge");
    }
    const auto n = static_cast<std::size_t>(g.n());
    const auto k = static_cast<std::size_t>(k_);
    color_.assign(n, -1);
    count_.assign(n * k, 0);
    tabu_until_.assign(n * k, 0);
    uncolored_pos_.assign(n, -1);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (init.colored(v)) {
            color_[v] = init[v] - 1;
        } else {
            uncolored_pos_[v] = static_cast<int>(uncolored_.size());
            uncolored_.push_back(v);
        }
    }
    for (Vertex v = 0; v < g.n(); ++v) {
        if (color_[v] >= 0) {
            for (Vertex u : g.neighbors(v)) {
                ++count_[u * k + color_[v]];
            }
        }
    }
    best_penalty_ = uncolored_.size();
    best_color_ = color_;
}

void PartialcolEngine::assign(Vertex v, int color) {
    const auto k = static_cast<std::size_t>(k_);
    color_[v] = color;
    const Vertex moved = uncolored_.back();
    uncolored_[uncolored_pos_[v]] = moved;
    uncolored_pos_[moved] = uncolored_pos_[v];
    uncolored_.pop_back();
    uncolored_pos_[v] = -1;
    for (Vertex u : g_.neighbors(v)) {
        ++count_[u * k + color];
    }
}

void PartialcolEngine::unassign(Vertex v) {
    const auto k = static_cast<std::size_t>(k_);
    const int color = color_[v];
    color_[v] = -1;
    uncolored_pos_[v] = static_cast<int>(uncolored_.size());
    uncolored_.push_back(v);
    for (Vertex u : g_.neighbors(v)) {
        --count_[u * k + color];
    }
}

bool PartialcolEngine::step() {
    if (uncolored_.empty()) {
        return false;
    }
    const auto k = static_cast<std::size_t>(k_);
    MoveChoice admissible;
    MoveChoice fallback;
    const auto penalty = static_cast<long long>(uncolored_.size());
    for (Vertex u : uncolored_) {
        const std::size_t row = static_cast<std::size_t>(u) * k;
        for (int c = 0; c < k_; ++c) {
            const int delta = count_[row + c] - 1;
            const bool tabu = tabu_until_[row + c] > iteration_;
            const bool aspirates = penalty + delta < static_cast<long long>(best_penalty_);
            if (!tabu || aspirates) {
                admissible.offer(delta, u, c, rng_);
            } else {
                fallback.offer(delta, u, c, rng_);
            }
        }
    }
    const MoveChoice& chosen = admissible.empty() ? fallback : admissible;
    const std::size_t before = uncolored_.size();
    const Vertex u = chosen.vertex;
    const int c = chosen.color;

    displaced_.clear();
    for (Vertex w : g_.neighbors(u)) {
        if (color_[w] == c) {
            displaced_.push_back(w);
        }
    }
    for (Vertex w : displaced_) {
        unassign(w);
    }
    assign(u, c);
    ++iteration_;

    const int tenure = tenure_.next(uncolored_.size(), before, uncolored_.size(), rng_);
    for (Vertex w : displaced_) {
        tabu_until_[static_cast<std::size_t>(w) * k + c] = iteration_ + tenure;
    }
    if (uncolored_.size() < best_penalty_) {
        best_penalty_ = uncolored_.size();
        best_color_ = color_;
    }
    last_move_ = {iteration_, u, c + 1, uncolored_.size(), best_penalty_};
    return true;
}

SearchOutcome<PartialColoring> PartialcolEngine::run(const SearchBudget& budget,
                                                     const MoveObserver& observer) {
    return run_engine<PartialcolEngine, PartialColoring>(*this, budget, observer);
}

PartialColoring PartialcolEngine::current() const {
    std::vector<Color> out(color_.size());
    std::transform(color_.begin(), color_.end(), out.begin(), [](int c) { return c + 1; });
    return {g_, k_, std::move(out)};
}

PartialColoring PartialcolEngine::best() const {
    std::vector<Color> out(best_color_.size());
    std::transform(best_color_.begin(), best_color_.end(), out.begin(), [](int c) { return c + 1; });
    return {g_, k_, std::move(out)};
}

int PartialcolEngine::neighbor_color_count(Vertex v, Color c) const {
    return count_[static_cast<std::size_t>(v) * k_ + (c - 1)];
}

bool PartialcolEngine::verify() const {
    const auto k = static_cast<std::size_t>(k_);
    std::vector<int> count(count_.size(), 0);
    std::size_t uncolored = 0;
    for (Vertex v = 0; v < g_.n(); ++v) {
        if (color_[v] < 0) {
            ++uncolored;
            if (uncolored_pos_[v] < 0 || uncolored_[uncolored_pos_[v]] != v) {
                return false;
            }
            continue;
        }
        for (Vertex u : g_.neighbors(v)) {
            ++count[u * k + color_[v]];
            if (color_[u] == color_[v]) {
                return false;
            }
        }
    }
    return count == count_ && uncolored == uncolored_.size();
}

// ------------------------------------------------------------ entry points

SearchOutcome<CompleteColoring> tabucol_search(const Graph& g, int k, const CompleteColoring& init,
                                               const TenureScheme& scheme,
                                               const SearchBudget& budget, Rng& rng,
                                               const MoveObserver& observer) {
    if (k < 1) {
        throw ContractViolation("k must be at least 1");
    }
    if (init.k() != k) {
        throw ContractViolation("initial coloring palette differs from k");
    }
    TabucolEngine engine(g, init, scheme, rng);
    return engine.run(budget, observer);
}

SearchOutcome<PartialColoring> partialcol_search(const Graph& g, int k, const PartialColoring& init,
                                                 const TenureScheme& scheme,
                                                 const SearchBudget& budget, Rng& rng,
                                                 const MoveObserver& observer) {
    if (k < 1) {
        throw ContractViolation("k must be at least 1");
    }
    if (init.k() != k) {
        throw ContractViolation("initial coloring palette differs from k");
    }
    PartialcolEngine engine(g, init, scheme, rng);
    return engine.run(budget, observer);
}

}  // namespace recolor
