#include "recolor/recycle.hpp"

#include <algorithm>
#include <numeric>

namespace recolor {

namespace {

void require_recyclable(const Graph& g, const CompleteColoring& c) {
    if (c.k() < 2) {
        throw ContractViolation("recycle needs a coloring with at least 2 colors");
    }
    if (!is_legal(g, c)) {
        throw ContractViolation("recycle needs a legal coloring");
    }
}

// Drops `removed` from the palette [1..k+1], shifting higher colors down.
Color close_gap(Color color, Color removed) {
    return color > removed ? color - 1 : color;
}

// Least-selection core. `counts` is zeroed scratch of size >= max color + 1
// and is returned zeroed.
Color least_selection(const Graph& g, std::span<const Color> assign, Vertex v,
                      std::span<const Color> allowed, std::vector<int>& counts) {
    for (Vertex u : g.neighbors(v)) {
        ++counts[assign[u]];
    }
    Color best = allowed.front();
    for (Color c : allowed) {
        if (counts[c] < counts[best]) {
            best = c;
        }
    }
    for (Vertex u : g.neighbors(v)) {
        counts[assign[u]] = 0;
    }
    return best;
}

}  // namespace

Color select_smallest_class(const CompleteColoring& c) {
    const auto sizes = color_classes(c);
    const auto it = std::min_element(sizes.begin(), sizes.end());
    return static_cast<Color>(it - sizes.begin()) + 1;
}

std::vector<Color> select_classes(const CompleteColoring& c, const RecycleConfig& cfg, Rng& rng) {
    if (cfg.selection == ClassSelection::SmallestClass) {
        return {select_smallest_class(c)};
    }
    if (cfg.t < 1 || cfg.t > c.k()) {
        throw ContractViolation("recycle t=" + std::to_string(cfg.t) + " outside [1, " +
                                std::to_string(c.k()) + "]");
    }
    std::vector<Color> colors(static_cast<std::size_t>(c.k()));
    std::iota(colors.begin(), colors.end(), 1);
    // Partial Fisher-Yates: the first t entries are a uniform ordered sample.
    for (int i = 0; i < cfg.t; ++i) {
        const auto j = i + static_cast<std::size_t>(rng.below(colors.size() - i));
        std::swap(colors[i], colors[j]);
    }
    colors.resize(static_cast<std::size_t>(cfg.t));
    return colors;
}

Color least_selection_recolor(const Graph& g, std::span<const Color> assign, Vertex v,
                              std::span<const Color> allowed) {
    if (allowed.empty()) {
        throw ContractViolation("least-selection needs at least one allowed color");
    }
    Color top = *std::max_element(allowed.begin(), allowed.end());
    for (Vertex u : g.neighbors(v)) {
        top = std::max(top, assign[u]);
    }
    std::vector<int> counts(static_cast<std::size_t>(top) + 1, 0);
    return least_selection(g, assign, v, allowed, counts);
}

CompleteColoring recycle_complete(const Graph& g, const CompleteColoring& c,
                                  const RecycleConfig& cfg, Rng& rng, RecycleTrace* trace) {
    require_recyclable(g, c);
    const int k = c.k() - 1;
    const auto selected = select_classes(c, cfg, rng);
    const Color removed = selected.front();

    std::vector<char> in_k(static_cast<std::size_t>(c.k()) + 1, 0);
    for (Color i : selected) {
        in_k[i] = 1;
    }
    std::vector<Color> allowed;
    allowed.reserve(static_cast<std::size_t>(k));
    for (Color i = 1; i <= c.k(); ++i) {
        if (i != removed) {
            allowed.push_back(i);
        }
    }

    std::vector<Color> work(c.assign().begin(), c.assign().end());
    std::vector<Vertex> targets;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (in_k[work[v]]) {
            targets.push_back(v);
            work[v] = kUncolored;
        }
    }

    std::size_t scans = 0;
    if (cfg.recolor == RecolorRule::LeastSelection) {
        std::vector<int> counts(static_cast<std::size_t>(c.k()) + 1, 0);
        for (Vertex v : targets) {
            work[v] = least_selection(g, work, v, allowed, counts);
            scans += static_cast<std::size_t>(g.degree(v));
        }
    } else {
        for (Vertex v : targets) {
            work[v] = allowed[rng.below(allowed.size())];
        }
    }

    for (Color& color : work) {
        color = close_gap(color, removed);
    }
    if (trace != nullptr) {
        trace->selected = selected;
        trace->recolored = targets.size();
        trace->neighbor_scans = scans;
    }
    return {k, std::move(work)};
}

PartialColoring recycle_partial(const Graph& g, const CompleteColoring& c,
                                const RecycleConfig& cfg, Rng& rng, RecycleTrace* trace) {
    require_recyclable(g, c);
    const int k = c.k() - 1;
    const auto selected = select_classes(c, cfg, rng);
    const Color removed = selected.front();

    std::vector<char> in_k(static_cast<std::size_t>(c.k()) + 1, 0);
    for (Color i : selected) {
        in_k[i] = 1;
    }
    std::vector<Color> work(c.assign().begin(), c.assign().end());
    std::size_t uncolored = 0;
    for (Color& color : work) {
        if (in_k[color]) {
            color = kUncolored;
            ++uncolored;
        } else {
            color = close_gap(color, removed);
        }
    }
    if (trace != nullptr) {
        trace->selected = selected;
        trace->recolored = uncolored;
        trace->neighbor_scans = 0;
    }
    return {g, k, std::move(work)};
}

}  // namespace recolor
