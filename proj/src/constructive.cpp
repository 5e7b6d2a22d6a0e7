#include "recolor/constructive.hpp"

#include <algorithm>
#include <numeric>

namespace recolor {

namespace {

void require_k(int k) {
    if (k < 1) {
        throw ContractViolation("k must be at least 1");
    }
}

std::vector<Vertex> shuffled_vertices(const Graph& g, Rng& rng) {
    std::vector<Vertex> order(static_cast<std::size_t>(g.n()));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(std::span<Vertex>(order));
    return order;
}

// Smallest color in [1..k] absent from v's already-assigned neighbors, or
// kUncolored if every color is blocked. `blocked` is scratch of size k + 1.
Color smallest_free_color(const Graph& g, Vertex v, int k, std::span<const Color> assign,
                          std::vector<char>& blocked) {
    std::fill(blocked.begin(), blocked.end(), 0);
    for (Vertex u : g.neighbors(v)) {
        if (assign[u] != kUncolored) {
            blocked[assign[u]] = 1;
        }
    }
    for (Color c = 1; c <= k; ++c) {
        if (!blocked[c]) {
            return c;
        }
    }
    return kUncolored;
}

}  // namespace

CompleteColoring dsatur(const Graph& g, Rng& rng) {
    const int n = g.n();
    if (n == 0) {
        throw ContractViolation("dsatur needs at least one vertex");
    }
    // At most max_degree + 1 colors are ever opened.
    const auto palette = static_cast<std::size_t>(g.max_degree()) + 2;
    std::vector<int> neighbor_color_count(static_cast<std::size_t>(n) * palette, 0);
    std::vector<int> saturation(static_cast<std::size_t>(n), 0);
    std::vector<Color> assign(static_cast<std::size_t>(n), kUncolored);
    int colors_open = 0;

    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        std::uint64_t ties = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (assign[v] != kUncolored) {
                continue;
            }
            if (pick < 0 || saturation[v] > saturation[pick] ||
                (saturation[v] == saturation[pick] && g.degree(v) > g.degree(pick))) {
                pick = v;
                ties = 1;
            } else if (saturation[v] == saturation[pick] && g.degree(v) == g.degree(pick)) {
                if (rng.below(++ties) == 0) {
                    pick = v;
                }
            }
        }

        const int* counts = &neighbor_color_count[static_cast<std::size_t>(pick) * palette];
        Color color = 1;
        while (counts[color] > 0) {
            ++color;
        }
        assign[pick] = color;
        colors_open = std::max(colors_open, color);
        for (Vertex u : g.neighbors(pick)) {
            int& count = neighbor_color_count[static_cast<std::size_t>(u) * palette + color];
            if (count++ == 0) {
                ++saturation[u];
            }
        }
    }
    return {colors_open, std::move(assign)};
}

CompleteColoring greedy_k_complete(const Graph& g, int k, Rng& rng) {
    require_k(k);
    std::vector<Color> assign(static_cast<std::size_t>(g.n()), kUncolored);
    std::vector<char> blocked(static_cast<std::size_t>(k) + 1);
    for (Vertex v : shuffled_vertices(g, rng)) {
        Color c = smallest_free_color(g, v, k, assign, blocked);
        if (c == kUncolored) {
            c = rng.uniform_int(1, k);
        }
        assign[v] = c;
    }
    return {k, std::move(assign)};
}

PartialColoring greedy_k_partial(const Graph& g, int k, Rng& rng) {
    require_k(k);
    std::vector<Color> assign(static_cast<std::size_t>(g.n()), kUncolored);
    std::vector<char> blocked(static_cast<std::size_t>(k) + 1);
    for (Vertex v : shuffled_vertices(g, rng)) {
        assign[v] = smallest_free_color(g, v, k, assign, blocked);
    }
    return {g, k, std::move(assign)};
}

CompleteColoring random_k(const Graph& g, int k, Rng& rng) {
    require_k(k);
    std::vector<Color> assign(static_cast<std::size_t>(g.n()));
    for (Color& c : assign) {
        c = rng.uniform_int(1, k);
    }
    return {k, std::move(assign)};
}

PartialColoring random_k_partial(const Graph& g, int k, Rng& rng) {
    const CompleteColoring full = random_k(g, k, rng);
    std::vector<Color> assign(full.assign().begin(), full.assign().end());
    for (Vertex v : shuffled_vertices(g, rng)) {
        for (Vertex u : g.neighbors(v)) {
            if (assign[u] == assign[v]) {
                assign[v] = kUncolored;
                break;
            }
        }
    }
    return {g, k, std::move(assign)};
}

}  // namespace recolor
