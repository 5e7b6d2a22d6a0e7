#pragma once

// Small named graphs and brute-force helpers shared by the test binaries.

#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"

namespace recolor::testing {

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

inline Graph cycle(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        edges.emplace_back(v, (v + 1) % n);
    }
    return Graph::from_edges(n, edges);
}

inline Graph edgeless(int n) { return Graph::from_edges(n, {}); }

inline Graph star(int leaves) {
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v) {
        edges.emplace_back(0, v);
    }
    return Graph::from_edges(leaves + 1, edges);
}

inline Graph triangle() { return complete_graph(3); }

inline Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edges.emplace_back(i, 5 + i);                // spokes
    }
    return Graph::from_edges(10, edges);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u) {
        for (int v = 0; v < b; ++v) {
            edges.emplace_back(u, a + v);
        }
    }
    return Graph::from_edges(a + b, edges);
}

// Conflicting edges counted straight from the edge list.
inline std::size_t count_conflicts(const Graph& g, std::span<const Color> assign) {
    std::size_t conflicts = 0;
    for (const auto& [u, v] : g.edges()) {
        if (assign[u] != kUncolored && assign[u] == assign[v]) {
            ++conflicts;
        }
    }
    return conflicts;
}

// Smallest k admitting a legal coloring, by enumerating all k^n assignments.
// Only for n <= 8.
inline int brute_force_chromatic(const Graph& g) {
    const int n = g.n();
    if (n == 0) {
        return 0;
    }
    for (int k = 1; k <= n; ++k) {
        std::vector<Color> assign(static_cast<std::size_t>(n), 1);
        while (true) {
            if (count_conflicts(g, assign) == 0) {
                return k;
            }
            int i = 0;
            while (i < n && assign[i] == k) {
                assign[i++] = 1;
            }
            if (i == n) {
                break;
            }
            ++assign[i];
        }
    }
    return n;
}

}  // namespace recolor::testing
