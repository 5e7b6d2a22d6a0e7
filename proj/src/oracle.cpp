#include "recolor/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace recolor {

namespace {

void require_small(const Graph& g) {
    if (g.n() > kOracleMaxVertices) {
        throw std::invalid_argument("oracle refuses graphs with more than " +
                                    std::to_string(kOracleMaxVertices) + " vertices");
    }
}

// Vertices in descending degree order; a color beyond the highest used so far
// may only be the next unused one, which also fixes the first vertex to color 1.
bool extend(const Graph& g, const std::vector<Vertex>& order, std::size_t depth, int k,
            int highest, std::vector<int>& color) {
    if (depth == order.size()) {
        return true;
    }
    const Vertex v = order[depth];
    const int limit = std::min(k, highest + 1);
    for (int c = 1; c <= limit; ++c) {
        bool free = true;
        for (Vertex u : g.neighbors(v)) {
            if (color[u] == c) {
                free = false;
                break;
            }
        }
        if (!free) {
            continue;
        }
        color[v] = c;
        if (extend(g, order, depth + 1, k, std::max(highest, c), color)) {
            return true;
        }
        color[v] = 0;
    }
    return false;
}

}  // namespace

bool is_k_colorable(const Graph& g, int k) {
    require_small(g);
    if (g.n() == 0) {
        return true;
    }
    if (k < 1) {
        return false;
    }
    std::vector<Vertex> order(static_cast<std::size_t>(g.n()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(static_cast<std::size_t>(g.n()), 0);
    return extend(g, order, 0, k, 0, color);
}

int exact_chromatic_number(const Graph& g) {
    require_small(g);
    int k = g.n() == 0 ? 0 : 1;
    while (!is_k_colorable(g, k)) {
        ++k;
    }
    return k;
}

}  // namespace recolor
