#include "recolor/coloring.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace recolor {

namespace {

void require_same_size(const Graph& g, int n) {
    if (g.n() != n) {
        throw ContractViolation("coloring has " + std::to_string(n) + " entries, graph has " +
                                std::to_string(g.n()) + " vertices");
    }
}

// Maps each color of [1..k] to its compacted index, 0 for unused colors.
std::vector<Color> compaction_map(int k, std::span<const Color> assign, int& used) {
    std::vector<char> present(static_cast<std::size_t>(k) + 1, 0);
    for (Color c : assign) {
        if (c != kUncolored) {
            present[c] = 1;
        }
    }
    std::vector<Color> map(static_cast<std::size_t>(k) + 1, 0);
    used = 0;
    for (Color c = 1; c <= k; ++c) {
        if (present[c]) {
            map[c] = ++used;
        }
    }
    return map;
}

}  // namespace

CompleteColoring::CompleteColoring(int k, std::vector<Color> assign)
    : k_(k), assign_(std::move(assign)) {
    if (k_ < 1) {
        throw ContractViolation("complete coloring needs k >= 1");
    }
    for (Color c : assign_) {
        if (c < 1 || c > k_) {
            throw ContractViolation("color " + std::to_string(c) + " outside [1.." +
                                    std::to_string(k_) + "]");
        }
    }
}

void CompleteColoring::set(Vertex v, Color c) {
    if (c < 1 || c > k_) {
        throw ContractViolation("color outside palette");
    }
    assign_[v] = c;
}

PartialColoring::PartialColoring(const Graph& g, int k, std::vector<Color> assign)
    : k_(k), assign_(std::move(assign)) {
    if (k_ < 1) {
        throw ContractViolation("partial coloring needs k >= 1");
    }
    require_same_size(g, n());
    for (Color c : assign_) {
        if (c < 0 || c > k_) {
            throw ContractViolation("color " + std::to_string(c) + " outside [0.." +
                                    std::to_string(k_) + "]");
        }
    }
    if (!is_conflict_free(g, k_, assign_)) {
        throw ContractViolation("partial coloring has a conflicting edge");
    }
}

std::size_t penalty_complete(const Graph& g, const CompleteColoring& c) {
    require_same_size(g, c.n());
    std::size_t conflicts = 0;
    for (Vertex u = 0; u < g.n(); ++u) {
        for (Vertex v : g.neighbors(u)) {
            if (u < v && c[u] == c[v]) {
                ++conflicts;
            }
        }
    }
    return conflicts;
}

std::size_t penalty_partial(const PartialColoring& c) {
    return static_cast<std::size_t>(std::count(c.assign().begin(), c.assign().end(), kUncolored));
}

bool is_legal(const Graph& g, const CompleteColoring& c) { return penalty_complete(g, c) == 0; }

bool is_conflict_free(const Graph& g, int k, std::span<const Color> assign) {
    if (static_cast<int>(assign.size()) != g.n()) {
        return false;
    }
    for (Vertex u = 0; u < g.n(); ++u) {
        if (assign[u] < 0 || assign[u] > k) {
            return false;
        }
        if (assign[u] == kUncolored) {
            continue;
        }
        for (Vertex v : g.neighbors(u)) {
            if (assign[v] == assign[u]) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::size_t> color_classes(const CompleteColoring& c) {
    std::vector<std::size_t> sizes(static_cast<std::size_t>(c.k()), 0);
    for (Color col : c.assign()) {
        ++sizes[col - 1];
    }
    return sizes;
}

std::vector<std::size_t> color_classes(const PartialColoring& c) {
    std::vector<std::size_t> sizes(static_cast<std::size_t>(c.k()), 0);
    for (Color col : c.assign()) {
        if (col != kUncolored) {
            ++sizes[col - 1];
        }
    }
    return sizes;
}

int colors_used(const CompleteColoring& c) {
    const auto sizes = color_classes(c);
    return static_cast<int>(std::count_if(sizes.begin(), sizes.end(), [](auto s) { return s > 0; }));
}

CompleteColoring compact(const CompleteColoring& c) {
    int used = 0;
    const auto map = compaction_map(c.k(), c.assign(), used);
    if (used == c.k() || used == 0) {
        return c;
    }
    std::vector<Color> out(c.assign().begin(), c.assign().end());
    for (Color& col : out) {
        col = map[col];
    }
    return {used, std::move(out)};
}

PartialColoring compact(const PartialColoring& c) {
    int used = 0;
    const auto map = compaction_map(c.k(), c.assign(), used);
    if (used == c.k() || used == 0) {
        return c;
    }
    std::vector<Color> out(c.assign().begin(), c.assign().end());
    for (Color& col : out) {
        col = map[col];
    }
    return PartialColoring(PartialColoring::Unchecked{}, used, std::move(out));
}

std::size_t conflicting_vertex_count(const Graph& g, const CompleteColoring& c) {
    require_same_size(g, c.n());
    std::size_t count = 0;
    for (Vertex u = 0; u < g.n(); ++u) {
        for (Vertex v : g.neighbors(u)) {
            if (c[u] == c[v]) {
                ++count;
                break;
            }
        }
    }
    return count;
}

void write_coloring(std::ostream& out, std::span<const Color> assign) {
    for (std::size_t v = 0; v < assign.size(); ++v) {
        out << v + 1 << ' ' << assign[v] << '\n';
    }
}

std::vector<Color> read_coloring(std::istream& in, int n) {
    std::vector<Color> assign(static_cast<std::size_t>(n), -1);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        long long v = 0;
        long long c = 0;
        if (!(fields >> v)) {
            continue;
        }
        std::string rest;
        if (!(fields >> c) || (fields >> rest)) {
            throw ParseError(line_no, "malformed coloring line");
        }
        if (v < 1 || v > n) {
            throw ParseError(line_no, "vertex out of range");
        }
        if (c < 0) {
            throw ParseError(line_no, "negative color");
        }
        if (assign[v - 1] != -1) {
            throw ParseError(line_no, "vertex listed twice");
        }
        assign[v - 1] = static_cast<Color>(c);
    }
    if (std::find(assign.begin(), assign.end(), -1) != assign.end()) {
        throw ParseError(line_no, "coloring does not cover every vertex");
    }
    return assign;
}

}  // namespace recolor
