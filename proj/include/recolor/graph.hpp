#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "recolor/rng.hpp"

namespace recolor {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(what + " at line " + std::to_string(line)), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Immutable simple undirected graph. Vertices are 0-based; neighbor lists are
// sorted ascending with no duplicates and no self-loops.
class Graph {
public:
    Graph() = default;

    // Builds from 0-based endpoint pairs. Duplicate edges (in either
    // orientation) are merged; a self-loop or out-of-range endpoint throws
    // std::invalid_argument.
    static Graph from_edges(int n, std::span<const Edge> edges);

    int n() const { return static_cast<int>(adjacency_.size()); }
    std::size_t m() const { return m_; }
    int max_degree() const { return max_degree_; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    bool adjacent(Vertex u, Vertex v) const;

    // Edges with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t m_ = 0;
    int max_degree_ = 0;
};

struct DegreeStats {
    double mean = 0.0;
    double stddev = 0.0;
    double cv = 0.0;  // percent
};

// Throws std::domain_error on an empty or edgeless graph.
DegreeStats degree_stats(const Graph& g);

// Reads DIMACS .col text. Declared edge counts that disagree with the
// deduplicated count produce a message in `warnings` (when non-null).
Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr);
Graph parse_dimacs_string(const std::string& text, std::vector<std::string>* warnings = nullptr);
Graph read_dimacs_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

void write_dimacs(std::ostream& out, const Graph& g);
std::string to_dimacs_string(const Graph& g);

// G(n, p) sample.
Graph erdos_renyi(int n, double p, Rng& rng);
// Uniform sample with exactly m edges.
Graph erdos_renyi_m(int n, std::size_t m, Rng& rng);

}  // namespace recolor
