#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

// Colors are dense integers 1..k. 0 marks an uncolored vertex in a partial
// coloring and never appears in a complete one.
using Color = int;
inline constexpr Color kUncolored = 0;

class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Total assignment V -> [k].
class CompleteColoring {
public:
    CompleteColoring() = default;
    CompleteColoring(int k, std::vector<Color> assign);

    int k() const { return k_; }
    int n() const { return static_cast<int>(assign_.size()); }
    Color operator[](Vertex v) const { return assign_[v]; }
    std::span<const Color> assign() const { return assign_; }

    void set(Vertex v, Color c);

    friend bool operator==(const CompleteColoring&, const CompleteColoring&) = default;

private:
    int k_ = 1;
    std::vector<Color> assign_;
};

// Assignment V -> [k] u {uncolored} with no edge joining two vertices of the
// same color. Every constructor checks the conflict-free property against
// the graph it is built for.
class PartialColoring {
public:
    PartialColoring() = default;
    PartialColoring(const Graph& g, int k, std::vector<Color> assign);

    int k() const { return k_; }
    int n() const { return static_cast<int>(assign_.size()); }
    Color operator[](Vertex v) const { return assign_[v]; }
    std::span<const Color> assign() const { return assign_; }
    bool colored(Vertex v) const { return assign_[v] != kUncolored; }

    friend bool operator==(const PartialColoring&, const PartialColoring&) = default;

private:
    struct Unchecked {};
    PartialColoring(Unchecked, int k, std::vector<Color> assign)
        : k_(k), assign_(std::move(assign)) {}

    friend PartialColoring compact(const PartialColoring& c);

    int k_ = 1;
    std::vector<Color> assign_;
};

std::size_t penalty_complete(const Graph& g, const CompleteColoring& c);
std::size_t penalty_partial(const PartialColoring& c);
bool is_legal(const Graph& g, const CompleteColoring& c);
bool is_conflict_free(const Graph& g, int k, std::span<const Color> assign);

// Entry i-1 is the size of color class i.
std::vector<std::size_t> color_classes(const CompleteColoring& c);
std::vector<std::size_t> color_classes(const PartialColoring& c);

// Number of distinct colors actually assigned.
int colors_used(const CompleteColoring& c);

// Drops unused colors and renumbers the rest 1..k' keeping their numeric
// order. Returns the input unchanged when every color is used.
CompleteColoring compact(const CompleteColoring& c);
PartialColoring compact(const PartialColoring& c);

std::size_t conflicting_vertex_count(const Graph& g, const CompleteColoring& c);

// One `<vertex> <color>` line per vertex, both 1-based, color 0 for uncolored.
void write_coloring(std::ostream& out, std::span<const Color> assign);
// Reads the format above for an n-vertex graph; every vertex must appear once.
std::vector<Color> read_coloring(std::istream& in, int n);

}  // namespace recolor
