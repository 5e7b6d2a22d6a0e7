#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"
#include "recolor/rng.hpp"

namespace recolor {

// Builds a k-coloring initial solution out of a legal (k+1)-coloring by
// recoloring (complete strategy) or uncoloring (partial strategy) the vertices
// of a chosen color subset K. One color of K, the removed color, disappears and
// the palette is renumbered to [1..k].

enum class ClassSelection {
    SmallestClass,  // K = {smallest class}, lowest color on ties
    RandomClasses,  // K = t distinct colors sampled uniformly
};

enum class RecolorRule {
    Random,          // uniform over the k surviving colors
    LeastSelection,  // surviving color with fewest already-colored neighbors
};

struct RecycleConfig {
    ClassSelection selection = ClassSelection::SmallestClass;
    int t = 1;
    RecolorRule recolor = RecolorRule::Random;

    static RecycleConfig star(RecolorRule rule = RecolorRule::Random) {
        return {ClassSelection::SmallestClass, 1, rule};
    }
    static RecycleConfig random_classes(int t, RecolorRule rule = RecolorRule::Random) {
        return {ClassSelection::RandomClasses, t, rule};
    }
};

// Work counters for one recycle call.
struct RecycleTrace {
    std::vector<Color> selected;  // K, removed color first (input palette)
    std::size_t recolored = 0;
    std::size_t neighbor_scans = 0;
};

Color select_smallest_class(const CompleteColoring& c);

// Returns K for the configuration; its first element is the removed color.
// Throws ContractViolation when t is outside [1, c.k()].
std::vector<Color> select_classes(const CompleteColoring& c, const RecycleConfig& cfg, Rng& rng);

// `assign` holds colors with kUncolored for vertices not yet colored;
// `allowed` is a nonempty ascending color list. Returns the allowed color held
// by the fewest neighbors of v, lowest color on ties.
Color least_selection_recolor(const Graph& g, std::span<const Color> assign, Vertex v,
                              std::span<const Color> allowed);

// c must be legal with c.k() >= 2; the result has k = c.k() - 1.
CompleteColoring recycle_complete(const Graph& g, const CompleteColoring& c,
                                  const RecycleConfig& cfg, Rng& rng,
                                  RecycleTrace* trace = nullptr);

PartialColoring recycle_partial(const Graph& g, const CompleteColoring& c,
                                const RecycleConfig& cfg, Rng& rng,
                                RecycleTrace* trace = nullptr);

}  // namespace recolor
