#pragma once

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"
#include "recolor/rng.hpp"

namespace recolor {

// Brélaz's DSATUR. Picks the uncolored vertex with the most distinct
// neighbor colors, breaking ties by degree and then uniformly at random, and
// gives it the smallest color that creates no conflict. The result is legal
// and its k is the number of colors opened.
CompleteColoring dsatur(const Graph& g, Rng& rng);

// Visits vertices in random order and assigns the smallest conflict-free
// color in [1..k]; a vertex with none gets a uniformly random color.
CompleteColoring greedy_k_complete(const Graph& g, int k, Rng& rng);

// Same scan, but a vertex with no conflict-free color stays uncolored.
PartialColoring greedy_k_partial(const Graph& g, int k, Rng& rng);

// Each vertex independently uniform in [1..k].
CompleteColoring random_k(const Graph& g, int k, Rng& rng);

// Random k-coloring made conflict-free by uncoloring, in random order, every
// vertex that still has a same-colored neighbor.
PartialColoring random_k_partial(const Graph& g, int k, Rng& rng);

}  // namespace recolor
