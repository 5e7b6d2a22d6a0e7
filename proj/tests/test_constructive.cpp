#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "recolor/constructive.hpp"
#include "recolor/oracle.hpp"
#include "support.hpp"

using namespace recolor;

namespace {

// The greedy rule applied to an explicit visit order; the fallback color for a
// blocked vertex is passed in so every branch can be enumerated.
std::vector<Color> greedy_in_order(const Graph& g, int k, const std::vector<Vertex>& order,
                                   Color fallback) {
    std::vector<Color> assign(static_cast<std::size_t>(g.n()), kUncolored);
    for (Vertex v : order) {
        Color chosen = fallback;
        for (Color c = 1; c <= k; ++c) {
            bool free = true;
            for (Vertex u : g.neighbors(v)) {
                free = free && assign[u] != c;
            }
            if (free) {
                chosen = c;
                break;
            }
        }
        assign[v] = chosen;
    }
    return assign;
}

}  // namespace

TEST_CASE("dsatur") {
    Rng rng(1);
    CHECK(dsatur(testing::complete_graph(4), rng).k() == 4);
    const Graph c5 = testing::cycle(5);
    const int chi = exact_chromatic_number(c5);
    CHECK(chi == 3);
    CHECK(dsatur(c5, rng).k() == chi);
    CHECK(dsatur(testing::edgeless(10), rng).k() == 1);
    CHECK_THROWS_AS(dsatur(testing::edgeless(0), rng), ContractViolation);
}

TEST_CASE("dsatur prefers saturation, then degree") {
    // Star K_{1,4}: the center has the largest degree and is colored first
    // with color 1; every leaf then gets color 2.
    Rng rng(2);
    const auto c = dsatur(testing::star(4), rng);
    CHECK(c[0] == 1);
    CHECK(c.k() == 2);
}

TEST_CASE("property: dsatur is legal and uses at most max_degree + 1 colors") {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = erdos_renyi(1 + static_cast<int>(rng.below(60)), rng.uniform_real(), rng);
        const auto c = dsatur(g, rng);
        CHECK(is_legal(g, c));
        CHECK(c.k() <= g.max_degree() + 1);
        CHECK(colors_used(c) == c.k());
        if (g.n() <= 8) {
            CHECK(c.k() >= testing::brute_force_chromatic(g));
        }
    }
}

TEST_CASE("greedy_k_complete") {
    const Graph tri = testing::triangle();
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        CHECK(penalty_complete(tri, greedy_k_complete(tri, 3, rng)) == 0);
    }

    // K4 with k=3: every one of the 24 visit orders and every fallback color
    // leaves exactly one conflicting edge.
    const Graph k4 = testing::complete_graph(4);
    CHECK_FALSE(is_k_colorable(k4, 3));
    std::vector<Vertex> order{0, 1, 2, 3};
    int orders = 0;
    do {
        ++orders;
        for (Color fallback = 1; fallback <= 3; ++fallback) {
            CHECK(testing::count_conflicts(k4, greedy_in_order(k4, 3, order, fallback)) == 1);
        }
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK(orders == 24);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        CHECK(penalty_complete(k4, greedy_k_complete(k4, 3, rng)) == 1);
    }

    Rng rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = erdos_renyi(40, rng.uniform_real(), rng);
        CHECK(penalty_complete(g, greedy_k_complete(g, g.max_degree() + 1, rng)) == 0);
    }
    CHECK_THROWS_AS(greedy_k_complete(tri, 0, rng), ContractViolation);
}

TEST_CASE("greedy_k_complete uses the smallest free color") {
    // Path 0-1-2 visited in any order with k = 3 never needs color 3.
    const Graph path = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(seed);
        const auto c = greedy_k_complete(path, 3, rng);
        CHECK(std::all_of(c.assign().begin(), c.assign().end(), [](Color x) { return x <= 2; }));
    }
}

TEST_CASE("greedy_k_partial") {
    const Graph tri = testing::triangle();
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(seed);
        CHECK(penalty_partial(greedy_k_partial(tri, 2, rng)) == 1);
        CHECK(penalty_partial(greedy_k_partial(testing::complete_graph(4), 1, rng)) == 3);
    }
    Rng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = erdos_renyi(30, rng.uniform_real(), rng);
        CHECK(penalty_partial(greedy_k_partial(g, g.max_degree() + 1, rng)) == 0);
        const int k = 1 + static_cast<int>(rng.below(5));
        const auto p = greedy_k_partial(g, k, rng);
        CHECK(is_conflict_free(g, k, p.assign()));
    }
}

TEST_CASE("random_k") {
    Rng rng(7);
    const Graph tri = testing::triangle();
    CHECK(penalty_complete(tri, random_k(tri, 1, rng)) == 3);
    CHECK(random_k(testing::edgeless(0), 3, rng).n() == 0);

    // Mean penalty over 10,000 samples lies within 3 standard errors of m/k.
    const Graph g = erdos_renyi_m(50, 300, rng);
    const int k = 5;
    const int samples = 10000;
    double sum = 0.0;
    double sq = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double p = static_cast<double>(penalty_complete(g, random_k(g, k, rng)));
        sum += p;
        sq += p * p;
    }
    const double mean = sum / samples;
    const double var = (sq - samples * mean * mean) / (samples - 1);
    const double se = std::sqrt(var / samples);
    CHECK(std::abs(mean - 300.0 / k) <= 3 * se);
}

TEST_CASE("random_k_partial is conflict-free") {
    Rng rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = erdos_renyi(30, 0.3, rng);
        const auto p = random_k_partial(g, 4, rng);
        CHECK(is_conflict_free(g, 4, p.assign()));
    }
}
