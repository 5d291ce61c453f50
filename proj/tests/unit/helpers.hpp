#pragma once

#include "spectree/graph.hpp"

#include <random>

namespace testing_helpers {

inline spectree::graph random_graph(std::size_t n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    spectree::graph g(n);
    for (spectree::vertex i = 0; i < n; ++i)
        for (spectree::vertex j = i + 1; j < n; ++j)
            if (coin(rng))
                g.add_edge(i, j);
    return g;
}

inline spectree::graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng)
{
    auto g = random_graph(n, p, rng);
    for (spectree::vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<spectree::vertex> parent(0, v - 1);
        g.add_edge(v, parent(rng));
    }
    return g;
}

} // namespace testing_helpers
