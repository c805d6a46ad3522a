#pragma once

#include <cstddef>
#include <random>

#include "twinwalk/graph.hpp"

namespace twinwalk {

struct PlantedTwinGraph {
    WeightedGraph graph;
    Vertex a = 0;
    Vertex b = 0;
};

/// Random weighted graph on 3..max_vertices vertices (edge probability 1/2,
/// weights uniform in [0.5, 2]) where b copies a's weights to every other
/// vertex, so (min(a,b), max(a,b)) is a twin pair.
PlantedTwinGraph random_graph_with_twins(std::mt19937_64& rng, std::size_t max_vertices);

/// Random symmetric matrix with entries uniform in [lo, hi].
SymmetricMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, double lo, double hi);

}  // namespace twinwalk
