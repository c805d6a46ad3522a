#include "twinwalk/random_graphs.hpp"

#include <algorithm>
#include <utility>

#include "twinwalk/error.hpp"

namespace twinwalk {

PlantedTwinGraph random_graph_with_twins(std::mt19937_64& rng, std::size_t max_vertices) {
    if (max_vertices < 3) throw Error(ErrorCode::InvalidArgument, "need room for at least 3 vertices");
    std::uniform_int_distribution<std::size_t> size_dist(3, max_vertices);
    std::bernoulli_distribution coin(0.5);
    std::uniform_real_distribution<double> weight_dist(0.5, 2.0);

    const std::size_t n = size_dist(rng);
    SymmetricMatrix w(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < u; ++v)
            if (coin(rng)) w.set(u, v, weight_dist(rng));

    std::uniform_int_distribution<Vertex> vertex_dist(0, n - 1);
    const Vertex a = vertex_dist(rng);
    Vertex b = vertex_dist(rng);
    while (b == a) b = vertex_dist(rng);
    for (Vertex q = 0; q < n; ++q)
        if (q != a && q != b) w.set(b, q, w(a, q));

    return {WeightedGraph::from_weights(std::move(w)), std::min(a, b), std::max(a, b)};
}

SymmetricMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    SymmetricMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) m.set(i, j, dist(rng));
    return m;
}

}  // namespace twinwalk
