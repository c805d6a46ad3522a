#include "twinwalk/graph.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "twinwalk/error.hpp"

namespace twinwalk {

namespace {

void require_vertex(std::size_t n, Vertex v) {
    if (v >= n) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "vertex " + std::to_string(v) + " not in [0, " + std::to_string(n) + ")");
    }
}

void require_distinct_pair(std::size_t n, Vertex a, Vertex b) {
    require_vertex(n, a);
    require_vertex(n, b);
    if (a == b) throw Error(ErrorCode::EqualVertices, "vertex " + std::to_string(a) + " paired with itself");
}

}  // namespace

WeightedGraph::WeightedGraph(SymmetricMatrix weights) : weights_(std::move(weights)) {
    const std::size_t n = weights_.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (weights_(i, j) < 0.0) has_negative_weight_ = true;
        }
    }
}

WeightedGraph WeightedGraph::from_weights(SymmetricMatrix weights) {
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights(i, i) != 0.0) {
            throw Error(ErrorCode::SelfLoop, "nonzero diagonal weight at vertex " + std::to_string(i));
        }
    }
    return WeightedGraph(std::move(weights));
}

double WeightedGraph::weight(Vertex u, Vertex v) const {
    require_vertex(vertex_count(), u);
    require_vertex(vertex_count(), v);
    return weights_(u, v);
}

std::vector<WeightedEdge> WeightedGraph::edges() const {
    std::vector<WeightedEdge> out;
    const std::size_t n = vertex_count();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (weights_(u, v) != 0.0) out.push_back({u, v, weights_(u, v)});
        }
    }
    return out;
}

WeightedGraph build_graph(std::size_t n, std::span<const WeightedEdge> edges) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "graph needs at least one vertex");
    SymmetricMatrix w(n);
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const auto& e : edges) {
        require_vertex(n, e.u);
        require_vertex(n, e.v);
        if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "edge at vertex " + std::to_string(e.u));
        if (!(e.weight > 0.0)) {
            throw Error(ErrorCode::NonPositiveWeight, "edge {" + std::to_string(e.u) + "," +
                                                          std::to_string(e.v) + "} has weight " +
                                                          std::to_string(e.weight));
        }
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second) {
            throw Error(ErrorCode::DuplicateEdge, "edge {" + std::to_string(key.first) + "," +
                                                      std::to_string(key.second) + "} listed twice");
        }
        w.set(e.u, e.v, e.weight);
    }
    return WeightedGraph::from_weights(std::move(w));
}

SymmetricMatrix laplacian(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    const auto& w = g.weights();
    SymmetricMatrix l(n);
    std::vector<double> row;
    row.reserve(n);
    for (Vertex u = 0; u < n; ++u) {
        row.clear();
        for (Vertex v = 0; v < n; ++v) {
            if (v == u) continue;
            row.push_back(w(u, v));
            if (v < u) l.set(u, v, -w(u, v));
        }
        std::sort(row.begin(), row.end());
        double degree = 0.0;
        for (double x : row) degree += x;
        l.set(u, u, degree);
    }
    return l;
}

SymmetricMatrix adjacency(const WeightedGraph& g) { return g.weights(); }

bool is_twin_pair(const WeightedGraph& g, Vertex a, Vertex b) {
    const std::size_t n = g.vertex_count();
    require_distinct_pair(n, a, b);
    const auto& w = g.weights();
    for (Vertex q = 0; q < n; ++q) {
        if (q == a || q == b) continue;
        if (w(a, q) != w(b, q)) return false;
    }
    return true;
}

std::vector<TwinPair> list_twin_pairs(const WeightedGraph& g) {
    std::vector<TwinPair> out;
    const std::size_t n = g.vertex_count();
    const auto& w = g.weights();
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (!is_twin_pair(g, a, b)) continue;
            TwinPair tp{a, b, w(a, b) != 0.0, {}};
            for (Vertex q = 0; q < n; ++q) {
                if (q != a && q != b && w(a, q) != 0.0) tp.shared_weight_profile.emplace(q, w(a, q));
            }
            out.push_back(std::move(tp));
        }
    }
    return out;
}

SymmetricMatrix rank_one_edge_matrix(std::size_t n, Vertex a, Vertex b) {
    require_distinct_pair(n, a, b);
    SymmetricMatrix m(n);
    m.set(a, a, 1.0);
    m.set(b, b, 1.0);
    m.set(a, b, -1.0);
    return m;
}

WeightedGraph perturb_edge(const WeightedGraph& g, const EdgePerturbation& p) {
    require_distinct_pair(g.vertex_count(), p.a, p.b);
    SymmetricMatrix w = g.weights();
    w.add(p.a, p.b, p.alpha);
    return WeightedGraph::from_weights(std::move(w));
}

RealMatrix swap_permutation(std::size_t n, Vertex a, Vertex b) {
    require_distinct_pair(n, a, b);
    RealMatrix p = RealMatrix::identity(n);
    p(a, a) = 0.0;
    p(b, b) = 0.0;
    p(a, b) = 1.0;
    p(b, a) = 1.0;
    return p;
}

}  // namespace twinwalk
